//! Exact truncated integer power series in q, the same graded by
//! e-weight in a second variable x, and the generating functions
//! MF_e, SC_e, f_e, g_e and MF_e(x, q).
//!
//! All coefficient arithmetic is checked 64-bit; overflow aborts.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("series coefficient overflow")
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("series coefficient overflow")
}

/// Integer power series in q truncated at degree N.
/// Serializes as `{"N":20,"coeffs":[1,1,0,...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series1 {
    #[serde(rename = "N")]
    n_trunc: usize,
    coeffs: Vec<i64>,
}

impl Series1 {
    /// The constant series 1 at truncation N.
    pub fn one(n_trunc: usize) -> Self {
        let mut coeffs = vec![0; n_trunc + 1];
        coeffs[0] = 1;
        Self { n_trunc, coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        Self { n_trunc: coeffs.len() - 1, coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.n_trunc
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of q^n; panics past the truncation.
    pub fn coeff(&self, n: usize) -> i64 {
        assert!(n <= self.n_trunc, "coefficient {n} beyond truncation {}", self.n_trunc);
        self.coeffs[n]
    }

    /// In place: multiply by the binomial (1 + c·q^m).
    pub fn mul_binomial(&mut self, c: i64, m: usize) {
        if m == 0 {
            panic!("binomial exponent must be positive");
        }
        for n in (m..=self.n_trunc).rev() {
            self.coeffs[n] = add(self.coeffs[n], mul(c, self.coeffs[n - m]));
        }
    }

    /// In place: divide by the binomial (1 + c·q^m).
    pub fn div_binomial(&mut self, c: i64, m: usize) {
        if m == 0 {
            panic!("binomial exponent must be positive");
        }
        for n in m..=self.n_trunc {
            self.coeffs[n] = add(self.coeffs[n], -mul(c, self.coeffs[n - m]));
        }
    }

    pub fn mul(&self, other: &Series1) -> Series1 {
        let n_trunc = self.n_trunc.min(other.n_trunc);
        let mut coeffs = vec![0i64; n_trunc + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(n_trunc + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n_trunc + 1 - i) {
                coeffs[i + j] = add(coeffs[i + j], mul(a, b));
            }
        }
        Series1 { n_trunc, coeffs }
    }

    /// Exact division; the divisor's constant term must be ±1.
    pub fn div(&self, other: &Series1) -> Series1 {
        let c0 = other.coeffs[0];
        assert!(c0 == 1 || c0 == -1, "divisor constant term must be ±1");
        let n_trunc = self.n_trunc.min(other.n_trunc);
        let mut coeffs = vec![0i64; n_trunc + 1];
        for n in 0..=n_trunc {
            let mut acc = self.coeffs[n];
            for k in 1..=n {
                acc = add(acc, -mul(other.coeffs[k], coeffs[n - k]));
            }
            coeffs[n] = acc * c0; // dividing by ±1
        }
        Series1 { n_trunc, coeffs }
    }

    pub fn pow(&self, k: usize) -> Series1 {
        let mut acc = Series1::one(self.n_trunc);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The substitution q → −q.
    pub fn negate_q(&self) -> Series1 {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c } else { -c })
            .collect();
        Series1 { n_trunc: self.n_trunc, coeffs }
    }
}

/// (±q^a; q^b)_∞ truncated at N: the product of (1 + sign·q^{a+kb})
/// over k ≥ 0 (sign = +1) or (1 − q^{a+kb}) (sign = −1).
pub fn pochhammer(sign: i64, a: usize, b: usize, n_trunc: usize) -> Series1 {
    assert!(sign == 1 || sign == -1);
    assert!(a >= 1 && b >= 1);
    let mut s = Series1::one(n_trunc);
    let mut m = a;
    while m <= n_trunc {
        s.mul_binomial(sign, m);
        m += b;
    }
    s
}

/// χ(q) = (−q; q²)_∞, counting partitions into distinct odd parts.
pub fn chi(n_trunc: usize) -> Series1 {
    pochhammer(1, 1, 2, n_trunc)
}

/// MF_e(q), the generating function for Mullineux fixed-point
/// counts: χ(q)/χ(q^e) for odd e, χ(q)/χ(−q^e) for even e.
pub fn mf_series(e: usize, n_trunc: usize) -> Result<Series1> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    let mut s = chi(n_trunc);
    let mut m = e;
    while m <= n_trunc {
        // χ(q^e) has factors (1 + q^{e(2k+1)}); χ(−q^e) has (1 − q^{e(2k+1)})
        s.div_binomial(if e % 2 == 1 { 1 } else { -1 }, m);
        m += 2 * e;
    }
    Ok(s)
}

/// MF_e(−q), computed both as the substitution q → −q in MF_e and
/// as the product Π (1+q^{ek})/(1+q^k); the two routes are asserted
/// equal.
pub fn mf_alternating(e: usize, n_trunc: usize) -> Result<Series1> {
    let by_substitution = mf_series(e, n_trunc)?.negate_q();
    let mut by_product = Series1::one(n_trunc);
    let mut m = e;
    while m <= n_trunc {
        by_product.mul_binomial(1, m);
        m += e;
    }
    for m in 1..=n_trunc {
        by_product.div_binomial(1, m);
    }
    assert_eq!(by_substitution, by_product, "MF_e(-q) routes disagree");
    Ok(by_substitution)
}

/// SC_e(q), the generating function for self-conjugate e-core
/// counts: χ(q)(q^{2e};q^{2e})_∞^{e/2} for even e, and
/// χ(q)(q^{2e};q^{2e})_∞^{(e-1)/2} / (−q^e;q^{2e})_∞ for odd e.
pub fn sc_series(e: usize, n_trunc: usize) -> Result<Series1> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    let mut s = chi(n_trunc);
    let euler_exp = if e % 2 == 0 { e / 2 } else { (e - 1) / 2 };
    let mut m = 2 * e;
    while m <= n_trunc {
        for _ in 0..euler_exp {
            s.mul_binomial(-1, m);
        }
        m += 2 * e;
    }
    if e % 2 == 1 {
        let mut m = e;
        while m <= n_trunc {
            s.div_binomial(1, m);
            m += 2 * e;
        }
    }
    Ok(s)
}

/// f_e(q) = Π 1/((1−q^{2k})^{e/2} (1−q^{2k−1})), defined for even e.
pub fn f_series(e: usize, n_trunc: usize) -> Result<Series1> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    if e % 2 != 0 {
        return Err(Error::ParityMismatch { name: "f_e", expected: "even", got: e });
    }
    let mut s = Series1::one(n_trunc);
    for m in 1..=n_trunc {
        let reps = if m % 2 == 0 { e / 2 } else { 1 };
        for _ in 0..reps {
            s.div_binomial(-1, m);
        }
    }
    Ok(s)
}

/// g_e(q) = Π 1/(1−q^k)^{(e−1)/2}, defined for odd e.
pub fn g_series(e: usize, n_trunc: usize) -> Result<Series1> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    if e % 2 != 1 {
        return Err(Error::ParityMismatch { name: "g_e", expected: "odd", got: e });
    }
    let mut s = Series1::one(n_trunc);
    for m in 1..=n_trunc {
        for _ in 0..(e - 1) / 2 {
            s.div_binomial(-1, m);
        }
    }
    Ok(s)
}

/// mf_{e,w}(n) by the closed form: f_e(w)·sc_e(n−ew) for even e;
/// for odd e it is zero unless w is even, then g_e(w/2)·sc_e(n−ew).
/// Returns 0 (not an error) when n < e·w.
pub fn mf_by_weight(e: usize, w: usize, n: usize) -> Result<i64> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    if n < e * w {
        return Ok(0);
    }
    let sc = sc_series(e, n)?.coeff(n - e * w);
    let multiplier = if e % 2 == 0 {
        f_series(e, w.max(1))?.coeff(w)
    } else if w % 2 == 0 {
        g_series(e, (w / 2).max(1))?.coeff(w / 2)
    } else {
        return Ok(0);
    };
    Ok(mul(multiplier, sc))
}

/// The full grid of mf_{e,w}(n) for 0 ≤ n ≤ n_max, 0 ≤ w ≤ w_max,
/// with the multiplier and SC series computed once.
pub fn mf_grid(e: usize, n_max: usize, w_max: usize) -> Result<Vec<Vec<i64>>> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    let sc = sc_series(e, n_max)?;
    let mult = if e % 2 == 0 { f_series(e, w_max)? } else { g_series(e, w_max)? };
    let mut grid = vec![vec![0i64; w_max + 1]; n_max + 1];
    for (n, row) in grid.iter_mut().enumerate() {
        for (w, cell) in row.iter_mut().enumerate() {
            if e * w > n {
                continue;
            }
            let m = if e % 2 == 0 {
                mult.coeff(w)
            } else if w % 2 == 0 {
                mult.coeff(w / 2)
            } else {
                0
            };
            *cell = mul(m, sc.coeff(n - e * w));
        }
    }
    Ok(grid)
}

/// Integer power series in x and q, truncated at q-degree N, with
/// the weight bound c(w, n) = 0 whenever e·w > n.
///
/// Serializes as a list of nonzero-coefficient triples
/// `{"w":..,"n":..,"c":..}` sorted by (n, w).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    e: usize,
    n_trunc: usize,
    /// coeffs[n][w] for 0 ≤ w ≤ n/e
    coeffs: Vec<Vec<i64>>,
}

/// One nonzero term of a [`Series2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub w: usize,
    pub n: usize,
    pub c: i64,
}

impl Serialize for Series2 {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().serialize(ser)
    }
}

impl Series2 {
    fn one(e: usize, n_trunc: usize) -> Self {
        let coeffs = (0..=n_trunc)
            .map(|n| {
                let mut row = vec![0i64; n / e + 1];
                if n == 0 {
                    row[0] = 1;
                }
                row
            })
            .collect();
        Self { e, n_trunc, coeffs }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn truncation(&self) -> usize {
        self.n_trunc
    }

    /// Coefficient of x^w q^n (0 beyond the weight bound).
    pub fn coeff(&self, w: usize, n: usize) -> i64 {
        assert!(n <= self.n_trunc);
        self.coeffs[n].get(w).copied().unwrap_or(0)
    }

    /// Nonzero terms sorted by (n, w).
    pub fn terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        for (n, row) in self.coeffs.iter().enumerate() {
            for (w, &c) in row.iter().enumerate() {
                if c != 0 {
                    out.push(Term { w, n, c });
                }
            }
        }
        out
    }

    /// The specialization x = 1 as a one-variable series.
    pub fn at_x_one(&self) -> Series1 {
        Series1::from_coeffs(self.coeffs.iter().map(|row| row.iter().fold(0, |acc, &c| add(acc, c))).collect())
    }

    /// In place: multiply by (1 + c·q^m).
    fn mul_q_binomial(&mut self, c: i64, m: usize) {
        for n in (m..=self.n_trunc).rev() {
            for w in 0..=(n - m) / self.e {
                let v = mul(c, self.coeffs[n - m][w]);
                self.coeffs[n][w] = add(self.coeffs[n][w], v);
            }
        }
    }

    /// In place: divide by (1 + c·q^m).
    fn div_q_binomial(&mut self, c: i64, m: usize) {
        for n in m..=self.n_trunc {
            for w in 0..=(n - m) / self.e {
                let v = mul(c, self.coeffs[n - m][w]);
                self.coeffs[n][w] = add(self.coeffs[n][w], -v);
            }
        }
    }

    /// In place: divide by (1 − x^a q^b), a ≥ 1.
    fn div_xq_binomial(&mut self, a: usize, b: usize) {
        for n in b..=self.n_trunc {
            for w in a..=n / self.e {
                if w - a <= (n - b) / self.e {
                    let v = self.coeffs[n - b][w - a];
                    self.coeffs[n][w] = add(self.coeffs[n][w], v);
                }
            }
        }
    }
}

/// MF_e(x, q): coefficient of x^w q^n is mf_{e,w}(n).
///
/// Built twice — from the closed bivariate product (SC_e(q) times
/// Π 1/(1 − x^m q^{em}) with exponent e/2 on even m for even e, and
/// Π 1/(1 − x^{2k} q^{2ek})^{(e−1)/2} for odd e), and by assembling
/// mf_{e,w}(n) from the univariate series — and the two are
/// asserted equal.
pub fn mf_two_var(e: usize, n_trunc: usize) -> Result<Series2> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    // route 1: the closed product
    let mut s = Series2::one(e, n_trunc);
    // SC_e(q) factors
    let mut m = 1;
    while m <= n_trunc {
        s.mul_q_binomial(1, m); // χ(q)
        m += 2;
    }
    let euler_exp = if e % 2 == 0 { e / 2 } else { (e - 1) / 2 };
    let mut m = 2 * e;
    while m <= n_trunc {
        for _ in 0..euler_exp {
            s.mul_q_binomial(-1, m);
        }
        m += 2 * e;
    }
    if e % 2 == 1 {
        let mut m = e;
        while m <= n_trunc {
            s.div_q_binomial(1, m);
            m += 2 * e;
        }
    }
    // weight-tracking denominator
    for w in 1..=n_trunc / e {
        let reps = if e % 2 == 0 {
            if w % 2 == 0 { e / 2 } else { 1 }
        } else if w % 2 == 0 {
            (e - 1) / 2
        } else {
            0
        };
        for _ in 0..reps {
            s.div_xq_binomial(w, e * w);
        }
    }
    // route 2: closed-form coefficients
    let grid = mf_grid(e, n_trunc, n_trunc / e)?;
    for n in 0..=n_trunc {
        for w in 0..=n / e {
            assert_eq!(
                s.coeff(w, n),
                grid[n][w],
                "MF_e(x,q) routes disagree at e={e} w={w} n={n}"
            );
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count, PartitionFilter};

    #[test]
    fn chi_counts_distinct_odd_partitions() {
        let s = chi(30);
        assert_eq!(&s.coeffs()[..6], &[1, 1, 0, 1, 1, 1]);
        for n in 0..=30 {
            assert_eq!(s.coeff(n), count(n, &PartitionFilter::DistinctOdd), "n={n}");
        }
    }

    #[test]
    fn euler_product_pentagonal_signs() {
        // (q;q)_∞ = Σ (−1)^k q^{k(3k±1)/2}
        let s = pochhammer(-1, 1, 1, 26);
        let mut want = vec![0i64; 27];
        for k in -4i64..=4 {
            let g = k * (3 * k - 1) / 2;
            if (0..=26).contains(&g) {
                want[g as usize] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(s.coeffs(), &want[..]);
        // (q^b;q^b)_∞ is the same in q^b
        let s3 = pochhammer(-1, 3, 3, 26);
        for n in 0..=26 {
            assert_eq!(s3.coeff(n), if n % 3 == 0 { want[n / 3] } else { 0 });
        }
    }

    #[test]
    fn truncation_edge_and_monotonicity() {
        assert_eq!(pochhammer(1, 1, 2, 0).coeffs(), &[1]);
        let small = mf_series(4, 15).unwrap();
        let large = mf_series(4, 40).unwrap();
        assert_eq!(small.coeffs(), &large.coeffs()[..16]);
    }

    #[test]
    fn div_inverts_mul() {
        let a = chi(25);
        let b = pochhammer(-1, 2, 3, 25);
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.div(&b).mul(&b), a);
    }

    #[test]
    fn mul_div_binomial_inverse() {
        let mut s = mf_series(5, 30).unwrap();
        let orig = s.clone();
        s.mul_binomial(-3, 7);
        s.div_binomial(-3, 7);
        assert_eq!(s, orig);
    }

    #[test]
    fn mf2_counts_distinct_parts() {
        let s = mf_series(2, 25).unwrap();
        for n in 0..=25 {
            assert_eq!(s.coeff(n), count(n, &PartitionFilter::Distinct), "n={n}");
        }
    }

    #[test]
    fn mf_matches_part_conditions() {
        for e in [3usize, 5] {
            let s = mf_series(e, 25).unwrap();
            for n in 0..=25 {
                assert_eq!(s.coeff(n), count(n, &PartitionFilter::DistinctOddNotDiv(e)));
            }
        }
        for e in [4usize, 6] {
            let s = mf_series(e, 25).unwrap();
            for n in 0..=25 {
                assert_eq!(s.coeff(n), count(n, &PartitionFilter::OddOrOddMultiple(e)));
            }
        }
    }

    #[test]
    fn alternating_signs() {
        for e in 2..=6 {
            let mf = mf_series(e, 25).unwrap();
            let alt = mf_alternating(e, 25).unwrap();
            for n in 0..=25 {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(alt.coeff(n), sign * mf.coeff(n));
            }
        }
    }

    #[test]
    fn sc_matches_enumeration() {
        use crate::cores::self_conjugate_cores;
        for e in 2..=6 {
            let s = sc_series(e, 18).unwrap();
            for n in 0..=18 {
                assert_eq!(
                    s.coeff(n),
                    self_conjugate_cores(n, e).len() as i64,
                    "e={e} n={n}"
                );
            }
        }
    }

    #[test]
    fn multiplier_series() {
        let f4 = f_series(4, 10).unwrap();
        assert_eq!(&f4.coeffs()[..7], &[1, 1, 3, 4, 9, 12, 23]);
        // g_3 = 1/(q;q)_∞, the partition-count series
        let g3 = g_series(3, 20).unwrap();
        for n in 0..=20 {
            assert_eq!(g3.coeff(n), count(n, &PartitionFilter::All));
        }
        assert!(f_series(5, 10).is_err());
        assert!(g_series(4, 10).is_err());
    }

    #[test]
    fn f_equals_kappa() {
        use crate::barcores::kappa;
        for e in [2usize, 4, 6] {
            let f = f_series(e, 16).unwrap();
            for n in 0..=16 {
                assert_eq!(f.coeff(n), kappa(e / 2, n), "e={e} n={n}");
            }
        }
    }

    #[test]
    fn by_weight_edges() {
        assert_eq!(mf_by_weight(4, 3, 2).unwrap(), 0); // n < ew
        for w in [1usize, 3, 5] {
            for n in (5 * w)..(5 * w + 8) {
                assert_eq!(mf_by_weight(5, w, n).unwrap(), 0, "odd e, odd w");
            }
        }
        // grid agrees with the pointwise form
        for e in [3usize, 4] {
            let grid = mf_grid(e, 20, 5).unwrap();
            for n in 0..=20 {
                for w in 0..=5 {
                    assert_eq!(grid[n][w], mf_by_weight(e, w, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn two_var_collapses_at_x_one() {
        for e in 2..=6 {
            let s2 = mf_two_var(e, 22).unwrap();
            assert_eq!(s2.at_x_one(), mf_series(e, 22).unwrap(), "e={e}");
        }
    }

    #[test]
    fn two_var_odd_e_supports_even_w_only() {
        let s2 = mf_two_var(5, 30).unwrap();
        for t in s2.terms() {
            assert_eq!(t.w % 2, 0, "term {t:?}");
        }
    }

    #[test]
    fn series_json() {
        let s = Series1::from_coeffs(vec![1, 1, 0]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"N":2,"coeffs":[1,1,0]}"#);
        assert_eq!(serde_json::from_str::<Series1>(&text).unwrap(), s);

        let s2 = mf_two_var(4, 5).unwrap();
        let text = serde_json::to_string(&s2).unwrap();
        assert_eq!(
            text,
            r#"[{"w":0,"n":0,"c":1},{"w":0,"n":1,"c":1},{"w":0,"n":3,"c":1},{"w":0,"n":4,"c":1},{"w":1,"n":4,"c":1},{"w":0,"n":5,"c":1},{"w":1,"n":5,"c":1}]"#
        );
    }
}
