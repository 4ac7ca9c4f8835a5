//! Mullineux symbols, the map `m_e` on e-regular partitions, and
//! fixed-point machinery.
//!
//! The symbol of an e-regular partition records, for each iterated
//! e-rim layer, the pair (cells removed `a_i`, rows touched `r_i`).
//! Replacing `r_i` by `s_i = a_i - r_i + eps_i`, where `eps_i = 0`
//! iff `e | a_i`, and rebuilding the partition realizes the map.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, Partition, PartitionFilter};
use crate::{worker_count, Error, Result};

/// Two-row array (a_1..a_k; r_1..r_k) with parameter `e`, validated
/// against the six symbol conditions on construction.
///
/// Serializes as `{"e":5,"a":[12,8,5,4,2],"r":[7,4,3,3,2]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol", into = "RawSymbol")]
pub struct MullineuxSymbol {
    e: usize,
    a: Vec<usize>,
    r: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSymbol {
    e: usize,
    a: Vec<i64>,
    r: Vec<i64>,
}

impl TryFrom<RawSymbol> for MullineuxSymbol {
    type Error = Error;
    fn try_from(raw: RawSymbol) -> Result<Self> {
        let conv = |v: &[i64]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&x| usize::try_from(x).map_err(|_| Error::InvalidSymbol(format!("entry {x} not positive"))))
                .collect()
        };
        MullineuxSymbol::new(raw.e, conv(&raw.a)?, conv(&raw.r)?)
    }
}

impl From<MullineuxSymbol> for RawSymbol {
    fn from(s: MullineuxSymbol) -> Self {
        RawSymbol {
            e: s.e,
            a: s.a.iter().map(|&x| x as i64).collect(),
            r: s.r.iter().map(|&x| x as i64).collect(),
        }
    }
}

impl MullineuxSymbol {
    /// Validates the rows against the six symbol conditions.
    pub fn new(e: usize, a: Vec<usize>, r: Vec<usize>) -> Result<Self> {
        if e < 2 {
            return Err(Error::BadModulus(e));
        }
        if !validate_symbol(&a, &r, e) {
            return Err(Error::InvalidSymbol(format!(
                "rows a={a:?}, r={r:?} violate the symbol conditions for e={e}"
            )));
        }
        Ok(Self { e, a, r })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Top row: cells removed per e-rim layer.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// Bottom row: rows touched per e-rim layer.
    pub fn r(&self) -> &[usize] {
        &self.r
    }

    /// Number of columns (layers).
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Total Σ a_i = |λ|.
    pub fn total(&self) -> usize {
        self.a.iter().sum()
    }

    /// eps_i = 0 iff e | a_i.
    pub fn eps(&self, i: usize) -> usize {
        eps(self.a[i], self.e)
    }

    /// The symbol of the image under `m_e`: bottom row replaced by
    /// s_i = a_i - r_i + eps_i.
    pub fn image(&self) -> Result<MullineuxSymbol> {
        let s = (0..self.len())
            .map(|i| self.a[i] - self.r[i] + self.eps(i))
            .collect();
        MullineuxSymbol::new(self.e, self.a.clone(), s)
    }

    /// True iff r_i = (a_i + eps_i)/2 for every column — the symbol
    /// shape of a Mullineux fixed point.
    pub fn is_fixed_point_shaped(&self) -> bool {
        (0..self.len()).all(|i| 2 * self.r[i] == self.a[i] + self.eps(i))
    }
}

impl fmt::Debug for MullineuxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?}) [e={}]", self.a, self.r, self.e)
    }
}

fn eps(a: usize, e: usize) -> usize {
    usize::from(a % e != 0)
}

/// Checks conditions (i)–(vi) for a raw two-row array:
/// (i) 0 ≤ r_i − r_{i+1} ≤ e;
/// (ii) r_i − r_{i+1} + eps_{i+1} ≤ a_i − a_{i+1} ≤ r_i − r_{i+1} + eps_{i+1} + e;
/// (iii) r_i = r_{i+1} ⇒ e | a_i;
/// (iv) r_i − r_{i+1} = e ⇒ e ∤ a_i;
/// (v) 0 ≤ a_k − r_k < e;
/// (vi) 1 ≤ r_k ≤ e, and r_k = e ⇒ a_k − r_k > 0.
///
/// Returns false (never errors) on malformed shapes; the empty array
/// is the valid symbol of the empty partition.
pub fn validate_symbol(a: &[usize], r: &[usize], e: usize) -> bool {
    if a.len() != r.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    if a.iter().chain(r.iter()).any(|&x| x == 0) {
        return false;
    }
    let k = a.len();
    for i in 0..k - 1 {
        let (ai, ri) = (a[i] as i64, r[i] as i64);
        let (an, rn) = (a[i + 1] as i64, r[i + 1] as i64);
        let dr = ri - rn;
        let da = ai - an;
        let en = eps(a[i + 1], e) as i64;
        if !(0 <= dr && dr <= e as i64) {
            return false;
        }
        if !(dr + en <= da && da <= dr + en + e as i64) {
            return false;
        }
        if dr == 0 && a[i] % e != 0 {
            return false;
        }
        if dr == e as i64 && a[i] % e == 0 {
            return false;
        }
    }
    let (ak, rk) = (a[k - 1], r[k - 1]);
    if rk > ak || ak - rk >= e {
        return false;
    }
    if !(1 <= rk && rk <= e) {
        return false;
    }
    if rk == e && ak == rk {
        return false;
    }
    true
}

/// One layer of e-rim removal: returns the per-row take counts
/// `t_j` for rows 1..=len(λ). The traversal takes rim cells in
/// segments of `e` from the top right; when a segment completes
/// mid-row, the next one starts at the rightmost rim cell of the
/// next row.
fn rim_take_counts(lambda: &Partition, e: usize) -> Vec<usize> {
    let rows = lambda.len();
    let mut t = Vec::with_capacity(rows);
    let mut k = 0; // cells taken in the current segment so far
    for j in 1..=rows {
        // row j's rim length
        let next = lambda.part(j + 1);
        let rim_len = if next == 0 { lambda.part(j) } else { lambda.part(j) - next + 1 };
        let take = rim_len.min(e - k);
        t.push(take);
        k += take;
        if k == e {
            k = 0;
        } else if take == rim_len {
            // row exhausted mid-segment: continue on the next row
        } else {
            // segment completed mid-row: restart below
            k = 0;
        }
    }
    t
}

/// Removes one e-rim layer; returns ((cells removed, rows touched),
/// remaining partition).
fn strip_rim_layer(lambda: &Partition, e: usize) -> ((usize, usize), Partition) {
    let t = rim_take_counts(lambda, e);
    let a: usize = t.iter().sum();
    let r = lambda.len();
    let rest = Partition::from_parts(
        (0..r)
            .map(|j| lambda.parts()[j] - t[j])
            .take_while(|&p| p > 0)
            .collect(),
    );
    ((a, r), rest)
}

/// The Mullineux symbol G_e(λ): iterated e-rim removal until empty.
pub fn compute_symbol(lambda: &Partition, e: usize) -> Result<MullineuxSymbol> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    if !lambda.is_e_regular(e) {
        return Err(Error::NotRegular { e });
    }
    let mut a = Vec::new();
    let mut r = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_empty() {
        let ((ai, ri), rest) = strip_rim_layer(&cur, e);
        debug_assert!(rest.is_e_regular(e), "e-rim removal broke regularity");
        a.push(ai);
        r.push(ri);
        cur = rest;
    }
    MullineuxSymbol::new(e, a, r)
}

/// Adds one e-rim layer of `a` cells across exactly `rows` rows
/// around `mu`, so that stripping a layer recovers (`mu`, a, rows).
///
/// Layer shape: within a traversal segment, every row after the
/// first has its take count forced to d_j = mu_{j-1} - mu_j + 1;
/// only the segment-boundary placement is searched (bottom-up, with
/// the coupling bound t_b ≤ d_b at each boundary), and the unique
/// candidate is confirmed by replaying the forward removal.
fn add_rim_layer(mu: &Partition, a: usize, rows: usize, e: usize) -> Option<Partition> {
    if a == 0 || rows == 0 || rows < mu.len() || a < rows {
        return None;
    }
    // take counts t[0..rows], chosen bottom-up (index rows-1 first)
    let mut t = vec![0usize; rows];
    let bottom = ((a - 1) % e) + 1; // size of the traversal's final segment
    let mut found: Option<Partition> = None;
    search(mu, a, rows, e, rows, a, bottom, &mut t, &mut found);
    found
}

/// Bottom-up DFS over segment boundaries. `j` is the 1-based row
/// about to be assigned (rows j+1..rows already fixed), `rem` the
/// cells still to place, `need` the unfilled portion of the current
/// segment.
fn search(
    mu: &Partition,
    a: usize,
    rows: usize,
    e: usize,
    j: usize,
    rem: usize,
    need: usize,
    t: &mut Vec<usize>,
    found: &mut Option<Partition>,
) {
    if found.is_some() {
        return;
    }
    if j == 0 {
        if rem != 0 {
            return;
        }
        // candidate λ_j = μ_j + t_j; confirm by forward replay
        let parts: Vec<usize> = (1..=rows).map(|i| mu.part(i) + t[i - 1]).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return;
        }
        let cand = Partition::from_parts(parts);
        let ((ca, cr), rest) = strip_rim_layer(&cand, e);
        if ca == a && cr == rows && rest == *mu {
            *found = Some(cand);
        }
        return;
    }
    // every remaining row takes at least one cell
    if rem < need || rem < j {
        return;
    }
    let lam_below = if j == rows { 0 } else { mu.part(j + 1) + t[j] };
    // forced take count when row j continues the segment started above
    let d = if j >= 2 { mu.part(j - 1) + 1 - mu.part(j) } else { 0 };

    // choice 1: row j is a segment start, absorbing the whole `need`
    {
        let tj = need;
        // λ_j ≥ λ_{j+1}, and row j may not take more than its rim length
        let lam_j = mu.part(j) + tj;
        let rim_ok = if j == rows {
            true // L_rows = λ_rows ≥ t_j always
        } else {
            lam_j >= lam_below && tj <= lam_j - lam_below + 1
        };
        if rim_ok && lam_j >= 1 {
            t[j - 1] = tj;
            let new_need = if rem - tj > 0 { e } else { 0 };
            search(mu, a, rows, e, j - 1, rem - tj, new_need, t, found);
        }
    }
    // choice 2: row j continues a segment that starts strictly above
    if j >= 2 && d >= 1 && d < need {
        let tj = d;
        let lam_j = mu.part(j) + tj;
        let rim_ok = if j == rows {
            true
        } else {
            lam_j >= lam_below && tj <= lam_j - lam_below + 1
        };
        if rim_ok {
            t[j - 1] = tj;
            search(mu, a, rows, e, j - 1, rem - tj, need - tj, t, found);
        }
    }
}

/// The unique e-regular partition whose symbol is `sym`.
pub fn reconstruct(sym: &MullineuxSymbol) -> Result<Partition> {
    let mut cur = Partition::empty();
    for i in (0..sym.len()).rev() {
        cur = add_rim_layer(&cur, sym.a()[i], sym.r()[i], sym.e())
            .ok_or(Error::UnrealizableSymbol)?;
    }
    Ok(cur)
}

/// The Mullineux map m_e(λ) for e-regular λ.
pub fn mullineux_map(lambda: &Partition, e: usize) -> Result<Partition> {
    if lambda.is_empty() {
        if e < 2 {
            return Err(Error::BadModulus(e));
        }
        return Ok(Partition::empty());
    }
    let sym = compute_symbol(lambda, e)?;
    let image = reconstruct(&sym.image()?)?;
    debug_assert!(image.is_e_regular(e));
    Ok(image)
}

/// True iff m_e(λ) = λ. Computed from the direct image; in debug
/// builds the symbol criterion r_i = (a_i + eps_i)/2 is asserted to
/// agree.
pub fn is_fixed(lambda: &Partition, e: usize) -> Result<bool> {
    let fixed = mullineux_map(lambda, e)? == *lambda;
    #[cfg(debug_assertions)]
    {
        let by_symbol = compute_symbol(lambda, e)?.is_fixed_point_shaped();
        debug_assert_eq!(fixed, by_symbol, "fixed-point criteria disagree on {lambda:?}");
    }
    Ok(fixed)
}

/// All e-regular λ ⊢ n with m_e(λ) = λ, in the deterministic
/// enumeration order. Shards across `MULLINEUX_THREADS` workers; the
/// merged order is identical for any worker count.
pub fn fixed_points(n: usize, e: usize) -> Vec<Partition> {
    let candidates = enumerate(n, &PartitionFilter::ERegular(e));
    let workers = worker_count().min(candidates.len().max(1));
    if workers <= 1 {
        return candidates
            .into_iter()
            .filter(|lam| is_fixed(lam, e).expect("e-regular by construction"))
            .collect();
    }
    let mut keep = vec![false; candidates.len()];
    std::thread::scope(|scope| {
        for (w, chunk) in keep.chunks_mut(candidates.len().div_ceil(workers)).enumerate() {
            let offset = w * candidates.len().div_ceil(workers);
            let candidates = &candidates;
            scope.spawn(move || {
                for (i, flag) in chunk.iter_mut().enumerate() {
                    *flag = is_fixed(&candidates[offset + i], e).expect("e-regular by construction");
                }
            });
        }
    });
    candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(lam, k)| k.then_some(lam))
        .collect()
}

/// True iff the part sequence satisfies the five fixed-point-symbol
/// top-row conditions:
/// (i) 2 | a_i ⟺ e | a_i; (ii) 0 ≤ a_i − a_{i+1} ≤ 2e;
/// (iii) a_i = a_{i+1} ⇒ a_i even; (iv) a_i − a_{i+1} = 2e ⇒ a_i odd;
/// (v) a_k < 2e.
pub fn in_me_set(lambda: &Partition, e: usize) -> bool {
    let a = lambda.parts();
    if a.iter().any(|&x| (x % 2 == 0) != (x % e == 0)) {
        return false;
    }
    for w in a.windows(2) {
        let gap = w[0] - w[1];
        if gap > 2 * e {
            return false;
        }
        if gap == 0 && w[0] % 2 != 0 {
            return false;
        }
        if gap == 2 * e && w[0] % 2 == 0 {
            return false;
        }
    }
    a.last().map_or(true, |&ak| ak < 2 * e)
}

/// All partitions of `n` in the set M_e(n), in enumeration order.
/// Their count equals |fixed_points(n, e)|.
pub fn enumerate_me(n: usize, e: usize) -> Vec<Partition> {
    enumerate(n, &PartitionFilter::All)
        .into_iter()
        .filter(|lam| in_me_set(lam, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn worked_symbol() {
        let sym = compute_symbol(&p(&[7, 7, 7, 4, 4, 1, 1]), 5).unwrap();
        assert_eq!(sym.a(), &[12, 8, 5, 4, 2]);
        assert_eq!(sym.r(), &[7, 4, 3, 3, 2]);
        assert_eq!(sym.total(), 31);
    }

    #[test]
    fn worked_image_and_map() {
        let sym = compute_symbol(&p(&[7, 7, 7, 4, 4, 1, 1]), 5).unwrap();
        let image = sym.image().unwrap();
        assert_eq!(image.a(), &[12, 8, 5, 4, 2]);
        assert_eq!(image.r(), &[6, 5, 2, 2, 1]);
        assert_eq!(
            mullineux_map(&p(&[7, 7, 7, 4, 4, 1, 1]), 5).unwrap(),
            p(&[12, 9, 4, 2, 2, 2])
        );
        assert_eq!(
            mullineux_map(&p(&[12, 9, 4, 2, 2, 2]), 5).unwrap(),
            p(&[7, 7, 7, 4, 4, 1, 1])
        );
    }

    #[test]
    fn single_cell_and_empty() {
        for e in 2..=7 {
            let sym = compute_symbol(&p(&[1]), e).unwrap();
            assert_eq!((sym.a(), sym.r()), (&[1][..], &[1][..]));
            assert_eq!(mullineux_map(&p(&[1]), e).unwrap(), p(&[1]));
            assert_eq!(mullineux_map(&Partition::empty(), e).unwrap(), Partition::empty());
        }
        assert!(compute_symbol(&p(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn symbol_validation() {
        assert!(validate_symbol(&[12, 8, 5, 4, 2], &[7, 4, 3, 3, 2], 5));
        assert!(validate_symbol(&[12, 8, 5, 4, 2], &[6, 5, 2, 2, 1], 5));
        for e in 2..=6 {
            // violates (v): a_k - r_k < 0
            assert!(!validate_symbol(&[e], &[e + 1], e));
        }
        assert!(!validate_symbol(&[3, 2], &[1], 2)); // ragged
        assert!(validate_symbol(&[], &[], 5)); // empty partition
    }

    #[test]
    fn symbols_of_enumerated_partitions_are_valid() {
        for e in 2..=6 {
            for n in 1..=18 {
                for lam in enumerate(n, &PartitionFilter::ERegular(e)) {
                    let sym = compute_symbol(&lam, e).unwrap();
                    assert_eq!(sym.total(), n);
                    assert!(sym.a().windows(2).all(|w| w[0] >= w[1]));
                    // image symbols are valid too
                    sym.image().unwrap();
                }
            }
        }
    }

    #[test]
    fn round_trip_reconstruct() {
        for e in 2..=7 {
            for n in 1..=16 {
                for lam in enumerate(n, &PartitionFilter::ERegular(e)) {
                    let sym = compute_symbol(&lam, e).unwrap();
                    assert_eq!(reconstruct(&sym).unwrap(), lam, "e={e}");
                }
            }
        }
    }

    #[test]
    fn involution_small() {
        for e in 2..=6 {
            for n in 1..=14 {
                for lam in enumerate(n, &PartitionFilter::ERegular(e)) {
                    let img = mullineux_map(&lam, e).unwrap();
                    assert!(img.is_e_regular(e));
                    assert_eq!(mullineux_map(&img, e).unwrap(), lam, "e={e}");
                }
            }
        }
    }

    #[test]
    fn e2_is_identity() {
        for n in 1..=16 {
            for lam in enumerate(n, &PartitionFilter::ERegular(2)) {
                assert_eq!(mullineux_map(&lam, 2).unwrap(), lam);
            }
        }
    }

    #[test]
    fn fixed_point_checks() {
        assert!(is_fixed(&p(&[1]), 3).unwrap());
        assert!(!is_fixed(&p(&[12, 9, 4, 2, 2, 2]), 5).unwrap());
        // Σ over weights of row n=9, e=4 is 0+1+3 = 4
        assert_eq!(fixed_points(9, 4).len(), 4);
        assert_eq!(fixed_points(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn fixed_points_sharding_is_order_stable() {
        let baseline = fixed_points(18, 4);
        for threads in ["2", "3", "8"] {
            std::env::set_var("MULLINEUX_THREADS", threads);
            assert_eq!(fixed_points(18, 4), baseline);
        }
        std::env::remove_var("MULLINEUX_THREADS");
    }

    #[test]
    fn me_set_matches_fixed_points() {
        for e in 2..=6 {
            for n in 0..=18 {
                assert_eq!(
                    enumerate_me(n, e).len(),
                    fixed_points(n, e).len(),
                    "e={e} n={n}"
                );
            }
        }
    }

    #[test]
    fn me_set_boundary_at_two_e() {
        for e in 2..=7 {
            let at_2e = enumerate_me(2 * e, e);
            assert!(!at_2e.contains(&p(&[2 * e as i64])), "a_k < 2e violated");
            let ee = p(&[e as i64, e as i64]);
            assert_eq!(at_2e.contains(&ee), e % 2 == 0, "e={e}");
        }
    }

    #[test]
    fn symbol_json_round_trip() {
        let sym = MullineuxSymbol::new(5, vec![12, 8, 5, 4, 2], vec![7, 4, 3, 3, 2]).unwrap();
        let s = serde_json::to_string(&sym).unwrap();
        assert_eq!(s, r#"{"e":5,"a":[12,8,5,4,2],"r":[7,4,3,3,2]}"#);
        assert_eq!(serde_json::from_str::<MullineuxSymbol>(&s).unwrap(), sym);
        assert!(serde_json::from_str::<MullineuxSymbol>(r#"{"e":5,"a":[5],"r":[6]}"#).is_err());
    }
}
