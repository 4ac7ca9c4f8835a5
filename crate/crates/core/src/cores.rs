//! e-cores, e-weights, self-conjugate core enumeration, and the
//! bijection between e-cores and zero-sum integer vectors, including
//! the vector read directly off a fixed-point Mullineux symbol.

use serde::{Deserialize, Serialize};

use crate::mullineux::MullineuxSymbol;
use crate::partitions::{enumerate, Partition, PartitionFilter};
use crate::{Error, Result};

/// Length-e integer vector (n_0, …, n_{e-1}) with Σ n_i = 0,
/// encoding an e-core. Serializes as `{"e":4,"n":[1,0,-1,0]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNVector", into = "RawNVector")]
pub struct NVector {
    e: usize,
    n: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawNVector {
    e: usize,
    n: Vec<i64>,
}

impl TryFrom<RawNVector> for NVector {
    type Error = Error;
    fn try_from(raw: RawNVector) -> Result<Self> {
        NVector::new(raw.e, raw.n)
    }
}

impl From<NVector> for RawNVector {
    fn from(v: NVector) -> Self {
        RawNVector { e: v.e, n: v.n }
    }
}

impl NVector {
    pub fn new(e: usize, n: Vec<i64>) -> Result<Self> {
        if e < 2 {
            return Err(Error::BadModulus(e));
        }
        if n.len() != e {
            return Err(Error::NVectorLength);
        }
        if n.iter().sum::<i64>() != 0 {
            return Err(Error::NVectorSum);
        }
        Ok(Self { e, n })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn entries(&self) -> &[i64] {
        &self.n
    }

    pub fn zero(e: usize) -> Self {
        Self::new(e, vec![0; e]).expect("zero vector is valid")
    }
}

/// An e-core together with the e-weight of the partition it came
/// from. Serializes as `{"core":[2,1],"weight":3,"e":2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDecomposition {
    pub core: Partition,
    pub weight: usize,
    pub e: usize,
}

/// Removes rim e-hooks until none remain, taking the topmost
/// removable hook first (order-independence of the result is a
/// tested theorem, not an assumption here).
pub fn e_core(lambda: &Partition, e: usize) -> CoreDecomposition {
    assert!(e >= 2, "e must be at least 2");
    let mut cur = lambda.clone();
    let mut weight = 0;
    'outer: loop {
        for i in 1..=cur.len() {
            for j in 1..=cur.part(i) {
                if cur.hook_length(i, j) == e {
                    cur = remove_rim_hook(&cur, i, j);
                    weight += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    debug_assert_eq!(cur.n() + e * weight, lambda.n());
    CoreDecomposition { core: cur, weight, e }
}

/// Removes the rim hook whose hand row is `i` and foot column is
/// `j`, i.e. the rim strip associated with the hook of cell (i, j).
fn remove_rim_hook(lambda: &Partition, i: usize, j: usize) -> Partition {
    // rows i..m lose down to the row below shifted left; row m ends at j-1,
    // where m is the lowest row whose length is ≥ j
    let m = (i..=lambda.len()).rev().find(|&k| lambda.part(k) >= j).unwrap();
    let parts: Vec<usize> = (1..=lambda.len())
        .filter_map(|k| {
            let v = if k < i || k > m {
                lambda.part(k)
            } else if k < m {
                lambda.part(k + 1) - 1
            } else {
                j - 1
            };
            (v > 0).then_some(v)
        })
        .collect();
    Partition::from_parts(parts)
}

/// Independent e-core computation on the e-runner abacus: beta-set
/// beads slide to the bottom of their runners; the slide count is
/// the weight. Used as a second strategy in order-independence tests.
pub fn e_core_via_abacus(lambda: &Partition, e: usize) -> CoreDecomposition {
    assert!(e >= 2, "e must be at least 2");
    let b = beads_multiple_of(lambda.len(), e);
    let beta = beta_set(lambda, b);
    let mut weight = 0usize;
    // per runner, beads drop to the lowest rows
    let mut final_beta = Vec::with_capacity(b);
    for j in 0..e {
        let mut rows: Vec<usize> = beta.iter().filter(|&&x| x % e == j).map(|&x| x / e).collect();
        rows.sort_unstable();
        for (slot, &row) in rows.iter().enumerate() {
            weight += row - slot;
            final_beta.push(slot * e + j);
        }
    }
    final_beta.sort_unstable_by(|a, b| b.cmp(a));
    let core = partition_from_beta(&final_beta);
    CoreDecomposition { core, weight, e }
}

fn beads_multiple_of(len: usize, e: usize) -> usize {
    ((len / e) + 1) * e
}

/// First-column hook lengths padded to `b` beads: {λ_i + b − i}.
fn beta_set(lambda: &Partition, b: usize) -> Vec<usize> {
    assert!(b >= lambda.len());
    (1..=b).map(|i| lambda.part(i) + b - i).collect()
}

/// Inverse of [`beta_set`] for beads sorted strictly decreasing.
fn partition_from_beta(beta: &[usize]) -> Partition {
    let b = beta.len();
    let parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(idx, &x)| x + idx + 1 - b)
        .take_while(|&p| p > 0)
        .collect();
    Partition::from_parts(parts)
}

/// Size of the e-core encoded by `v`: (e/2)·Σ n_i² + Σ i·n_i.
pub fn core_size_from_nvector(v: &NVector) -> i64 {
    let e = v.e() as i64;
    let sq: i64 = v.entries().iter().map(|&x| x * x).sum();
    debug_assert_eq!(e * sq % 2, 0, "e·Σn² is even because Σn is");
    let lin: i64 = v.entries().iter().enumerate().map(|(i, &x)| i as i64 * x).sum();
    e * sq / 2 + lin
}

/// The zero-sum vector of an e-core: runner bead counts of a
/// beta-set with a baseline number of beads divisible by e, minus
/// the baseline count per runner. Any baseline that is a multiple
/// of e gives the same vector.
pub fn nvector_from_core(mu: &Partition, e: usize) -> Result<NVector> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    let dec = e_core(mu, e);
    if dec.weight > 0 {
        return Err(Error::NotACore { e, weight: dec.weight });
    }
    Ok(nvector_from_beta_baseline(mu, e, beads_multiple_of(mu.len(), e)))
}

pub(crate) fn nvector_from_beta_baseline(mu: &Partition, e: usize, b: usize) -> NVector {
    debug_assert_eq!(b % e, 0);
    let mut n = vec![-((b / e) as i64); e];
    for x in beta_set(mu, b) {
        n[x % e] += 1;
    }
    NVector::new(e, n).expect("runner counts sum to bead count")
}

/// The e-core encoded by a zero-sum vector: each runner j holds its
/// (baseline + n_j) lowest positions.
pub fn core_from_nvector(v: &NVector) -> Partition {
    let e = v.e();
    let base = v.entries().iter().map(|&x| (-x).max(0)).max().unwrap_or(0) + 1;
    let mut beta = Vec::new();
    for (j, &nj) in v.entries().iter().enumerate() {
        for row in 0..(base + nj) as usize {
            beta.push(row * e + j);
        }
    }
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let core = partition_from_beta(&beta);
    debug_assert_eq!(e_core(&core, e).weight, 0);
    core
}

/// The zero-sum vector of λ_(e) read off a fixed-point symbol:
/// n_j = #{i : (a_i − eps_i)/2 ≡ j} − #{i : (−a_i − eps_i)/2 ≡ j}
/// with residues reduced into 0..e.
pub fn nvector_from_symbol(sym: &MullineuxSymbol) -> Result<NVector> {
    if !sym.is_fixed_point_shaped() {
        return Err(Error::NotFixedPointSymbol);
    }
    let e = sym.e() as i64;
    let mut n = vec![0i64; sym.e()];
    for (i, &a) in sym.a().iter().enumerate() {
        let a = a as i64;
        let eps = sym.eps(i) as i64;
        debug_assert_eq!((a + eps) % 2, 0, "fixed-point parity guarantees integrality");
        n[((a - eps) / 2).rem_euclid(e) as usize] += 1;
        n[((-a - eps) / 2).rem_euclid(e) as usize] -= 1;
    }
    NVector::new(sym.e(), n)
}

/// e-weight of the fixed point behind `sym`: (Σ a_i − |core|) / e.
pub fn weight_from_symbol(sym: &MullineuxSymbol) -> Result<usize> {
    let core = core_size_from_nvector(&nvector_from_symbol(sym)?);
    let total = sym.total();
    let diff = total as i64 - core;
    if diff < 0 || diff % sym.e() as i64 != 0 {
        return Err(Error::NonIntegralWeight { total, core, e: sym.e() });
    }
    Ok((diff / sym.e() as i64) as usize)
}

/// All self-conjugate e-cores of `n`, in enumeration order.
pub fn self_conjugate_cores(n: usize, e: usize) -> Vec<Partition> {
    enumerate(n, &PartitionFilter::All)
        .into_iter()
        .filter(|mu| mu.is_self_conjugate() && e_core(mu, e).weight == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mullineux::{compute_symbol, fixed_points, mullineux_map};

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn small_cores() {
        // nothing removable below size e
        for e in 2..=6 {
            for n in 0..e {
                for lam in enumerate(n, &PartitionFilter::All) {
                    let dec = e_core(&lam, e);
                    assert_eq!((dec.core.clone(), dec.weight), (lam, 0));
                }
            }
        }
        let dec = e_core(&p(&[2, 1]), 2);
        assert_eq!((dec.core, dec.weight), (p(&[2, 1]), 0));
        let dec = e_core(&p(&[2, 2]), 2);
        assert_eq!((dec.core, dec.weight), (Partition::empty(), 2));
    }

    #[test]
    fn strategies_agree() {
        for e in 2..=6 {
            for n in 0..=14 {
                for lam in enumerate(n, &PartitionFilter::All) {
                    let a = e_core(&lam, e);
                    let b = e_core_via_abacus(&lam, e);
                    assert_eq!((a.core, a.weight), (b.core, b.weight), "e={e} λ={lam:?}");
                }
            }
        }
    }

    #[test]
    fn core_idempotence_and_conjugation() {
        for e in 2..=5 {
            for n in 0..=12 {
                for lam in enumerate(n, &PartitionFilter::All) {
                    let dec = e_core(&lam, e);
                    let again = e_core(&dec.core, e);
                    assert_eq!((again.core, again.weight), (dec.core.clone(), 0));
                    assert_eq!(
                        e_core(&lam.conjugate(), e).core,
                        dec.core.conjugate()
                    );
                }
            }
        }
    }

    #[test]
    fn map_on_cores_is_conjugation() {
        for e in 2..=5 {
            for n in 0..=14 {
                for lam in enumerate(n, &PartitionFilter::All) {
                    if e_core(&lam, e).weight == 0 && lam.is_e_regular(e) {
                        assert_eq!(mullineux_map(&lam, e).unwrap(), lam.conjugate());
                    }
                }
            }
        }
    }

    #[test]
    fn nvector_basics() {
        assert_eq!(
            nvector_from_core(&Partition::empty(), 3).unwrap(),
            NVector::zero(3)
        );
        assert_eq!(core_size_from_nvector(&NVector::zero(5)), 0);
        let v = NVector::new(2, vec![-1, 1]).unwrap();
        assert_eq!(core_size_from_nvector(&v), 3);
        assert_eq!(core_from_nvector(&v), p(&[2, 1]));
        assert_eq!(nvector_from_core(&p(&[2, 1]), 2).unwrap(), v);
        assert!(NVector::new(3, vec![1, 1]).is_err());
        assert!(NVector::new(3, vec![1, 1, 0]).is_err());
        assert!(nvector_from_core(&p(&[2]), 2).is_err());
    }

    #[test]
    fn nvector_round_trips() {
        for e in 2..=6 {
            for n in 0..=14 {
                for mu in enumerate(n, &PartitionFilter::All) {
                    if e_core(&mu, e).weight != 0 {
                        continue;
                    }
                    let v = nvector_from_core(&mu, e).unwrap();
                    assert_eq!(core_from_nvector(&v), mu, "e={e}");
                    assert_eq!(core_size_from_nvector(&v) as usize, n);
                    // baseline independence
                    for extra in 1..=3 {
                        let b = beads_multiple_of(mu.len(), e) + extra * e;
                        assert_eq!(nvector_from_beta_baseline(&mu, e, b), v);
                    }
                }
            }
        }
    }

    #[test]
    fn nvector_size_formula_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for e in 2..=6 {
            for _ in 0..50 {
                let mut n: Vec<i64> = (0..e - 1).map(|_| rng.gen_range(-3..=3)).collect();
                let last = -n.iter().sum::<i64>();
                n.push(last);
                let v = NVector::new(e, n).unwrap();
                let mu = core_from_nvector(&v);
                assert_eq!(mu.n() as i64, core_size_from_nvector(&v));
                assert_eq!(nvector_from_core(&mu, e).unwrap(), v);
            }
        }
    }

    #[test]
    fn symbol_nvector_matches_rim_hook_core() {
        for e in 3..=6 {
            for n in 0..=16 {
                for lam in fixed_points(n, e) {
                    if lam.is_empty() {
                        continue;
                    }
                    let sym = compute_symbol(&lam, e).unwrap();
                    let dec = e_core(&lam, e);
                    assert_eq!(
                        nvector_from_symbol(&sym).unwrap(),
                        nvector_from_core(&dec.core, e).unwrap(),
                        "e={e} λ={lam:?}"
                    );
                    assert_eq!(weight_from_symbol(&sym).unwrap(), dec.weight);
                }
            }
        }
    }

    #[test]
    fn symbol_nvector_single_cell() {
        for e in 3..=6 {
            let sym = compute_symbol(&p(&[1]), e).unwrap();
            assert_eq!(
                nvector_from_symbol(&sym).unwrap(),
                nvector_from_core(&p(&[1]), e).unwrap()
            );
        }
        // non-fixed-point symbols are rejected (m_4(2) = (1,1))
        let sym = compute_symbol(&p(&[2]), 4).unwrap();
        assert!(matches!(
            nvector_from_symbol(&sym),
            Err(Error::NotFixedPointSymbol)
        ));
    }

    #[test]
    fn self_conjugate_core_counts_e4() {
        let want = [1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 0, 0, 1, 1, 0];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(self_conjugate_cores(n, 4).len(), w, "n={n}");
        }
    }

    #[test]
    fn json_schemas() {
        let v = NVector::new(4, vec![1, 0, -1, 0]).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"e":4,"n":[1,0,-1,0]}"#);
        assert_eq!(serde_json::from_str::<NVector>(&s).unwrap(), v);

        let dec = CoreDecomposition { core: p(&[2, 1]), weight: 3, e: 2 };
        let s = serde_json::to_string(&dec).unwrap();
        assert_eq!(s, r#"{"core":[2,1],"weight":3,"e":2}"#);
        assert_eq!(serde_json::from_str::<CoreDecomposition>(&s).unwrap(), dec);
    }
}
