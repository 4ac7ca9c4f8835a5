//! The t-runner abacus for distinct-part ("bar") partitions, t-bar
//! cores and bar weights, and the tuple counts κ(r, s).
//!
//! A bead sits at position p = its part value, on runner p mod t,
//! row ⌊p/t⌋. Two operations each remove t from the partitioned
//! number: slide a bead up one row into a vacant spot (a bead
//! reaching position 0 disappears), or remove a first-row pair at
//! positions a and t − a. The bar core is the stable state; the bar
//! weight is the number of operations performed.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, Partition, PartitionFilter};
use crate::{Error, Result};

/// Bead display of a distinct-part partition on `t` runners.
/// Serializes as `{"t":6,"beads":[7,9,11,13,17,21,23]}` with beads
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAbacus", into = "RawAbacus")]
pub struct Abacus {
    t: usize,
    beads: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawAbacus {
    t: usize,
    beads: Vec<usize>,
}

impl TryFrom<RawAbacus> for Abacus {
    type Error = Error;
    fn try_from(raw: RawAbacus) -> Result<Self> {
        let beads: BTreeSet<usize> = raw.beads.iter().copied().collect();
        if beads.len() != raw.beads.len() || beads.contains(&0) {
            return Err(Error::RepeatedParts);
        }
        if raw.t < 2 {
            return Err(Error::BadModulus(raw.t));
        }
        Ok(Abacus { t: raw.t, beads })
    }
}

impl From<Abacus> for RawAbacus {
    fn from(ab: Abacus) -> Self {
        RawAbacus { t: ab.t, beads: ab.beads.into_iter().collect() }
    }
}

impl Abacus {
    pub fn t(&self) -> usize {
        self.t
    }

    /// Bead positions in ascending order.
    pub fn beads(&self) -> impl Iterator<Item = usize> + '_ {
        self.beads.iter().copied()
    }

    /// Runner (p mod t) and row (⌊p/t⌋) of each bead, ascending by position.
    pub fn runner_rows(&self) -> Vec<(usize, usize)> {
        self.beads.iter().map(|&p| (p % self.t, p / self.t)).collect()
    }

    /// The partition whose parts are the bead positions.
    pub fn partition(&self) -> Partition {
        Partition::from_parts(self.beads.iter().rev().copied().collect())
    }

    /// Text grid: a header row of runner labels, then one row of
    /// `.`/`o` per abacus row starting at positions 0..t-1.
    pub fn render(&self) -> String {
        let rows = self.beads.iter().max().map_or(1, |&p| p / self.t + 1);
        let width = (self.t - 1).to_string().len();
        let mut out = String::new();
        for j in 0..self.t {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{j:>width$}"));
        }
        out.push('\n');
        for row in 0..rows {
            for j in 0..self.t {
                if j > 0 {
                    out.push(' ');
                }
                let mark = if self.beads.contains(&(row * self.t + j)) { 'o' } else { '.' };
                out.push_str(&format!("{mark:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the abacus display of a distinct-part partition.
pub fn abacus_display(lambda: &Partition, t: usize) -> Result<Abacus> {
    if t < 2 {
        return Err(Error::BadModulus(t));
    }
    if !lambda.has_distinct_parts() {
        return Err(Error::RepeatedParts);
    }
    Ok(Abacus { t, beads: lambda.parts().iter().copied().collect() })
}

/// A bar core with the operation count that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarCoreDecomposition {
    pub core: Partition,
    pub bar_weight: usize,
    pub t: usize,
    /// True on the domain where the result is order-independent:
    /// all parts odd and t = 2e with e even. Outside it the core is
    /// whatever the canonical strategy reaches.
    pub guaranteed: bool,
}

/// True iff (λ, t) lies in the domain with full well-definedness
/// guarantees: odd distinct parts, t ≡ 0 mod 4.
pub fn in_guaranteed_domain(lambda: &Partition, t: usize) -> bool {
    t % 4 == 0 && lambda.parts().iter().all(|&p| p % 2 == 1)
}

/// One abacus operation, applied to a bead set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    /// p → p − t (bead at t disappears at position 0).
    Slide(usize),
    /// remove beads at a and t − a (first row).
    Pair(usize),
}

fn legal_ops(beads: &BTreeSet<usize>, t: usize) -> Vec<Op> {
    let mut ops = Vec::new();
    for &p in beads {
        if p >= t && (p == t || !beads.contains(&(p - t))) {
            ops.push(Op::Slide(p));
        }
    }
    for a in 1..t.div_ceil(2) {
        if beads.contains(&a) && beads.contains(&(t - a)) {
            ops.push(Op::Pair(a));
        }
    }
    ops
}

fn apply(beads: &mut BTreeSet<usize>, t: usize, op: Op) {
    match op {
        Op::Slide(p) => {
            beads.remove(&p);
            if p > t {
                beads.insert(p - t);
            }
        }
        Op::Pair(a) => {
            beads.remove(&a);
            beads.remove(&(t - a));
        }
    }
}

/// Computes the t-bar core canonically: slide every bead fully up
/// its runner (runners in ascending order), then remove
/// complementary first-row pairs; repeat until stable.
pub fn bar_core(lambda: &Partition, t: usize) -> Result<BarCoreDecomposition> {
    if t < 2 {
        return Err(Error::BadModulus(t));
    }
    if !lambda.has_distinct_parts() {
        return Err(Error::RepeatedParts);
    }
    let mut beads: BTreeSet<usize> = lambda.parts().iter().copied().collect();
    let mut weight = 0usize;
    loop {
        let mut acted = false;
        for j in 0..t {
            loop {
                let slide = beads
                    .iter()
                    .copied()
                    .find(|&p| p % t == j && p >= t && (p == t || !beads.contains(&(p - t))));
                match slide {
                    Some(p) => {
                        apply(&mut beads, t, Op::Slide(p));
                        weight += 1;
                        acted = true;
                    }
                    None => break,
                }
            }
        }
        for a in 1..t.div_ceil(2) {
            if beads.contains(&a) && beads.contains(&(t - a)) {
                apply(&mut beads, t, Op::Pair(a));
                weight += 1;
                acted = true;
            }
        }
        if !acted {
            break;
        }
    }
    let core = Partition::from_parts(beads.iter().rev().copied().collect());
    debug_assert_eq!(core.n() + t * weight, lambda.n());
    debug_assert!(legal_ops(&beads, t).is_empty());
    Ok(BarCoreDecomposition {
        core,
        bar_weight: weight,
        t,
        guaranteed: in_guaranteed_domain(lambda, t),
    })
}

/// Reduces by uniformly random legal operations (seeded), recording
/// every intermediate bead set. Used to test strategy independence
/// and runner avoidance.
pub fn bar_core_randomized(
    lambda: &Partition,
    t: usize,
    seed: u64,
) -> Result<(BarCoreDecomposition, Vec<Vec<usize>>)> {
    if t < 2 {
        return Err(Error::BadModulus(t));
    }
    if !lambda.has_distinct_parts() {
        return Err(Error::RepeatedParts);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut beads: BTreeSet<usize> = lambda.parts().iter().copied().collect();
    let mut states = vec![beads.iter().copied().collect::<Vec<_>>()];
    let mut weight = 0usize;
    loop {
        let ops = legal_ops(&beads, t);
        match ops.choose(&mut rng) {
            Some(&op) => {
                apply(&mut beads, t, op);
                weight += 1;
                states.push(beads.iter().copied().collect());
            }
            None => break,
        }
    }
    let core = Partition::from_parts(beads.iter().rev().copied().collect());
    Ok((
        BarCoreDecomposition {
            core,
            bar_weight: weight,
            t,
            guaranteed: in_guaranteed_domain(lambda, t),
        },
        states,
    ))
}

/// Counts distinct-odd-part partitions of |μ| + t·w̃ whose t-bar
/// core is μ, by direct enumeration.
pub fn same_barcore_count(mu: &Partition, t: usize, w_tilde: usize) -> Result<i64> {
    // sanity: μ must itself be a bar core
    let own = bar_core(mu, t)?;
    if own.bar_weight != 0 {
        return Err(Error::NotACore { e: t, weight: own.bar_weight });
    }
    let n = mu.n() + t * w_tilde;
    let mut count = 0i64;
    for lam in enumerate(n, &PartitionFilter::DistinctOdd) {
        let dec = bar_core(&lam, t)?;
        if dec.core == *mu {
            debug_assert_eq!(dec.bar_weight, w_tilde);
            count += 1;
        }
    }
    Ok(count)
}

/// p(0..=s) computed by direct enumeration, the crate's independent
/// counting route (deliberately not the series engine).
fn partition_counts(s: usize, filter: &PartitionFilter) -> Vec<i64> {
    (0..=s).map(|n| crate::partitions::count(n, filter)).collect()
}

/// Number of r-tuples of partitions with total size s.
pub fn tuple_count(r: usize, s: usize) -> i64 {
    let p = partition_counts(s, &PartitionFilter::All);
    // dp[j] = tuples of length built so far with total j
    let mut dp = vec![0i64; s + 1];
    dp[0] = 1;
    for _ in 0..r {
        let mut next = vec![0i64; s + 1];
        for j in 0..=s {
            if dp[j] == 0 {
                continue;
            }
            for (k, &pk) in p.iter().enumerate().take(s - j + 1) {
                next[j + k] = next[j + k]
                    .checked_add(dp[j].checked_mul(pk).expect("tuple_count overflow"))
                    .expect("tuple_count overflow");
            }
        }
        dp = next;
    }
    dp[s]
}

/// κ(r, s): tuples (γ¹, …, γʳ; τ) with τ having odd parts and
/// |τ| + 2·Σ|γⁱ| = s.
pub fn kappa(r: usize, s: usize) -> i64 {
    let odd = partition_counts(s, &PartitionFilter::OddParts);
    let mut total = 0i64;
    for j in 0..=s {
        if (s - j) % 2 != 0 {
            continue;
        }
        total = total
            .checked_add(
                odd[j]
                    .checked_mul(tuple_count(r, (s - j) / 2))
                    .expect("kappa overflow"),
            )
            .expect("kappa overflow");
    }
    total
}
