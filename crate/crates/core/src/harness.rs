//! Verification suites: every count-level identity the crate
//! implements is confirmed against an independent brute-force
//! enumeration at desk scale. Failures are reported as data (with a
//! minimal counterexample), never as panics.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::barcores::{bar_core, bar_core_randomized, kappa, same_barcore_count, tuple_count};
use crate::cores::{
    self_conjugate_cores, core_from_nvector, core_size_from_nvector, e_core, e_core_via_abacus,
    nvector_from_core, nvector_from_symbol, weight_from_symbol,
};
use crate::golden;
use crate::mullineux::{compute_symbol, enumerate_me, fixed_points, mullineux_map, reconstruct};
use crate::partitions::{count, enumerate, Partition, PartitionFilter};
use crate::qseries::{f_series, g_series, mf_alternating, mf_grid, mf_series, mf_two_var, sc_series};

/// Outcome of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub name: String,
    /// Human-readable parameter bounds the suite ran with.
    pub params: String,
    pub passed: bool,
    /// Number of individual exact comparisons performed.
    pub checks: u64,
    /// First (smallest-parameter) discrepancy, if any.
    pub counterexample: Option<String>,
    pub duration_ms: u128,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({}; {} checks, {} ms)",
            self.name, self.params, self.checks, self.duration_ms
        )?;
        if let Some(ce) = &self.counterexample {
            write!(f, " — first counterexample: {ce}")?;
        }
        Ok(())
    }
}

/// Accumulator enforcing the minimal-counterexample invariant: the
/// first recorded failure (suites iterate smallest parameters
/// first) is the one reported.
struct Suite {
    name: &'static str,
    params: String,
    checks: u64,
    counterexample: Option<String>,
    started: Instant,
}

impl Suite {
    fn new(name: &'static str, params: String) -> Self {
        Self { name, params, checks: 0, counterexample: None, started: Instant::now() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn check_eq<T: PartialEq + fmt::Debug>(&mut self, a: T, b: T, context: impl FnOnce() -> String) {
        let ok = a == b;
        self.check(ok, || format!("{}: {a:?} != {b:?}", context()));
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            name: self.name.to_string(),
            params: self.params,
            passed: self.counterexample.is_none(),
            checks: self.checks,
            counterexample: self.counterexample,
            duration_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// m_e ∘ m_e = identity on every e-regular partition, and m_2 is
/// the identity itself.
pub fn verify_involution(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("involution", format!("e in {e_range:?}, n <= {n_max}"));
    for n in 0..=n_max {
        for &e in e_range {
            for lam in enumerate(n, &PartitionFilter::ERegular(e)) {
                let img = mullineux_map(&lam, e).expect("e-regular input");
                s.check(img.is_e_regular(e), || format!("image of {lam:?} not {e}-regular"));
                let back = mullineux_map(&img, e).expect("e-regular image");
                s.check_eq(back, lam.clone(), || format!("m_{e}^2 at n={n}, λ={lam:?}"));
                if e == 2 {
                    s.check_eq(img, lam.clone(), || format!("m_2 not identity at {lam:?}"));
                }
            }
        }
    }
    s.finish()
}

/// |M_e(n)| = |fixed points of m_e on partitions of n|.
pub fn verify_me_set(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("me-set", format!("e in {e_range:?}, n <= {n_max}"));
    for n in 0..=n_max {
        for &e in e_range {
            s.check_eq(
                enumerate_me(n, e).len(),
                fixed_points(n, e).len(),
                || format!("|M_{e}({n})| vs fixed points"),
            );
        }
    }
    s.finish()
}

/// Fixed-point counts equal the part-condition counts and the
/// MF_e(q) coefficients; MF_e(−q) carries the alternating signs and
/// the embedded reference prefixes.
pub fn verify_main(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("main-gf", format!("e in {e_range:?}, n <= {n_max}"));
    let golden_alt: BTreeMap<usize, &[i64]> = BTreeMap::from([
        (3usize, &golden::A098884_MF3_ALT[..]),
        (4, &golden::A261734_MF4_ALT[..]),
        (5, &golden::A133563_MF5_ALT[..]),
        (6, &golden::A261736_MF6_ALT[..]),
    ]);
    for &e in e_range {
        let mf = mf_series(e, n_max).expect("valid modulus");
        let alt = mf_alternating(e, n_max).expect("valid modulus");
        let filter = if e % 2 == 1 {
            PartitionFilter::DistinctOddNotDiv(e)
        } else {
            PartitionFilter::OddOrOddMultiple(e)
        };
        for n in 0..=n_max {
            let brute = fixed_points(n, e).len() as i64;
            s.check_eq(brute, count(n, &filter), || format!("e={e} n={n} part-condition count"));
            s.check_eq(brute, mf.coeff(n), || format!("e={e} n={n} MF_e coefficient"));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            s.check_eq(alt.coeff(n), sign * brute, || format!("e={e} n={n} MF_e(-q) sign"));
            if let Some(prefix) = golden_alt.get(&e) {
                if n < prefix.len() {
                    s.check_eq(alt.coeff(n), prefix[n], || {
                        format!("e={e} n={n} MF_e(-q) reference prefix")
                    });
                }
            }
        }
    }
    s.finish()
}

/// Per-(core, weight) fixed-point counts match the closed forms:
/// κ(e/2, w) per self-conjugate core for even e, g_e(w/2)·[w even]
/// for odd e; equal-size cores carry equal counts.
pub fn verify_blocks(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("blocks", format!("e in {e_range:?}, n <= {n_max}"));
    for &e in e_range {
        let multiplier = if e % 2 == 0 {
            f_series(e, n_max / e).expect("even e")
        } else {
            g_series(e, n_max / e).expect("odd e")
        };
        for n in 0..=n_max {
            // bucket fixed points by e-core
            let mut by_core: BTreeMap<Partition, i64> = BTreeMap::new();
            for lam in fixed_points(n, e) {
                *by_core.entry(e_core(&lam, e).core).or_insert(0) += 1;
            }
            for w in 0..=n / e {
                let m = n - e * w;
                let expected = if e % 2 == 0 {
                    let k = kappa(e / 2, w);
                    s.check_eq(k, multiplier.coeff(w), || format!("e={e} w={w} κ vs f_e"));
                    k
                } else if w % 2 == 0 {
                    multiplier.coeff(w / 2)
                } else {
                    0
                };
                for mu in self_conjugate_cores(m, e) {
                    let got = by_core.get(&mu).copied().unwrap_or(0);
                    s.check_eq(got, expected, || format!("e={e} n={n} w={w} core {mu:?}"));
                }
            }
            // every fixed point's core must be self-conjugate
            for (mu, _) in &by_core {
                s.check(mu.is_self_conjugate(), || {
                    format!("e={e} n={n}: core {mu:?} not self-conjugate")
                });
            }
        }
    }
    s.finish()
}

/// The n-vector read off a fixed-point symbol equals the rim-hook
/// e-core's n-vector; the symbol weight equals the rim-hook weight;
/// and the core/vector bijection round-trips.
pub fn verify_nvector(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("nvector", format!("e in {e_range:?}, n <= {n_max}"));
    for n in 0..=n_max {
        for &e in e_range {
            for lam in fixed_points(n, e) {
                if lam.is_empty() {
                    continue;
                }
                let sym = compute_symbol(&lam, e).expect("fixed points are e-regular");
                let dec = e_core(&lam, e);
                let from_symbol = nvector_from_symbol(&sym).expect("fixed-point symbol");
                let from_core = nvector_from_core(&dec.core, e).expect("cores have weight 0");
                s.check_eq(from_symbol.clone(), from_core, || format!("e={e} λ={lam:?} n-vector"));
                s.check_eq(
                    weight_from_symbol(&sym).expect("consistent symbol"),
                    dec.weight,
                    || format!("e={e} λ={lam:?} weight"),
                );
                s.check_eq(
                    core_size_from_nvector(&from_symbol) as usize,
                    dec.core.n(),
                    || format!("e={e} λ={lam:?} core size"),
                );
            }
            // bijection round-trip over all e-cores of this size
            for mu in enumerate(n, &PartitionFilter::All) {
                if e_core(&mu, e).weight != 0 {
                    continue;
                }
                let v = nvector_from_core(&mu, e).expect("weight 0");
                s.check_eq(core_from_nvector(&v), mu.clone(), || format!("e={e} GKS round trip"));
                s.check_eq(core_size_from_nvector(&v) as usize, n, || {
                    format!("e={e} μ={mu:?} size formula")
                });
            }
        }
    }
    s.finish()
}

/// Bar-core machinery on the guaranteed domain (odd distinct parts,
/// t = 2e, e even): strategy independence, runner avoidance, the
/// same-core count identity, plus the worked abacus instance.
pub fn verify_barcore(e_even_range: &[usize], size_max: usize) -> VerificationReport {
    let mut s = Suite::new("barcore", format!("e in {e_even_range:?}, |λ| <= {size_max}"));
    // worked instance: t = 6
    let lam = Partition::new(&[23, 21, 17, 13, 11, 9, 7]).unwrap();
    let dec = bar_core(&lam, 6).unwrap();
    s.check_eq(dec.core.clone(), Partition::new(&[9, 5, 3]).unwrap(), || "worked 6-bar core".into());
    s.check_eq(dec.bar_weight, 14, || "worked 6-bar weight".into());
    for &e in e_even_range {
        assert!(e % 2 == 0, "guaranteed domain needs even e");
        let t = 2 * e;
        let mut cores_by_size: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
        for n in 0..=size_max {
            for lam in enumerate(n, &PartitionFilter::DistinctOdd) {
                let canon = bar_core(&lam, t).expect("distinct parts");
                s.check_eq(
                    canon.core.n() + t * canon.bar_weight,
                    lam.n(),
                    || format!("t={t} λ={lam:?} size bookkeeping"),
                );
                for seed in [1u64, 2] {
                    let (rand, states) = bar_core_randomized(&lam, t, seed).expect("distinct parts");
                    s.check_eq(rand.core, canon.core.clone(), || {
                        format!("t={t} λ={lam:?} seed={seed} strategy independence")
                    });
                    s.check_eq(rand.bar_weight, canon.bar_weight, || {
                        format!("t={t} λ={lam:?} seed={seed} weight independence")
                    });
                    for st in states {
                        s.check(st.iter().all(|&b| b % t != 0 && b % t != e), || {
                            format!("t={t} λ={lam:?} bead on runner 0 or {e}")
                        });
                    }
                }
                if canon.bar_weight == 0 {
                    cores_by_size.entry(lam.n()).or_default().push(lam);
                }
            }
        }
        // same-core counts equal the tuple counts, independent of the core
        for (&m, cores) in &cores_by_size {
            for mu in cores {
                let mut w = 0;
                while m + t * w <= size_max {
                    s.check_eq(
                        same_barcore_count(mu, t, w).expect("valid core"),
                        tuple_count(e / 2, w),
                        || format!("t={t} μ={mu:?} w̃={w} same-core count"),
                    );
                    w += 1;
                }
            }
        }
    }
    s.finish()
}

/// The e = 4 fixed-point grid by weight, reproduced three ways —
/// brute-force enumeration, the closed form, and the two-variable
/// generating function — and compared against the verified
/// reference grid.
pub fn verify_table(e: usize) -> VerificationReport {
    let (n_max, w_max) = (20usize, 5usize);
    let mut s = Suite::new("table", format!("e = {e}, n <= {n_max}, w <= {w_max}"));
    let closed = mf_grid(e, n_max, w_max).expect("valid modulus");
    let two_var = mf_two_var(e, n_max).expect("valid modulus");
    for n in 1..=n_max {
        // brute force bucketed by weight
        let mut brute = vec![0i64; w_max + 1];
        for lam in fixed_points(n, e) {
            let w = e_core(&lam, e).weight;
            if w <= w_max {
                brute[w] += 1;
            }
        }
        for w in 0..=w_max {
            let b = brute[w];
            s.check_eq(b, closed[n][w], || format!("n={n} w={w} brute vs closed form"));
            s.check_eq(b, two_var.coeff(w, n), || format!("n={n} w={w} brute vs MF_e(x,q)"));
            if e == 4 {
                s.check_eq(b, golden::TABLE_E4[n - 1][w], || {
                    format!("n={n} w={w} vs verified reference grid")
                });
            }
        }
    }
    s.finish()
}

/// Regression checks for the remaining golden prefixes (the
/// self-conjugate-core and multiplier sequences) against both the
/// series and the enumerations.
pub fn verify_golden_prefixes() -> VerificationReport {
    let mut s = Suite::new("golden", "fixed reference prefixes".to_string());
    let sc4 = sc_series(4, 40).expect("valid modulus");
    for (n, &want) in golden::A053692_SC_4CORES.iter().enumerate() {
        s.check_eq(sc4.coeff(n), want, || format!("sc_4({n}) series vs prefix"));
        if n <= 24 {
            s.check_eq(self_conjugate_cores(n, 4).len() as i64, want, || {
                format!("sc_4({n}) enumeration vs prefix")
            });
        }
    }
    let f4 = f_series(4, 30).expect("even modulus");
    for (n, &want) in golden::A002513_CUBIC.iter().enumerate() {
        s.check_eq(f4.coeff(n), want, || format!("f_4({n}) vs prefix"));
        if n <= 18 {
            s.check_eq(kappa(2, n), want, || format!("κ(2,{n}) vs prefix"));
        }
    }
    s.finish()
}

/// Dual-strategy agreement for plain e-cores (rim-hook removal vs
/// abacus compaction) plus core idempotence and conjugation
/// equivariance.
pub fn verify_cores(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("cores", format!("e in {e_range:?}, n <= {n_max}"));
    for n in 0..=n_max {
        for &e in e_range {
            for lam in enumerate(n, &PartitionFilter::All) {
                let a = e_core(&lam, e);
                let b = e_core_via_abacus(&lam, e);
                s.check_eq((a.core.clone(), a.weight), (b.core, b.weight), || {
                    format!("e={e} λ={lam:?} strategies")
                });
                let again = e_core(&a.core, e);
                s.check_eq((again.core, again.weight), (a.core.clone(), 0), || {
                    format!("e={e} λ={lam:?} idempotence")
                });
                s.check_eq(
                    e_core(&lam.conjugate(), e).core,
                    a.core.conjugate(),
                    || format!("e={e} λ={lam:?} conjugation"),
                );
            }
        }
    }
    s.finish()
}

/// Round trips: reconstruct ∘ compute_symbol = id on e-regular
/// partitions.
pub fn verify_roundtrip(e_range: &[usize], n_max: usize) -> VerificationReport {
    let mut s = Suite::new("roundtrip", format!("e in {e_range:?}, n <= {n_max}"));
    for n in 0..=n_max {
        for &e in e_range {
            for lam in enumerate(n, &PartitionFilter::ERegular(e)) {
                let sym = compute_symbol(&lam, e).expect("e-regular input");
                s.check_eq(sym.total(), n, || format!("e={e} λ={lam:?} symbol total"));
                match reconstruct(&sym) {
                    Ok(back) => s.check_eq(back, lam.clone(), || format!("e={e} round trip")),
                    Err(err) => s.check(false, || format!("e={e} λ={lam:?}: {err}")),
                }
            }
        }
    }
    s.finish()
}

/// The claims the harness is responsible for, each mapped to the
/// suite that owns it. [`verify_coverage`] fails if a claim names a
/// suite that does not exist, so adding a claim without an owner
/// breaks the build's verification run.
pub const CLAIM_OWNERS: &[(&str, &str)] = &[
    ("mullineux map is an involution", "involution"),
    ("fixed-point set matches the two-row symbol conditions", "me-set"),
    ("fixed-point generating function (both parities)", "main-gf"),
    ("alternating generating function and its product form", "main-gf"),
    ("per-block fixed-point counts and the kappa identity", "blocks"),
    ("weight-zero blocks are self-conjugate core counts", "golden"),
    ("n-vector from symbol matches rim-hook core", "nvector"),
    ("core/vector bijection and the size formula", "nvector"),
    ("e-core is independent of removal order", "cores"),
    ("bar cores: strategy independence and same-core counts", "barcore"),
    ("symbol reconstruction round trip", "roundtrip"),
    ("the e=4 grid by weight, three routes", "table"),
];

pub const SUITE_NAMES: &[&str] = &[
    "involution",
    "me-set",
    "main-gf",
    "blocks",
    "nvector",
    "cores",
    "barcore",
    "roundtrip",
    "table",
    "golden",
];

/// Checks that every registered claim has an existing owner suite
/// and that every suite owns at least one claim.
pub fn verify_coverage() -> VerificationReport {
    let mut s = Suite::new("coverage", "claim registry".to_string());
    for (claim, owner) in CLAIM_OWNERS {
        s.check(SUITE_NAMES.contains(owner), || format!("claim '{claim}' has unknown owner '{owner}'"));
    }
    for suite in SUITE_NAMES {
        s.check(
            CLAIM_OWNERS.iter().any(|(_, o)| o == suite),
            || format!("suite '{suite}' owns no claim"),
        );
    }
    s.finish()
}

/// Bounds for [`run_all`]. Defaults are desk-scale: the full run
/// stays within a few minutes single-threaded.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub n_map: usize,    // map-level suites
    pub n_block: usize,  // per-block suites
    pub size_bar: usize, // bar-core suite
}

impl Default for Bounds {
    fn default() -> Self {
        Self { n_map: 30, n_block: 28, size_bar: 40 }
    }
}

/// Runs every suite at the given bounds; a suite name filter keeps
/// only the listed suites (empty = all).
pub fn run_all(bounds: &Bounds, only: &[String]) -> Vec<VerificationReport> {
    let wanted = |name: &str| only.is_empty() || only.iter().any(|s| s == name);
    let mut reports = Vec::new();
    reports.push(verify_coverage());
    if wanted("involution") {
        reports.push(verify_involution(&[2, 3, 4, 5, 6, 7], bounds.n_map.min(22)));
    }
    if wanted("me-set") {
        reports.push(verify_me_set(&[2, 3, 4, 5, 6, 7], bounds.n_map));
    }
    if wanted("main-gf") {
        reports.push(verify_main(&[3, 4, 5, 6], bounds.n_map));
    }
    if wanted("blocks") {
        reports.push(verify_blocks(&[3, 4, 5, 6], bounds.n_block));
    }
    if wanted("nvector") {
        reports.push(verify_nvector(&[3, 4, 5, 6], bounds.n_block));
    }
    if wanted("cores") {
        reports.push(verify_cores(&[2, 3, 4, 5, 6], bounds.n_block.min(18)));
    }
    if wanted("barcore") {
        reports.push(verify_barcore(&[2, 4], bounds.size_bar));
    }
    if wanted("roundtrip") {
        reports.push(verify_roundtrip(&[2, 3, 4, 5, 6, 7], bounds.n_map.min(25)));
    }
    if wanted("table") {
        reports.push(verify_table(4));
    }
    if wanted("golden") {
        reports.push(verify_golden_prefixes());
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    // the suites themselves are the oracle pairings; unit tests run
    // them at reduced bounds so `cargo test` stays quick, while the
    // acceptance tests run the documented desk-scale bounds
    #[test]
    fn suites_pass_at_reduced_bounds() {
        let reports = [
            verify_involution(&[2, 3, 4, 5], 12),
            verify_me_set(&[2, 3, 4, 5, 6, 7], 14),
            verify_main(&[3, 4, 5, 6], 16),
            verify_blocks(&[3, 4], 14),
            verify_nvector(&[3, 4, 5, 6], 14),
            verify_cores(&[2, 3, 4], 12),
            verify_barcore(&[2, 4], 24),
            verify_roundtrip(&[2, 3, 4, 5, 6, 7], 12),
            verify_table(4),
            verify_golden_prefixes(),
            verify_coverage(),
        ];
        for r in &reports {
            assert!(r.passed, "{r}");
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn reports_carry_minimal_counterexamples() {
        let mut s = Suite::new("demo", "none".to_string());
        s.check_eq(1, 1, || "fine".to_string());
        s.check_eq(2, 3, || "first".to_string());
        s.check_eq(4, 5, || "second".to_string());
        let r = s.finish();
        assert!(!r.passed);
        assert_eq!(r.checks, 3);
        assert_eq!(r.counterexample.as_deref(), Some("first: 2 != 3"));
    }
}
