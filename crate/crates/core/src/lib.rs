//! Combinatorics of the Mullineux map on `e`-regular partitions.
//!
//! The crate provides:
//!
//! * [`partitions`] — the [`Partition`](partitions::Partition) type,
//!   structural predicates and constrained enumeration streams;
//! * [`mullineux`] — Mullineux symbols, the map `m_e`, and fixed-point
//!   machinery;
//! * [`cores`] — `e`-cores, `e`-weights and the n-vector bijection;
//! * [`barcores`] — the `t`-runner abacus for distinct-part partitions,
//!   bar cores and the tuple counts `κ(r, s)`;
//! * [`qseries`] — exact truncated integer power series and the
//!   generating functions `MF_e`, `SC_e`, `f_e`, `g_e`, `MF_e(x, q)`;
//! * [`harness`] — verification suites that confirm every count-level
//!   identity by independent brute-force enumeration;
//! * [`cli`] — the command-line surface.
//!
//! All arithmetic is exact: coefficients and counts are checked 64-bit
//! integers and any overflow aborts instead of wrapping.

pub mod barcores;
pub mod cli;
pub mod cores;
pub mod golden;
pub mod harness;
pub mod mullineux;
pub mod partitions;
pub mod qseries;

pub use partitions::{Cell, Partition, PartitionFilter};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not {e}-regular")]
    NotRegular { e: usize },
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),
    #[error("invalid Mullineux symbol: {0}")]
    InvalidSymbol(String),
    #[error("no partition realizes the symbol")]
    UnrealizableSymbol,
    #[error("n-vector entries must sum to zero")]
    NVectorSum,
    #[error("n-vector must have exactly e entries")]
    NVectorLength,
    #[error("partition is not an {e}-core (weight {weight} > 0)")]
    NotACore { e: usize, weight: usize },
    #[error("symbol is not fixed-point shaped (need r_i = (a_i + eps_i)/2)")]
    NotFixedPointSymbol,
    #[error("symbol weight is not integral: ({total} - {core}) not divisible by {e}")]
    NonIntegralWeight { total: usize, core: i64, e: usize },
    #[error("parts must be distinct for an abacus display")]
    RepeatedParts,
    #[error("{name} requires e {expected}, got e = {got}")]
    ParityMismatch {
        name: &'static str,
        expected: &'static str,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Worker count for shardable enumerations, capped by `MULLINEUX_THREADS`.
/// Defaults to 1 (single-threaded) when the variable is unset or invalid.
pub(crate) fn worker_count() -> usize {
    std::env::var("MULLINEUX_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}
