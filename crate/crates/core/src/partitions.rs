//! Core partition type, structural predicates, and constrained
//! enumeration used by every other module.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition of `n`: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
///
/// Serializes as a bare JSON array, e.g. `[7,7,7,4,4,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(&parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Validates and builds a partition. Trailing zeros are stripped;
    /// negative parts and strictly increasing adjacent pairs are rejected.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut v = Vec::with_capacity(parts.len());
        for &p in parts {
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative part {p}")));
            }
            v.push(p as usize);
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.contains(&0) {
            return Err(Error::InvalidPartition("interior zero part".into()));
        }
        if let Some(w) = v.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "not weakly decreasing at {} < {}",
                w[0], w[1]
            )));
        }
        Ok(Self::from_parts(v))
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_parts(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based row access; rows past the end have size 0.
    pub fn part(&self, row: usize) -> usize {
        debug_assert!(row >= 1);
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// The transpose partition (column lengths of the diagram).
    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_parts(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// No part value occurs `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> bool {
        assert!(e >= 2, "e must be at least 2");
        let mut run = 1;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= e {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// True iff the cell (row, col) lies in the Young diagram (1-based).
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Hook length of the cell (row, col); the cell must be in the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        debug_assert!(self.contains_cell(row, col));
        let arm = self.part(row) - col;
        let leg = self.parts.iter().skip(row).take_while(|&&p| p >= col).count();
        arm + leg + 1
    }

    /// The rim: all cells (i, j) of the diagram with (i+1, j+1) outside it,
    /// ordered along the boundary from top-right to bottom-left.
    pub fn rim(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut cells = Vec::new();
        for i in 1..=self.len() {
            let lo = self.part(i + 1).max(1);
            for j in (lo..=self.part(i)).rev() {
                cells.push(Cell { row: i, col: j });
            }
        }
        Ok(cells)
    }

    /// Removes the entire rim, leaving the diagram's interior.
    pub fn remove_rim(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let parts = (1..=self.len())
            .map(|i| self.part(i + 1).max(1) - 1)
            .take_while(|&p| p > 0)
            .collect();
        Ok(Self::from_parts(parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A cell of a Young diagram, 1-based (row, col) with row 1 at the top.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Selects a family of partitions for [`enumerate`]. Exactly one
/// constraint is active.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    /// No part repeats `e` or more times.
    ERegular(usize),
    Distinct,
    DistinctOdd,
    /// Distinct odd parts, none divisible by `e`.
    DistinctOddNotDiv(usize),
    /// Parts odd or odd multiples of `e`; the odd parts are distinct.
    OddOrOddMultiple(usize),
    OddParts,
}

impl PartitionFilter {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PartitionFilter::ERegular(e)
            | PartitionFilter::DistinctOddNotDiv(e)
            | PartitionFilter::OddOrOddMultiple(e)
                if e < 2 =>
            {
                Err(Error::BadModulus(e))
            }
            _ => Ok(()),
        }
    }

    fn part_ok(&self, p: usize) -> bool {
        match *self {
            PartitionFilter::All | PartitionFilter::ERegular(_) | PartitionFilter::Distinct => true,
            PartitionFilter::DistinctOdd | PartitionFilter::OddParts => p % 2 == 1,
            PartitionFilter::DistinctOddNotDiv(e) => p % 2 == 1 && p % e != 0,
            PartitionFilter::OddOrOddMultiple(e) => {
                p % 2 == 1 || (p % e == 0 && (p / e) % 2 == 1)
            }
        }
    }

    fn max_multiplicity(&self, p: usize) -> usize {
        match *self {
            PartitionFilter::All | PartitionFilter::OddParts => usize::MAX,
            PartitionFilter::ERegular(e) => e - 1,
            PartitionFilter::Distinct
            | PartitionFilter::DistinctOdd
            | PartitionFilter::DistinctOddNotDiv(_) => 1,
            // only the even parts (odd multiples of e) may repeat
            PartitionFilter::OddOrOddMultiple(_) => {
                if p % 2 == 0 {
                    usize::MAX
                } else {
                    1
                }
            }
        }
    }

    /// Membership test, equivalent to the enumeration constraints.
    pub fn matches(&self, lambda: &Partition) -> bool {
        if !lambda.parts().iter().all(|&p| self.part_ok(p)) {
            return false;
        }
        let mut run = 1usize;
        for w in lambda.parts().windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run > self.max_multiplicity(w[0]) {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }
}

/// All qualifying partitions of `n`, each exactly once, in
/// lexicographically decreasing order on the part sequences.
pub fn enumerate(n: usize, filter: &PartitionFilter) -> Vec<Partition> {
    filter.validate().expect("invalid filter");
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, 0, filter, &mut cur, &mut out);
    out
}

fn gen(
    rem: usize,
    max_part: usize,
    run: usize, // multiplicity of the last chosen part so far
    filter: &PartitionFilter,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rem == 0 {
        out.push(Partition::from_parts(cur.clone()));
        return;
    }
    let mut p = rem.min(max_part);
    while p >= 1 {
        if filter.part_ok(p) {
            let next_run = if cur.last() == Some(&p) { run + 1 } else { 1 };
            if next_run <= filter.max_multiplicity(p) {
                cur.push(p);
                gen(rem - p, p, next_run, filter, cur, out);
                cur.pop();
            }
        }
        p -= 1;
    }
}

/// Number of qualifying partitions of `n`, as a checked 64-bit count.
pub fn count(n: usize, filter: &PartitionFilter) -> i64 {
    i64::try_from(enumerate(n, filter).len()).expect("partition count overflows i64")
}
