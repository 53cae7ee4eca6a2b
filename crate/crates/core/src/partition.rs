//! Partitions (non-increasing multi-indices), Ferrers diagrams, arm/leg and
//! hook lengths, contiguous indices, dominance order and enumeration.
//!
//! Partitions are stored canonically: non-increasing, no trailing zeros. The
//! ambient variable count is carried by callers, never by the partition
//! itself.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::error::Error;
use crate::rational::{is_positive, Rat};
use crate::Result;

/// A partition in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

/// A diagram cell, 1-based: row `i`, column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Canonicalizes (strips trailing zeros); panics if parts increase.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be non-increasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Degree |σ|.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Length l(σ): number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 1-based row `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Column count σ^j (parts of the conjugate), 1-based.
    pub fn column_count(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p as usize >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let parts = (1..=cols).map(|j| self.column_count(j) as u32).collect();
        Partition::new(parts)
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.row <= self.len() && s.col <= self.part(s.row) as usize
    }

    /// All cells of the Ferrers diagram, row-major.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p as usize).map(move |j| Cell::new(i + 1, j))
        })
    }

    /// Containment σ ⊆ κ (row-wise).
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i + 1))
    }

    /// Dominance order on equal degrees: self ⊴ other.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        let mut sum_self = 0u64;
        let mut sum_other = 0u64;
        for i in 1..=self.len().max(other.len()) {
            sum_self += self.part(i) as u64;
            sum_other += other.part(i) as u64;
            if sum_self > sum_other {
                return false;
            }
        }
        true
    }

    /// The i-th contiguous index σ^i = (σ_1, …, σ_i + 1, …), 1-based.
    pub fn contiguous(&self, i: usize) -> Result<Partition> {
        if i < 1 || i > self.len() + 1 || (i > 1 && self.part(i - 1) == self.part(i)) {
            return Err(Error::NotAPartition {
                parts: self.0.clone(),
                index: i,
            });
        }
        let mut parts = self.0.clone();
        if i == self.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition::new(parts))
    }

    /// Rows i for which σ^i is a partition (one per distinct part value,
    /// plus the appended row).
    pub fn contiguous_indices(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .collect()
    }
}

/// Canonical total order: graded by degree, then reverse dominance
/// linearized as descending lexicographic. This is the order every table
/// and enumeration uses.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(2,1)`, `2,1`, `()`, and `0` (the empty partition).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::BadRational(format!("partition {s:?}"));
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `degree` with length ≤ `max_length`, in the canonical
/// order (descending lexicographic within the fixed degree).
pub fn enumerate_partitions(degree: u64, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u64, max_part: u64, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        // Largest first gives descending lex order directly.
        let lo = remaining.div_ceil(slots as u64);
        if lo > hi {
            return;
        }
        for p in (lo..=hi).rev() {
            prefix.push(p as u32);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    rec(degree, degree.max(1), max_length, &mut prefix, &mut out);
    out
}

/// All partitions of every degree `0..=max_degree` with length ≤ `max_length`,
/// canonical order.
pub fn enumerate_up_to(max_degree: u64, max_length: usize) -> Vec<Partition> {
    (0..=max_degree)
        .flat_map(|d| enumerate_partitions(d, max_length))
        .collect()
}

/// Arm and leg lengths of a cell.
pub fn arm_leg(sigma: &Partition, s: Cell) -> Result<(u32, u32)> {
    if !sigma.contains_cell(s) {
        return Err(Error::CellOutOfDiagram {
            parts: sigma.parts().to_vec(),
            row: s.row,
            col: s.col,
        });
    }
    let arm = sigma.part(s.row) - s.col as u32;
    let leg = sigma.column_count(s.col) as u32 - s.row as u32;
    Ok((arm, leg))
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    if !is_positive(alpha) {
        return Err(Error::NonPositiveAlpha(alpha.to_string()));
    }
    Ok(())
}

/// Upper and lower hook lengths:
/// h*(s) = l(s) + α(1 + a(s)),  h_*(s) = l(s) + 1 + α a(s).
pub fn hooks(sigma: &Partition, s: Cell, alpha: &Rat) -> Result<(Rat, Rat)> {
    check_alpha(alpha)?;
    let (arm, leg) = arm_leg(sigma, s)?;
    let arm = Rat::from_integer(arm.into());
    let leg = Rat::from_integer(leg.into());
    let upper = &leg + alpha * (&arm + Rat::one());
    let lower = &leg + Rat::one() + alpha * &arm;
    Ok((upper, lower))
}

/// j_σ(α): product of all upper hooks times product of all lower hooks.
pub fn j_constant(sigma: &Partition, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let mut acc = Rat::one();
    for s in sigma.cells() {
        let (upper, lower) = hooks(sigma, s, alpha)?;
        acc *= upper;
        acc *= lower;
    }
    Ok(acc)
}
