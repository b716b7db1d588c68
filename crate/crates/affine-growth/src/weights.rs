//! Dominant GL_m weights, partitions, duality, and minuscule Pieri steps.
//!
//! A dominant weight of GL_m is a weakly decreasing vector of m integers.
//! The minuscule weights are the fundamental weights `omega_j = (1^j, 0^(m-j))`
//! and their duals `omega_j* = (0^(m-j), (-1)^j)`; a "minuscule step" moves a
//! dominant weight to a Pieri neighbor by adding a 0/1 pattern (or subtracting
//! one, in the dual case) while staying dominant.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer type for weight entries and hive values.
pub type Int = i64;

/// Errors from constructing or combining weights.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("entries are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<Int>),
    #[error("partition entries must be positive after trimming: {0:?}")]
    NegativePart(Vec<Int>),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("label omega_{j} does not exist for GL_{m}")]
    BadLabel { j: usize, m: usize },
    #[error("positive and negative parts need {needed} rows but rank is {rank}")]
    RankTooSmall { needed: usize, rank: usize },
}

pub(crate) fn is_weakly_decreasing(v: &[Int]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Sorts a vector into weakly decreasing order.
pub fn sort_desc(mut v: Vec<Int>) -> Vec<Int> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// trimmed away on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Int>", into = "Vec<Int>")]
pub struct Partition(Vec<Int>);

impl Partition {
    pub fn new(mut parts: Vec<Int>) -> Result<Self, WeightError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !is_weakly_decreasing(&parts) {
            return Err(WeightError::NotDecreasing(parts));
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(WeightError::NegativePart(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parts of the partition, without trailing zeros.
    pub fn parts(&self) -> &[Int] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> Int {
        self.0.iter().sum()
    }

    /// The `row`-th part (0-based), zero beyond the last row.
    pub fn part(&self, row: usize) -> Int {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// Height of the `col`-th column (0-based): rows with part > col.
    pub fn col_height(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p > col as Int).count()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let parts = (0..rows).map(|c| self.col_height(c) as Int).collect();
        Partition(parts)
    }

    /// Whether `self` contains `other` cell-wise.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Entrywise maximum (union of Young diagrams).
    pub fn union(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        let parts = (0..rows)
            .map(|i| self.part(i).max(other.part(i)))
            .collect();
        Partition(parts)
    }

    /// Adds one box to the given 0-based row, if the result is a partition.
    pub fn with_box_in_row(&self, row: usize) -> Result<Partition, WeightError> {
        let mut parts = self.0.clone();
        if row >= parts.len() {
            parts.resize(row + 1, 0);
        }
        parts[row] += 1;
        Partition::new(parts)
    }

    /// The cells of `self / other`, as 0-based (row, col) pairs, provided
    /// `other` is contained in `self`.
    pub fn skew_cells(&self, other: &Partition) -> Option<Vec<(usize, usize)>> {
        if !self.contains(other) {
            return None;
        }
        let mut cells = Vec::new();
        for row in 0..self.len() {
            for col in other.part(row)..self.part(row) {
                cells.push((row, col as usize));
            }
        }
        Some(cells)
    }

    /// Embeds the partition as a dominant GL_m weight.
    pub fn as_weight(&self, rank: usize) -> Result<GlWeight, WeightError> {
        if self.len() > rank {
            return Err(WeightError::RankTooSmall {
                needed: self.len(),
                rank,
            });
        }
        let mut entries = self.0.clone();
        entries.resize(rank, 0);
        Ok(GlWeight(entries))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
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

impl From<Partition> for Vec<Int> {
    fn from(p: Partition) -> Vec<Int> {
        p.0
    }
}

impl TryFrom<Vec<Int>> for Partition {
    type Error = WeightError;
    fn try_from(v: Vec<Int>) -> Result<Self, WeightError> {
        Partition::new(v)
    }
}

/// A dominant weight of GL_m: weakly decreasing integer entries, fixed rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Int>", into = "Vec<Int>")]
pub struct GlWeight(Vec<Int>);

impl GlWeight {
    pub fn new(entries: Vec<Int>) -> Result<Self, WeightError> {
        if !is_weakly_decreasing(&entries) {
            return Err(WeightError::NotDecreasing(entries));
        }
        Ok(GlWeight(entries))
    }

    pub fn zero(rank: usize) -> Self {
        GlWeight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of the entries.
    pub fn total(&self) -> Int {
        self.0.iter().sum()
    }

    /// Sum of the positive entries (size of the positive part).
    pub fn positive_size(&self) -> Int {
        self.0.iter().filter(|&&e| e > 0).sum()
    }

    /// Absolute sum of the negative entries (size of the negative part).
    pub fn negative_size(&self) -> Int {
        -self.0.iter().filter(|&&e| e < 0).sum::<Int>()
    }

    /// The dual weight: negate and reverse.
    pub fn dual(&self) -> GlWeight {
        let mut entries: Vec<Int> = self.0.iter().map(|&e| -e).collect();
        entries.reverse();
        GlWeight(entries)
    }

    /// Splits into the partition of positive entries and the partition of
    /// negated, reversed negative entries.
    pub fn split_parts(&self) -> WeightPair {
        let positive: Vec<Int> = self.0.iter().copied().filter(|&e| e > 0).collect();
        let negative: Vec<Int> = self.0.iter().rev().map(|&e| -e).filter(|&e| e > 0).collect();
        WeightPair {
            positive: Partition(positive),
            negative: Partition(negative),
        }
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl From<GlWeight> for Vec<Int> {
    fn from(w: GlWeight) -> Vec<Int> {
        w.0
    }
}

impl TryFrom<Vec<Int>> for GlWeight {
    type Error = WeightError;
    fn try_from(v: Vec<Int>) -> Result<Self, WeightError> {
        GlWeight::new(v)
    }
}

/// A weight split into its positive and negative partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPair {
    pub positive: Partition,
    pub negative: Partition,
}

/// Rebuilds a weight of the given rank from positive and negative partitions.
pub fn join_parts(pair: &WeightPair, rank: usize) -> Result<GlWeight, WeightError> {
    let p = pair.positive.parts();
    let q = pair.negative.parts();
    if p.len() + q.len() > rank {
        return Err(WeightError::RankTooSmall {
            needed: p.len() + q.len(),
            rank,
        });
    }
    let mut entries = Vec::with_capacity(rank);
    entries.extend_from_slice(p);
    entries.resize(rank - q.len(), 0);
    entries.extend(q.iter().rev().map(|&e| -e));
    GlWeight::new(entries)
}

/// A minuscule weight label: a fundamental weight `omega_j` or its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MinusculeLabel {
    Fund { j: usize },
    Dual { j: usize },
}

impl MinusculeLabel {
    pub fn fund(j: usize) -> Self {
        MinusculeLabel::Fund { j }
    }

    pub fn dual_of(j: usize) -> Self {
        MinusculeLabel::Dual { j }
    }

    /// The index j of the underlying fundamental weight.
    pub fn j(&self) -> usize {
        match *self {
            MinusculeLabel::Fund { j } | MinusculeLabel::Dual { j } => j,
        }
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, MinusculeLabel::Dual { .. })
    }

    /// The label of the dual weight.
    pub fn dual(&self) -> MinusculeLabel {
        match *self {
            MinusculeLabel::Fund { j } => MinusculeLabel::Dual { j },
            MinusculeLabel::Dual { j } => MinusculeLabel::Fund { j },
        }
    }
}

impl fmt::Display for MinusculeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinusculeLabel::Fund { j } => write!(f, "f{j}"),
            MinusculeLabel::Dual { j } => write!(f, "d{j}"),
        }
    }
}

/// The minuscule weight for a label in GL_m: `omega_j = (1^j, 0^(m-j))` or
/// `omega_j* = (0^(m-j), (-1)^j)`.
pub fn minuscule_vector(label: MinusculeLabel, rank: usize) -> Result<GlWeight, WeightError> {
    let j = label.j();
    if j == 0 || j > rank {
        return Err(WeightError::BadLabel { j, m: rank });
    }
    let mut entries = vec![0; rank];
    if label.is_dual() {
        for e in entries.iter_mut().skip(rank - j) {
            *e = -1;
        }
    } else {
        for e in entries.iter_mut().take(j) {
            *e = 1;
        }
    }
    GlWeight::new(entries)
}

/// All dominant weights reachable from `mu` by a minuscule step of the given
/// label: `mu` plus a 0/1 pattern with j ones (fundamental) or minus one
/// (dual), filtered for dominance. This is the multiplicity-free Pieri rule.
pub fn pieri_neighbors(mu: &GlWeight, label: MinusculeLabel) -> Vec<GlWeight> {
    let m = mu.rank();
    let j = label.j();
    if j == 0 || j > m {
        return Vec::new();
    }
    let sign: Int = if label.is_dual() { -1 } else { 1 };
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let entries: Vec<Int> = mu
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &e)| e + sign * ((mask >> i) & 1) as Int)
            .collect();
        if is_weakly_decreasing(&entries) {
            out.push(GlWeight(entries));
        }
    }
    out
}
