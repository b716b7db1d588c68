//! The n-periodic staircase growth diagram.
//!
//! Row i of the staircase owns the unit squares in columns i+1..=i+n-1, and
//! the horizontal line above row i carries n+1 dominant weights (vertices
//! 0..=n, the outer two always zero). A diagram is determined by its first
//! line: every later line follows by the affine local rule, and the (n+1)st
//! derived line must reproduce line 1 — the diagram is n-periodic in both
//! directions.
//!
//! Vertex c of line L is the weight read along the polygon chord from corner
//! L to corner L+c, so the same chord appears twice per period, once in each
//! direction; transposing the staircase therefore dualizes every label.

use crate::local_rules::{affine_rule, displacement, Displacement, LocalRuleError};
use crate::weights::{pieri_neighbors, GlWeight, Int, MinusculeLabel, Partition, WeightError};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("a diagram needs at least two steps per period")]
    TooShort,
    #[error("label {label} is out of range for GL_{m}")]
    BadTypeLabel { label: String, m: usize },
    #[error("path must have n+1 weights of rank m starting and ending at zero")]
    BadPathShape,
    #[error("step {step} is not a Pieri move of the declared label")]
    BadPathStep { step: usize },
    #[error("local rule failed while filling row {row}, column {col}: {source}")]
    Fill {
        row: usize,
        col: usize,
        source: LocalRuleError,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("cannot parse type spec {0:?}: expected comma-separated f<j>/d<j>")]
    BadTypeSpec(String),
    #[error("row {row} does not carry exactly one mark")]
    NotPermutationMarks { row: usize },
    #[error(
        "row {row} re-enters its early phase at vertex {vertex}; marking needs \
         rank at least half the period"
    )]
    PhaseNotMonotone { row: usize, vertex: usize },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// The type of an affine growth diagram: the rank m and one period of
/// minuscule labels, extended n-periodically in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramType {
    m: usize,
    labels: Vec<MinusculeLabel>,
}

impl DiagramType {
    pub fn new(labels: Vec<MinusculeLabel>, m: usize) -> Result<Self, DiagramError> {
        if labels.len() < 2 {
            return Err(DiagramError::TooShort);
        }
        for label in &labels {
            if label.j() == 0 || label.j() > m {
                return Err(DiagramError::BadTypeLabel {
                    label: label.to_string(),
                    m,
                });
            }
        }
        Ok(DiagramType { m, labels })
    }

    /// The type with n steps of a single box alternating as given, the
    /// classical Robinson-Schensted regime.
    pub fn boxes(kinds: &[bool], m: usize) -> Result<Self, DiagramError> {
        let labels = kinds
            .iter()
            .map(|&dual| {
                if dual {
                    MinusculeLabel::dual_of(1)
                } else {
                    MinusculeLabel::fund(1)
                }
            })
            .collect();
        DiagramType::new(labels, m)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[MinusculeLabel] {
        &self.labels
    }

    /// The label of polygon edge i (1-based), extended periodically.
    pub fn label(&self, i: i64) -> MinusculeLabel {
        let n = self.n() as i64;
        self.labels[(i - 1).rem_euclid(n) as usize]
    }

    /// The type of the transposed diagram: every label dualized.
    pub fn dual(&self) -> DiagramType {
        DiagramType {
            m: self.m,
            labels: self.labels.iter().map(|l| l.dual()).collect(),
        }
    }

    /// Sum of j over fundamental labels.
    pub fn fundamental_size(&self) -> usize {
        self.labels
            .iter()
            .filter(|l| !l.is_dual())
            .map(|l| l.j())
            .sum()
    }

    /// Sum of j over dual labels.
    pub fn dual_size(&self) -> usize {
        self.labels.iter().filter(|l| l.is_dual()).map(|l| l.j()).sum()
    }

    pub fn all_boxes(&self) -> bool {
        self.labels.iter().all(|l| l.j() == 1)
    }

    /// Parses a comma-separated spec like "f1,f2,d1".
    pub fn parse(spec: &str, m: usize) -> Result<Self, DiagramError> {
        let labels = spec
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let j: usize = tok
                    .get(1..)
                    .and_then(|digits| digits.parse().ok())
                    .ok_or_else(|| DiagramError::BadTypeSpec(spec.to_string()))?;
                match tok.as_bytes().first() {
                    Some(b'f') => Ok(MinusculeLabel::fund(j)),
                    Some(b'd') => Ok(MinusculeLabel::dual_of(j)),
                    _ => Err(DiagramError::BadTypeSpec(spec.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        DiagramType::new(labels, m)
    }
}

impl FromStr for DiagramType {
    type Err = DiagramError;
    /// Parses "m:f1,d1,..." with the rank up front.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m, spec) = s
            .split_once(':')
            .ok_or_else(|| DiagramError::BadTypeSpec(s.to_string()))?;
        let m = m
            .trim()
            .parse()
            .map_err(|_| DiagramError::BadTypeSpec(s.to_string()))?;
        DiagramType::parse(spec, m)
    }
}

/// A closed minuscule path: n+1 dominant weights from zero back to zero,
/// step c moving by a Pieri step of label c.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinusculePath {
    ty: DiagramType,
    weights: Vec<GlWeight>,
}

impl MinusculePath {
    pub fn new(ty: DiagramType, weights: Vec<GlWeight>) -> Result<Self, DiagramError> {
        let n = ty.n();
        let m = ty.m();
        let shape_ok = weights.len() == n + 1
            && weights.iter().all(|w| w.rank() == m)
            && weights[0].is_zero()
            && weights[n].is_zero();
        if !shape_ok {
            return Err(DiagramError::BadPathShape);
        }
        for c in 0..n {
            if !step_matches(&weights[c], &weights[c + 1], ty.label(c as i64 + 1)) {
                return Err(DiagramError::BadPathStep { step: c + 1 });
            }
        }
        Ok(MinusculePath { ty, weights })
    }

    pub fn ty(&self) -> &DiagramType {
        &self.ty
    }

    pub fn weights(&self) -> &[GlWeight] {
        &self.weights
    }
}

fn step_matches(from: &GlWeight, to: &GlWeight, label: MinusculeLabel) -> bool {
    displacement(from, to)
        == Some(Displacement {
            is_dual: label.is_dual(),
            ones: label.j(),
        })
}

/// One period of an affine growth diagram: lines 1..=n of n+1 weights each,
/// extended periodically by `line`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineGrowthDiagram {
    ty: DiagramType,
    lines: Vec<Vec<GlWeight>>,
}

impl AffineGrowthDiagram {
    /// Fills the staircase below the given first line with the affine local
    /// rule and checks that the (n+1)st derived line closes the period.
    pub fn fill_from_path(path: &MinusculePath) -> Result<Self, DiagramError> {
        let ty = path.ty().clone();
        let n = ty.n();
        let mut lines = vec![path.weights().to_vec()];
        for row in 1..=n {
            let prev = &lines[row - 1];
            let mut next = vec![GlWeight::zero(ty.m())];
            for col in 1..n {
                let se =
                    affine_rule(&next[col - 1], &prev[col + 1], &prev[col]).map_err(|source| {
                        DiagramError::Fill {
                            row,
                            col,
                            source,
                        }
                    })?;
                next.push(se);
            }
            next.push(GlWeight::zero(ty.m()));
            // The wrap-around edge of the new line is forced rather than
            // computed; a mismatch would mean the rule lost periodicity.
            // Line row+1 ends with step n, whose label is cyclically row's.
            let last_label = ty.label(row as i64);
            if !step_matches(&next[n - 1], &next[n], last_label) {
                return Err(DiagramError::Internal(format!(
                    "derived line {} does not close with a {} step",
                    row + 1,
                    last_label
                )));
            }
            lines.push(next);
        }
        let wrap = lines.pop().expect("derived n lines");
        if wrap != lines[0] {
            return Err(DiagramError::Internal(
                "derived line n+1 differs from line 1".into(),
            ));
        }
        Ok(AffineGrowthDiagram { ty, lines })
    }

    /// Assembles a diagram from raw lines, validating with `verify`.
    pub fn from_lines(
        ty: DiagramType,
        lines: Vec<Vec<GlWeight>>,
    ) -> Result<Self, DiagramError> {
        let d = AffineGrowthDiagram { ty, lines };
        match d.verify().into_iter().next() {
            None => Ok(d),
            Some(v) => Err(DiagramError::Internal(v)),
        }
    }

    pub fn ty(&self) -> &DiagramType {
        &self.ty
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn m(&self) -> usize {
        self.ty.m()
    }

    /// Line `l` (1-based, periodic) as a slice of n+1 weights.
    pub fn line(&self, l: i64) -> &[GlWeight] {
        let n = self.n() as i64;
        &self.lines[(l - 1).rem_euclid(n) as usize]
    }

    /// The weight at vertex c of line l.
    pub fn label(&self, l: i64, c: usize) -> &GlWeight {
        &self.line(l)[c]
    }

    /// The first line as a path.
    pub fn first_line(&self) -> MinusculePath {
        MinusculePath {
            ty: self.ty.clone(),
            weights: self.lines[0].clone(),
        }
    }

    /// Diagnostic check of every structural invariant. Returns one message
    /// per violation; an empty list means the diagram is valid.
    pub fn verify(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.ty.n();
        let m = self.ty.m();
        if self.lines.len() != n {
            out.push(format!(
                "expected {n} lines per period, found {}",
                self.lines.len()
            ));
            return out;
        }
        for (i, line) in self.lines.iter().enumerate() {
            if line.len() != n + 1 {
                out.push(format!("line {} has {} vertices, wanted {}", i + 1, line.len(), n + 1));
                return out;
            }
            if line.iter().any(|w| w.rank() != m) {
                out.push(format!("line {} contains weights of the wrong rank", i + 1));
                return out;
            }
            if !line[0].is_zero() || !line[n].is_zero() {
                out.push(format!("line {} does not start and end at zero", i + 1));
            }
        }
        for l in 1..=n as i64 {
            for c in 0..n {
                let label = self.ty.label(l + c as i64);
                if !step_matches(self.label(l, c), self.label(l, c + 1), label) {
                    out.push(format!(
                        "line {l}, step {} is not a {label} Pieri move",
                        c + 1
                    ));
                }
            }
        }
        // Periodicity is built into the cyclic accessor, so checking all n
        // rows of squares includes the wrap from line n back to line 1.
        for l in 1..=n as i64 {
            for c in 1..n {
                let nw = self.label(l, c);
                let ne = self.label(l, c + 1);
                let sw = self.label(l + 1, c - 1);
                let se = self.label(l + 1, c);
                match affine_rule(sw, ne, nw) {
                    Ok(rho) if rho == *se => {}
                    Ok(rho) => out.push(format!(
                        "square at row {l}, vertex {c}: rule gives {rho:?}, diagram has {se:?}"
                    )),
                    Err(e) => out.push(format!("square at row {l}, vertex {c}: {e}")),
                }
            }
        }
        out
    }

    /// The transposed diagram: reflect the staircase across its diagonal and
    /// shift back into standard position. Vertex (l, c) picks up the old
    /// label at (l+c, n-c), which equals the dual of the old label at (l, c);
    /// the type dualizes label by label.
    pub fn dual_transpose(&self) -> AffineGrowthDiagram {
        let n = self.n();
        let lines = (1..=n as i64)
            .map(|l| {
                (0..=n)
                    .map(|c| self.label(l + c as i64, n - c).clone())
                    .collect()
            })
            .collect();
        AffineGrowthDiagram {
            ty: self.ty.dual(),
            lines,
        }
    }

    /// Mark multiplicities by row: for each square, the number of weight
    /// slots that switch from their early phase to their late phase between
    /// the square's west and east edges. In the single-box case this is the
    /// classical X-marking with one mark per row. Each row traverses its two
    /// phases monotonically only when the rank is at least half the period
    /// (and, with multi-box labels, at least half the total box count);
    /// below that threshold rows can oscillate and marking fails.
    pub fn marks(&self) -> Result<Vec<Mark>, DiagramError> {
        let n = self.n();
        let mut out = Vec::new();
        for row in 1..=n {
            let top = self.line(row as i64);
            let bottom = self.line(row as i64 + 1);
            let dual_row = self.ty.label(row as i64).is_dual();
            // Early slots remaining after crossing the vertical edge at
            // vertex c: edits still acting on the positive part for a
            // fundamental row, on the negative part for a dual row.
            let early_after = |c: usize| -> Int {
                let (t, b) = (&top[c], &bottom[c - 1]);
                if dual_row {
                    t.negative_size() - b.negative_size()
                } else {
                    t.positive_size() - b.positive_size()
                }
            };
            for c in 1..n {
                let mult = early_after(c) - early_after(c + 1);
                if mult < 0 {
                    // The two-phase structure along a row is only guaranteed
                    // for rank at least n/2; below that a row may oscillate
                    // and carries no well-defined marking.
                    return Err(DiagramError::PhaseNotMonotone { row, vertex: c });
                }
                if mult > 0 {
                    out.push(Mark {
                        row,
                        col: row + c,
                        mult: mult as u64,
                    });
                }
            }
        }
        Ok(out)
    }

    /// The affine permutation cut out by the X-marks of a single-box
    /// diagram: f(i) is the column of the unique mark in row i.
    pub fn affine_permutation(&self) -> Result<AffinePermutation, DiagramError> {
        let n = self.n();
        let marks = self.marks()?;
        let mut window = vec![None; n];
        for mark in marks {
            if mark.mult != 1 || window[mark.row - 1].is_some() {
                return Err(DiagramError::NotPermutationMarks { row: mark.row });
            }
            window[mark.row - 1] = Some(mark.col as Int);
        }
        let window = window
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or(DiagramError::NotPermutationMarks { row: i + 1 }))
            .collect::<Result<Vec<_>, _>>()?;
        AffinePermutation::new(window)
            .map_err(|_| DiagramError::Internal("marks are not an affine permutation".into()))
    }

    /// Converts to special-linear labels: along each line, every dual step
    /// crossed so far adds a full column to the weight, turning the line
    /// into a chain of partitions that climbs to a rectangle.
    pub fn to_sl(&self) -> Vec<Vec<Partition>> {
        let n = self.n();
        let m = self.m();
        (1..=n as i64)
            .map(|l| {
                let mut duals_so_far = 0;
                (0..=n)
                    .map(|c| {
                        if c > 0 && self.ty.label(l + c as i64 - 1).is_dual() {
                            duals_so_far += 1;
                        }
                        let parts: Vec<Int> = self
                            .label(l, c)
                            .entries()
                            .iter()
                            .map(|&e| e + duals_so_far)
                            .collect();
                        debug_assert!(parts.iter().all(|&p| p >= 0));
                        debug_assert_eq!(parts.len(), m);
                        Partition::new(parts).expect("shifted weights are partitions")
                    })
                    .collect()
            })
            .collect()
    }
}

/// A marked square: `row` is 1-based within the period, `col` is the global
/// staircase column (row < col < row + n), and `mult` its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mark {
    pub row: usize,
    pub col: usize,
    pub mult: u64,
}

/// An affine permutation given by its window [f(1), ..., f(n)], extended by
/// f(x + n) = f(x) + n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffinePermutation {
    window: Vec<Int>,
}

impl AffinePermutation {
    pub fn new(window: Vec<Int>) -> Result<Self, DiagramError> {
        let n = window.len() as Int;
        let mut residues: Vec<Int> = window.iter().map(|w| w.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() as Int != n {
            return Err(DiagramError::Internal(
                "window residues are not distinct".into(),
            ));
        }
        Ok(AffinePermutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[Int] {
        &self.window
    }

    /// Evaluates the permutation at any integer.
    pub fn eval(&self, x: Int) -> Int {
        let n = self.window.len() as Int;
        let r = (x - 1).rem_euclid(n);
        self.window[r as usize] + (x - 1 - r)
    }

    /// Whether f o f is translation by n, the affine fixed-point-free
    /// involution condition.
    pub fn squares_to_shift(&self) -> bool {
        let n = self.window.len() as Int;
        (1..=n).all(|i| self.eval(self.eval(i)) == i + n)
    }

    /// The classical permutation window mod n, values in 1..=n.
    pub fn reduce(&self) -> Vec<usize> {
        let n = self.window.len() as Int;
        self.window
            .iter()
            .map(|w| ((w - 1).rem_euclid(n) + 1) as usize)
            .collect()
    }
}

/// Depth-first enumeration of all closed minuscule paths of a type. The
/// signed-size prune kills unbalanced prefixes early.
fn visit_paths(ty: &DiagramType, mut f: impl FnMut(&[GlWeight])) {
    let (fund_left, dual_left) = box_suffixes(ty);
    fn go(
        ty: &DiagramType,
        fund_left: &[Int],
        dual_left: &[Int],
        prefix: &mut Vec<GlWeight>,
        f: &mut impl FnMut(&[GlWeight]),
    ) {
        let c = prefix.len() - 1;
        let here = prefix.last().unwrap();
        // The positive part can only be erased by dual steps and the negative
        // part by fundamental steps; at c == n both budgets are zero, which
        // forces the closing weight to be exactly zero.
        if here.positive_size() > dual_left[c] || here.negative_size() > fund_left[c] {
            return;
        }
        if c == ty.n() {
            f(prefix);
            return;
        }
        for next in pieri_neighbors(prefix.last().unwrap(), ty.label(c as i64 + 1)) {
            prefix.push(next);
            go(ty, fund_left, dual_left, prefix, f);
            prefix.pop();
        }
    }
    go(
        ty,
        &fund_left,
        &dual_left,
        &mut vec![GlWeight::zero(ty.m())],
        &mut f,
    );
}

/// `(fund_left, dual_left)` where entry `c` counts the boxes still to be
/// added (resp. removed) by steps `c+1..=n`.
pub(crate) fn box_suffixes(ty: &DiagramType) -> (Vec<Int>, Vec<Int>) {
    let n = ty.n();
    let mut fund_left = vec![0 as Int; n + 1];
    let mut dual_left = vec![0 as Int; n + 1];
    for c in (0..n).rev() {
        let l = ty.label(c as i64 + 1);
        fund_left[c] = fund_left[c + 1] + if l.is_dual() { 0 } else { l.j() as Int };
        dual_left[c] = dual_left[c + 1] + if l.is_dual() { l.j() as Int } else { 0 };
    }
    (fund_left, dual_left)
}

/// All closed minuscule paths of the given type, sequentially.
pub fn enumerate_paths_seq(ty: &DiagramType) -> Vec<MinusculePath> {
    let mut out = Vec::new();
    visit_paths(ty, |weights| {
        out.push(MinusculePath {
            ty: ty.clone(),
            weights: weights.to_vec(),
        })
    });
    out
}

/// All closed minuscule paths of the given type; fans the first Pieri step
/// out over threads when the `parallel` feature is on.
pub fn enumerate_paths(ty: &DiagramType) -> Vec<MinusculePath> {
    #[cfg(feature = "parallel")]
    {
        let starts = pieri_neighbors(&GlWeight::zero(ty.m()), ty.label(1));
        starts
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut out = Vec::new();
                let mut prefix = vec![GlWeight::zero(ty.m()), first];
                visit_paths_from(ty, &mut prefix, &mut |weights: &[GlWeight]| {
                    out.push(MinusculePath {
                        ty: ty.clone(),
                        weights: weights.to_vec(),
                    })
                });
                out
            })
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_paths_seq(ty)
    }
}

#[cfg(feature = "parallel")]
fn visit_paths_from(
    ty: &DiagramType,
    prefix: &mut Vec<GlWeight>,
    f: &mut impl FnMut(&[GlWeight]),
) {
    let (fund_left, dual_left) = box_suffixes(ty);
    fn go(
        ty: &DiagramType,
        fund_left: &[Int],
        dual_left: &[Int],
        prefix: &mut Vec<GlWeight>,
        f: &mut impl FnMut(&[GlWeight]),
    ) {
        let c = prefix.len() - 1;
        let here = prefix.last().unwrap();
        if here.positive_size() > dual_left[c] || here.negative_size() > fund_left[c] {
            return;
        }
        if c == ty.n() {
            f(prefix);
            return;
        }
        for next in pieri_neighbors(prefix.last().unwrap(), ty.label(c as i64 + 1)) {
            prefix.push(next);
            go(ty, fund_left, dual_left, prefix, f);
            prefix.pop();
        }
    }
    go(ty, &fund_left, &dual_left, prefix, f);
}

/// Number of closed minuscule paths of the given type.
pub fn count_paths(ty: &DiagramType) -> u64 {
    let mut count = 0;
    visit_paths(ty, |_| count += 1);
    count
}

/// Fills a diagram for every closed path of the type.
pub fn enumerate_diagrams(ty: &DiagramType) -> Result<Vec<AffineGrowthDiagram>, DiagramError> {
    enumerate_paths(ty)
        .iter()
        .map(AffineGrowthDiagram::fill_from_path)
        .collect()
}

/// Builds a single-box path from step kinds (false = add, true = remove) and
/// the partial shapes along the way, padding each to rank m.
pub fn single_box_path(
    kinds: &[bool],
    partials: &[&[Int]],
    m: usize,
) -> Result<MinusculePath, DiagramError> {
    let ty = DiagramType::boxes(kinds, m)?;
    let weights = partials
        .iter()
        .map(|parts| {
            let mut entries = parts.to_vec();
            entries.resize(m, 0);
            GlWeight::new(entries).map_err(DiagramError::from)
        })
        .collect::<Result<Vec<_>, _>>()?;
    MinusculePath::new(ty, weights)
}

/// All minuscule labels available in GL_m.
pub fn all_labels(m: usize) -> Vec<MinusculeLabel> {
    (1..=m)
        .flat_map(|j| [MinusculeLabel::fund(j), MinusculeLabel::dual_of(j)])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-step single-box path from the worked RS figure:
    /// (), (1), (2), (2,1), (1,1), (1), ().
    fn rs_path() -> MinusculePath {
        single_box_path(
            &[false, false, false, true, true, true],
            &[&[], &[1], &[2], &[2, 1], &[1, 1], &[1], &[]],
            3,
        )
        .unwrap()
    }

    #[test]
    fn path_validation() {
        assert!(rs_path().weights().len() == 7);
        // Wrong step kind rejected.
        assert!(single_box_path(
            &[true, false, false, true, true, true],
            &[&[], &[1], &[2], &[2, 1], &[1, 1], &[1], &[]],
            3,
        )
        .is_err());
    }

    #[test]
    fn fill_is_periodic_and_valid() {
        let d = AffineGrowthDiagram::fill_from_path(&rs_path()).unwrap();
        assert_eq!(d.verify(), Vec::<String>::new());
        // The accessor wraps: line n+1 is line 1.
        assert_eq!(d.line(7), d.line(1));
        assert_eq!(d.line(0), d.line(6));
    }

    #[test]
    fn rs_figure_window() {
        let d = AffineGrowthDiagram::fill_from_path(&rs_path()).unwrap();
        let f = d.affine_permutation().unwrap();
        assert_eq!(f.window(), &[5, 4, 6, 8, 7, 9]);
        assert!(f.squares_to_shift());
        assert_eq!(f.reduce(), vec![5, 4, 6, 2, 1, 3]);
    }

    #[test]
    fn dual_transpose_is_an_involution_with_same_marks() {
        let d = AffineGrowthDiagram::fill_from_path(&rs_path()).unwrap();
        let t = d.dual_transpose();
        assert_eq!(t.verify(), Vec::<String>::new());
        assert_eq!(t.dual_transpose(), d);
        // Transposing relabels each vertex with the dual weight in place.
        for l in 1..=6 {
            for c in 0..=6 {
                assert_eq!(*t.label(l, c), d.label(l, c).dual());
            }
        }
        assert_eq!(
            t.affine_permutation().unwrap().window(),
            d.affine_permutation().unwrap().window()
        );
    }

    #[test]
    fn enumerate_counts_box_types() {
        // Three ups then three downs in GL_3: pairs of standard tableaux of
        // the same shape with 3 boxes, 1 + 4 + 1 = 6 of them.
        let ty = DiagramType::boxes(&[false, false, false, true, true, true], 3).unwrap();
        assert_eq!(count_paths(&ty), 6);
        assert_eq!(enumerate_paths(&ty).len(), 6);
        assert_eq!(enumerate_diagrams(&ty).unwrap().len(), 6);

        // Weights may dip negative: down-then-up closes through (0, -1).
        let ty = DiagramType::boxes(&[true, false], 2).unwrap();
        assert_eq!(count_paths(&ty), 1);

        // One box up, one box down.
        let ty = DiagramType::boxes(&[false, true], 2).unwrap();
        assert_eq!(count_paths(&ty), 1);

        // An unbalanced type has no closed paths at all.
        let ty = DiagramType::boxes(&[false, false], 2).unwrap();
        assert_eq!(count_paths(&ty), 0);
    }

    #[test]
    fn affine_window_squares_to_shift_across_box_types() {
        // Every single-box diagram with n = 4, m = 2 yields an affine
        // fixed-point-free involution.
        for mask in 0u32..16 {
            let kinds: Vec<bool> = (0..4).map(|i| (mask >> i) & 1 == 1).collect();
            let Ok(ty) = DiagramType::boxes(&kinds, 2) else {
                continue;
            };
            for d in enumerate_diagrams(&ty).unwrap() {
                let f = d.affine_permutation().unwrap();
                assert!(f.squares_to_shift(), "window {:?}", f.window());
            }
        }
    }

    #[test]
    fn eight_step_window() {
        // A longer worked example: eight box steps in GL_4.
        let path = single_box_path(
            &[false, false, false, true, false, true, true, true],
            &[
                &[],
                &[1],
                &[1, 1],
                &[1, 1, 1],
                &[1, 1],
                &[2, 1],
                &[2],
                &[1],
                &[],
            ],
            4,
        )
        .unwrap();
        let d = AffineGrowthDiagram::fill_from_path(&path).unwrap();
        assert_eq!(d.verify(), Vec::<String>::new());
        let f = d.affine_permutation().unwrap();
        assert_eq!(f.window(), &[4, 6, 8, 9, 7, 10, 13, 11]);
        assert!(f.squares_to_shift());
        assert_eq!(f.reduce(), vec![4, 6, 8, 1, 7, 2, 5, 3]);
    }

    #[test]
    fn sl_conversion_reaches_rectangle() {
        let d = AffineGrowthDiagram::fill_from_path(&rs_path()).unwrap();
        let sl = d.to_sl();
        for line in &sl {
            assert!(line[0].is_empty());
            assert_eq!(line[6].parts(), &[3, 3, 3]);
        }
    }

    #[test]
    fn type_parsing() {
        let ty = DiagramType::parse("f1, f2, d1 ,d2", 3).unwrap();
        assert_eq!(ty.n(), 4);
        assert_eq!(ty.fundamental_size(), 3);
        assert_eq!(ty.dual_size(), 3);
        assert!(DiagramType::parse("f5", 3).is_err());
        assert!(DiagramType::parse("x1,f1", 3).is_err());
        let with_rank: DiagramType = "3:f1,d1".parse().unwrap();
        assert_eq!(with_rank.m(), 3);
    }
}
