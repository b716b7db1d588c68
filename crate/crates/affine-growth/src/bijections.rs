//! Bijections between growth diagrams, tableau pairs, and matrices.
//!
//! The single-box staircase diagrams cut out fixed-point-free involutions
//! ([`phi`]), and conversely an involution rebuilds its diagram vertex by
//! vertex from Greene invariants of mark rectangles ([`psi`]).  Restricting
//! to diagrams whose first line stays nonnegative specialises the pair to
//! oscillating tableaux, and the classical Robinson–Schensted pair rides
//! along via [`embed_rs`].  Natural-number matrices enter through the Knuth
//! refinement, which splits every multi-box step into single boxes.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::staircase::{AffineGrowthDiagram, DiagramError, DiagramType, MinusculePath};
use crate::tableaux::{Tableau, TableauError};
use crate::weights::{join_parts, Int, MinusculeLabel, Partition, WeightError, WeightPair};

#[derive(Debug, Error)]
pub enum BijectionError {
    #[error("not a fixed-point-free involution: {0}")]
    NotFpf(String),
    #[error("not an oscillating tableau: {0}")]
    BadOscillation(String),
    #[error("not a natural fixed-point-free matrix: {0}")]
    BadMatrix(String),
    #[error("not a permutation of 1..={0}")]
    BadPermutation(usize),
    #[error("involution is not in the image of the embedding")]
    NotEmbedded,
    #[error("first line of the diagram has negative parts")]
    NegativeFirstLine,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Shape of Greene's theorem for a set of grid positions ordered by strict
/// southeast dominance: the partial row sums are the largest sizes of
/// unions of k disjoint chains.
///
/// Reading the columns row by row, columns reversed inside a row, turns
/// chains into strictly increasing subsequences, so the shape is that of
/// the insertion tableau where an entry bumps the leftmost one at least as
/// large.
pub fn greene_shape(marks: &[(Int, Int)]) -> Partition {
    let sorted: BTreeSet<(Int, Int)> = marks.iter().copied().collect();
    let mut word: Vec<(Int, Int)> = sorted.into_iter().collect();
    word.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for &(_, col) in &word {
        let mut x = col;
        let mut placed = false;
        for row in rows.iter_mut() {
            let k = row.partition_point(|&e| e < x);
            if k == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut x, &mut row[k]);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as Int).collect())
        .expect("insertion rows shrink weakly")
}

/// The same shape computed from first principles, for cross-checking: the
/// largest union of k antichains is the largest subset whose chains have
/// length at most k, and those totals are the column partial sums.
/// Exponential in the number of marks.
pub fn greene_shape_by_cover(marks: &[(Int, Int)]) -> Partition {
    let set: BTreeSet<(Int, Int)> = marks.iter().copied().collect();
    let marks: Vec<(Int, Int)> = set.into_iter().collect();
    let count = marks.len();
    assert!(count <= 16, "cover search is exponential in the mark count");
    let mut best = vec![0usize; count + 1];
    for mask in 0..1u32 << count {
        let subset: Vec<(Int, Int)> = (0..count)
            .filter(|&i| (mask >> i) & 1 == 1)
            .map(|i| marks[i])
            .collect();
        let chain = longest_chain(&subset);
        for k in chain..=count {
            best[k] = best[k].max(subset.len());
        }
    }
    let cols: Vec<Int> = (1..=count)
        .map(|k| (best[k] - best[k - 1]) as Int)
        .take_while(|&c| c > 0)
        .collect();
    Partition::new(cols)
        .expect("antichain union sizes are concave")
        .conjugate()
}

/// Length of the longest chain under strict southeast order; the marks
/// must be sorted.
fn longest_chain(marks: &[(Int, Int)]) -> usize {
    let mut up_to = vec![0usize; marks.len()];
    let mut best = 0;
    for i in 0..marks.len() {
        up_to[i] = 1;
        for j in 0..i {
            if marks[j].0 < marks[i].0 && marks[j].1 < marks[i].1 {
                up_to[i] = up_to[i].max(up_to[j] + 1);
            }
        }
        best = best.max(up_to[i]);
    }
    best
}

/// A fixed-point-free involution of 1..=n in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpfInvolution {
    map: Vec<usize>,
}

impl FpfInvolution {
    pub fn new(map: Vec<usize>) -> Result<Self, BijectionError> {
        let n = map.len();
        if n % 2 != 0 {
            return Err(BijectionError::NotFpf(format!("odd length {n}")));
        }
        for i in 1..=n {
            let j = map[i - 1];
            if j < 1 || j > n {
                return Err(BijectionError::NotFpf(format!("value {j} out of range")));
            }
            if j == i {
                return Err(BijectionError::NotFpf(format!("fixed point at {i}")));
            }
            if map[j - 1] != i {
                return Err(BijectionError::NotFpf(format!("{i} -> {j} -> {}", map[j - 1])));
            }
        }
        Ok(FpfInvolution { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// 1-based application.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    /// The pairs (i, j) with i < j.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .filter(|&i| i < self.apply(i))
            .map(|i| (i, self.apply(i)))
            .collect()
    }

    /// Window of the corresponding affine permutation: openers keep their
    /// partner, closers point one period ahead.
    pub fn window(&self) -> Vec<Int> {
        let n = self.n();
        (1..=n)
            .map(|i| {
                let j = self.apply(i);
                if j > i {
                    j as Int
                } else {
                    (j + n) as Int
                }
            })
            .collect()
    }

    /// Step kinds of the matching diagram type: `false` (a box) where a
    /// pair opens, `true` (a dual box) where it closes.
    pub fn kinds(&self) -> Vec<bool> {
        (1..=self.n()).map(|i| self.apply(i) < i).collect()
    }

    /// All fixed-point-free involutions of 1..=n.
    pub fn all(n: usize) -> Vec<FpfInvolution> {
        let mut out = Vec::new();
        if n % 2 != 0 {
            return out;
        }
        fn go(map: &mut Vec<usize>, out: &mut Vec<FpfInvolution>) {
            match map.iter().position(|&v| v == 0) {
                None => out.push(FpfInvolution {
                    map: map.clone(),
                }),
                Some(i) => {
                    for j in i + 1..map.len() {
                        if map[j] == 0 {
                            map[i] = j + 1;
                            map[j] = i + 1;
                            go(map, out);
                            map[i] = 0;
                            map[j] = 0;
                        }
                    }
                }
            }
        }
        go(&mut vec![0; n], &mut out);
        out
    }
}

/// A sequence of partitions from empty to empty moving by one box per
/// step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatingTableau {
    parts: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn new(parts: Vec<Partition>) -> Result<Self, BijectionError> {
        check_oscillation(&parts, false)?;
        Ok(OscillatingTableau { parts })
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The corresponding minuscule path in rank m.
    pub fn to_path(&self, m: usize) -> Result<MinusculePath, BijectionError> {
        to_path(&self.parts, m)
    }
}

/// A sequence of partitions from empty to empty moving by a nonempty
/// vertical strip per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistandardOscTableau {
    parts: Vec<Partition>,
}

impl SemistandardOscTableau {
    pub fn new(parts: Vec<Partition>) -> Result<Self, BijectionError> {
        check_oscillation(&parts, true)?;
        Ok(SemistandardOscTableau { parts })
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_path(&self, m: usize) -> Result<MinusculePath, BijectionError> {
        to_path(&self.parts, m)
    }

    /// Splits every strip into single boxes, adding from the top down and
    /// removing from the bottom up, which keeps every stage a partition.
    /// Returns the refined tableau and the indices of the original stages.
    pub fn refine(&self) -> (OscillatingTableau, Vec<usize>) {
        let mut parts = vec![Partition::new(vec![]).unwrap()];
        let mut bounds = vec![0usize];
        for pair in self.parts.windows(2) {
            let (prev, next) = (&pair[0], &pair[1]);
            let rows = prev.len().max(next.len());
            if next.size() > prev.size() {
                for r in 0..rows {
                    if next.part(r) > prev.part(r) {
                        let mut p = parts.last().unwrap().parts().to_vec();
                        if r >= p.len() {
                            p.resize(r + 1, 0);
                        }
                        p[r] += 1;
                        parts.push(Partition::new(p).expect("top-down growth stays sorted"));
                    }
                }
            } else {
                for r in (0..rows).rev() {
                    if next.part(r) < prev.part(r) {
                        let mut p = parts.last().unwrap().parts().to_vec();
                        p[r] -= 1;
                        parts.push(Partition::new(p).expect("bottom-up shrink stays sorted"));
                    }
                }
            }
            bounds.push(parts.len() - 1);
        }
        (
            OscillatingTableau::new(parts).expect("refinement moves one box at a time"),
            bounds,
        )
    }
}

fn check_oscillation(parts: &[Partition], strips: bool) -> Result<(), BijectionError> {
    if parts.is_empty() {
        return Err(BijectionError::BadOscillation("no stages".into()));
    }
    if !parts.first().unwrap().is_empty() || !parts.last().unwrap().is_empty() {
        return Err(BijectionError::BadOscillation(
            "must start and end empty".into(),
        ));
    }
    for (step, pair) in parts.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let (small, large) = if next.size() >= prev.size() {
            (prev, next)
        } else {
            (next, prev)
        };
        let vertical = large.len() >= small.len()
            && (0..large.len()).all(|r| {
                let d = large.part(r) - small.part(r);
                d == 0 || d == 1
            });
        let moved = large.size() - small.size();
        let ok = vertical && if strips { moved >= 1 } else { moved == 1 };
        if !ok {
            return Err(BijectionError::BadOscillation(format!(
                "step {} is not a {}",
                step + 1,
                if strips { "vertical strip" } else { "box" }
            )));
        }
    }
    Ok(())
}

fn to_path(parts: &[Partition], m: usize) -> Result<MinusculePath, BijectionError> {
    let mut labels = Vec::with_capacity(parts.len() - 1);
    for pair in parts.windows(2) {
        let moved = (pair[1].size() - pair[0].size()).unsigned_abs() as usize;
        labels.push(if pair[1].size() >= pair[0].size() {
            MinusculeLabel::Fund { j: moved }
        } else {
            MinusculeLabel::Dual { j: moved }
        });
    }
    let ty = DiagramType::new(labels, m)?;
    let weights = parts
        .iter()
        .map(|p| p.as_weight(m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MinusculePath::new(ty, weights)?)
}

/// The classical involution cut out by the marks of a single-box diagram:
/// mark columns reduced to one period.
pub fn phi(diagram: &AffineGrowthDiagram) -> Result<FpfInvolution, BijectionError> {
    let f = diagram.affine_permutation()?;
    let n = f.window().len() as Int;
    let map = f
        .window()
        .iter()
        .map(|&v| ((v - 1).rem_euclid(n)) as usize + 1)
        .collect();
    FpfInvolution::new(map)
}

/// Rebuilds the growth diagram of an involution.  The vertex c steps into
/// line L is labelled from the marks in the rectangle of rows L..=L+c-1
/// and columns L+c..=L+n-1: marks whose reduced column stays within one
/// period feed the positive part, the later ones feed the negative part,
/// each through the transpose of its Greene shape.
pub fn psi(pi: &FpfInvolution, m: usize) -> Result<AffineGrowthDiagram, BijectionError> {
    let n = pi.n();
    let window = pi.window();
    let ty = DiagramType::boxes(&pi.kinds(), m)?;
    let mut lines = Vec::with_capacity(n);
    for line in 1..=n {
        let mut labels = Vec::with_capacity(n + 1);
        for c in 0..=n {
            let first_col = line + c;
            let mut fund = Vec::new();
            let mut dual = Vec::new();
            for i in line..line + c {
                let reduced = (i - 1) % n;
                let col = window[reduced] + (((i - 1) / n) * n) as Int;
                if col < first_col as Int || col > (line + n - 1) as Int {
                    continue;
                }
                if window[reduced] <= n as Int {
                    fund.push((i as Int, col));
                } else {
                    dual.push((i as Int, col));
                }
            }
            let pair = WeightPair {
                positive: greene_shape(&fund).conjugate(),
                negative: greene_shape(&dual).conjugate(),
            };
            labels.push(join_parts(&pair, m)?);
        }
        lines.push(labels);
    }
    Ok(AffineGrowthDiagram::from_lines(ty, lines)?)
}

/// Fills the diagram of an oscillating tableau and reads off its
/// involution.
pub fn osc_to_fpf(osc: &OscillatingTableau) -> Result<FpfInvolution, BijectionError> {
    let m = (osc.len() / 2).max(1);
    let path = osc.to_path(m)?;
    phi(&AffineGrowthDiagram::fill_from_path(&path)?)
}

/// First line of the rebuilt diagram of an involution, as partitions.
pub fn fpf_to_osc(pi: &FpfInvolution) -> Result<OscillatingTableau, BijectionError> {
    let m = (pi.n() / 2).max(1);
    let diagram = psi(pi, m)?;
    let parts = diagram
        .first_line()
        .weights()
        .iter()
        .map(|w| {
            let pair = w.split_parts();
            if pair.negative.is_empty() {
                Ok(pair.positive)
            } else {
                Err(BijectionError::NegativeFirstLine)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    OscillatingTableau::new(parts)
}

fn check_permutation(perm: &[usize]) -> Result<(), BijectionError> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v < 1 || v > n || seen[v - 1] {
            return Err(BijectionError::BadPermutation(n));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// Row-insertion Robinson–Schensted: the insertion and recording tableaux
/// of a permutation in one-line notation.
pub fn schensted(perm: &[usize]) -> Result<(Tableau, Tableau), BijectionError> {
    check_permutation(perm)?;
    let mut p: Vec<Vec<Int>> = Vec::new();
    let mut q: Vec<Vec<Int>> = Vec::new();
    for (step, &v) in perm.iter().enumerate() {
        let mut x = v as Int;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step as Int + 1]);
                break;
            }
            let k = p[r].partition_point(|&e| e < x);
            if k == p[r].len() {
                p[r].push(x);
                q[r].push(step as Int + 1);
                break;
            }
            std::mem::swap(&mut x, &mut p[r][k]);
            r += 1;
        }
    }
    Ok((Tableau::new(p)?, Tableau::new(q)?))
}

/// The same pair grown square by square over the permutation matrix: the
/// bottom boundary chain is the insertion tableau, the east boundary chain
/// the recording tableau.
pub fn rs_growth(perm: &[usize]) -> Result<(Tableau, Tableau), BijectionError> {
    check_permutation(perm)?;
    let n = perm.len();
    let empty = Partition::new(vec![]).unwrap();
    let mut grid = vec![vec![empty; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let nw = grid[i - 1][j - 1].clone();
            let ne = grid[i - 1][j].clone();
            let sw = grid[i][j - 1].clone();
            grid[i][j] = if ne != sw {
                ne.union(&sw)
            } else if nw != ne {
                let grown = (0..ne.len())
                    .find(|&r| ne.part(r) > nw.part(r))
                    .expect("chain step adds a box");
                ne.with_box_in_row(grown + 1)?
            } else if perm[i - 1] == j {
                nw.with_box_in_row(0)?
            } else {
                nw
            };
        }
    }
    let p = Tableau::from_chain(&grid[n])?;
    let q_chain: Vec<Partition> = (0..=n).map(|i| grid[i][n].clone()).collect();
    Ok((p, Tableau::from_chain(&q_chain)?))
}

/// The up-then-down oscillating tableau of a same-shape standard pair:
/// climb the insertion chain, then descend so that the reversed tail is
/// the recording chain.
pub fn pair_to_osc(p: &Tableau, q: &Tableau) -> Result<OscillatingTableau, BijectionError> {
    if p.shape() != q.shape() || !p.is_standard() || !q.is_standard() {
        return Err(BijectionError::BadOscillation(
            "need same-shape standard tableaux".into(),
        ));
    }
    let k = p.size() as Int;
    let mut parts = p.to_chain(k);
    let mut down = q.to_chain(k);
    down.pop();
    down.reverse();
    parts.extend(down);
    OscillatingTableau::new(parts)
}

/// Inverse of [`pair_to_osc`] on tableaux that first grow and then shrink.
pub fn osc_to_pair(osc: &OscillatingTableau) -> Result<(Tableau, Tableau), BijectionError> {
    let parts = osc.parts();
    let k = osc.len() / 2;
    let up_down = (0..osc.len()).all(|s| (parts[s + 1].size() > parts[s].size()) == (s < k));
    if !up_down {
        return Err(BijectionError::BadOscillation(
            "not an up-then-down tableau".into(),
        ));
    }
    let p = Tableau::from_chain(&parts[..=k])?;
    let mut rest: Vec<Partition> = parts[k..].to_vec();
    rest.reverse();
    let q = Tableau::from_chain(&rest)?;
    Ok((p, q))
}

/// Embeds a permutation of 1..=k as a fixed-point-free involution of
/// 1..=2k pairing the value positions with the reversed tail slots.
pub fn embed_rs(perm: &[usize]) -> Result<FpfInvolution, BijectionError> {
    check_permutation(perm)?;
    let k = perm.len();
    let mut map = vec![0usize; 2 * k];
    for (i, &s) in perm.iter().enumerate() {
        let partner = 2 * k - i;
        map[s - 1] = partner;
        map[partner - 1] = s;
    }
    FpfInvolution::new(map)
}

/// Recovers the permutation from an embedded involution, failing when the
/// involution does not split the ground set into values and tail slots.
pub fn unembed_rs(pi: &FpfInvolution) -> Result<Vec<usize>, BijectionError> {
    let n = pi.n();
    let k = n / 2;
    let perm: Vec<usize> = (1..=k).map(|j| pi.apply(2 * k + 1 - j)).collect();
    check_permutation(&perm).map_err(|_| BijectionError::NotEmbedded)?;
    if embed_rs(&perm)? != *pi {
        return Err(BijectionError::NotEmbedded);
    }
    Ok(perm)
}

/// A symmetric natural-number matrix in which every hook is supported on
/// only its row part or only its column part, and never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatFpfMatrix {
    entries: Vec<Vec<u64>>,
}

impl NatFpfMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self, BijectionError> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(BijectionError::BadMatrix("not square".into()));
        }
        for i in 0..n {
            if entries[i][i] != 0 {
                return Err(BijectionError::BadMatrix(format!(
                    "nonzero diagonal at {}",
                    i + 1
                )));
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(BijectionError::BadMatrix("not symmetric".into()));
                }
            }
        }
        let m = NatFpfMatrix { entries };
        for i in 1..=n {
            let (r, c) = (m.row_weight(i), m.col_weight(i));
            if r > 0 && c > 0 {
                return Err(BijectionError::BadMatrix(format!(
                    "hook {i} has both row and column support"
                )));
            }
            if r == 0 && c == 0 {
                return Err(BijectionError::BadMatrix(format!("hook {i} is empty")));
            }
        }
        Ok(m)
    }

    /// Builds the symmetric matrix from above-diagonal entries (i, j, a).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, u64)]) -> Result<Self, BijectionError> {
        let mut entries = vec![vec![0; n]; n];
        for &(i, j, a) in pairs {
            if i == j || i < 1 || j < 1 || i > n || j > n {
                return Err(BijectionError::BadMatrix(format!("bad pair ({i}, {j})")));
            }
            entries[i - 1][j - 1] += a;
            entries[j - 1][i - 1] += a;
        }
        NatFpfMatrix::new(entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// 1-based lookup.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i - 1][j - 1]
    }

    /// Sum of row i beyond the diagonal.
    pub fn row_weight(&self, i: usize) -> u64 {
        (i + 1..=self.n()).map(|j| self.get(i, j)).sum()
    }

    /// Sum of column i above the diagonal.
    pub fn col_weight(&self, i: usize) -> u64 {
        (1..i).map(|j| self.get(j, i)).sum()
    }

    /// Refines the matrix into a 0/1 involution: line i becomes a block of
    /// max(row, column) weight many lines, and each entry lays its marks
    /// on a diagonal through the earliest free slots of its blocks.
    /// Returns the involution and the block boundary positions.
    pub fn expand(&self) -> (FpfInvolution, Vec<usize>) {
        let n = self.n();
        let sizes: Vec<u64> = (1..=n)
            .map(|i| self.row_weight(i).max(self.col_weight(i)))
            .collect();
        let mut bounds = vec![0usize];
        for &s in &sizes {
            bounds.push(bounds.last().unwrap() + s as usize);
        }
        let total = *bounds.last().unwrap();
        let mut next_row = bounds[..n].to_vec();
        let mut next_col = bounds[..n].to_vec();
        let mut map = vec![0usize; total];
        for i in 1..=n {
            for j in i + 1..=n {
                for _ in 0..self.get(i, j) {
                    next_row[i - 1] += 1;
                    next_col[j - 1] += 1;
                    let (r, c) = (next_row[i - 1], next_col[j - 1]);
                    map[r - 1] = c;
                    map[c - 1] = r;
                }
            }
        }
        (
            FpfInvolution::new(map).expect("block slots pair off exactly"),
            bounds,
        )
    }
}

/// Collapses the marks of the growth diagram of a semistandard
/// oscillating tableau into a matrix: a mark within one period records its
/// own pair, later columns record the mirrored pair, and the two readings
/// must agree.
pub fn knuth_matrix_from_osc(
    osc: &SemistandardOscTableau,
    m: usize,
) -> Result<NatFpfMatrix, BijectionError> {
    let path = osc.to_path(m)?;
    let diagram = AffineGrowthDiagram::fill_from_path(&path)?;
    let n = osc.len();
    let mut upper = vec![vec![0u64; n]; n];
    let mut mirrored = vec![vec![0u64; n]; n];
    for mark in diagram.marks()? {
        if mark.col <= n {
            upper[mark.row - 1][mark.col - 1] += mark.mult;
        } else {
            mirrored[mark.col - n - 1][mark.row - 1] += mark.mult;
        }
    }
    if upper != mirrored {
        return Err(BijectionError::BadMatrix(
            "mark regions disagree; the path does not close a symmetric matrix".into(),
        ));
    }
    let entries = (0..n)
        .map(|i| (0..n).map(|j| upper[i][j] + upper[j][i]).collect())
        .collect();
    NatFpfMatrix::new(entries)
}

/// Reads the semistandard oscillating tableau of a matrix by refining it
/// to single boxes, rebuilding that diagram, and sampling the first line
/// at the block boundaries.
pub fn knuth_osc_from_matrix(mat: &NatFpfMatrix) -> Result<SemistandardOscTableau, BijectionError> {
    let (refined, bounds) = mat.expand();
    let m = (refined.n() / 2).max(1);
    let diagram = psi(&refined, m)?;
    let line = diagram.first_line();
    let parts = bounds
        .iter()
        .map(|&t| {
            let pair = line.weights()[t].split_parts();
            if pair.negative.is_empty() {
                Ok(pair.positive)
            } else {
                Err(BijectionError::NegativeFirstLine)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    SemistandardOscTableau::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::{enumerate_diagrams, single_box_path};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn part(p: &[Int]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn tab(rows: &[&[Int]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn osc(stages: &[&[Int]]) -> OscillatingTableau {
        OscillatingTableau::new(stages.iter().map(|s| part(s)).collect()).unwrap()
    }

    fn ss_osc(stages: &[&[Int]]) -> SemistandardOscTableau {
        SemistandardOscTableau::new(stages.iter().map(|s| part(s)).collect()).unwrap()
    }

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for slot in 0..=p.len() {
                let mut q = p.clone();
                q.insert(slot, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn greene_shapes_of_small_posets() {
        // A 3-chain, a 3-antichain, and the 2 + 1 mix.
        assert_eq!(greene_shape(&[(1, 1), (2, 2), (3, 3)]), part(&[3]));
        assert_eq!(greene_shape(&[(1, 3), (2, 2), (3, 1)]), part(&[1, 1, 1]));
        assert_eq!(greene_shape(&[(2, 6), (3, 8), (5, 7)]), part(&[2, 1]));
        // Ties in a row or column never chain.
        assert_eq!(greene_shape(&[(1, 1), (1, 2), (2, 1)]), part(&[1, 1, 1]));
        assert_eq!(greene_shape(&[]), part(&[]));
    }

    #[test]
    fn greene_fast_matches_cover_oracle() {
        for p in perms(4) {
            let marks: Vec<(Int, Int)> = p
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as Int + 1, v as Int))
                .collect();
            assert_eq!(greene_shape(&marks), greene_shape_by_cover(&marks));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let marks: Vec<(Int, Int)> = (0..8)
                .map(|_| (rng.gen_range(1..7), rng.gen_range(1..7)))
                .collect();
            assert_eq!(
                greene_shape(&marks),
                greene_shape_by_cover(&marks),
                "marks {marks:?}"
            );
        }
    }

    #[test]
    fn schensted_worked_example() {
        let (p, q) = schensted(&[1, 4, 2, 3]).unwrap();
        assert_eq!(p, tab(&[&[1, 2, 3], &[4]]));
        assert_eq!(q, tab(&[&[1, 2, 4], &[3]]));
        let (p, q) = schensted(&[3, 1, 2]).unwrap();
        assert_eq!(p, tab(&[&[1, 2], &[3]]));
        assert_eq!(q, tab(&[&[1, 3], &[2]]));
    }

    #[test]
    fn growth_rules_match_insertion() {
        for perm in perms(4) {
            assert_eq!(
                rs_growth(&perm).unwrap(),
                schensted(&perm).unwrap(),
                "perm {perm:?}"
            );
        }
    }

    #[test]
    fn square_symmetries_act_on_the_pair() {
        use crate::tableaux::evacuation;
        for perm in perms(4) {
            let n = perm.len();
            let (p, q) = schensted(&perm).unwrap();
            let size = p.size() as Int;

            let mut inverse = vec![0usize; n];
            for (i, &v) in perm.iter().enumerate() {
                inverse[v - 1] = i + 1;
            }
            assert_eq!(schensted(&inverse).unwrap(), (q.clone(), p.clone()));

            let reversed: Vec<usize> = perm.iter().rev().copied().collect();
            assert_eq!(
                schensted(&reversed).unwrap(),
                (p.transpose(), evacuation(&q, size).transpose())
            );

            let complemented: Vec<usize> = perm.iter().map(|&v| n + 1 - v).collect();
            assert_eq!(
                schensted(&complemented).unwrap(),
                (evacuation(&p, size).transpose(), q.transpose())
            );

            let both: Vec<usize> = reversed.iter().map(|&v| n + 1 - v).collect();
            assert_eq!(
                schensted(&both).unwrap(),
                (evacuation(&p, size), evacuation(&q, size))
            );
        }
    }

    #[test]
    fn embedding_sends_312_to_546213() {
        let pi = embed_rs(&[3, 1, 2]).unwrap();
        assert_eq!(pi.as_slice(), &[5, 4, 6, 2, 1, 3]);
        assert_eq!(pi.window(), vec![5, 4, 6, 8, 7, 9]);
        assert_eq!(unembed_rs(&pi).unwrap(), vec![3, 1, 2]);
        // A non-embedded involution is rejected.
        let other = FpfInvolution::new(vec![2, 1, 4, 3, 6, 5]).unwrap();
        assert!(unembed_rs(&other).is_err());
    }

    #[test]
    fn pair_splitting_matches_the_embedding() {
        // The up-half climbs the insertion chain and the reversed down-half
        // climbs the recording chain.
        let split = osc(&[&[], &[1], &[2], &[2, 1], &[1, 1], &[1], &[]]);
        let (p, q) = osc_to_pair(&split).unwrap();
        assert_eq!(p, tab(&[&[1, 2], &[3]]));
        assert_eq!(q, tab(&[&[1, 3], &[2]]));
        assert_eq!(pair_to_osc(&p, &q).unwrap(), split);
        assert_eq!(osc_to_fpf(&split).unwrap().as_slice(), &[5, 4, 6, 2, 1, 3]);

        // Every permutation factors through its embedded involution.
        for perm in perms(4) {
            let (p, q) = schensted(&perm).unwrap();
            let osc = pair_to_osc(&p, &q).unwrap();
            assert_eq!(
                osc_to_fpf(&osc).unwrap(),
                embed_rs(&perm).unwrap(),
                "perm {perm:?}"
            );
        }
    }

    #[test]
    fn involution_and_diagram_are_inverse() {
        // Reading marks then rebuilding restores every diagram whose type
        // matches the one its involution dictates (a box exactly where a
        // pair opens); the remaining types are line shifts of these and
        // rebuild to the dictated form with the involution intact.
        for mask in 0u32..16 {
            let kinds: Vec<bool> = (0..4).map(|i| (mask >> i) & 1 == 1).collect();
            let Ok(ty) = DiagramType::boxes(&kinds, 2) else {
                continue;
            };
            for d in enumerate_diagrams(&ty).unwrap() {
                let pi = phi(&d).unwrap();
                let rebuilt = psi(&pi, 2).unwrap();
                assert_eq!(phi(&rebuilt).unwrap(), pi);
                if pi.kinds() == kinds {
                    assert_eq!(rebuilt, d);
                }
            }
        }
        // The two worked figures are already in dictated form.
        let rs = single_box_path(
            &[false, false, false, true, true, true],
            &[&[], &[1], &[2], &[2, 1], &[1, 1], &[1], &[]],
            3,
        )
        .unwrap();
        let d = AffineGrowthDiagram::fill_from_path(&rs).unwrap();
        let pi = phi(&d).unwrap();
        assert_eq!(pi.as_slice(), &[5, 4, 6, 2, 1, 3]);
        assert_eq!(psi(&pi, 3).unwrap(), d);
        let eight = single_box_path(
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
        let d = AffineGrowthDiagram::fill_from_path(&eight).unwrap();
        let pi = phi(&d).unwrap();
        assert_eq!(pi.as_slice(), &[4, 6, 8, 1, 7, 2, 5, 3]);
        assert_eq!(psi(&pi, 4).unwrap(), d);
        // Rebuilding then reading marks restores every involution.
        for pi in FpfInvolution::all(6) {
            let d = psi(&pi, 3).unwrap();
            assert_eq!(phi(&d).unwrap(), pi);
        }
        assert_eq!(FpfInvolution::all(6).len(), 15);
    }

    #[test]
    fn oscillating_tableaux_pair_with_involutions() {
        let mut seen = std::collections::BTreeSet::new();
        for pi in FpfInvolution::all(6) {
            let osc = fpf_to_osc(&pi).unwrap();
            assert_eq!(osc_to_fpf(&osc).unwrap(), pi);
            seen.insert(format!("{:?}", osc.parts()));
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn expansion_refines_the_marking() {
        // One mark in the first hook, a double in the third.
        let mat = NatFpfMatrix::from_pairs(4, &[(1, 2, 1), (3, 4, 2)]).unwrap();
        let (refined, bounds) = mat.expand();
        assert_eq!(refined.as_slice(), &[2, 1, 5, 6, 3, 4]);
        assert_eq!(refined.window(), vec![2, 7, 5, 6, 9, 10]);
        assert_eq!(bounds, vec![0, 1, 2, 4, 6]);
        assert_eq!(
            fpf_to_osc(&refined).unwrap(),
            osc(&[&[], &[1], &[], &[1], &[1, 1], &[1], &[]])
        );
        assert_eq!(
            knuth_osc_from_matrix(&mat).unwrap(),
            ss_osc(&[&[], &[1], &[], &[1, 1], &[]])
        );
    }

    #[test]
    fn knuth_worked_example_round_trips() {
        // Strips of sizes 2, 3, 2, 1, 2, 2 with marks in four hooks.
        let osc = ss_osc(&[
            &[],
            &[1, 1],
            &[2, 2, 1],
            &[2, 1],
            &[2, 2],
            &[1, 1],
            &[],
        ]);
        let mat = knuth_matrix_from_osc(&osc, 6).unwrap();
        assert_eq!(
            mat,
            NatFpfMatrix::from_pairs(6, &[(1, 6, 2), (2, 3, 2), (2, 5, 1), (4, 5, 1)]).unwrap()
        );

        // The underlying staircase marks, multiplicities included.
        let d = AffineGrowthDiagram::fill_from_path(&osc.to_path(6).unwrap()).unwrap();
        let marks: Vec<(usize, usize, u64)> = d
            .marks()
            .unwrap()
            .iter()
            .map(|mk| (mk.row, mk.col, mk.mult))
            .collect();
        assert_eq!(
            marks,
            vec![
                (1, 6, 2),
                (2, 3, 2),
                (2, 5, 1),
                (3, 8, 2),
                (4, 5, 1),
                (5, 8, 1),
                (5, 10, 1),
                (6, 7, 2),
            ]
        );

        assert_eq!(knuth_osc_from_matrix(&mat).unwrap(), osc);

        // The refinement and the expansion tell the same single-box story.
        let (refined_osc, bounds) = osc.refine();
        assert_eq!(bounds, vec![0, 2, 5, 7, 8, 10, 12]);
        let (refined_pi, _) = mat.expand();
        assert_eq!(osc_to_fpf(&refined_osc).unwrap(), refined_pi);
    }

    #[test]
    fn knuth_round_trip_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(417);
        for _ in 0..40 {
            let n = rng.gen_range(1..=4) * 2;
            let pairing = FpfInvolution::all(n);
            let pi = &pairing[rng.gen_range(0..pairing.len())];
            let pairs: Vec<(usize, usize, u64)> = pi
                .pairs()
                .into_iter()
                .map(|(i, j)| (i, j, rng.gen_range(1..=3)))
                .collect();
            let mat = NatFpfMatrix::from_pairs(n, &pairs).unwrap();
            let osc = knuth_osc_from_matrix(&mat).unwrap();
            // Intermediate lines need rank up to half the total box count.
            let boxes: u64 = mat.entries().iter().flatten().sum();
            let m = (boxes as usize / 2).max(1);
            assert_eq!(knuth_matrix_from_osc(&osc, m).unwrap(), mat, "matrix {mat:?}");
        }
    }

    #[test]
    fn matrix_validation_rejects_bad_hooks() {
        assert!(NatFpfMatrix::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(NatFpfMatrix::new(vec![vec![0, 1], vec![0, 0]]).is_err());
        // Hook 2 with both row and column support.
        assert!(NatFpfMatrix::from_pairs(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1)]).is_err());
        // An empty hook.
        assert!(NatFpfMatrix::from_pairs(4, &[(1, 2, 1)]).is_err());
        assert!(NatFpfMatrix::from_pairs(4, &[(1, 2, 1), (3, 4, 1)]).is_ok());
    }
}
