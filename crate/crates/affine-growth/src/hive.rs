//! Hives: rhombus-concave integer labelings of triangles and simplices.
//!
//! A size-m 3-hive labels the lattice triangle {(i,j,k) : i+j+k = m} so that
//! across every unit rhombus the short diagonal sum dominates the long one.
//! Its three boundary edges read off dominant weights by successive
//! differences. An n-hive labels the full simplex so that every 2-face is a
//! 3-hive and the octahedron recurrence holds; its 1-skeleton stores a weight
//! on every chord of an n-gon, which is how it encodes a whole staircase
//! growth diagram at once.

use crate::local_rules::affine_rule;
use crate::staircase::{AffineGrowthDiagram, DiagramType, MinusculePath};
use crate::tableaux::kostka_count;
use crate::weights::{
    is_weakly_decreasing, minuscule_vector, pieri_neighbors, GlWeight, Int, MinusculeLabel,
    Partition, WeightError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HiveError {
    #[error("hive rows must shrink by one from m+1 down to 1")]
    BadShape,
    #[error("hives are normalized to start at zero")]
    NotNormalized,
    #[error("rhombus inequality fails: {0}")]
    Rhombus(String),
    #[error("boundary weights are incompatible: {0}")]
    Boundary(String),
    #[error("edge differences are not weakly decreasing")]
    SkeletonNotDominant,
    #[error("conflicting value at lattice point {0:?}")]
    Conflict(Vec<u8>),
    #[error("octahedron recurrence cannot reach point {0:?}")]
    Stuck(Vec<u8>),
    #[error("missing value at lattice point {0:?}")]
    Missing(Vec<u8>),
    #[error("polygon must have at least three corners")]
    TooFewCorners,
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// A normalized size-m 3-hive. Row r (r = 0..=m) holds the values
/// h[r][t] = f(m-r-t, t, r) in ternary coordinates (a, b, c), so the top
/// row runs from corner A to corner B, the row ends walk the hypotenuse
/// from B to C, and the row starts walk the left edge from A to C.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Int>>", into = "Vec<Vec<Int>>")]
pub struct Hive3 {
    rows: Vec<Vec<Int>>,
}

impl Hive3 {
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self, HiveError> {
        if rows.is_empty() {
            return Err(HiveError::BadShape);
        }
        let m = rows.len() - 1;
        if (0..=m).any(|r| rows[r].len() != m - r + 1) {
            return Err(HiveError::BadShape);
        }
        if rows[0][0] != 0 {
            return Err(HiveError::NotNormalized);
        }
        let hive = Hive3 { rows };
        match hive.rhombus_violation() {
            None => Ok(hive),
            Some(msg) => Err(HiveError::Rhombus(msg)),
        }
    }

    pub fn m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn value(&self, r: usize, t: usize) -> Int {
        self.rows[r][t]
    }

    /// Value at ternary point (i, j, k), i + j + k = m.
    fn ternary(&self, j: usize, k: usize) -> Int {
        self.rows[k][j]
    }

    /// Checks the three families of rhombus inequalities, phrased at each
    /// ternary point (i, j, k):
    ///   f(i,j,k) + f(i,j+1,k-1) >= f(i+1,j,k-1) + f(i-1,j+1,k)
    ///   f(i,j,k) + f(i+1,j-1,k) >= f(i+1,j,k-1) + f(i,j-1,k+1)
    ///   f(i,j,k) + f(i+1,j,k-1) >= f(i,j+1,k-1) + f(i+1,j-1,k)
    fn rhombus_violation(&self) -> Option<String> {
        let m = self.m();
        for k in 0..=m {
            for j in 0..=m - k {
                let i = m - j - k;
                let f = |j: usize, k: usize| self.ternary(j, k);
                if k >= 1 && i >= 1 && f(j, k) + f(j + 1, k - 1) < f(j, k - 1) + f(j + 1, k) {
                    return Some(format!("first family at ({i},{j},{k})"));
                }
                if j >= 1 && k >= 1 && f(j, k) + f(j - 1, k) < f(j, k - 1) + f(j - 1, k + 1) {
                    return Some(format!("second family at ({i},{j},{k})"));
                }
                if j >= 1 && k >= 1 && f(j, k) + f(j, k - 1) < f(j + 1, k - 1) + f(j - 1, k) {
                    return Some(format!("third family at ({i},{j},{k})"));
                }
            }
        }
        None
    }

    fn edge(&self, values: Vec<Int>) -> Result<GlWeight, HiveError> {
        let diffs: Vec<Int> = values.windows(2).map(|w| w[1] - w[0]).collect();
        if !is_weakly_decreasing(&diffs) {
            return Err(HiveError::SkeletonNotDominant);
        }
        Ok(GlWeight::new(diffs)?)
    }

    /// The weight along the top edge, read from corner A to corner B.
    pub fn edge_ab(&self) -> Result<GlWeight, HiveError> {
        self.edge(self.rows[0].clone())
    }

    /// The weight along the hypotenuse, read from corner B to corner C.
    pub fn edge_bc(&self) -> Result<GlWeight, HiveError> {
        self.edge((0..=self.m()).map(|r| self.rows[r][self.m() - r]).collect())
    }

    /// The weight along the left edge, read from corner A to corner C.
    pub fn edge_ac(&self) -> Result<GlWeight, HiveError> {
        self.edge((0..=self.m()).map(|r| self.rows[r][0]).collect())
    }

    /// Reflection swapping corners B and C, renormalized. Sends boundary
    /// (ab, bc, ac) to (dual(ab), ac, bc).
    pub fn mirror(&self) -> Hive3 {
        let m = self.m();
        let top_right = self.rows[0][m];
        let rows = (0..=m)
            .map(|r| {
                (0..=m - r)
                    .map(|t| self.rows[r][m - r - t] - top_right)
                    .collect()
            })
            .collect();
        Hive3 { rows }
    }
}

impl TryFrom<Vec<Vec<Int>>> for Hive3 {
    type Error = HiveError;
    fn try_from(rows: Vec<Vec<Int>>) -> Result<Self, Self::Error> {
        Hive3::from_rows(rows)
    }
}

impl From<Hive3> for Vec<Vec<Int>> {
    fn from(h: Hive3) -> Self {
        h.rows
    }
}

fn partial_sums(entries: &[Int]) -> Vec<Int> {
    let mut out = Vec::with_capacity(entries.len() + 1);
    let mut acc = 0;
    out.push(acc);
    for &e in entries {
        acc += e;
        out.push(acc);
    }
    out
}

/// The unique 3-hive whose top edge carries the fundamental weight omega_j
/// and whose hypotenuse and left edges carry bc and ac. Exists iff
/// ac - bc is a 0/1 vector with exactly j ones; the strip of ones below the
/// top edge then shrinks by one at each row where ac and bc differ.
fn solve_fund(j: usize, bc: &GlWeight, ac: &GlWeight) -> Result<Hive3, HiveError> {
    let m = bc.rank();
    if ac.rank() != m || j > m {
        return Err(HiveError::Boundary("rank mismatch".into()));
    }
    let diff: Vec<Int> = (0..m)
        .map(|r| ac.entries()[r] - bc.entries()[r])
        .collect();
    if diff.iter().any(|&d| d != 0 && d != 1) || diff.iter().sum::<Int>() != j as Int {
        return Err(HiveError::Boundary(format!(
            "edges do not differ by an omega_{j} strip"
        )));
    }
    let mut rows = Vec::with_capacity(m + 1);
    let mut ones = j as Int;
    let mut start = 0;
    rows.push((0..=m as Int).map(|t| t.min(ones)).collect::<Vec<Int>>());
    for r in 1..=m {
        ones -= diff[r - 1];
        start += ac.entries()[r - 1];
        rows.push((0..=(m - r) as Int).map(|t| start + t.min(ones)).collect());
    }
    Hive3::from_rows(rows)
}

/// The unique 3-hive with a minuscule weight on its top edge and the given
/// hypotenuse and left edges, if one exists. The dual case reduces to the
/// fundamental one by the mirror reflection.
pub fn solve_hive3_minuscule(
    label: MinusculeLabel,
    bc: &GlWeight,
    ac: &GlWeight,
) -> Result<Hive3, HiveError> {
    if label.is_dual() {
        Ok(solve_fund(label.j(), ac, bc)?.mirror())
    } else {
        solve_fund(label.j(), bc, ac)
    }
}

/// All 3-hives with the given boundary edges, by depth-first search over the
/// interior values between their two-sided rhombus bounds.
pub fn enumerate_hive3(ab: &GlWeight, bc: &GlWeight, ac: &GlWeight) -> Vec<Hive3> {
    let m = ab.rank();
    if bc.rank() != m || ac.rank() != m || ab.total() + bc.total() != ac.total() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Int>> = (0..=m).map(|r| vec![0; m - r + 1]).collect();
    rows[0] = partial_sums(ab.entries());
    let left = partial_sums(ac.entries());
    let hyp = partial_sums(bc.entries());
    for r in 1..=m {
        rows[r][0] = left[r];
        rows[r][m - r] = ab.total() + hyp[r];
    }
    let cells: Vec<(usize, usize)> = (1..m)
        .flat_map(|r| (1..m - r).map(move |t| (r, t)))
        .collect();
    let mut out = Vec::new();
    fn fill(
        rows: &mut Vec<Vec<Int>>,
        cells: &[(usize, usize)],
        idx: usize,
        out: &mut Vec<Hive3>,
    ) {
        if idx == cells.len() {
            if let Ok(hive) = Hive3::from_rows(rows.clone()) {
                out.push(hive);
            }
            return;
        }
        let (r, t) = cells[idx];
        let lo = rows[r - 1][t + 1] + rows[r][t - 1] - rows[r - 1][t];
        let hi = rows[r][t - 1] + rows[r - 1][t] - rows[r - 1][t - 1];
        for v in lo..=hi {
            rows[r][t] = v;
            fill(rows, cells, idx + 1, out);
        }
    }
    fill(&mut rows, &cells, 0, &mut out);
    out
}

type Point = Vec<u8>;

/// A size-m n-hive: integer values on the lattice simplex
/// {x in N^n : sum x = m}, normalized so the first corner is zero. Values
/// are held sparsely so a hive can be assembled face by face and completed
/// by octahedron excavation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiveN {
    n: usize,
    m: usize,
    values: HashMap<Point, Int>,
}

impl HiveN {
    pub fn new(n: usize, m: usize) -> Self {
        HiveN {
            n,
            m,
            values: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The lattice corner above polygon vertex i (1-based).
    pub fn corner(&self, i: usize) -> Point {
        let mut p = vec![0u8; self.n];
        p[i - 1] = self.m as u8;
        p
    }

    pub fn get(&self, point: &[u8]) -> Option<Int> {
        self.values.get(point).copied()
    }

    /// All stored (point, value) pairs in lexicographic point order.
    pub fn entries(&self) -> Vec<(Vec<u8>, Int)> {
        let mut out: Vec<(Point, Int)> = self
            .values
            .iter()
            .map(|(p, &v)| (p.clone(), v))
            .collect();
        out.sort();
        out
    }

    fn set(&mut self, point: Point, value: Int) -> Result<(), HiveError> {
        match self.values.insert(point.clone(), value) {
            Some(old) if old != value => Err(HiveError::Conflict(point)),
            _ => Ok(()),
        }
    }

    fn all_points(&self) -> Vec<Point> {
        fn go(n: usize, left: u8, prefix: &mut Point, out: &mut Vec<Point>) {
            if n == 1 {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for v in 0..=left {
                prefix.push(v);
                go(n - 1, left - v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self.n, self.m as u8, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_complete(&self) -> bool {
        self.all_points().iter().all(|p| self.values.contains_key(p))
    }

    /// Writes a 3-hive onto the face spanned by three corners, shifted by
    /// the value at the face's A corner. Overlapping writes must agree.
    pub fn set_face(
        &mut self,
        corners: [usize; 3],
        hive: &Hive3,
        offset: Int,
    ) -> Result<(), HiveError> {
        let m = self.m;
        if hive.m() != m {
            return Err(HiveError::Boundary("face size mismatch".into()));
        }
        let [a, b, c] = corners;
        for r in 0..=m {
            for t in 0..=m - r {
                let mut p = vec![0u8; self.n];
                p[a - 1] += (m - r - t) as u8;
                p[b - 1] += t as u8;
                p[c - 1] += r as u8;
                self.set(p, hive.value(r, t) + offset)?;
            }
        }
        Ok(())
    }

    /// The weight along the chord from polygon corner u to corner v, read as
    /// successive differences from the u end.
    pub fn chord_weight(&self, u: usize, v: usize) -> Result<GlWeight, HiveError> {
        let m = self.m;
        let value = |s: usize| -> Result<Int, HiveError> {
            let mut p = vec![0u8; self.n];
            p[u - 1] += (m - s) as u8;
            p[v - 1] += s as u8;
            self.get(&p).ok_or(HiveError::Missing(p))
        };
        let mut diffs = Vec::with_capacity(m);
        let mut prev = value(0)?;
        for s in 1..=m {
            let cur = value(s)?;
            diffs.push(cur - prev);
            prev = cur;
        }
        if !is_weakly_decreasing(&diffs) {
            return Err(HiveError::SkeletonNotDominant);
        }
        Ok(GlWeight::new(diffs)?)
    }

    /// Fills every missing lattice point with the octahedron recurrence: for
    /// corners a < b < c < d of a unit octahedron, the crossing pair obeys
    /// f(ac) + f(bd) = max(f(ab) + f(cd), f(ad) + f(bc)).
    pub fn excavate(&mut self) -> Result<(), HiveError> {
        let all = self.all_points();
        let quads: Vec<[usize; 4]> = {
            let mut qs = Vec::new();
            for a in 0..self.n {
                for b in a + 1..self.n {
                    for c in b + 1..self.n {
                        for d in c + 1..self.n {
                            qs.push([a, b, c, d]);
                        }
                    }
                }
            }
            qs
        };
        let mut missing: Vec<Point> = all
            .into_iter()
            .filter(|p| !self.values.contains_key(p))
            .collect();
        while !missing.is_empty() {
            let mut progressed = false;
            missing.retain(|x| {
                for quad in &quads {
                    if let Some(v) = self.excavate_point(x, *quad) {
                        self.values.insert(x.clone(), v);
                        progressed = true;
                        return false;
                    }
                }
                true
            });
            if !progressed {
                return Err(HiveError::Stuck(missing.swap_remove(0)));
            }
        }
        Ok(())
    }

    /// Tries to compute the value at x as the hidden vertex of a unit
    /// octahedron in directions a < b < c < d; x must sit on one of the two
    /// crossing diagonals, at the pair (a,c) or (b,d).
    fn excavate_point(&self, x: &[u8], [a, b, c, d]: [usize; 4]) -> Option<Int> {
        let pair_value = |y: &[u8], i: usize, j: usize| -> Option<Int> {
            let mut p = y.to_vec();
            p[i] += 1;
            p[j] += 1;
            self.values.get(&p).copied()
        };
        for (mine, other) in [((b, d), (a, c)), ((a, c), (b, d))] {
            if x[mine.0] >= 1 && x[mine.1] >= 1 {
                let mut y = x.to_vec();
                y[mine.0] -= 1;
                y[mine.1] -= 1;
                let (Some(f_ab), Some(f_cd), Some(f_ad), Some(f_bc), Some(f_opp)) = (
                    pair_value(&y, a, b),
                    pair_value(&y, c, d),
                    pair_value(&y, a, d),
                    pair_value(&y, b, c),
                    pair_value(&y, other.0, other.1),
                ) else {
                    continue;
                };
                return Some((f_ab + f_cd).max(f_ad + f_bc) - f_opp);
            }
        }
        None
    }
}

/// Builds the n-hive of a closed minuscule path: the fan of triangles from
/// the first polygon corner is solved face by face from the path's chord
/// weights, and the octahedron recurrence excavates the rest.
pub fn build_hive_n(path: &MinusculePath) -> Result<HiveN, HiveError> {
    let ty = path.ty();
    let (n, m) = (ty.n(), ty.m());
    if n < 3 {
        return Err(HiveError::TooFewCorners);
    }
    let mu = |k: usize| &path.weights()[k - 1];
    let mut hive = HiveN::new(n, m);
    for c in 2..n {
        let face = solve_hive3_minuscule(ty.label(c as i64), &mu(c + 1).dual(), &mu(c).dual())?;
        hive.set_face([c, c + 1, 1], &face, mu(c).total())?;
    }
    hive.excavate()?;
    Ok(hive)
}

/// One square of growth posed as a 4-hive: the four chord weights around the
/// square plus the two minuscule labels crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetraCase {
    pub l1: MinusculeLabel,
    pub l2: MinusculeLabel,
    pub lambda: GlWeight,
    pub mu: GlWeight,
    pub nu: GlWeight,
}

/// Computes the fourth chord weight of a tetrahedron from its two solvable
/// faces and octahedron excavation, independently of the local rule.
pub fn tetra_rho_via_hive(case: &TetraCase) -> Result<GlWeight, HiveError> {
    let m = case.nu.rank();
    let mut hive = HiveN::new(4, m);
    let face_a = solve_hive3_minuscule(case.l1, &case.lambda, &case.nu)?;
    hive.set_face([1, 2, 3], &face_a, 0)?;
    let face_ne = solve_hive3_minuscule(case.l2, &case.mu.dual(), &case.nu.dual())?;
    hive.set_face([3, 4, 1], &face_ne, case.nu.total())?;
    hive.excavate()?;
    hive.chord_weight(2, 4)
}

/// Draws a random square: a dominant nu, labels of the requested kinds, and
/// lambda, mu adjacent to nu in the matching Pieri directions.
pub fn random_tetra_case(
    m: usize,
    dual_l1: bool,
    dual_l2: bool,
    rng: &mut impl Rng,
) -> TetraCase {
    let make_label = |j: usize, dual: bool| {
        if dual {
            MinusculeLabel::dual_of(j)
        } else {
            MinusculeLabel::fund(j)
        }
    };
    let l1 = make_label(rng.gen_range(1..=m), dual_l1);
    let l2 = make_label(rng.gen_range(1..=m), dual_l2);
    let mut entries: Vec<Int> = (0..m).map(|_| rng.gen_range(-4..=4)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    let nu = GlWeight::new(entries).expect("sorted entries");
    let lambdas = pieri_neighbors(&nu, l1.dual());
    let mus = pieri_neighbors(&nu, l2);
    TetraCase {
        l1,
        l2,
        lambda: lambdas[rng.gen_range(0..lambdas.len())].clone(),
        mu: mus[rng.gen_range(0..mus.len())].clone(),
        nu,
    }
}

fn verify_tetra_case(case: &TetraCase) -> Result<(), String> {
    let via_hive = tetra_rho_via_hive(case).map_err(|e| format!("{case:?}: {e}"))?;
    let via_rule =
        affine_rule(&case.lambda, &case.mu, &case.nu).map_err(|e| format!("{case:?}: {e}"))?;
    if via_hive != via_rule {
        return Err(format!(
            "{case:?}: hive gives {via_hive:?}, local rule gives {via_rule:?}"
        ));
    }
    Ok(())
}

fn tetra_sample(m: usize, seed: u64, index: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    for (dual_l1, dual_l2) in [(false, false), (false, true), (true, false), (true, true)] {
        verify_tetra_case(&random_tetra_case(m, dual_l1, dual_l2, &mut rng))?;
    }
    Ok(())
}

/// Checks `samples` random squares in all four label orientations against
/// the local rule; returns the number of squares verified.
pub fn tetra_sweep(m: usize, samples: u64, seed: u64) -> Result<u64, String> {
    #[cfg(feature = "parallel")]
    {
        (0..samples)
            .into_par_iter()
            .try_for_each(|i| tetra_sample(m, seed, i))?;
        Ok(samples * 4)
    }
    #[cfg(not(feature = "parallel"))]
    {
        tetra_sweep_seq(m, samples, seed)
    }
}

/// Sequential twin of `tetra_sweep`, kept for benchmarking the parallel
/// speedup and for builds without the `parallel` feature.
pub fn tetra_sweep_seq(m: usize, samples: u64, seed: u64) -> Result<u64, String> {
    for i in 0..samples {
        tetra_sample(m, seed, i)?;
    }
    Ok(samples * 4)
}

/// Number of closed minuscule paths counted through hives: a path is grown
/// one chord at a time, and a candidate chord is accepted exactly when the
/// brute-force rhombus search finds a face hive joining it to the previous
/// chord. Pieri combinatorics is deliberately not consulted.
pub fn count_via_hives(ty: &DiagramType) -> u64 {
    let m = ty.m();
    let (fund_left, dual_left) = crate::staircase::box_suffixes(ty);
    fn go(
        ty: &DiagramType,
        fund_left: &[Int],
        dual_left: &[Int],
        c: usize,
        mu: &GlWeight,
        count: &mut u64,
    ) {
        if mu.positive_size() > dual_left[c] || mu.negative_size() > fund_left[c] {
            return;
        }
        if c == ty.n() {
            *count += 1;
            return;
        }
        let m = ty.m();
        let label = ty.label(c as i64 + 1);
        let edge = minuscule_vector(label, m).expect("label fits rank");
        let sign: Int = if label.is_dual() { -1 } else { 1 };
        let j = label.j();
        for mask in 0u32..1 << m {
            if mask.count_ones() as usize != j {
                continue;
            }
            let entries: Vec<Int> = (0..m)
                .map(|i| mu.entries()[i] + sign * ((mask >> i) & 1) as Int)
                .collect();
            if !is_weakly_decreasing(&entries) {
                continue;
            }
            let cand = GlWeight::new(entries).expect("checked decreasing");
            let faces = enumerate_hive3(&edge, &cand.dual(), &mu.dual());
            assert!(
                faces.len() <= 1,
                "minuscule face must be unique, found {} for {label}",
                faces.len()
            );
            if faces.len() == 1 {
                go(ty, fund_left, dual_left, c + 1, &cand, count);
            }
        }
    }
    let mut count = 0;
    go(ty, &fund_left, &dual_left, 0, &GlWeight::zero(m), &mut count);
    count
}

/// Number of closed minuscule paths counted as a Kostka number: fillings of
/// an l-row rectangle of width m, where l is the number of dual labels, with
/// content given by the fundamental sizes and the co-sizes of the duals.
pub fn count_via_kostka(ty: &DiagramType) -> u64 {
    let m = ty.m() as Int;
    let dual_rows = ty.labels().iter().filter(|l| l.is_dual()).count();
    let shape = Partition::new(vec![m; dual_rows]).expect("rectangle");
    let content: Vec<Int> = ty
        .labels()
        .iter()
        .map(|l| {
            if l.is_dual() {
                m - l.j() as Int
            } else {
                l.j() as Int
            }
        })
        .collect();
    kostka_count(&shape, &content)
}

/// Outcome of a counting sweep: how many types were checked and how many
/// closed paths they carry in total.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountAgreement {
    pub types_checked: u64,
    pub nonzero_types: u64,
    pub paths_total: u64,
}

fn check_type_counts(ty: &DiagramType) -> Result<u64, String> {
    let paths = crate::staircase::count_paths(ty);
    let diagrams = crate::staircase::enumerate_diagrams(ty)
        .map_err(|e| format!("{ty:?}: fill failed: {e}"))?
        .len() as u64;
    let hives = count_via_hives(ty);
    let kostka = count_via_kostka(ty);
    if paths != diagrams || paths != hives || paths != kostka {
        return Err(format!(
            "{ty:?}: paths {paths}, diagrams {diagrams}, hives {hives}, kostka {kostka}"
        ));
    }
    Ok(paths)
}

fn all_types(max_m: usize, lengths: std::ops::RangeInclusive<usize>, max_fund: usize) -> Vec<DiagramType> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let alphabet = crate::staircase::all_labels(m);
        for len in lengths.clone() {
            let mut counter = vec![0usize; len];
            loop {
                let labels: Vec<MinusculeLabel> =
                    counter.iter().map(|&i| alphabet[i]).collect();
                let ty = DiagramType::new(labels, m).expect("alphabet labels fit");
                if ty.fundamental_size() <= max_fund {
                    out.push(ty);
                }
                let mut pos = 0;
                while pos < len {
                    counter[pos] += 1;
                    if counter[pos] < alphabet.len() {
                        break;
                    }
                    counter[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
    }
    out
}

/// Checks that all four counting methods agree on every type with the given
/// rank and period bounds, skipping types whose fundamental size exceeds
/// `max_fund`.
pub fn count_agreement_sweep(
    max_m: usize,
    lengths: std::ops::RangeInclusive<usize>,
    max_fund: usize,
) -> Result<CountAgreement, String> {
    let types = all_types(max_m, lengths, max_fund);
    #[cfg(feature = "parallel")]
    let counts: Result<Vec<u64>, String> =
        types.par_iter().map(check_type_counts).collect();
    #[cfg(not(feature = "parallel"))]
    let counts: Result<Vec<u64>, String> = types.iter().map(check_type_counts).collect();
    let counts = counts?;
    Ok(CountAgreement {
        types_checked: types.len() as u64,
        nonzero_types: counts.iter().filter(|&&c| c > 0).count() as u64,
        paths_total: counts.iter().sum(),
    })
}

/// Sequential twin of `count_agreement_sweep`.
pub fn count_agreement_sweep_seq(
    max_m: usize,
    lengths: std::ops::RangeInclusive<usize>,
    max_fund: usize,
) -> Result<CountAgreement, String> {
    let types = all_types(max_m, lengths, max_fund);
    let mut agg = CountAgreement {
        types_checked: types.len() as u64,
        ..Default::default()
    };
    for ty in &types {
        let c = check_type_counts(ty)?;
        agg.nonzero_types += (c > 0) as u64;
        agg.paths_total += c;
    }
    Ok(agg)
}

/// A triangle in a polygon triangulation, as sorted 1-based corner indices.
pub type Triangle = [usize; 3];

/// All triangulations of a convex n-gon, each as a list of triangles.
pub fn enumerate_triangulations(n: usize) -> Vec<Vec<Triangle>> {
    fn go(verts: &[usize]) -> Vec<Vec<Triangle>> {
        if verts.len() == 2 {
            return vec![Vec::new()];
        }
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        let mut out = Vec::new();
        for apex in 1..verts.len() - 1 {
            let mut triangle = [first, verts[apex], last];
            triangle.sort_unstable();
            for left in go(&verts[..=apex]) {
                for right in go(&verts[apex..]) {
                    let mut tri = left.clone();
                    tri.extend_from_slice(&right);
                    tri.push(triangle);
                    tri.sort_unstable();
                    out.push(tri);
                }
            }
        }
        out
    }
    go(&(1..=n).collect::<Vec<_>>())
}

/// Whether every triangle keeps a side on the polygon boundary.
pub fn is_extroverted(triangles: &[Triangle], n: usize) -> bool {
    triangles.iter().all(|&[a, b, c]| {
        b == a + 1 || c == b + 1 || (a == 1 && c == n)
    })
}

pub fn enumerate_extroverted(n: usize) -> Vec<Vec<Triangle>> {
    enumerate_triangulations(n)
        .into_iter()
        .filter(|t| is_extroverted(t, n))
        .collect()
}

pub fn count_extroverted(n: usize) -> u64 {
    enumerate_extroverted(n).len() as u64
}

/// Closed form for the number of extroverted triangulations: all one or two
/// triangulations are extroverted for n = 3, 4, and n * 2^(n-5) of them
/// from the pentagon on.
pub fn extroverted_formula(n: usize) -> u64 {
    match n {
        3 => 1,
        4 => 2,
        _ => n as u64 * (1 << (n - 5)),
    }
}

/// One turn of the snake through an extroverted triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tag {
    R,
    L,
}

/// An oriented extroverted triangulation, encoded as a starting polygon edge
/// with an orientation tag followed by n-2 turns. The snake keeps a window
/// (a, b) of visited corners; turn R glues the triangle (a, b, b+1) and
/// orients its new edge from a, turn L glues (b, a, a-1) and orients from b.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeWord {
    start: usize,
    tags: Vec<Tag>,
}

impl CodeWord {
    pub fn new(start: usize, tags: Vec<Tag>) -> Self {
        CodeWord { start, tags }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    /// Number of polygon corners this word is sized for.
    pub fn n(&self) -> usize {
        self.tags.len() + 1
    }

    /// The n-1 oriented chords in reading order.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let inc = |v: usize| v % n + 1;
        let dec = |v: usize| (v + n - 2) % n + 1;
        let (mut a, mut b) = (self.start, inc(self.start));
        let mut edges = vec![match self.tags[0] {
            Tag::R => (a, b),
            Tag::L => (b, a),
        }];
        for &tag in &self.tags[1..] {
            match tag {
                Tag::R => {
                    edges.push((a, inc(b)));
                    b = inc(b);
                }
                Tag::L => {
                    edges.push((b, dec(a)));
                    a = dec(a);
                }
            }
        }
        edges
    }

    /// The triangles glued by the turns, as a sorted list.
    pub fn triangles(&self) -> Vec<Triangle> {
        let n = self.n();
        let inc = |v: usize| v % n + 1;
        let dec = |v: usize| (v + n - 2) % n + 1;
        let (mut a, mut b) = (self.start, inc(self.start));
        let mut out = Vec::new();
        for &tag in &self.tags[1..] {
            let mut triangle = match tag {
                Tag::R => [a, b, inc(b)],
                Tag::L => [b, a, dec(a)],
            };
            match tag {
                Tag::R => b = inc(b),
                Tag::L => a = dec(a),
            }
            triangle.sort_unstable();
            out.push(triangle);
        }
        out.sort_unstable();
        out
    }

    /// Every code word for an n-gon.
    pub fn all(n: usize) -> Vec<CodeWord> {
        let mut out = Vec::new();
        for start in 1..=n {
            for bits in 0u32..1 << (n - 1) {
                let tags = (0..n - 1)
                    .map(|i| if (bits >> i) & 1 == 1 { Tag::L } else { Tag::R })
                    .collect();
                out.push(CodeWord::new(start, tags));
            }
        }
        out
    }
}

impl FromStr for CodeWord {
    type Err = String;
    /// Parses words like "1RRLRL": a 1-based starting edge then the tags.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let first_tag = s
            .find(|c| c == 'R' || c == 'L')
            .ok_or_else(|| format!("no tags in code word {s:?}"))?;
        let start: usize = s[..first_tag]
            .parse()
            .map_err(|_| format!("bad starting edge in code word {s:?}"))?;
        let tags = s[first_tag..]
            .chars()
            .map(|c| match c {
                'R' => Ok(Tag::R),
                'L' => Ok(Tag::L),
                other => Err(format!("bad tag {other:?} in code word {s:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CodeWord::new(start, tags))
    }
}

/// The weights along a code word's oriented chords, read directly from the
/// growth diagram's chord dictionary.
pub fn chord_weights(d: &AffineGrowthDiagram, word: &CodeWord) -> Vec<GlWeight> {
    let n = d.n() as i64;
    word.oriented_edges()
        .iter()
        .map(|&(u, v)| {
            let c = (v as i64 - u as i64).rem_euclid(n) as usize;
            d.label(u as i64, c).clone()
        })
        .collect()
}

/// The same weights read by walking a staircase path through the diagram:
/// start at vertex 1 of the starting line, step east for R and up-line for
/// L, reading the vertex weight directly on R and its dual on L.
pub fn staircase_path_weights(d: &AffineGrowthDiagram, word: &CodeWord) -> Vec<GlWeight> {
    let mut line = word.start() as i64;
    let mut vertex = 1usize;
    let mut out = Vec::with_capacity(word.tags().len());
    for (k, &tag) in word.tags().iter().enumerate() {
        if k > 0 {
            match tag {
                Tag::R => vertex += 1,
                Tag::L => {
                    line -= 1;
                    vertex += 1;
                }
            }
        }
        out.push(match tag {
            Tag::R => d.label(line, vertex).clone(),
            Tag::L => d.label(line, vertex).dual(),
        });
    }
    out
}
