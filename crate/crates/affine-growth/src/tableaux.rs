//! Tableaux, jeu de taquin, promotion, evacuation, and Kostka numbers.
//!
//! The tableaux here are row-strict: entries increase strictly along rows and
//! weakly down columns. A chain of partitions with vertical-strip steps is
//! the same data (each box is labelled by the step at which it appears), and
//! standard tableaux are the special case where every letter is used exactly
//! once and columns are also strict.

use crate::weights::{Int, Partition, WeightError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("rows do not form a partition shape")]
    BadShape,
    #[error("rows must strictly increase and columns weakly increase")]
    NotRowStrict,
    #[error("entries must lie in 1..={0}")]
    EntryOutOfRange(Int),
    #[error("chain is not increasing by vertical strips")]
    BadChain,
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// A row-strict tableau of partition shape.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Int>>", into = "Vec<Vec<Int>>")]
pub struct Tableau {
    rows: Vec<Vec<Int>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Int>>) -> Result<Self, TableauError> {
        let widths: Vec<Int> = rows.iter().map(|r| r.len() as Int).collect();
        if !crate::weights::is_weakly_decreasing(&widths) || widths.contains(&0) {
            return Err(TableauError::BadShape);
        }
        for row in &rows {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(TableauError::NotRowStrict);
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] > rows[r][c] {
                    return Err(TableauError::NotRowStrict);
                }
            }
        }
        if rows.iter().flatten().any(|&e| e < 1) {
            return Err(TableauError::EntryOutOfRange(1));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as Int).collect())
            .expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_entry(&self) -> Int {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entries 1..size each exactly once, with strict columns.
    pub fn is_standard(&self) -> bool {
        let n = self.size() as Int;
        let mut seen = vec![false; n as usize + 1];
        for row in &self.rows {
            for &e in row {
                if e < 1 || e > n || seen[e as usize] {
                    return false;
                }
                seen[e as usize] = true;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] >= self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// The transposed tableau (valid for standard tableaux, where rows and
    /// columns are both strict).
    pub fn transpose(&self) -> Tableau {
        let shape = self.shape().conjugate();
        let rows = (0..shape.len())
            .map(|r| {
                (0..shape.part(r) as usize)
                    .map(|c| self.rows[c][r])
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// The chain of subshapes occupied by entries <= 1, 2, ..., n.
    pub fn to_chain(&self, n: Int) -> Vec<Partition> {
        (0..=n)
            .map(|v| {
                Partition::new(
                    self.rows
                        .iter()
                        .map(|row| row.iter().take_while(|&&e| e <= v).count() as Int)
                        .collect(),
                )
                .expect("prefix counts of a row-strict tableau decrease weakly")
            })
            .collect()
    }

    /// Rebuilds a tableau from a chain of partitions increasing by vertical
    /// strips: the box in a given cell is labelled by the step at which it
    /// appears.
    pub fn from_chain(chain: &[Partition]) -> Result<Tableau, TableauError> {
        if chain.is_empty() || !chain[0].is_empty() {
            return Err(TableauError::BadChain);
        }
        let full = chain.last().unwrap();
        let mut rows: Vec<Vec<Int>> = (0..full.len())
            .map(|r| vec![0; full.part(r) as usize])
            .collect();
        for (step, pair) in chain.windows(2).enumerate() {
            let (prev, next) = (&pair[0], &pair[1]);
            let cells = next.skew_cells(prev).ok_or(TableauError::BadChain)?;
            let mut rows_seen = std::collections::HashSet::new();
            for (r, c) in cells {
                if !rows_seen.insert(r) {
                    return Err(TableauError::BadChain); // not a vertical strip
                }
                rows[r][c] = step as Int + 1;
            }
        }
        Tableau::new(rows)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl From<Tableau> for Vec<Vec<Int>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl TryFrom<Vec<Vec<Int>>> for Tableau {
    type Error = TableauError;
    fn try_from(rows: Vec<Vec<Int>>) -> Result<Self, TableauError> {
        Tableau::new(rows)
    }
}

type Grid = Vec<Vec<Option<Int>>>;

fn to_grid(t: &Tableau) -> Grid {
    t.rows
        .iter()
        .map(|row| row.iter().map(|&e| Some(e)).collect())
        .collect()
}

fn from_grid(grid: Grid) -> Tableau {
    Tableau::new(
        grid.into_iter()
            .filter(|row| !row.is_empty())
            .map(|row| row.into_iter().map(|e| e.expect("grid filled")).collect())
            .collect(),
    )
    .expect("slides preserve row-strictness")
}

fn cell(grid: &Grid, r: usize, c: usize) -> Option<Int> {
    grid.get(r).and_then(|row| row.get(c)).copied().flatten()
}

/// Slides an empty cell inward (toward the SE) until neither an east nor a
/// south neighbor exists, pulling the smaller neighbor into the hole at each
/// step (east on ties, preserving row-strictness). Returns the cell where
/// the hole comes to rest.
pub fn jdt_slide(grid: &mut Grid, hole: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = hole;
    debug_assert!(grid[r][c].is_none());
    loop {
        let east = cell(grid, r, c + 1);
        let south = cell(grid, r + 1, c);
        match (east, south) {
            (None, None) => return (r, c),
            (Some(e), None) => {
                grid[r][c] = Some(e);
                grid[r][c + 1] = None;
                c += 1;
            }
            (None, Some(s)) => {
                grid[r][c] = Some(s);
                grid[r + 1][c] = None;
                r += 1;
            }
            (Some(e), Some(s)) => {
                if e <= s {
                    grid[r][c] = Some(e);
                    grid[r][c + 1] = None;
                    c += 1;
                } else {
                    grid[r][c] = Some(s);
                    grid[r + 1][c] = None;
                    r += 1;
                }
            }
        }
    }
}

/// Slides an empty cell outward (toward the NW) until neither a west nor a
/// north neighbor exists, pulling the larger neighbor into the hole (west on
/// ties). Returns the resting cell.
pub fn jdt_slide_outward(grid: &mut Grid, hole: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = hole;
    debug_assert!(grid[r][c].is_none());
    loop {
        let west = if c > 0 { cell(grid, r, c - 1) } else { None };
        let north = if r > 0 { cell(grid, r - 1, c) } else { None };
        match (west, north) {
            (None, None) => return (r, c),
            (Some(w), None) => {
                grid[r][c] = Some(w);
                grid[r][c - 1] = None;
                c -= 1;
            }
            (None, Some(n)) => {
                grid[r][c] = Some(n);
                grid[r - 1][c] = None;
                r -= 1;
            }
            (Some(w), Some(n)) => {
                if w >= n {
                    grid[r][c] = Some(w);
                    grid[r][c - 1] = None;
                    c -= 1;
                } else {
                    grid[r][c] = Some(n);
                    grid[r - 1][c] = None;
                    r -= 1;
                }
            }
        }
    }
}

/// Promotion on the alphabet 1..=n: delete every 1, slide the holes to the
/// SE boundary, subtract one from the survivors, and write n into the
/// vacated cells.
pub fn promotion(t: &Tableau, n: Int) -> Tableau {
    let mut grid = to_grid(t);
    // Entry-1 cells of a row-strict tableau sit in the first column; slide
    // the deepest hole first so the remaining holes still bound a shape.
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (r, row) in grid.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            if *slot == Some(1) {
                *slot = None;
                holes.push((r, c));
            }
        }
    }
    holes.sort_by(|a, b| b.cmp(a));
    let mut vacated = Vec::new();
    for hole in holes {
        vacated.push(jdt_slide(&mut grid, hole));
    }
    for row in grid.iter_mut() {
        for slot in row.iter_mut() {
            if let Some(e) = slot.as_mut() {
                *e -= 1;
            }
        }
    }
    for (r, c) in vacated {
        grid[r][c] = Some(n);
    }
    from_grid(grid)
}

/// Dual promotion (inflation): delete every n, slide the holes to the NW
/// boundary, add one to the survivors, and write 1 into the vacated cells.
pub fn dual_promotion(t: &Tableau, n: Int) -> Tableau {
    let mut grid = to_grid(t);
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (r, row) in grid.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            if *slot == Some(n) {
                *slot = None;
                holes.push((r, c));
            }
        }
    }
    holes.sort();
    let mut vacated = Vec::new();
    for hole in holes {
        vacated.push(jdt_slide_outward(&mut grid, hole));
    }
    for row in grid.iter_mut() {
        for slot in row.iter_mut() {
            if let Some(e) = slot.as_mut() {
                *e += 1;
            }
        }
    }
    for (r, c) in vacated {
        grid[r][c] = Some(1);
    }
    from_grid(grid)
}

/// Schuetzenberger evacuation on the alphabet 1..=n. For each letter v in
/// increasing order, the v-cells are slid out of the diagram and the corners
/// where they exit receive the complementary letter n+1-v.
pub fn evacuation(t: &Tableau, n: Int) -> Tableau {
    let mut active = to_grid(t);
    let mut result: Grid = t
        .rows
        .iter()
        .map(|row| vec![None; row.len()])
        .collect();
    for v in 1..=n {
        let mut holes: Vec<(usize, usize)> = Vec::new();
        for (r, row) in active.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                if *slot == Some(v) {
                    *slot = None;
                    holes.push((r, c));
                }
            }
        }
        holes.sort_by(|a, b| b.cmp(a));
        for hole in holes {
            let (r, c) = jdt_slide(&mut active, hole);
            result[r][c] = Some(n + 1 - v);
            active[r].truncate(c); // the exit corner leaves the active shape
        }
    }
    from_grid(result)
}

/// Number of semistandard (row-weak, column-strict) tableaux of the given
/// shape and content: fillings where letter k appears content[k-1] times.
/// Counted by choosing the horizontal strip of each letter in turn.
pub fn kostka_count(shape: &Partition, content: &[Int]) -> u64 {
    if content.iter().any(|&c| c < 0) || content.iter().sum::<Int>() != shape.size() {
        return 0;
    }

    /// Enumerates the row lengths of the next subshape: it must contain
    /// `current`, fit inside `shape`, stay a partition (<= the row above's
    /// new length) and add a horizontal strip (<= the row above's old
    /// length) of exactly `left` boxes.
    fn grow(
        row: usize,
        left: Int,
        prev_len: Int,
        acc: &mut Vec<Int>,
        current: &Partition,
        shape: &Partition,
        rest: &[Int],
        total: &mut u64,
    ) {
        if row == shape.len() {
            if left == 0 {
                let next = Partition::new(acc.clone()).expect("rows stay decreasing");
                *total += count_from(&next, shape, rest);
            }
            return;
        }
        let lo = current.part(row);
        let strip_cap = if row == 0 { Int::MAX } else { current.part(row - 1) };
        let hi = shape.part(row).min(prev_len).min(strip_cap).min(lo + left);
        for len in lo..=hi {
            acc.push(len);
            grow(row + 1, left - (len - lo), len, acc, current, shape, rest, total);
            acc.pop();
        }
    }

    fn count_from(current: &Partition, shape: &Partition, remaining: &[Int]) -> u64 {
        let Some((&quota, rest)) = remaining.split_first() else {
            return u64::from(current == shape);
        };
        let mut total = 0;
        grow(0, quota, Int::MAX, &mut Vec::new(), current, shape, rest, &mut total);
        total
    }

    count_from(&Partition::empty(), shape, content)
}
