//! Growth diagrams on the affine staircase.
//!
//! This crate implements the combinatorics of minuscule paths for GL_m and
//! the structures they index:
//!
//! - [`weights`]: dominant weights, partitions, duality, and the Pieri rule
//!   for minuscule steps;
//! - [`local_rules`]: the sorting local rule `rho = sort(lambda + mu - nu)`
//!   and the classical Fomin and jeu-de-taquin local rules it degenerates to;
//! - [`staircase`]: the n-periodic staircase growth diagram, its marking with
//!   X's, and the affine permutations the marks cut out;
//! - [`hive`]: triangular arrays with rhombus inequalities (3-hives), their
//!   n-vertex generalization, and excavation by the octahedron recurrence;
//! - [`bijections`]: Greene invariants, Robinson-Schensted and its
//!   fixed-point-free variants, oscillating tableaux, and the natural-number
//!   (Knuth) extension;
//! - [`tableaux`]: jeu de taquin, promotion, evacuation, and Kostka numbers.
//!
//! With the default `parallel` feature the bulk enumeration and sweep entry
//! points fan out over rayon; building with `--no-default-features` swaps in
//! sequential loops with identical results.

pub mod bijections;
pub mod hive;
pub mod local_rules;
pub mod staircase;
pub mod tableaux;
pub mod weights;

pub use bijections::{FpfInvolution, NatFpfMatrix, OscillatingTableau, SemistandardOscTableau};
pub use staircase::{AffineGrowthDiagram, AffinePermutation, DiagramType, MinusculePath};
pub use tableaux::Tableau;
pub use weights::{GlWeight, MinusculeLabel, Partition};
