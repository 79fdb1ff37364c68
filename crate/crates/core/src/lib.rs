//! Exact uniqueness analysis for lattice line-sum puzzles.
//!
//! A puzzle hides one value per cell of an `n x m` lattice and reveals the
//! sum along every line of each chosen slope. This crate builds the clue
//! systems, decides which cells (if any) they determine using exact
//! rational elimination, derives the symmetries of a clue system, and
//! produces combinatorial certificates by peeling lines that have a single
//! unknown left.
//!
//! Linear algebra is generic over an exact integral domain ([`Scalar`]);
//! the aliases below fix it to [`BigInt`].

pub mod certifier;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod puzzle;
pub mod slope;
pub mod symmetry;
pub mod uniqueness;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use error::{Error, Result};
pub use lattice::{build_coefficient_matrix, enumerate_lines, Cell, ClueMatrix, LatticeDims, Line};
pub use linalg::{LinearSolution, NullSpaceBasis, RationalMatrix, Scalar, SolutionStatus};
pub use slope::{slope_prefix, Slope};
pub use symmetry::GridTransform;
pub use uniqueness::UniquenessMask;

pub type Rational = Ratio<BigInt>;
pub type BigRationalMatrix = RationalMatrix<BigInt>;
pub type BigNullSpaceBasis = NullSpaceBasis<BigInt>;
pub type BigLinearSolution = LinearSolution<BigInt>;
pub type Grid = puzzle::GridValues<BigInt>;
pub type Puzzle = puzzle::PuzzleInstance<BigInt>;
