//! Exact rational linear algebra over an arbitrary integral domain.

mod bareiss;
mod matrix;
mod scalar;

pub use matrix::{LinearSolution, NullSpaceBasis, RationalMatrix, SolutionStatus};
pub use scalar::Scalar;

use crate::error::Result;
use num_rational::Ratio;

pub fn rank<T: Scalar>(m: &RationalMatrix<T>) -> usize {
    m.rank()
}

pub fn nullspace<T: Scalar>(m: &RationalMatrix<T>) -> NullSpaceBasis<T> {
    m.nullspace()
}

pub fn solve<T: Scalar>(m: &RationalMatrix<T>, rhs: &[Ratio<T>]) -> Result<LinearSolution<T>> {
    m.solve(rhs)
}
