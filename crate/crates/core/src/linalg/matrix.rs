use num_rational::Ratio;
use num_traits::{One, Zero};

use super::bareiss::{forward_rank, gauss_jordan, Reduced};
use super::Scalar;
use crate::error::{Error, Result};

/// A dense matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<Ratio<T>>,
}

impl<T: Scalar> RationalMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Ratio<T>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_integers(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries.into_iter().map(Ratio::from_integer).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Ratio::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = Ratio::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Ratio<T> {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Ratio<T>] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Ratio<T>]) -> Result<Vec<Ratio<T>>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Ratio::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect())
    }

    /// Each row scaled by the lcm of its denominators, optionally with an
    /// extra column appended.
    fn integer_rows(&self, extra: Option<&[Ratio<T>]>) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| {
                let tail = extra.map(|e| &e[r]);
                let row: Vec<&Ratio<T>> = self.row(r).iter().chain(tail).collect();
                let lcm = row.iter().fold(T::one(), |acc, x| acc.lcm(x.denom()));
                row.into_iter()
                    .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
                    .collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free forward elimination.
    pub fn rank(&self) -> usize {
        forward_rank(self.integer_rows(None), self.cols)
    }

    /// Null-space basis in reduced form: the vector for free column `f` has
    /// a 1 at `f` and zeros at every other free column.
    pub fn nullspace(&self) -> NullSpaceBasis<T> {
        let reduced = gauss_jordan(self.integer_rows(None), self.cols);
        NullSpaceBasis::from_reduced(&reduced, self.cols)
    }

    /// Solves `self * x = rhs` exactly.
    pub fn solve(&self, rhs: &[Ratio<T>]) -> Result<LinearSolution<T>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let reduced = gauss_jordan(self.integer_rows(Some(rhs)), self.cols + 1);
        if reduced.pivots.last() == Some(&self.cols) {
            // A pivot in the right-hand column means 0 = non-zero.
            let mut coefficient_part = reduced;
            coefficient_part.pivots.pop();
            return Ok(LinearSolution {
                status: SolutionStatus::Inconsistent,
                particular: None,
                nullbasis: NullSpaceBasis::from_reduced(&coefficient_part, self.cols),
            });
        }
        let mut particular = vec![Ratio::zero(); self.cols];
        for (k, &pc) in reduced.pivots.iter().enumerate() {
            particular[pc] = Ratio::new(reduced.rows[k][self.cols].clone(), reduced.scale.clone());
        }
        let nullbasis = NullSpaceBasis::from_reduced(&reduced, self.cols);
        let status = if nullbasis.dim() == 0 {
            SolutionStatus::Unique
        } else {
            SolutionStatus::Underdetermined
        };
        Ok(LinearSolution {
            status,
            particular: Some(particular),
            nullbasis,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullSpaceBasis<T: Scalar> {
    cols: usize,
    free_columns: Vec<usize>,
    vectors: Vec<Vec<Ratio<T>>>,
}

impl<T: Scalar> NullSpaceBasis<T> {
    fn from_reduced(reduced: &Reduced<T>, cols: usize) -> Self {
        let mut is_pivot = vec![false; cols];
        for &pc in &reduced.pivots {
            is_pivot[pc] = true;
        }
        let free_columns: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let vectors = free_columns
            .iter()
            .map(|&f| {
                let mut v = vec![Ratio::zero(); cols];
                v[f] = Ratio::one();
                for (k, &pc) in reduced.pivots.iter().enumerate() {
                    let a = &reduced.rows[k][f];
                    if !a.is_zero() {
                        v[pc] = -Ratio::new(a.clone(), reduced.scale.clone());
                    }
                }
                v
            })
            .collect();
        NullSpaceBasis {
            cols,
            free_columns,
            vectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vectors(&self) -> &[Vec<Ratio<T>>] {
        &self.vectors
    }

    /// Columns that carry the unit entry of a basis vector.
    pub fn free_columns(&self) -> &[usize] {
        &self.free_columns
    }

    /// Coordinates that vanish in every basis vector, i.e. are fixed across
    /// all solutions of any consistent system with this coefficient matrix.
    pub fn determined_coordinates(&self) -> Vec<bool> {
        (0..self.cols)
            .map(|c| self.vectors.iter().all(|v| v[c].is_zero()))
            .collect()
    }

    /// Whether `v` lies in the span of the basis.
    pub fn spans(&self, v: &[Ratio<T>]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        // Coefficients are forced by the unit entries at the free columns.
        let mut rest: Vec<Ratio<T>> = v.to_vec();
        for (basis, &f) in self.vectors.iter().zip(&self.free_columns) {
            let coeff = rest[f].clone();
            if coeff.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(basis) {
                *x = x.clone() - coeff.clone() * b.clone();
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionStatus {
    Unique,
    Underdetermined,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution<T: Scalar> {
    pub status: SolutionStatus,
    /// Present unless the system is inconsistent; free variables are zero.
    pub particular: Option<Vec<Ratio<T>>>,
    pub nullbasis: NullSpaceBasis<T>,
}

impl<T: Scalar> LinearSolution<T> {
    pub fn is_unique(&self) -> bool {
        self.status == SolutionStatus::Unique
    }

    /// The solution, when it is unique.
    pub fn unique(&self) -> Option<&[Ratio<T>]> {
        match self.status {
            SolutionStatus::Unique => self.particular.as_deref(),
            _ => None,
        }
    }

    /// Whether `x` belongs to the solution set.
    pub fn contains(&self, x: &[Ratio<T>]) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        if x.len() != p.len() {
            return false;
        }
        let diff: Vec<Ratio<T>> = x
            .iter()
            .zip(p)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        self.nullbasis.spans(&diff)
    }
}
