//! Concrete clue systems: instances, grids, text formats and generation.

pub mod fixtures;
mod format;
mod random;
mod render;

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{
    build_coefficient_matrix, enumerate_lines, normalize_slopes, Cell, ClueMatrix, LatticeDims,
};
use crate::linalg::{LinearSolution, Scalar};
use crate::slope::Slope;

pub use format::{parse_grid, parse_puzzle, serialize_grid, serialize_puzzle};
pub use random::random_grid;
pub use render::{render_grid, render_mask};

/// A value for every lattice cell, stored in column-index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridValues<T: Scalar> {
    dims: LatticeDims,
    values: Vec<Ratio<T>>,
}

impl<T: Scalar> GridValues<T> {
    pub fn new(dims: LatticeDims, values: Vec<Ratio<T>>) -> Result<Self> {
        if values.len() != dims.cell_count() {
            return Err(Error::DimensionMismatch {
                expected: dims.cell_count(),
                found: values.len(),
            });
        }
        Ok(GridValues { dims, values })
    }

    pub fn from_fn(dims: LatticeDims, mut f: impl FnMut(Cell) -> Ratio<T>) -> Self {
        let values = dims.cells().map(&mut f).collect();
        GridValues { dims, values }
    }

    /// Rows listed top row first, as they are drawn.
    pub fn from_rows_top_down(dims: LatticeDims, rows: &[Vec<Ratio<T>>]) -> Result<Self> {
        if rows.len() != dims.m() {
            return Err(Error::DimensionMismatch {
                expected: dims.m(),
                found: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dims.n()) {
            return Err(Error::DimensionMismatch {
                expected: dims.n(),
                found: bad.len(),
            });
        }
        Ok(Self::from_fn(dims, |c| {
            rows[dims.m() - c.j][c.i - 1].clone()
        }))
    }

    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn get(&self, cell: Cell) -> &Ratio<T> {
        &self.values[self.dims.column_index(cell)]
    }

    /// Values in coefficient-column order.
    pub fn values(&self) -> &[Ratio<T>] {
        &self.values
    }

    /// Rows top row first.
    pub fn rows_top_down(&self) -> Vec<Vec<Ratio<T>>> {
        (1..=self.dims.m())
            .rev()
            .map(|j| {
                (1..=self.dims.n())
                    .map(|i| self.get(Cell::new(i, j)).clone())
                    .collect()
            })
            .collect()
    }
}

/// A full clue system: one value for every line of every declared slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleInstance<T: Scalar> {
    dims: LatticeDims,
    slopes: Vec<Slope>,
    clues: BTreeMap<(Slope, i64), Ratio<T>>,
}

impl<T: Scalar> PuzzleInstance<T> {
    /// Checks that the clue keys are exactly the lines of the slopes.
    pub fn new(
        dims: LatticeDims,
        slopes: &[Slope],
        clues: BTreeMap<(Slope, i64), Ratio<T>>,
    ) -> Result<Self> {
        let slopes = normalize_slopes(slopes)?;
        let mut expected = 0;
        for &s in &slopes {
            for line in enumerate_lines(dims, s) {
                expected += 1;
                if !clues.contains_key(&(s, line.offset())) {
                    return Err(Error::MissingClue {
                        slope: s,
                        offset: line.offset(),
                    });
                }
            }
        }
        if clues.len() != expected {
            let (&(slope, offset), _) = clues
                .iter()
                .find(|((s, o), _)| {
                    !slopes.contains(s)
                        || !enumerate_lines(dims, *s).iter().any(|l| l.offset() == *o)
                })
                .expect("an extra key exists");
            return Err(Error::UnrealizableOffset { slope, offset });
        }
        Ok(PuzzleInstance {
            dims,
            slopes,
            clues,
        })
    }

    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    /// Clues keyed by `(slope, offset)`, iterated in matrix row order.
    pub fn clues(&self) -> &BTreeMap<(Slope, i64), Ratio<T>> {
        &self.clues
    }

    pub fn clue(&self, slope: Slope, offset: i64) -> Option<&Ratio<T>> {
        self.clues.get(&(slope, offset))
    }

    pub fn coefficient_matrix(&self) -> ClueMatrix {
        build_coefficient_matrix(self.dims, &self.slopes).expect("slopes validated on construction")
    }

    /// Clue values in coefficient-matrix row order.
    pub fn rhs(&self) -> Vec<Ratio<T>> {
        self.clues.values().cloned().collect()
    }

    pub fn solve(&self) -> Result<LinearSolution<T>> {
        self.coefficient_matrix()
            .to_rational::<T>()
            .solve(&self.rhs())
    }
}

/// Clue values obtained by summing the grid along every line.
pub fn clues_from_grid<T: Scalar>(
    grid: &GridValues<T>,
    slopes: &[Slope],
) -> Result<PuzzleInstance<T>> {
    let dims = grid.dims();
    let slopes = normalize_slopes(slopes)?;
    let clues = slopes
        .iter()
        .flat_map(|&s| enumerate_lines(dims, s))
        .map(|line| {
            let sum = line
                .cells()
                .iter()
                .fold(Ratio::zero(), |acc: Ratio<T>, &c| acc + grid.get(c).clone());
            ((line.slope(), line.offset()), sum)
        })
        .collect();
    Ok(PuzzleInstance {
        dims,
        slopes,
        clues,
    })
}

/// Solution vector of a clue system laid out as a grid.
pub fn grid_from_solution<T: Scalar>(dims: LatticeDims, x: &[Ratio<T>]) -> Result<GridValues<T>> {
    GridValues::new(dims, x.to_vec())
}

/// Per-slope clue totals. Lines of one slope partition the lattice, so a
/// solvable instance has the same total for every slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics<T: Scalar> {
    pub totals: Vec<(Slope, Ratio<T>)>,
    pub conflicts: Vec<(Slope, Slope)>,
}

impl<T: Scalar> Diagnostics<T> {
    pub fn is_consistent(&self) -> bool {
        self.conflicts.is_empty()
    }
}

pub fn validate<T: Scalar>(p: &PuzzleInstance<T>) -> Diagnostics<T> {
    let totals: Vec<(Slope, Ratio<T>)> = p
        .slopes()
        .iter()
        .map(|&s| {
            let total = p
                .clues()
                .range((s, i64::MIN)..=(s, i64::MAX))
                .fold(Ratio::zero(), |acc: Ratio<T>, (_, v)| acc + v.clone());
            (s, total)
        })
        .collect();
    let mut conflicts = Vec::new();
    for (a, (sa, ta)) in totals.iter().enumerate() {
        for (sb, tb) in &totals[a + 1..] {
            if ta != tb {
                conflicts.push((*sa, *sb));
            }
        }
    }
    Diagnostics { totals, conflicts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn basic_grid() -> GridValues<BigInt> {
        let rows: Vec<Vec<Q>> = [[1, 3, 4], [2, 7, 5], [4, 9, 9]]
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        GridValues::from_rows_top_down(LatticeDims::square(3).unwrap(), &rows).unwrap()
    }

    #[test]
    fn basic_clues_from_grid() {
        let slopes: Vec<Slope> = ["0", "inf", "-1", "1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let p = clues_from_grid(&basic_grid(), &slopes).unwrap();
        let values: Vec<i64> = p
            .clues()
            .values()
            .map(|v| v.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(
            values,
            [8, 14, 22, 7, 19, 18, 4, 8, 17, 11, 4, 1, 5, 15, 14, 9]
        );
        assert!(validate(&p).is_consistent());
    }

    #[test]
    fn zero_and_constant_grids() {
        let d = LatticeDims::new(4, 3).unwrap();
        let zero = GridValues::from_fn(d, |_| q(0));
        let p = clues_from_grid(&zero, &[Slope::ZERO, Slope::integer(-2)]).unwrap();
        assert!(p.clues().values().all(|v| v.is_zero()));
        let ones = GridValues::from_fn(LatticeDims::square(5).unwrap(), |_| q(1));
        let p = clues_from_grid(&ones, &[Slope::ZERO]).unwrap();
        assert!(p.clues().values().all(|v| *v == q(5)));
    }

    #[test]
    fn tampered_clue_is_flagged() {
        let slopes = [Slope::ZERO, Slope::VERTICAL, Slope::integer(1)];
        let p = clues_from_grid(&basic_grid(), &slopes).unwrap();
        let mut clues = p.clues().clone();
        *clues.get_mut(&(Slope::VERTICAL, 2)).unwrap() += q(1);
        let tampered = PuzzleInstance::new(p.dims(), &slopes, clues).unwrap();
        let diag = validate(&tampered);
        assert_eq!(
            diag.conflicts,
            [
                (Slope::ZERO, Slope::VERTICAL),
                (Slope::VERTICAL, Slope::integer(1))
            ]
        );
    }

    #[test]
    fn instance_requires_exact_key_set() {
        let d = LatticeDims::square(2).unwrap();
        let mut clues: BTreeMap<(Slope, i64), Q> = [((Slope::ZERO, -1), q(1))].into();
        assert_eq!(
            PuzzleInstance::new(d, &[Slope::ZERO], clues.clone()),
            Err(Error::MissingClue {
                slope: Slope::ZERO,
                offset: -2
            })
        );
        clues.insert((Slope::ZERO, -2), q(1));
        clues.insert((Slope::ZERO, -7), q(1));
        assert_eq!(
            PuzzleInstance::new(d, &[Slope::ZERO], clues),
            Err(Error::UnrealizableOffset {
                slope: Slope::ZERO,
                offset: -7
            })
        );
    }

    #[test]
    fn solve_recovers_grid() {
        let slopes: Vec<Slope> = ["0", "inf", "-1", "1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let p = clues_from_grid(&basic_grid(), &slopes).unwrap();
        let sol = p.solve().unwrap();
        let grid = grid_from_solution(p.dims(), sol.unique().unwrap()).unwrap();
        assert_eq!(grid, basic_grid());
    }
}
