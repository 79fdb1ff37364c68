//! Lattice geometry: cells, clue lines, and the 0/1 clue coefficient matrix.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{RationalMatrix, Scalar};
use crate::slope::Slope;

/// A lattice point `(i, j)`, 1-based, with `i` the first coordinate and `j`
/// increasing upward.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub const fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// The lattice `{1..n} x {1..m}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LatticeDims {
    n: usize,
    m: usize,
}

impl LatticeDims {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidDims { n, m });
        }
        Ok(LatticeDims { n, m })
    }

    pub fn square(n: usize) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_square(&self) -> bool {
        self.n == self.m
    }

    pub fn cell_count(&self) -> usize {
        self.n * self.m
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.n).contains(&cell.i) && (1..=self.m).contains(&cell.j)
    }

    pub fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfBounds {
                i: cell.i,
                j: cell.j,
                n: self.n,
                m: self.m,
            })
        }
    }

    /// Column of `cell` in coefficient matrices: `(j - 1) * n + (i - 1)`.
    pub fn column_index(&self, cell: Cell) -> usize {
        (cell.j - 1) * self.n + (cell.i - 1)
    }

    pub fn cell_at(&self, column: usize) -> Cell {
        Cell::new(column % self.n + 1, column / self.n + 1)
    }

    /// All cells in column-index order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.cell_count()).map(|c| self.cell_at(c))
    }
}

impl fmt::Display for LatticeDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

/// Offset identifying the line of `slope` through `cell`: `p*i - q*j` for
/// finite `p/q`, the first coordinate `i` for the vertical slope.
pub fn line_offset(slope: Slope, cell: Cell) -> i64 {
    match slope.ratio() {
        Some((p, q)) => p * cell.i as i64 - q * cell.j as i64,
        None => cell.i as i64,
    }
}

/// A clue line together with the lattice cells it meets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Line {
    slope: Slope,
    offset: i64,
    cells: Vec<Cell>,
}

impl Line {
    /// Builds a line from its cells. The cells must be non-empty and all
    /// lie on the line `(slope, offset)`.
    pub(crate) fn from_cells(slope: Slope, offset: i64, mut cells: Vec<Cell>) -> Self {
        debug_assert!(!cells.is_empty());
        debug_assert!(cells.iter().all(|&c| line_offset(slope, c) == offset));
        cells.sort_unstable();
        Line {
            slope,
            offset,
            cells,
        }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Cells sorted by first coordinate, then second.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Every line of `slope` meeting the lattice, ordered by offset.
pub fn enumerate_lines(dims: LatticeDims, slope: Slope) -> Vec<Line> {
    let mut by_offset: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
    for cell in dims.cells() {
        by_offset
            .entry(line_offset(slope, cell))
            .or_default()
            .push(cell);
    }
    by_offset
        .into_iter()
        .map(|(offset, cells)| Line::from_cells(slope, offset, cells))
        .collect()
}

/// Sorts slopes into enumeration order, rejecting empty or repeated sets.
pub fn normalize_slopes(slopes: &[Slope]) -> Result<Vec<Slope>> {
    if slopes.is_empty() {
        return Err(Error::EmptySlopeSet);
    }
    let mut sorted = slopes.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateSlope(w[0]));
    }
    Ok(sorted)
}

/// The incidence matrix of a full clue set: one row per line, one column
/// per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClueMatrix {
    dims: LatticeDims,
    slopes: Vec<Slope>,
    lines: Vec<Line>,
    coefficients: Vec<u8>,
}

impl ClueMatrix {
    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    /// Slopes in enumeration order.
    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn rows(&self) -> usize {
        self.lines.len()
    }

    pub fn cols(&self) -> usize {
        self.dims.cell_count()
    }

    pub fn row(&self, k: usize) -> &[u8] {
        let c = self.cols();
        &self.coefficients[k * c..(k + 1) * c]
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.coefficients[row * self.cols() + col]
    }

    pub fn to_rational<T: Scalar>(&self) -> RationalMatrix<T> {
        let entries = self
            .coefficients
            .iter()
            .map(|&a| if a == 1 { T::one() } else { T::zero() })
            .collect::<Vec<T>>();
        RationalMatrix::from_integers(self.rows(), self.cols(), entries)
            .expect("entry count matches shape")
    }
}

/// Assembles the clue coefficient matrix; rows follow slope order, then
/// offset.
pub fn build_coefficient_matrix(dims: LatticeDims, slopes: &[Slope]) -> Result<ClueMatrix> {
    let slopes = normalize_slopes(slopes)?;
    let lines: Vec<Line> = slopes
        .iter()
        .flat_map(|&s| enumerate_lines(dims, s))
        .collect();
    let cols = dims.cell_count();
    let mut coefficients = vec![0u8; lines.len() * cols];
    for (k, line) in lines.iter().enumerate() {
        for &cell in line.cells() {
            coefficients[k * cols + dims.column_index(cell)] = 1;
        }
    }
    Ok(ClueMatrix {
        dims,
        slopes,
        lines,
        coefficients,
    })
}
