//! Which entries of a clue system are uniquely solvable.
//!
//! Uniqueness of an entry depends only on the coefficient matrix: an entry
//! is determined exactly when its coordinate vanishes in every null-space
//! vector. Nothing here looks at clue values.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{build_coefficient_matrix, Cell, LatticeDims};
use crate::slope::{cap_slope, slope_prefix, Slope};

/// Per-cell flag: `true` when the entry takes the same value in every
/// solution.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniquenessMask {
    dims: LatticeDims,
    unique: Vec<bool>,
}

impl UniquenessMask {
    /// Builds a mask from flags in column-index order.
    pub fn from_flags(dims: LatticeDims, unique: Vec<bool>) -> Result<Self> {
        if unique.len() != dims.cell_count() {
            return Err(Error::DimensionMismatch {
                expected: dims.cell_count(),
                found: unique.len(),
            });
        }
        Ok(UniquenessMask { dims, unique })
    }

    pub fn from_fn(dims: LatticeDims, mut f: impl FnMut(Cell) -> bool) -> Self {
        let unique = dims.cells().map(&mut f).collect();
        UniquenessMask { dims, unique }
    }

    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn is_unique(&self, cell: Cell) -> bool {
        self.dims.contains(cell) && self.unique[self.dims.column_index(cell)]
    }

    pub fn flags(&self) -> &[bool] {
        &self.unique
    }

    pub fn unique_count(&self) -> usize {
        self.unique.iter().filter(|&&u| u).count()
    }

    pub fn all_unique(&self) -> bool {
        self.unique.iter().all(|&u| u)
    }

    pub fn unique_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.dims.cells().filter(|&c| self.is_unique(c))
    }

    /// Row `j` (fixed second coordinate) fully determined.
    pub fn row_unique(&self, j: usize) -> bool {
        (1..=self.dims.n()).all(|i| self.is_unique(Cell::new(i, j)))
    }

    /// Column `i` (fixed first coordinate) fully determined.
    pub fn column_unique(&self, i: usize) -> bool {
        (1..=self.dims.m()).all(|j| self.is_unique(Cell::new(i, j)))
    }

    pub fn border_unique(&self) -> bool {
        border(self.dims).cells().all(|c| self.is_unique(c))
    }

    /// `self` marks every cell that `other` marks.
    pub fn covers(&self, other: &UniquenessMask) -> bool {
        self.dims == other.dims
            && self
                .unique
                .iter()
                .zip(&other.unique)
                .all(|(a, b)| *a || !*b)
    }
}

/// The border `({1, n} x I_m) ∪ (I_n x {1, m})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BorderMask {
    dims: LatticeDims,
}

pub fn border(dims: LatticeDims) -> BorderMask {
    BorderMask { dims }
}

impl BorderMask {
    pub fn contains(&self, cell: Cell) -> bool {
        self.dims.contains(cell)
            && (cell.i == 1 || cell.i == self.dims.n() || cell.j == 1 || cell.j == self.dims.m())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.dims.cells().filter(|&c| self.contains(c))
    }
}

pub fn entry_uniqueness_mask(dims: LatticeDims, slopes: &[Slope]) -> Result<UniquenessMask> {
    let matrix = build_coefficient_matrix(dims, slopes)?.to_rational::<BigInt>();
    let unique = matrix.nullspace().determined_coordinates();
    UniquenessMask::from_flags(dims, unique)
}

/// Every entry determined, i.e. the coefficient matrix has full column rank.
pub fn is_globally_unique(dims: LatticeDims, slopes: &[Slope]) -> Result<bool> {
    Ok(clue_rank(dims, slopes)?.rank == dims.cell_count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankSummary {
    pub rows: usize,
    pub rank: usize,
}

pub fn clue_rank(dims: LatticeDims, slopes: &[Slope]) -> Result<RankSummary> {
    let matrix = build_coefficient_matrix(dims, slopes)?;
    Ok(RankSummary {
        rows: matrix.rows(),
        rank: matrix.to_rational::<BigInt>().rank(),
    })
}

/// The five uniqueness invariants of a lattice: the first prefix endpoint
/// achieving whole-grid (`k`), first-or-last row (`r`), first-or-last
/// column (`c`) and border (`b`) uniqueness, and `s = min(r, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dims: LatticeDims,
    pub k: Slope,
    pub r: Slope,
    pub c: Slope,
    pub b: Slope,
    pub s: Slope,
}

impl InvariantReport {
    pub fn all_equal(&self) -> bool {
        [self.r, self.c, self.b, self.s]
            .iter()
            .all(|&x| x == self.k)
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} r={} c={} b={} s={}",
            self.k, self.r, self.c, self.b, self.s
        )
    }
}

/// Smallest `q >= 1` with `q^2 + 3q - 1 >= max(n, m)`; every square
/// lattice of that size is uniquely solvable through slope `q`.
#[allow(clippy::int_plus_one)]
pub fn default_max_q(dims: LatticeDims) -> u32 {
    let size = dims.n().max(dims.m()) as u64;
    (1u32..)
        .find(|&q| {
            let q = u64::from(q);
            q * q + 3 * q - 1 >= size
        })
        .expect("unbounded search")
}

fn prefixes_through(max_q: u32) -> Result<Vec<Vec<Slope>>> {
    let full = slope_prefix(cap_slope(max_q))?;
    Ok((1..=full.len()).map(|k| full[..k].to_vec()).collect())
}

/// Scans prefixes in order through slope `max_q`.
pub fn invariants(dims: LatticeDims, max_q: u32) -> Result<InvariantReport> {
    if max_q == 0 {
        return Err(Error::InvalidParameter("max_q must be at least 1".into()));
    }
    let mut k = None;
    let mut r = None;
    let mut c = None;
    let mut b = None;
    let (n, m) = (dims.n(), dims.m());
    for prefix in prefixes_through(max_q)? {
        let mask = entry_uniqueness_mask(dims, &prefix)?;
        let last = *prefix.last().unwrap();
        let record = |slot: &mut Option<Slope>, ok: bool| {
            if slot.is_none() && ok {
                *slot = Some(last);
            }
        };
        record(&mut r, mask.row_unique(1) || mask.row_unique(m));
        record(&mut c, mask.column_unique(1) || mask.column_unique(n));
        record(&mut b, mask.border_unique());
        record(&mut k, mask.all_unique());
        if k.is_some() && r.is_some() && c.is_some() && b.is_some() {
            break;
        }
    }
    let cap = || Error::CapExceeded {
        cap: cap_slope(max_q),
    };
    let (k, r, c, b) = (
        k.ok_or_else(cap)?,
        r.ok_or_else(cap)?,
        c.ok_or_else(cap)?,
        b.ok_or_else(cap)?,
    );
    Ok(InvariantReport {
        dims,
        k,
        r,
        c,
        b,
        s: r.min(c),
    })
}

/// One row of the minimal-slope table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub slope: Slope,
    pub prefix_len: usize,
    pub matrix_rows: usize,
    pub rank: usize,
}

/// First prefix (through slope `max_q`) giving full rank on `dims`.
pub fn minimal_unique_prefix(dims: LatticeDims, max_q: u32) -> Result<TableRow> {
    for prefix in prefixes_through(max_q)? {
        let summary = clue_rank(dims, &prefix)?;
        if summary.rank == dims.cell_count() {
            return Ok(TableRow {
                n: dims.n(),
                slope: *prefix.last().unwrap(),
                prefix_len: prefix.len(),
                matrix_rows: summary.rows,
                rank: summary.rank,
            });
        }
    }
    Err(Error::CapExceeded {
        cap: cap_slope(max_q),
    })
}

/// Minimal slope for every square lattice `1..=n_max`.
///
/// `max_q` defaults per size to [`default_max_q`]. Sizes are searched on a
/// pool of `jobs` workers; output order is always by `n`.
pub fn search_table(n_max: usize, max_q: Option<u32>, jobs: usize) -> Result<Vec<TableRow>> {
    if n_max == 0 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let row = |n: usize| -> Result<TableRow> {
        let dims = LatticeDims::square(n)?;
        minimal_unique_prefix(dims, max_q.unwrap_or_else(|| default_max_q(dims)))
    };
    if jobs <= 1 {
        return (1..=n_max).map(row).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    // Largest sizes first keeps the pool busy; collect restores order.
    pool.install(|| {
        let mut rows: Vec<(usize, Result<TableRow>)> = (1..=n_max)
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|n| (n, row(n)))
            .collect();
        rows.sort_by_key(|(n, _)| *n);
        rows.into_iter().map(|(_, r)| r).collect()
    })
}
