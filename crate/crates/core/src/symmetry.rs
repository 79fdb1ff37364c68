//! Lattice symmetries that transport uniqueness between cells.
//!
//! A half turn preserves every clue system. The two reflections preserve
//! systems whose slope set is closed under negation, and the two diagonal
//! reflections (square lattices only) those closed under reciprocals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{line_offset, Cell, LatticeDims, Line};
use crate::slope::Slope;
use crate::uniqueness::UniquenessMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridTransform {
    /// `(i, j) -> (n+1-i, m+1-j)`
    Rot180,
    /// `(i, j) -> (n+1-i, j)`
    FlipFirst,
    /// `(i, j) -> (i, m+1-j)`
    FlipSecond,
    /// `(i, j) -> (j, i)`, square lattices only.
    Transpose,
    /// `(i, j) -> (n+1-j, n+1-i)`, square lattices only.
    AntiTranspose,
}

impl GridTransform {
    pub const ALL: [GridTransform; 5] = [
        GridTransform::Rot180,
        GridTransform::FlipFirst,
        GridTransform::FlipSecond,
        GridTransform::Transpose,
        GridTransform::AntiTranspose,
    ];

    pub fn requires_square(&self) -> bool {
        matches!(
            self,
            GridTransform::Transpose | GridTransform::AntiTranspose
        )
    }

    fn check(&self, dims: LatticeDims) -> Result<()> {
        if self.requires_square() && !dims.is_square() {
            return Err(Error::NonSquare {
                n: dims.n(),
                m: dims.m(),
            });
        }
        Ok(())
    }

    /// Image of a slope under the transform.
    pub fn map_slope(&self, slope: Slope) -> Slope {
        match self {
            GridTransform::Rot180 => slope,
            GridTransform::FlipFirst | GridTransform::FlipSecond => slope.neg(),
            GridTransform::Transpose | GridTransform::AntiTranspose => slope.recip(),
        }
    }

    /// Whether the transform maps every clue system over `slopes` (on a
    /// lattice of shape `dims`) onto one over the same slopes.
    pub fn preserves(&self, dims: LatticeDims, slopes: &[Slope]) -> bool {
        if self.requires_square() && !dims.is_square() {
            return false;
        }
        slopes.iter().all(|s| slopes.contains(&self.map_slope(*s)))
    }

    /// Closed-form image of a line offset.
    fn map_offset(&self, dims: LatticeDims, slope: Slope, offset: i64) -> i64 {
        let n1 = dims.n() as i64 + 1;
        let m1 = dims.m() as i64 + 1;
        match (self, slope.ratio()) {
            (GridTransform::Rot180, Some((p, q))) => p * n1 - q * m1 - offset,
            (GridTransform::Rot180, None) => n1 - offset,
            (GridTransform::FlipFirst, Some((p, _))) => offset - p * n1,
            (GridTransform::FlipFirst, None) => n1 - offset,
            (GridTransform::FlipSecond, Some((_, q))) => -offset - q * m1,
            (GridTransform::FlipSecond, None) => offset,
            // slope 0 (offset -j) becomes the vertical line i = j
            (GridTransform::Transpose, Some((0, _))) => -offset,
            (GridTransform::Transpose, Some((p, _))) if p > 0 => -offset,
            (GridTransform::Transpose, Some(_)) => offset,
            (GridTransform::Transpose, None) => -offset,
            (GridTransform::AntiTranspose, _) => {
                let t = GridTransform::Transpose.map_offset(dims, slope, offset);
                GridTransform::Rot180.map_offset(dims, slope.recip(), t)
            }
        }
    }
}

impl fmt::Display for GridTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridTransform::Rot180 => "rot180",
            GridTransform::FlipFirst => "flip_first",
            GridTransform::FlipSecond => "flip_second",
            GridTransform::Transpose => "transpose",
            GridTransform::AntiTranspose => "anti_transpose",
        })
    }
}

impl FromStr for GridTransform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridTransform::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown transform {s:?}")))
    }
}

pub fn transform_cell(t: GridTransform, dims: LatticeDims, cell: Cell) -> Result<Cell> {
    t.check(dims)?;
    dims.check(cell)?;
    let (n, m) = (dims.n(), dims.m());
    let Cell { i, j } = cell;
    Ok(match t {
        GridTransform::Rot180 => Cell::new(n + 1 - i, m + 1 - j),
        GridTransform::FlipFirst => Cell::new(n + 1 - i, j),
        GridTransform::FlipSecond => Cell::new(i, m + 1 - j),
        GridTransform::Transpose => Cell::new(j, i),
        GridTransform::AntiTranspose => Cell::new(n + 1 - j, n + 1 - i),
    })
}

/// Image of a line; its cells are the images of the input's cells.
pub fn transform_line(t: GridTransform, dims: LatticeDims, line: &Line) -> Result<Line> {
    t.check(dims)?;
    let slope = t.map_slope(line.slope());
    let offset = t.map_offset(dims, line.slope(), line.offset());
    let cells = line
        .cells()
        .iter()
        .map(|&c| transform_cell(t, dims, c))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(cells.iter().all(|&c| line_offset(slope, c) == offset));
    Ok(Line::from_cells(slope, offset, cells))
}

pub fn transform_mask(t: GridTransform, mask: &UniquenessMask) -> Result<UniquenessMask> {
    let dims = mask.dims();
    t.check(dims)?;
    let mut flags = vec![false; dims.cell_count()];
    for cell in mask.unique_cells() {
        flags[dims.column_index(transform_cell(t, dims, cell)?)] = true;
    }
    UniquenessMask::from_flags(dims, flags)
}
