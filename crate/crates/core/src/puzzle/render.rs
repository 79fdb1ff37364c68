use crate::lattice::Cell;
use crate::linalg::Scalar;
use crate::uniqueness::UniquenessMask;

use super::GridValues;

/// Top row first, values right-aligned to a common width.
pub fn render_grid<T: Scalar>(g: &GridValues<T>) -> String {
    let rows: Vec<Vec<String>> = g
        .rows_top_down()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `#` for a uniquely determined cell, `.` otherwise, top row first.
pub fn render_mask(mask: &UniquenessMask) -> String {
    let d = mask.dims();
    let mut out = String::with_capacity((d.n() + 1) * d.m());
    for j in (1..=d.m()).rev() {
        for i in 1..=d.n() {
            out.push(if mask.is_unique(Cell::new(i, j)) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}
