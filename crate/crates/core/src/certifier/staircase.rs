use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::{Cell, LatticeDims};

/// A weight sequence `(w_1, ..., w_m)` whose suffix sums describe a
/// staircase-shaped region in the lower-left corner of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Staircase {
    weights: Vec<u64>,
}

impl Staircase {
    pub fn new(weights: Vec<u64>) -> Self {
        Staircase { weights }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `w_i`, 1-based.
    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i - 1]
    }

    /// `w_i + ... + w_j`; the empty sum (`i > j`) is 0.
    pub fn partial_sum(&self, i: usize, j: usize) -> Result<u64> {
        if i > j {
            return Ok(0);
        }
        if i == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                len: self.len(),
            });
        }
        Ok(self.weights[i - 1..j].iter().sum())
    }

    /// `ω(i, m)`, the length of row `i` of the region (0 past the end).
    pub fn suffix(&self, i: usize) -> u64 {
        self.weights.iter().skip(i.saturating_sub(1)).sum()
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// The cell peeled by the peeling step at row `j`: `(ω(j, m) + 1, j)`.
    pub fn step_target(&self, j: usize) -> Cell {
        Cell::new(self.suffix(j) as usize + 1, j)
    }
}

pub fn partial_sum(w: &Staircase, i: usize, j: usize) -> Result<u64> {
    w.partial_sum(i, j)
}

/// The staircase peeling condition for slope `-1/q` at row `j`:
///
/// ```text
/// t*q     >= ω(j, j+t-1) + 1   for 1 <= t <= m-j+1
/// t*q + 1 <= ω(j-t, j-1)       for 1 <= t <= j-1
/// ```
///
/// When it holds and the region of `w` is determined, so is
/// [`Staircase::step_target`]`(j)`.
pub fn peel_step_applies(w: &Staircase, j: usize, q: u64) -> Result<bool> {
    let m = w.len();
    if j == 0 || j > m + 1 {
        return Err(Error::InvalidParameter(format!(
            "row {j} outside 1..={}",
            m + 1
        )));
    }
    if q == 0 {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    for t in 1..=(m + 1 - j) {
        if (t as u64) * q < w.partial_sum(j, j + t - 1)? + 1 {
            return Ok(false);
        }
    }
    for t in 1..j {
        if (t as u64) * q + 1 > w.partial_sum(j - t, j - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shortcut form of [`peel_step_applies`] for staircases that are
/// non-increasing on `w_1..w_{m0}` and 0/1 afterwards:
/// `w_j + 1 <= q <= w_{j-1} - 1`, with `w_0 = +inf` and a missing `w_{m+1}`
/// read as 0.
#[allow(clippy::int_plus_one)]
pub fn peel_step_shortcut(w: &Staircase, m0: usize, j: usize, q: u64) -> Result<bool> {
    let m = w.len();
    if m0 == 0 || m0 > m {
        return Err(Error::InvalidParameter(format!(
            "m0 = {m0} outside 1..={m}"
        )));
    }
    let head = &w.weights[..m0];
    if head.windows(2).any(|p| p[1] > p[0]) {
        return Err(Error::InvalidParameter(
            "leading weights are not non-increasing".into(),
        ));
    }
    if w.weights[m0..].iter().any(|&x| x > 1) {
        return Err(Error::InvalidParameter("trailing weights exceed 1".into()));
    }
    if j == 0 || j > m0 + 1 {
        return Err(Error::InvalidParameter(format!(
            "row {j} outside 1..={}",
            m0 + 1
        )));
    }
    let lower = if j <= m { w.weight(j) } else { 0 };
    let upper_ok = j == 1 || q + 1 <= w.weight(j - 1);
    Ok(lower + 1 <= q && upper_ok)
}

/// `m(q) = q + (q-1)(q+2)/2`, the length of [`omega_q`].
pub fn staircase_length(q: u64) -> u64 {
    q + (q - 1) * (q + 2) / 2
}

/// Positions `base + (j-1)(j+2)/2` for `2 <= j <= top`.
fn unit_positions(base: u64, top: u64) -> impl Iterator<Item = u64> {
    (2..=top).map(move |j| base + (j - 1) * (j + 2) / 2)
}

fn omega_unchecked(q: u64) -> Staircase {
    let len = staircase_length(q);
    let ones: Vec<u64> = unit_positions(q, q).collect();
    let weights = (1..=len)
        .map(|i| {
            if i <= q {
                q + 1 - i
            } else if ones.contains(&i) {
                1
            } else {
                0
            }
        })
        .collect();
    Staircase::new(weights)
}

/// The canonical staircase `ω_q`: `w_i = q+1-i` for `i <= q`, then 1 at
/// positions `q + (j-1)(j+2)/2` (`2 <= j <= q`) and 0 elsewhere.
pub fn omega_q(q: u64) -> Result<Staircase> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "omega_q needs q >= 2, got {q}"
        )));
    }
    Ok(omega_unchecked(q))
}

/// Intermediate staircases of the induction from `ω_{q-1}` to `ω_q`.
///
/// * `1 <= t <= q`, `1 <= s <= q+1-t`: the peeling sequence built on
///   `ω_{q-1}`, each member one cell larger than its predecessor in
///   lexicographic `(t, s)` order;
/// * `(q+1, 1)`: the region after a diagonal reflection of `(q, 1)`;
/// * `(q+2, s)`, `1 <= s <= q`: the second peeling run, ending one
///   reflection short of `ω_q`.
pub fn omega_family(q: u64, t: u64, s: u64) -> Result<Staircase> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "family needs q >= 2, got {q}"
        )));
    }
    let bad = || {
        Error::InvalidParameter(format!(
            "(t, s) = ({t}, {s}) outside the family for q = {q}"
        ))
    };
    let weights: Vec<u64> = if (1..=q).contains(&t) {
        if !(1..=q + 1 - t).contains(&s) {
            return Err(bad());
        }
        // ω_{q-1} is shorter than q when q = 2; keep the first q entries.
        let len = staircase_length(q - 1).max(q);
        let ones: Vec<u64> = unit_positions(q - 1, q - 1).collect();
        (1..=len)
            .map(|i| {
                if i <= q + 1 - t && i != s {
                    q - i
                } else if (q + 1 - t < i && i < q + 1) || i == s {
                    q + 1 - i
                } else if ones.contains(&i) {
                    1
                } else {
                    0
                }
            })
            .collect()
    } else if t == q + 1 || t == q + 2 {
        if (t == q + 1 && s != 1) || (t == q + 2 && !(1..=q).contains(&s)) {
            return Err(bad());
        }
        let len = staircase_length(q) - 1;
        let ones: Vec<u64> = unit_positions(q - 1, q).collect();
        let head = if t == q + 1 { q - 1 } else { q };
        (1..=len)
            .map(|i| {
                if t == q + 2 && i + s == q {
                    q - i
                } else if i <= head {
                    q + 1 - i
                } else if ones.contains(&i) {
                    1
                } else {
                    0
                }
            })
            .collect()
    } else {
        return Err(bad());
    };
    Ok(Staircase::new(weights))
}

/// The cells `{(a, b) : 1 <= b <= m, 1 <= a <= ω(b, m)}` of a staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseRegion {
    dims: LatticeDims,
    cells: BTreeSet<Cell>,
}

impl StaircaseRegion {
    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Row lengths, bottom row first.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.dims.m())
            .map(|j| self.cells.iter().filter(|c| c.j == j).count())
            .take_while(|&l| l > 0)
            .collect()
    }
}

pub fn region_of(w: &Staircase, dims: LatticeDims) -> Result<StaircaseRegion> {
    if w.len() > dims.m() || w.total() > dims.n() as u64 {
        return Err(Error::StaircaseExceedsLattice {
            total: w.total(),
            len: w.len(),
            n: dims.n(),
            m: dims.m(),
        });
    }
    let cells = (1..=w.len())
        .flat_map(|b| (1..=w.suffix(b) as usize).map(move |a| Cell::new(a, b)))
        .collect();
    Ok(StaircaseRegion { dims, cells })
}
