//! Fraction-free (Bareiss) elimination over an integral domain.
//!
//! After `k` pivots every entry is a `(k+1)`-minor of the input, so each
//! division by the previous pivot is exact and no fractions appear.
//! Pivot rule: columns left to right, first remaining row with a non-zero
//! entry.

use super::Scalar;

/// Result of fraction-free Gauss-Jordan elimination.
///
/// The first `pivots.len()` rows are `scale` times the reduced row echelon
/// form: row `k` has `scale` at column `pivots[k]` and zeros in every other
/// pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Reduced<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub scale: T,
}

fn find_pivot<T: Scalar>(rows: &[Vec<T>], from: usize, col: usize) -> Option<usize> {
    (from..rows.len()).find(|&i| !rows[i][col].is_zero())
}

/// Rank by forward elimination only.
pub(crate) fn forward_rank<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> usize {
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = find_pivot(&rows, rank, c) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[c];
        let unit_step = *pivot == prev;
        for row in tail.iter_mut() {
            let a = std::mem::replace(&mut row[c], T::zero());
            if a.is_zero() && unit_step {
                continue;
            }
            for j in c + 1..cols {
                row[j] = if a.is_zero() {
                    T::bareiss_scale(pivot, &row[j], &prev)
                } else {
                    T::bareiss_step(pivot, &row[j], &a, &pivot_row[j], &prev)
                };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Full fraction-free Gauss-Jordan elimination.
pub(crate) fn gauss_jordan<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> Reduced<T> {
    let mut prev = T::one();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let r = pivots.len();
        if r == rows.len() {
            break;
        }
        let Some(p) = find_pivot(&rows, r, c) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = std::mem::take(&mut rows[r]);
        let pivot = &pivot_row[c];
        let unit_step = *pivot == prev;
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let a = std::mem::replace(&mut row[c], T::zero());
            if a.is_zero() && unit_step {
                continue;
            }
            for j in 0..cols {
                if j == c {
                    continue;
                }
                row[j] = if a.is_zero() {
                    T::bareiss_scale(pivot, &row[j], &prev)
                } else {
                    T::bareiss_step(pivot, &row[j], &a, &pivot_row[j], &prev)
                };
            }
        }
        prev = pivot.clone();
        rows[r] = pivot_row;
        pivots.push(c);
    }
    Reduced {
        rows,
        pivots,
        scale: prev,
    }
}
