use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::LatticeDims;
use crate::linalg::Scalar;

use super::GridValues;

/// Integer grid with values drawn uniformly from `lo..=hi`. The same seed
/// gives the same grid on every platform.
pub fn random_grid<T: Scalar>(
    dims: LatticeDims,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<GridValues<T>> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(GridValues::from_fn(dims, |_| {
        let v = rng.random_range(lo..=hi);
        Ratio::from_integer(T::from_i64(v).expect("i64 fits the scalar type"))
    }))
}
