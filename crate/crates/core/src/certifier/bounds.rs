use crate::error::{Error, Result};
use crate::slope::Slope;

use super::staircase::staircase_length;

/// Which of the four size bounds: slopes through `-1/q`, `-q`, `1/q`, `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundVariant {
    NegReciprocal = 1,
    NegInteger = 2,
    PosReciprocal = 3,
    PosInteger = 4,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 4] = [
        BoundVariant::NegReciprocal,
        BoundVariant::NegInteger,
        BoundVariant::PosReciprocal,
        BoundVariant::PosInteger,
    ];

    pub fn from_number(v: u8) -> Result<Self> {
        BoundVariant::ALL
            .into_iter()
            .find(|b| *b as u8 == v)
            .ok_or_else(|| Error::InvalidParameter(format!("bound variant {v} not in 1..=4")))
    }

    /// Last slope of the prefix the bound refers to.
    pub fn slope(&self, q: u64) -> Slope {
        let q = q as i64;
        match self {
            BoundVariant::NegReciprocal => Slope::reciprocal_of(-q),
            BoundVariant::NegInteger => Slope::integer(-q),
            BoundVariant::PosReciprocal => Slope::reciprocal_of(q),
            BoundVariant::PosInteger => Slope::integer(q),
        }
    }
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "bounds need q >= 2, got {q}"
        )));
    }
    Ok(())
}

/// Largest `n` for which every `n x n` system through the variant's slope
/// is uniquely solvable: `q²+2q-3`, `q²+2q-2`, `q²+3q-2`, `q²+3q-1`.
pub fn size_bound(q: u64, variant: BoundVariant) -> Result<u64> {
    check_q(q)?;
    Ok(match variant {
        BoundVariant::NegReciprocal => q * q + 2 * q - 3,
        BoundVariant::NegInteger => q * q + 2 * q - 2,
        BoundVariant::PosReciprocal => q * q + 3 * q - 2,
        BoundVariant::PosInteger => q * q + 3 * q - 1,
    })
}

/// The bound as a sum of first-row entry counts: left block, mirrored
/// right block, and the single entry fixed by the row clue.
pub fn size_bound_terms(q: u64, variant: BoundVariant) -> Result<[u64; 3]> {
    check_q(q)?;
    // q - 2 + q(q+1)/2: first-row length of the last member of the first
    // peeling run; (q²+3q-2)/2 = m(q); ((q-1)²+3(q-1)-2)/2 = m(q-1).
    let run = q - 2 + q * (q + 1) / 2;
    let full = (q * q + 3 * q - 2) / 2;
    let prev = ((q - 1) * (q - 1) + 3 * (q - 1) - 2) / 2;
    debug_assert_eq!(full, staircase_length(q));
    Ok(match variant {
        BoundVariant::NegReciprocal => [run, prev, 1],
        BoundVariant::NegInteger => [full, prev, 1],
        BoundVariant::PosReciprocal => [full, run, 1],
        BoundVariant::PosInteger => [staircase_length(q), staircase_length(q), 1],
    })
}
