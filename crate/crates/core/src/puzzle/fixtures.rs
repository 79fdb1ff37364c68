//! Worked examples bundled with the crate.

use num_bigint::BigInt;

use super::{parse_puzzle, PuzzleInstance};

/// 3x3 system through slope 1, uniquely solvable.
pub const BASIC_3X3: &str = include_str!("../../fixtures/basic_3x3.rk");
/// 4x4 system through slope 1, not uniquely solvable.
pub const AMBIGUOUS_4X4: &str = include_str!("../../fixtures/ambiguous_4x4.rk");
/// [`AMBIGUOUS_4X4`] with the slope `-1/2` clues added.
pub const RESOLVED_4X4: &str = include_str!("../../fixtures/resolved_4x4.rk");

pub fn load(text: &str) -> PuzzleInstance<BigInt> {
    parse_puzzle(text).expect("bundled fixture parses")
}
