//! Combinatorial uniqueness certificates.
//!
//! A cell is certified when some clue line has it as its only undetermined
//! cell. The staircase machinery describes the regions such peeling
//! reaches in the lower-left corner of a square lattice; [`propagate`] is
//! the general fixpoint engine behind all of it.

mod bounds;
mod propagate;
mod staircase;

pub use bounds::{size_bound, size_bound_terms, BoundVariant};
pub use propagate::{
    propagate, propagate_over, propagate_with_transports, CertifiedSet, DerivationStep, Reason,
};
pub use staircase::{
    omega_family, omega_q, partial_sum, peel_step_applies, peel_step_shortcut, region_of,
    staircase_length, Staircase, StaircaseRegion,
};
