//! Independent checks on the volume engine.
//!
//! * [`volume_by_box_enumeration`] recomputes `Vol(C_π)` by summing over the
//!   refined grid of boxes directly, without ever forming λ^max.
//! * [`monte_carlo_probability`] samples the probabilistic version of the
//!   problem with a seeded generator.
//! * [`verify_theorem`] partitions `S_n` by exact volume and by ψ and checks
//!   that the two agree.

mod boxes;
mod monte_carlo;
mod theorem;

pub use boxes::{qualifying_boxes, volume_by_box_enumeration, DEFAULT_ORACLE_MAX_N};
pub use monte_carlo::{
    monte_carlo_probability, monte_carlo_probability_with, SimReport, GENERATOR,
};
pub use theorem::{
    verify_theorem, verify_theorem_with, TheoremReport, VerifyOptions, DEFAULT_VERIFY_MAX_N,
};
