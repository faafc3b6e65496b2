//! Exact volumes for the pieces of a box dissected along the hyperplanes
//! `x_i = x_j`.
//!
//! The box `[0, W_1] × ⋯ × [0, W_n]` with `0 < W_1 < ⋯ < W_n` splits into
//! `n!` pieces `C_π = { x : x_{π(1)} ≥ ⋯ ≥ x_{π(n)} }`. This crate computes
//! the volume of every piece as an exact polynomial, groups permutations whose
//! pieces have equal volume, and ships independent checks of that grouping:
//!
//! * [`combinatorics`]: permutations, partitions, the ψ map, λ^max, permutation
//!   diagrams, 132-avoidance and Dyck words.
//! * [`polynomial`]: sparse multivariate polynomials over big rationals.
//! * [`volume`]: the closed-form volume sum, [`volume::classify`] and Catalan
//!   numbers.
//! * [`oracle`]: box-refinement enumeration, a seeded Monte Carlo simulation
//!   and the exhaustive equal-volume check.
//!
//! ```
//! use boxvol::{Permutation, volume};
//!
//! let pi: Permutation = "42531".parse().unwrap();
//! assert_eq!(pi.psi().to_string(), "(3,1,1,1)");
//! assert_eq!(pi.lambda_max().to_string(), "(4,2,2,2,1)");
//!
//! let v = volume::volume_poly(&"21".parse().unwrap());
//! assert_eq!(v.to_string(), "1/2*a1^2 + a1*a2");
//! ```

pub mod combinatorics;
mod error;
pub mod oracle;
pub mod polynomial;
pub mod volume;

pub use combinatorics::{CellSet, DyckWord, Partition, Permutation, Permutations};
pub use error::{Error, Result};
pub use polynomial::{Basis, Monomial, Polynomial, Rational};
pub use volume::{Classification, VolumeClass, Weights};

/// Largest `n` accepted by exhaustive enumeration unless overridden.
pub const DEFAULT_MAX_N: usize = 10;
