//! Permutations, partitions and the maps between them.
//!
//! Matrix convention throughout: rows are positions, columns are values, and
//! the permutation matrix of `π` has its 1-entries at `(i, π(i))`. All
//! coordinates are 1-indexed.

mod dyck;
mod enumerate;
mod partition;
mod permutation;
mod psi;

pub use dyck::{dyck_path_of, DyckWord, Step};
pub use enumerate::Permutations;
pub use partition::{partitions_below, stabilizer_order, Partition, PartitionsBelow};
pub use permutation::Permutation;
pub use psi::{diagram, is_132_avoiding, lambda_max, psi_by_crossing, psi_by_minima, CellSet};
