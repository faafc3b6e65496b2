//! Dyck words for ψ-images.
//!
//! A ψ-image of a permutation of size `n` fits under the staircase
//! `(n−1, n−2, …, 1, 0)`. Its complement inside the `n × n` grid has row
//! lengths `b_k = n − ψ_k`, which are weakly increasing from the top row down
//! and satisfy `b_k ≥ k` with `b_n = n`.
//!
//! The word is built row by row from the top: for row `k`, emit `U` until the
//! word holds `b_k` letters `U`, then emit one `R`. Prefixes therefore never
//! have more `R` than `U`, the word has length `2n`, and the map is a
//! bijection between partitions under the staircase and Dyck words of
//! semilength `n`. For `n = 1` the only word is `UR`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    U,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Semilength: the number of `U` steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Equal numbers of `U` and `R`, and no prefix with more `R` than `U`.
    pub fn is_balanced(&self) -> bool {
        let mut height = 0i64;
        for s in &self.steps {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    /// Inverse of [`dyck_path_of`].
    pub fn to_partition(&self) -> Partition {
        let mut ups = 0;
        let n = self.semilength();
        let mut parts = Vec::with_capacity(n);
        for s in &self.steps {
            match s {
                Step::U => ups += 1,
                Step::R => parts.push(n - ups),
            }
        }
        Partition::new(parts).expect("row lengths of a Dyck word's complement decrease")
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::R => "R",
            })?;
        }
        Ok(())
    }
}

impl Serialize for DyckWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The Dyck word of `psi` inside the staircase of size `n`.
///
/// Fails unless `psi_i ≤ n − i` for every `i`.
pub fn dyck_path_of(psi: &Partition, n: usize) -> Result<DyckWord> {
    let fits =
        n >= 1 && psi.length() <= n && psi.parts().iter().enumerate().all(|(i, &p)| p + i < n);
    if !fits {
        return Err(Error::StaircaseViolation {
            partition: psi.to_string(),
            n,
        });
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut ups = 0;
    for k in 1..=n {
        let target = n - psi.part(k);
        while ups < target {
            steps.push(Step::U);
            ups += 1;
        }
        steps.push(Step::R);
    }
    Ok(DyckWord { steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn smallest_case() {
        assert_eq!(
            dyck_path_of(&Partition::empty(), 1).unwrap().to_string(),
            "UR"
        );
    }

    #[test]
    fn figure_partition() {
        let w = dyck_path_of(&part(&[3, 1, 1, 1]), 5).unwrap();
        assert_eq!(w.to_string(), "UURUURRRUR");
        assert!(w.is_balanced());
        assert_eq!(w.to_partition(), part(&[3, 1, 1, 1]));
    }

    #[test]
    fn staircase_extremes() {
        assert_eq!(
            dyck_path_of(&Partition::empty(), 3).unwrap().to_string(),
            "UUURRR"
        );
        assert_eq!(
            dyck_path_of(&part(&[2, 1]), 3).unwrap().to_string(),
            "URURUR"
        );
    }

    #[test]
    fn rejects_partitions_above_the_staircase() {
        assert!(dyck_path_of(&part(&[3]), 3).is_err());
        assert!(dyck_path_of(&part(&[2, 2]), 3).is_err());
        assert!(dyck_path_of(&part(&[1, 1, 1]), 3).is_err());
        assert!(dyck_path_of(&Partition::empty(), 0).is_err());
    }
}
