use super::Permutation;
use crate::error::{Error, Result};
use crate::DEFAULT_MAX_N;

/// All permutations of size `n` in lexicographic order of one-line notation.
///
/// Streams one permutation at a time; `S_n` is never materialized.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    /// `1 ≤ n ≤ DEFAULT_MAX_N`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_max(n, DEFAULT_MAX_N)
    }

    pub fn with_max(n: usize, max_n: usize) -> Result<Self> {
        if n == 0 || n > max_n {
            return Err(Error::SizeOutOfRange {
                n,
                min: 1,
                max: max_n,
            });
        }
        Ok(Permutations {
            next: Some((1..=n).collect()),
        })
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w
        .iter()
        .rposition(|&v| v > w[i])
        .expect("pivot has a successor");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_word_unchecked(current))
    }
}
