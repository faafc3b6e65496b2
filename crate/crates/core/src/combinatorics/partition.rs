use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored weakly decreasing with trailing zeros
/// trimmed, so `(2,1,0,0)` and `(2,1)` are the same value and `∅` is the
/// empty sequence.
///
/// The derived order is lexicographic on the stored parts, which puts `∅`
/// first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for `i ≥ 1`, zero past the last stored part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`. Panics if there are more than
    /// `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.parts.len() <= n, "{self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells of the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Diagram inclusion, the order of Young's lattice.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Least upper bound in Young's lattice: the union of the diagrams.
    pub fn union(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (1..=len).map(|i| self.part(i).max(other.part(i))).collect();
        Partition { parts }
    }

    /// Greatest lower bound in Young's lattice: the intersection of the diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| *a.min(b))
            .collect();
        Partition { parts }
    }

    /// The cells `(row, column)` of the Young diagram, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    /// ASCII rendering, one row of `#` per part; `∅` renders as an empty string.
    pub fn ascii(&self) -> String {
        self.parts
            .iter()
            .map(|&len| "#".repeat(len))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// `∏_j (n_j)!` where `n_j` counts the occurrences of the value `j` in `seq`.
///
/// This is the order of the subgroup of `S_n` fixing `seq` under coordinate
/// permutation, so it does not depend on the order of the entries.
pub fn stabilizer_order(seq: &[usize]) -> BigUint {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    let mut order = BigUint::one();
    let mut run = 0u32;
    for (i, v) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *v {
            run + 1
        } else {
            1
        };
        order *= run;
    }
    order
}

/// All weakly decreasing `λ` with exactly `n = lmax.length()` parts and
/// `1 ≤ λ_i ≤ lmax_i`, in lexicographic order.
///
/// These are the partitions with `n` parts whose diagrams lie inside `lmax`.
pub fn partitions_below(lmax: &Partition) -> PartitionsBelow {
    PartitionsBelow {
        bound: lmax.parts.clone(),
        current: if lmax.parts.is_empty() {
            None
        } else {
            Some(vec![1; lmax.parts.len()])
        },
    }
}

/// Iterator returned by [`partitions_below`].
#[derive(Clone, Debug)]
pub struct PartitionsBelow {
    bound: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl PartitionsBelow {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        // rightmost entry that can grow; everything after it resets to 1
        for i in (0..cur.len()).rev() {
            let cap = if i == 0 {
                self.bound[0]
            } else {
                self.bound[i].min(cur[i - 1])
            };
            if cur[i] < cap {
                cur[i] += 1;
                cur[i + 1..].fill(1);
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for PartitionsBelow {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let item = Partition {
            parts: self.current.clone()?,
        };
        self.advance();
        Some(item)
    }
}
