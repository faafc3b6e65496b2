use std::collections::BTreeSet;

use serde::Serialize;

use super::{Partition, Permutation};

/// A finite set of 1-indexed `(row, column)` cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CellSet {
    cells: BTreeSet<(usize, usize)>,
}

impl CellSet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    /// The partition whose Young diagram is exactly this set, if any.
    pub fn as_partition(&self) -> Option<Partition> {
        let rows = self.cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut lengths = vec![0; rows];
        for &(r, _) in &self.cells {
            lengths[r - 1] += 1;
        }
        let partition = Partition::new(lengths).ok()?;
        if partition.cells().into_iter().eq(self.iter()) {
            Some(partition)
        } else {
            None
        }
    }

    pub fn is_young_diagram(&self) -> bool {
        self.as_partition().is_some()
    }
}

impl FromIterator<(usize, usize)> for CellSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        CellSet {
            cells: iter.into_iter().collect(),
        }
    }
}

/// ψ(π) read straight off the permutation matrix: the cells `(i', j')` with
/// no 1-entry `(i, π(i))` satisfying `i ≤ i'` and `π(i) ≤ j'`.
///
/// Quadratic in the number of cells; [`psi_by_minima`] is the fast route.
pub fn psi_by_crossing(p: &Permutation) -> Partition {
    let n = p.size();
    let ones: Vec<(usize, usize)> = (1..=n).map(|i| (i, p.image(i))).collect();
    let mut rows = vec![0; n];
    for (row, len) in rows.iter_mut().enumerate() {
        let row = row + 1;
        *len = (1..=n)
            .filter(|&col| !ones.iter().any(|&(i, j)| i <= row && j <= col))
            .count();
    }
    Partition::new(rows).expect("uncrossed cells form a Young diagram")
}

/// ψ(π) with `i`-th part `min{π(1), …, π(i)} − 1`.
pub fn psi_by_minima(p: &Permutation) -> Partition {
    let parts = prefix_minima(p).map(|m| m - 1).collect();
    Partition::new(parts).expect("prefix minima are weakly decreasing")
}

/// λ^max(π), the prefix minima of `π`: exactly `n` parts, the last equal to 1.
pub fn lambda_max(p: &Permutation) -> Partition {
    let parts = prefix_minima(p).collect();
    Partition::new(parts).expect("prefix minima are weakly decreasing")
}

fn prefix_minima(p: &Permutation) -> impl Iterator<Item = usize> + '_ {
    p.word().iter().scan(usize::MAX, |min, &v| {
        *min = (*min).min(v);
        Some(*min)
    })
}

/// The diagram of `π`: cells `(i, j)` with `j < π(i)` and `i < π⁻¹(j)`, i.e.
/// those not in the row to the right of a 1-entry, the column below one, or
/// on one.
///
/// Its size is the number of inversions of `π`.
pub fn diagram(p: &Permutation) -> CellSet {
    let n = p.size();
    let inv = p.inverse();
    (1..=n)
        .flat_map(|i| (1..p.image(i)).map(move |j| (i, j)))
        .filter(|&(i, j)| i < inv.image(j))
        .collect()
}

/// No `i < j < k` with `π(i) < π(k) < π(j)`.
pub fn is_132_avoiding(p: &Permutation) -> bool {
    let w = p.word();
    let mut min_before = usize::MAX;
    for j in 0..w.len() {
        if min_before < w[j] && w[j + 1..].iter().any(|&v| min_before < v && v < w[j]) {
            return false;
        }
        min_before = min_before.min(w[j]);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn figure_permutation() {
        let p = perm("42531");
        assert_eq!(psi_by_crossing(&p), part(&[3, 1, 1, 1]));
        assert_eq!(psi_by_minima(&p), part(&[3, 1, 1, 1]));
        assert_eq!(lambda_max(&p), part(&[4, 2, 2, 2, 1]));
    }

    #[test]
    fn psi_on_s3() {
        let cases = [
            ("123", &[][..]),
            ("132", &[]),
            ("213", &[1]),
            ("231", &[1, 1]),
            ("312", &[2]),
            ("321", &[2, 1]),
        ];
        for (word, want) in cases {
            let p = perm(word);
            assert_eq!(psi_by_crossing(&p), part(want), "{word}");
            assert_eq!(psi_by_minima(&p), part(want), "{word}");
        }
    }

    #[test]
    fn identity_maps_to_empty() {
        for n in 1..=6 {
            let id = Permutation::identity(n);
            assert!(psi_by_crossing(&id).is_empty());
            assert!(psi_by_minima(&id).is_empty());
            assert_eq!(lambda_max(&id), part(&vec![1; n]));
            assert!(diagram(&id).is_empty());
        }
    }

    #[test]
    fn lambda_max_of_decreasing() {
        assert_eq!(lambda_max(&perm("321")), part(&[3, 2, 1]));
    }

    #[test]
    fn diagram_examples() {
        let d = diagram(&perm("321"));
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d.as_partition(), Some(part(&[2, 1])));

        let p = perm("42531");
        let d = diagram(&p);
        assert_eq!(d.len(), 7);
        assert_eq!(d.len(), p.inversions());
        assert!(!d.is_young_diagram());
        let want = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (4, 1)];
        assert_eq!(d.iter().collect::<Vec<_>>(), want);
    }

    #[test]
    fn pattern_132() {
        assert!(!is_132_avoiding(&perm("132")));
        assert!(is_132_avoiding(&perm("321")));
        assert!(is_132_avoiding(&perm("123")));
        assert!(!is_132_avoiding(&perm("42531")));
    }

    #[test]
    fn young_diagram_detection() {
        let gap: CellSet = [(1, 1), (1, 3)].into_iter().collect();
        assert!(!gap.is_young_diagram());
        let skipped_row: CellSet = [(2, 1)].into_iter().collect();
        assert!(!skipped_row.is_young_diagram());
        assert_eq!(CellSet::default().as_partition(), Some(Partition::empty()));
    }
}
