use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{stabilizer_order, Permutation};
use crate::error::{Error, Result};
use crate::polynomial::{Basis, Monomial, Polynomial, Rational};

pub const DEFAULT_ORACLE_MAX_N: usize = 8;

/// Odometer over `I = {1} × {1,2} × ⋯ × {1..n}`.
struct GridBoxes {
    current: Option<Vec<usize>>,
}

impl GridBoxes {
    fn new(n: usize) -> Self {
        GridBoxes {
            current: Some(vec![1; n]),
        }
    }
}

impl Iterator for GridBoxes {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let item = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            // coordinate i (0-based) ranges over 1..=i+1
            if cur[i] < i + 1 {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(item)
    }
}

/// Box index tuples `ρ ∈ I` whose open box `B_ρ` lies inside `C_π`, i.e.
/// `ρ_{π(1)} ≥ ρ_{π(2)} ≥ ⋯ ≥ ρ_{π(n)}`.
pub fn qualifying_boxes(p: &Permutation) -> impl Iterator<Item = Vec<usize>> + '_ {
    GridBoxes::new(p.size())
        .filter(move |rho| p.word().windows(2).all(|w| rho[w[0] - 1] >= rho[w[1] - 1]))
}

/// `Vol(C_π)` in basis A as `Σ_ρ a_{ρ_1} ⋯ a_{ρ_n} / |G_ρ|` over the
/// qualifying boxes. Costs `n!` box checks, so `n` is capped at `max_n`.
pub fn volume_by_box_enumeration(p: &Permutation, max_n: usize) -> Result<Polynomial> {
    if p.size() > max_n {
        return Err(Error::SizeOutOfRange {
            n: p.size(),
            min: 1,
            max: max_n,
        });
    }
    let mut vol = Polynomial::zero(Basis::A);
    for rho in qualifying_boxes(p) {
        let order = BigInt::from(stabilizer_order(&rho));
        vol.add_term(
            Monomial::product_of(rho.iter().copied()),
            Rational::new(BigInt::one(), order),
        );
    }
    Ok(vol)
}
