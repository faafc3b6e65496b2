//! Exact volumes of the pieces `C_π` and their classification.
//!
//! With `a_i = W_i − W_{i−1}`, the volume of `C_π` is
//!
//! ```text
//! Vol(C_π) = Σ_{λ ⊆ λ^max(π)} (1 / |G_λ|) · a_{λ_1} a_{λ_2} ⋯ a_{λ_n}
//! ```
//!
//! where `λ` runs over the partitions with exactly `n` positive parts lying
//! inside `λ^max(π)` and `|G_λ|` is the [stabilizer order](stabilizer_order)
//! of `λ`. Each `λ` stands for the sub-box of the refined grid whose side
//! indices, read in the order `π` prescribes, are `λ`; the piece meets it in
//! one of `|G_λ|` congruent fundamental domains.
//!
//! Since the sum depends on `π` only through `λ^max(π)`, two pieces have
//! equal volume whenever their ψ-images agree; [`classify`] groups `S_n`
//! that way.

mod classify;
mod weights;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

pub use classify::{
    classify, classify_with, ClassJson, Classification, ClassificationJson, ClassifyOptions,
    VolumeClass,
};
pub use weights::Weights;

use crate::combinatorics::{lambda_max, partitions_below, stabilizer_order, Permutation};
use crate::error::{Error, Result};
use crate::polynomial::{Basis, Monomial, Polynomial, Rational};

/// `Vol(C_π)` in basis A.
pub fn volume_poly(p: &Permutation) -> Polynomial {
    let mut vol = Polynomial::zero(Basis::A);
    for lambda in partitions_below(&lambda_max(p)) {
        let order = BigInt::from(stabilizer_order(lambda.parts()));
        vol.add_term(
            Monomial::product_of(lambda.parts().iter().copied()),
            Rational::new(BigInt::one(), order),
        );
    }
    vol
}

/// `Vol(C_π)` in basis W.
pub fn volume_poly_w(p: &Permutation) -> Polynomial {
    volume_poly(p)
        .substitute_a_to_w()
        .expect("volume_poly is in basis A")
}

/// `∏_{i=1}^{n} (a_1 + ⋯ + a_i)`, the volume of the whole box in basis A.
pub fn total_volume_a(n: usize) -> Polynomial {
    let mut partial = Polynomial::zero(Basis::A);
    let mut total = Polynomial::one(Basis::A);
    for i in 1..=n {
        partial = &partial + &Polynomial::var(Basis::A, i);
        total = &total * &partial;
    }
    total
}

/// `W_1 W_2 ⋯ W_n`.
pub fn total_volume_w(n: usize) -> Polynomial {
    Polynomial::term(Basis::W, Rational::one(), Monomial::product_of(1..=n))
}

/// The exact volume of `C_π` for concrete weights.
pub fn volume_at(p: &Permutation, w: &Weights) -> Result<Rational> {
    if p.size() != w.len() {
        return Err(Error::DimensionMismatch {
            permutation: p.size(),
            weights: w.len(),
        });
    }
    volume_poly(p).eval(&w.increments())
}

/// `Vol(C_π) / (W_1 ⋯ W_n)`: the probability that `W_i X_i` with independent
/// uniform `X_i` on `[0, 1]` come out ordered as `π` prescribes.
pub fn probability_at(p: &Permutation, w: &Weights) -> Result<Rational> {
    Ok(volume_at(p, w)? / w.product())
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    // after step i, c = binom(n + i, i)
    let mut c = BigUint::one();
    for i in 1..=n {
        c = c * BigUint::from(n + i) / BigUint::from(i);
    }
    c / BigUint::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn term(c: Rational, vars: &[usize]) -> Polynomial {
        Polynomial::term(Basis::A, c, Monomial::product_of(vars.iter().copied()))
    }

    // Vol{x1 ≥ x2} in [0,W1]×[0,W2] is W1²/2; the complement is W1·W2 − W1²/2.
    #[test]
    fn two_dimensional_pieces() {
        let v12 = volume_poly(&perm("12"));
        assert_eq!(v12, term(q(1, 2), &[1, 1]));
        let v21 = volume_poly(&perm("21"));
        assert_eq!(v21, &term(q(1, 2), &[1, 1]) + &term(q(1, 1), &[1, 2]));
        assert_eq!(volume_poly_w(&perm("21")).to_string(), "-1/2*W1^2 + W1*W2");
    }

    #[test]
    fn decreasing_permutation_of_size_three() {
        let want = [
            term(q(1, 6), &[1, 1, 1]),
            term(q(1, 2), &[1, 1, 2]),
            term(q(1, 2), &[1, 2, 2]),
            term(q(1, 2), &[1, 1, 3]),
            term(q(1, 1), &[1, 2, 3]),
        ]
        .iter()
        .fold(Polynomial::zero(Basis::A), |acc, t| &acc + t);
        assert_eq!(volume_poly(&perm("321")), want);
    }

    #[test]
    fn identity_is_a_simplex_corner() {
        for n in 1..=6 {
            let id = Permutation::identity(n);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(
                volume_poly(&id),
                term(Rational::new(1.into(), fact.into()), &vec![1; n])
            );
        }
    }

    #[test]
    fn concrete_volumes() {
        let w = Weights::from_integers(&[1, 2]).unwrap();
        assert_eq!(volume_at(&perm("12"), &w).unwrap(), q(1, 2));
        assert_eq!(volume_at(&perm("21"), &w).unwrap(), q(3, 2));
        assert_eq!(probability_at(&perm("12"), &w).unwrap(), q(1, 4));

        let w3 = Weights::from_integers(&[1, 2, 3]).unwrap();
        let total: Rational = crate::Permutations::new(3)
            .unwrap()
            .map(|p| volume_at(&p, &w3).unwrap())
            .sum();
        assert_eq!(total, q(6, 1));

        assert_eq!(
            volume_at(&perm("12"), &w3),
            Err(Error::DimensionMismatch {
                permutation: 2,
                weights: 3
            })
        );
    }

    #[test]
    fn total_volume_polynomials() {
        for n in 1..=5 {
            assert_eq!(
                total_volume_a(n).substitute_a_to_w().unwrap(),
                total_volume_w(n)
            );
        }
        assert_eq!(total_volume_w(0), Polynomial::one(Basis::W));
    }

    fn catalan_by_recurrence(n: usize) -> Vec<BigUint> {
        let mut c = vec![BigUint::one()];
        for k in 0..n {
            let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
            c.push(next);
        }
        c
    }

    #[test]
    fn catalan_matches_recurrence() {
        let oracle = catalan_by_recurrence(30);
        for (n, want) in oracle.iter().enumerate() {
            assert_eq!(&catalan(n), want, "C_{n}");
        }
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(10), BigUint::from(16796u32));
    }
}
