//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are indexed from 1 and carry a [`Basis`] tag saying whether
//! they stand for the box increments `a_i = W_i − W_{i−1}` or the edge lengths
//! `W_i`. Arithmetic between different bases is an error.
//!
//! Terms are kept in graded lexicographic order, with no zero coefficients,
//! so two polynomials are equal exactly when their term maps are equal.
//!
//! Text form, highest term first:
//!
//! ```
//! use boxvol::{Basis, Polynomial, Rational};
//!
//! let a1 = Polynomial::var(Basis::A, 1);
//! let a2 = Polynomial::var(Basis::A, 2);
//! let half = Polynomial::constant(Basis::A, Rational::new(1.into(), 2.into()));
//! let p = &(&half * &(&a1 * &a1)) + &(&a1 * &a2);
//! assert_eq!(p.to_string(), "1/2*a1^2 + a1*a2");
//! ```

mod json;
mod monomial;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use json::{PolynomialJson, TermJson};
pub use monomial::Monomial;
pub use rational::{parse_rational, Rational};

use crate::error::{Error, Result};

/// What the variables of a [`Polynomial`] stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// `a_i = W_i − W_{i−1}` with `W_0 = 0`.
    A,
    /// Edge lengths `W_i`.
    W,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::A => "a",
            Basis::W => "W",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::A => "A",
            Basis::W => "W",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    basis: Basis,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(basis: Basis) -> Self {
        Polynomial {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(basis, Rational::one())
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::term(basis, c, Monomial::one())
    }

    /// The variable with index `i ≥ 1`.
    pub fn var(basis: Basis, i: usize) -> Self {
        Self::term(basis, Rational::one(), Monomial::var(i))
    }

    pub fn term(basis: Basis, c: Rational, m: Monomial) -> Self {
        let mut p = Polynomial::zero(basis);
        p.add_term(m, c);
        p
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from highest to lowest in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest variable index that occurs, or 0 for a constant.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    /// Adds `c · m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_basis(&self, other: &Polynomial) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_basis(other)?;
        let mut sum = self.clone();
        for (m, c) in &other.terms {
            sum.add_term(m.clone(), c.clone());
        }
        Ok(sum)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_basis(other)?;
        let mut product = Polynomial::zero(self.basis);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                product.add_term(m1 * m2, c1 * c2);
            }
        }
        Ok(product)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.basis);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let mut p = Polynomial::zero(self.basis);
        for (m, coeff) in &self.terms {
            p.add_term(m.clone(), coeff * c);
        }
        p
    }

    /// Rewrites a basis-A polynomial in basis W via `a_i ↦ W_i − W_{i−1}`
    /// (`a_1 ↦ W_1`).
    pub fn substitute_a_to_w(&self) -> Result<Polynomial> {
        if self.basis != Basis::A {
            return Err(Error::WrongBasis {
                expected: Basis::A,
                found: self.basis,
            });
        }
        let n = self.num_vars();
        let increments: Vec<Polynomial> = (1..=n)
            .map(|i| {
                let w = Polynomial::var(Basis::W, i);
                if i == 1 {
                    w
                } else {
                    &w - &Polynomial::var(Basis::W, i - 1)
                }
            })
            .collect();
        // powers[i][e] = (W_{i+1} − W_i)^e, built on demand
        let mut powers: Vec<Vec<Polynomial>> = increments
            .iter()
            .map(|_| vec![Polynomial::one(Basis::W)])
            .collect();
        let mut out = Polynomial::zero(Basis::W);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(Basis::W, c.clone());
            for (var, exp) in m.iter() {
                let cache = &mut powers[var - 1];
                while cache.len() <= exp as usize {
                    let next = cache.last().unwrap() * &increments[var - 1];
                    cache.push(next);
                }
                t = &t * &cache[exp as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact evaluation; `point[i − 1]` is the value of variable `i`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (var, exp) in m.iter() {
                let x = point.get(var - 1).ok_or(Error::MissingVariable(var))?;
                value *= num_traits::pow(x.clone(), exp as usize);
            }
            total += value;
        }
        Ok(total)
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson::from(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", m.display(sym))?;
            }
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            basis: self.basis,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

// The operator impls panic on a basis mismatch; use the `try_*` methods when
// the bases are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        PolynomialJson::deserialize(deserializer)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
