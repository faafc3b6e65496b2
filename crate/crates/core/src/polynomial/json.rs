//! Term-list JSON form.
//!
//! ```json
//! {"basis":"A","num_vars":2,"terms":[
//!   {"exponents":[2,0],"numerator":"1","denominator":"2"},
//!   {"exponents":[1,1],"numerator":"1","denominator":"1"}]}
//! ```
//!
//! Every `exponents` array has length `num_vars` (the largest variable index
//! present); terms are listed highest first in graded lexicographic order.
//! Numerators and denominators are decimal strings so that big integers
//! survive any JSON reader.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Basis, Monomial, Polynomial, Rational};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub basis: Basis,
    pub num_vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub numerator: String,
    pub denominator: String,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        let num_vars = p.num_vars();
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                exponents: m.exponents(num_vars),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect();
        PolynomialJson {
            basis: p.basis(),
            num_vars,
            terms,
        }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Self, Error> {
        let mut p = Polynomial::zero(j.basis);
        for t in j.terms {
            if t.exponents.len() != j.num_vars {
                return Err(Error::InvalidRational(format!(
                    "term has {} exponents, expected {}",
                    t.exponents.len(),
                    j.num_vars
                )));
            }
            let bad = || Error::InvalidRational(format!("{}/{}", t.numerator, t.denominator));
            let num: BigInt = t.numerator.parse().map_err(|_| bad())?;
            let den: BigInt = t.denominator.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            p.add_term(
                Monomial::from_exponents(&t.exponents),
                Rational::new(num, den),
            );
        }
        Ok(p)
    }
}
