use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomial::{parse_rational, Rational};

/// Box edge lengths `0 < W_1 < W_2 < ⋯ < W_n`.
///
/// Strictness is enforced here. Polynomial evaluation accepts any point, so
/// degenerate boxes such as the unit cube can still be evaluated directly
/// through [`Polynomial::eval`](crate::Polynomial::eval).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    w: Vec<Rational>,
}

impl Weights {
    pub fn new(w: Vec<Rational>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if !w[0].is_positive() {
            return Err(Error::InvalidWeights(format!(
                "W_1 = {} is not positive",
                w[0]
            )));
        }
        if let Some(i) = w.windows(2).position(|p| p[0] >= p[1]) {
            return Err(Error::InvalidWeights(format!(
                "W_{} = {} is not less than W_{} = {}",
                i + 1,
                w[i],
                i + 2,
                w[i + 1]
            )));
        }
        Ok(Weights { w })
    }

    pub fn from_integers(w: &[i64]) -> Result<Self> {
        Weights::new(
            w.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    /// Parses a comma- or whitespace-separated list of integers, decimals
    /// or fractions, e.g. `"1, 3/2, 2.25"`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let w = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Weights::new(w)
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.w
    }

    /// `a_i = W_i − W_{i−1}` with `W_0 = 0`; all positive.
    pub fn increments(&self) -> Vec<Rational> {
        let mut prev = Rational::zero();
        self.w
            .iter()
            .map(|x| {
                let a = x - &prev;
                prev = x.clone();
                a
            })
            .collect()
    }

    /// `W_1 ⋯ W_n`, the volume of the box.
    pub fn product(&self) -> Rational {
        self.w.iter().fold(Rational::one(), |acc, x| acc * x)
    }

    /// Nearest `f64` values, for sampling only.
    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.w
            .iter()
            .map(|x| x.to_f64().expect("rational converts to f64"))
            .collect()
    }
}

impl Serialize for Weights {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.w.iter().map(|x| x.to_string()))
    }
}

impl<'de> Deserialize<'de> for Weights {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let w = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Weights::new(w).map_err(serde::de::Error::custom)
    }
}
