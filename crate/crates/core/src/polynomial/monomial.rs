use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

/// A product of variables `x_{i}^{e_i}`, stored as `(index, exponent)` pairs
/// sorted by index with every exponent positive.
///
/// Ordered graded lexicographically: total degree first, then the exponent
/// of `x_1`, then `x_2`, and so on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Panics if `i == 0`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        Monomial {
            factors: vec![(i, 1)],
        }
    }

    /// Builds `∏ x_{i+1}^{exponents[i]}`.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        Monomial {
            factors: exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i + 1, e))
                .collect(),
        }
    }

    /// Product of the variables indexed by `vars`, with repetition.
    pub fn product_of(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut factors: Vec<(usize, u32)> = Vec::new();
        let mut sorted: Vec<usize> = vars.into_iter().collect();
        sorted.sort_unstable();
        for v in sorted {
            assert!(v >= 1, "variables are indexed from 1");
            match factors.last_mut() {
                Some((last, e)) if *last == v => *e += 1,
                _ => factors.push((v, 1)),
            }
        }
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.factors
            .iter()
            .find(|&&(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    /// `(index, exponent)` pairs in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().copied()
    }

    pub fn max_var(&self) -> usize {
        self.factors.last().map_or(0, |&(v, _)| v)
    }

    /// Dense exponent vector of length `n`. Panics if a variable above `n` occurs.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        assert!(self.max_var() <= n);
        let mut v = vec![0; n];
        for &(i, e) in &self.factors {
            v[i - 1] = e;
        }
        v
    }

    pub(crate) fn display<'a>(&'a self, symbol: &'a str) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, symbol }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    symbol: &'a str,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.m.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{v}", self.symbol)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.factors.iter();
            let mut b = other.factors.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            // the side holding the smaller index has the
                            // larger exponent there
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + rhs.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &rhs.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { factors }
    }
}
