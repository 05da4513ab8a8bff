use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Var};

/// Multivariate polynomial over the integers in `x, y, z, q`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c.into());
        p
    }

    /// `v^exp`.
    pub fn var(v: Var, exp: u32) -> Self {
        Polynomial::term(1, Monomial::var(v, exp))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Multiplies every term by `c * m`.
    pub fn mul_term(&self, m: Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(Monomial::one(), c)
    }

    /// Exact division of every coefficient by `c`; `None` if any coefficient
    /// is not a multiple of `c`.
    pub fn div_exact(&self, c: &BigInt) -> Option<Polynomial> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            if !(v % c).is_zero() {
                return None;
            }
            terms.insert(*m, v / c);
        }
        Some(Polynomial { terms })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Coefficients of successive powers of `v`, each free of `v`.
    pub fn split_by(&self, v: Var) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v))
                .or_default()
                .add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Keeps only terms whose `v`-degree is at most `bound`.
    pub fn truncate(&self, v: Var, bound: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) <= bound)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Product with terms of `v`-degree above `bound` never formed.
    pub fn mul_truncated(&self, rhs: &Polynomial, v: Var, bound: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            let da = ma.exp(v);
            if da > bound {
                continue;
            }
            for (mb, cb) in &rhs.terms {
                if da + mb.exp(v) <= bound {
                    out.add_term(*ma * *mb, ca * cb);
                }
            }
        }
        out
    }

    /// Substitutes `v = 1`.
    pub fn at_one(&self, v: Var) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with_exp(v, 0), c.clone())),
        )
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) > 0)
                .map(|(m, c)| {
                    let e = m.exp(v);
                    (m.with_exp(v, e - 1), c * BigInt::from(e))
                }),
        )
    }

    /// Substitutes `v = value`.
    pub fn eval(&self, v: Var, value: &BigInt) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            (
                m.with_exp(v, 0),
                c * num_traits::pow(value.clone(), m.exp(v) as usize),
            )
        }))
    }

    pub(crate) fn write_signed_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `1 - x*y^2*z + 3*x^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_signed_terms(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}
