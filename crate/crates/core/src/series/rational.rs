use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, TruncatedSeries, Var};
use crate::{Error, Result};

/// `numerator / denominator` with a denominator whose constant term is 1,
/// read as a power series in the counting variable `var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
    var: Var,
}

impl RationalGF {
    /// Normalises by dividing both sides by the denominator's constant term,
    /// which must divide every coefficient exactly.
    pub fn new(numerator: Polynomial, denominator: Polynomial, var: Var) -> Result<Self> {
        let c = denominator.constant_term();
        if c.is_zero() {
            return Err(Error::BadDenominator(format!(
                "constant term of {denominator} is zero"
            )));
        }
        let (numerator, denominator) = match (numerator.div_exact(&c), denominator.div_exact(&c)) {
            (Some(n), Some(d)) => (n, d),
            _ => {
                return Err(Error::BadDenominator(format!(
                    "cannot scale ({numerator})/({denominator}) by 1/{c} over the integers"
                )))
            }
        };
        Ok(RationalGF {
            numerator,
            denominator,
            var,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn var(&self) -> Var {
        self.var
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// The unique series `s` with `s * denominator = numerator` modulo
/// `var^(bound+1)`.
///
/// The part of the denominator free of the counting variable must be exactly
/// `1`; the division then proceeds one power of `var` at a time.
pub fn expand_rational(r: &RationalGF, bound: u32) -> Result<TruncatedSeries> {
    let var = r.var;
    if r.denominator.constant_term() != BigInt::one() {
        return Err(Error::BadDenominator(format!(
            "constant term of {} is not 1",
            r.denominator
        )));
    }
    let den = r.denominator.split_by(var);
    if den.get(&0) != Some(&Polynomial::one()) {
        return Err(Error::BadDenominator(format!(
            "{}-free part of {} is not 1",
            var.name(),
            r.denominator
        )));
    }
    let num = r.numerator.split_by(var);

    // s_n = num_n - sum_{k>=1} den_k * s_{n-k}
    let mut coeffs: Vec<Polynomial> = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        let mut s_n = num.get(&n).cloned().unwrap_or_default();
        for (&k, d_k) in den.range(1..n + 1) {
            let prev = &coeffs[(n - k) as usize];
            if !prev.is_zero() {
                s_n = &s_n - &(d_k * prev);
            }
        }
        coeffs.push(s_n);
    }

    let mut poly = Polynomial::zero();
    for (n, c) in coeffs.into_iter().enumerate() {
        let shift = super::Monomial::var(var, n as u32);
        for (m, v) in c.terms() {
            poly.add_term(*m * shift, v.clone());
        }
    }
    let series = TruncatedSeries::new(var, bound, poly);
    debug_assert_eq!(
        series
            .polynomial()
            .mul_truncated(&r.denominator, var, bound),
        r.numerator.truncate(var, bound)
    );
    Ok(series)
}
