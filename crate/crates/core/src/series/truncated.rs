use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{Monomial, Polynomial, Var};
use crate::{Error, Result};

/// A power series in a distinguished counting variable, known exactly up to
/// and including degree `bound` in that variable. The remaining variables
/// are unrestricted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    bound: u32,
    poly: Polynomial,
}

impl TruncatedSeries {
    pub fn new(var: Var, bound: u32, poly: Polynomial) -> Self {
        let poly = poly.truncate(var, bound);
        TruncatedSeries { var, bound, poly }
    }

    /// Series in `x` truncated above `x^bound`.
    pub fn in_x(bound: u32, poly: Polynomial) -> Self {
        TruncatedSeries::new(Var::X, bound, poly)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    /// Lowers the retained degree to `bound` (never raises it).
    pub fn truncate(&self, bound: u32) -> TruncatedSeries {
        TruncatedSeries::new(self.var, bound.min(self.bound), self.poly.clone())
    }

    /// The coefficient of `var^n`, a polynomial in the other variables.
    pub fn coefficient(&self, n: u32) -> Polynomial {
        assert!(
            n <= self.bound,
            "degree {n} exceeds the series bound {}",
            self.bound
        );
        self.poly.split_by(self.var).remove(&n).unwrap_or_default()
    }

    /// Coefficients `0..=bound` when the series involves no variable other
    /// than its counting variable.
    pub fn scalar_coefficients(&self) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::default(); self.bound as usize + 1];
        for (m, c) in self.poly.terms() {
            if m.degree() != m.exp(self.var) {
                return None;
            }
            out[m.exp(self.var) as usize] = c.clone();
        }
        Some(out)
    }

    /// Substitutes `v = 1` for a variable other than the counting variable.
    pub fn at_one(&self, v: Var) -> TruncatedSeries {
        assert_ne!(v, self.var, "cannot specialise the counting variable");
        TruncatedSeries::new(self.var, self.bound, self.poly.at_one(v))
    }

    /// `d/dv` followed by `v = 1`.
    pub fn derivative_at_one(&self, v: Var) -> TruncatedSeries {
        assert_ne!(v, self.var, "cannot differentiate in the counting variable");
        TruncatedSeries::new(self.var, self.bound, self.poly.derivative(v).at_one(v))
    }

    fn combine_bound(&self, rhs: &TruncatedSeries) -> u32 {
        assert_eq!(self.var, rhs.var, "series use different counting variables");
        self.bound.min(rhs.bound)
    }

    /// Serialises as a list of `{exponents, coefficient}` objects in canonical
    /// term order. Coefficients are exact JSON integers.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.poly
                .terms()
                .map(|(m, c)| {
                    let exps: serde_json::Map<String, Value> = m
                        .exponents()
                        .map(|(v, e)| (v.name().to_string(), json!(e)))
                        .collect();
                    json!({ "exponents": exps, "coefficient": big_to_json(c) })
                })
                .collect(),
        )
    }

    pub fn from_json(var: Var, bound: u32, value: &Value) -> Result<TruncatedSeries> {
        let bad = |what: &str| Error::Parse(format!("series JSON: {what}"));
        let items = value
            .as_array()
            .ok_or_else(|| bad("expected a list of terms"))?;
        let mut poly = Polynomial::zero();
        for item in items {
            let exps = item
                .get("exponents")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("term without an exponents object"))?;
            let mut pairs = Vec::new();
            for (name, e) in exps {
                let v: Var = name.parse()?;
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("exponent is not a small non-negative integer"))?;
                pairs.push((v, e));
            }
            let coeff = item
                .get("coefficient")
                .filter(|c| c.is_number())
                .and_then(|c| c.to_string().parse::<BigInt>().ok())
                .ok_or_else(|| bad("coefficient is not an integer"))?;
            poly.add_term(Monomial::from_pairs(&pairs), coeff);
        }
        Ok(TruncatedSeries::new(var, bound, poly))
    }
}

pub(crate) fn big_to_json(c: &BigInt) -> Value {
    // arbitrary_precision keeps the digits verbatim
    Value::Number(
        c.to_string()
            .parse()
            .expect("integer literal is a JSON number"),
    )
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.combine_bound(rhs);
        TruncatedSeries::new(self.var, bound, &self.poly + &rhs.poly)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.combine_bound(rhs);
        TruncatedSeries::new(self.var, bound, &self.poly - &rhs.poly)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.combine_bound(rhs);
        let poly = self.poly.mul_truncated(&rhs.poly, self.var, bound);
        TruncatedSeries {
            var: self.var,
            bound,
            poly,
        }
    }
}

/// Groups terms by powers of the counting variable:
/// `1 + y^2*z^3*x + (y^3*z^4 + y^4*z^4)*x^2`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups = self.poly.split_by(self.var);
        if groups.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, inner)) in groups.iter().enumerate() {
            let piece = render_group(self.var, *n, inner);
            match (i, piece.strip_prefix('-')) {
                (0, _) => f.write_str(&piece)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {piece}")?,
            }
        }
        Ok(())
    }
}

fn render_group(var: Var, n: u32, inner: &Polynomial) -> String {
    if n == 0 {
        return inner.to_string();
    }
    let power = if n == 1 {
        var.name().to_string()
    } else {
        format!("{}^{n}", var.name())
    };
    if inner.len() > 1 {
        return format!("({inner})*{power}");
    }
    let (m, c) = inner.terms().next().expect("groups are non-empty");
    let sign = if c.is_negative() { "-" } else { "" };
    let abs = c.abs();
    let coeff = if abs.is_one() {
        String::new()
    } else {
        format!("{abs}*")
    };
    if m.is_one() {
        format!("{sign}{coeff}{power}")
    } else {
        format!("{sign}{coeff}{m}*{power}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(bound: u32, poly: Polynomial) -> TruncatedSeries {
        TruncatedSeries::in_x(bound, poly)
    }

    fn mono(pairs: &[(Var, u32)]) -> Polynomial {
        Polynomial::term(1, Monomial::from_pairs(pairs))
    }

    #[test]
    fn product_is_truncated() {
        let one_plus = x(1, &Polynomial::one() + &Polynomial::var(Var::X, 1));
        let one_minus = x(1, &Polynomial::one() - &Polynomial::var(Var::X, 1));
        assert_eq!(&one_plus * &one_minus, x(1, Polynomial::one()));
    }

    #[test]
    fn additive_identity() {
        let a = x(3, mono(&[(Var::X, 2), (Var::Y, 5)]));
        assert_eq!(&a + &x(3, Polynomial::zero()), a);
    }

    #[test]
    fn exponents_add() {
        let a = x(2, mono(&[(Var::Y, 2), (Var::Z, 3), (Var::X, 1)]));
        let b = x(2, mono(&[(Var::Y, 1), (Var::Z, 1), (Var::X, 1)]));
        assert_eq!(
            &a * &b,
            x(2, mono(&[(Var::Y, 3), (Var::Z, 4), (Var::X, 2)]))
        );
    }

    #[test]
    fn mismatched_bounds_take_the_smaller() {
        let a = x(5, Polynomial::var(Var::X, 3));
        let b = x(2, Polynomial::one());
        assert_eq!((&a + &b).bound(), 2);
        assert_eq!(&a + &b, x(2, Polynomial::one()));
    }

    #[test]
    fn display_groups_by_counting_variable() {
        let poly = Polynomial::one()
            + mono(&[(Var::Y, 2), (Var::Z, 3), (Var::X, 1)])
            + mono(&[(Var::Y, 4), (Var::Z, 4), (Var::X, 2)])
            + mono(&[(Var::Y, 3), (Var::Z, 4), (Var::X, 2)]);
        assert_eq!(
            x(3, poly).to_string(),
            "1 + y^2*z^3*x + (y^3*z^4 + y^4*z^4)*x^2"
        );
        let uni = Polynomial::from_terms([
            (Monomial::var(Var::X, 1), 2),
            (Monomial::var(Var::X, 2), -7),
            (Monomial::var(Var::X, 3), 1),
        ]);
        assert_eq!(x(3, uni).to_string(), "2*x - 7*x^2 + x^3");
        assert_eq!(x(3, Polynomial::zero()).to_string(), "0");
    }

    #[test]
    fn json_round_trip_keeps_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let poly = Polynomial::from_terms([
            (Monomial::one(), BigInt::from(1)),
            (
                Monomial::from_pairs(&[(Var::X, 1), (Var::Q, 2)]),
                -big.clone(),
            ),
        ]);
        let s = x(4, poly);
        let text = s.to_json().to_string();
        assert!(text.contains("-123456789012345678901234567890"));
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(TruncatedSeries::from_json(Var::X, 4, &value).unwrap(), s);
    }

    #[test]
    fn scalar_coefficients_need_a_univariate_series() {
        let s = x(
            2,
            &Polynomial::one() + &Polynomial::term(3, Monomial::var(Var::X, 2)),
        );
        assert_eq!(
            s.scalar_coefficients().unwrap(),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)]
        );
        assert!(x(1, mono(&[(Var::Y, 1)])).scalar_coefficients().is_none());
    }
}
