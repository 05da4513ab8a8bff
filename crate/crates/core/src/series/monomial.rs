use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    Q,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::Q];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Q => "q",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variable {s:?}")))
    }
}

/// A product `x^a y^b z^c q^d`. Absent variables have exponent 0.
///
/// Ordering: by `x`-degree, then by total degree in the other variables, then
/// by descending `y`, `z`, `q` exponents. Within one power of `x` this puts
/// `y^6 z^5` before `y^5 z^6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; 4],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut m = Monomial::one();
        m.exps[v.index()] = exp;
        m
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m.exps[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: Var, exp: u32) -> Self {
        self.exps[v.index()] = exp;
        self
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Non-zero exponents in variable order.
    pub fn exponents(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .into_iter()
            .map(|v| (v, self.exp(v)))
            .filter(|&(_, e)| e > 0)
    }

    fn rest_degree(&self) -> u32 {
        self.exps[1..].iter().sum()
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(rhs.exps) {
            *e += r;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps[0]
            .cmp(&other.exps[0])
            .then(self.rest_degree().cmp(&other.rest_degree()))
            .then_with(|| other.exps[1..].cmp(&self.exps[1..]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x*y^2*z`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.exponents() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}
