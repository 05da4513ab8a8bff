//! Column-by-column construction of the generating functions.
//!
//! A polyomino whose last column has height `i < p` is a polyomino ending at
//! height `i + 1` followed by a column of height `i`; one ending at `p` is
//! either the single column `p` or any non-empty polyomino followed by a
//! column of height `p`. Tracking one polynomial per final height and
//! extending one column at a time yields the coefficient of each `x^n`.

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Polynomial, TruncatedSeries, Var};
use crate::words::check_alphabet;
use crate::Result;

/// Weights for appending a column: `descend(i)` for a column of height `i`
/// after one of height `i + 1`, `reset(j)` for a column of height `p` after
/// one of height `j`.
trait ColumnWeights {
    fn first(&self) -> Monomial;
    fn descend(&self, i: u32) -> Monomial;
    fn reset(&self, j: u32) -> Monomial;
}

/// `y^area z^sper`.
struct AreaPerimeter {
    p: u32,
}

impl ColumnWeights for AreaPerimeter {
    fn first(&self) -> Monomial {
        Monomial::from_pairs(&[(Var::Y, self.p), (Var::Z, self.p + 1)])
    }

    fn descend(&self, i: u32) -> Monomial {
        Monomial::from_pairs(&[(Var::Y, i), (Var::Z, 1)])
    }

    fn reset(&self, j: u32) -> Monomial {
        Monomial::from_pairs(&[(Var::Y, self.p), (Var::Z, self.p + 1 - j)])
    }
}

/// `q^inn`.
struct InnerPoints;

impl ColumnWeights for InnerPoints {
    fn first(&self) -> Monomial {
        Monomial::one()
    }

    fn descend(&self, i: u32) -> Monomial {
        Monomial::var(Var::Q, i - 1)
    }

    fn reset(&self, j: u32) -> Monomial {
        Monomial::var(Var::Q, j - 1)
    }
}

fn transfer(p: u32, bound: u32, weights: &impl ColumnWeights) -> TruncatedSeries {
    let one = BigInt::one();
    let mut total = Polynomial::one();
    // by_height[i - 1]: weight polynomial of polyominoes with n columns ending at height i
    let mut by_height: Vec<Polynomial> = vec![Polynomial::zero(); p as usize];
    for n in 1..=bound {
        let next: Vec<Polynomial> = if n == 1 {
            let mut v = vec![Polynomial::zero(); p as usize];
            v[p as usize - 1] = Polynomial::term(1, weights.first());
            v
        } else {
            (1..=p)
                .map(|i| {
                    if i < p {
                        by_height[i as usize].mul_term(weights.descend(i), &one)
                    } else {
                        (1..=p)
                            .map(|j| by_height[j as usize - 1].mul_term(weights.reset(j), &one))
                            .sum()
                    }
                })
                .collect()
        };
        by_height = next;
        let column = Monomial::var(Var::X, n);
        for poly in &by_height {
            total = &total + &poly.mul_term(column, &one);
        }
    }
    TruncatedSeries::in_x(bound, total)
}

/// `F_p(x; y, z)` through `x^bound` by the column transfer.
pub fn series_f_dp(p: u8, bound: u32) -> Result<TruncatedSeries> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    Ok(transfer(p, bound, &AreaPerimeter { p }))
}

/// `G_p(x; q)` through `x^bound` by the column transfer.
pub fn series_g_dp(p: u8, bound: u32) -> Result<TruncatedSeries> {
    check_alphabet(i64::from(p))?;
    Ok(transfer(u32::from(p), bound, &InnerPoints))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yz(y: u32, z: u32) -> Polynomial {
        Polynomial::term(1, Monomial::from_pairs(&[(Var::Y, y), (Var::Z, z)]))
    }

    fn q(e: u32) -> Polynomial {
        Polynomial::var(Var::Q, e)
    }

    #[test]
    fn f_coefficients() {
        let f4 = series_f_dp(4, 3).unwrap();
        assert_eq!(
            f4.coefficient(3),
            yz(9, 7) + yz(11, 7) + yz(12, 7) + yz(11, 8)
        );
        let f3 = series_f_dp(3, 1).unwrap();
        assert_eq!(f3.to_string(), "1 + y^3*z^4*x");
        let f2 = series_f_dp(2, 3).unwrap();
        assert_eq!(f2.coefficient(3), yz(5, 5) + yz(6, 5) + yz(5, 6));
    }

    #[test]
    fn g_coefficients() {
        let g2 = series_g_dp(2, 4).unwrap();
        assert_eq!(
            g2.coefficient(4),
            Polynomial::one() + q(1) + q(1) + q(2) + q(3)
        );
        let g3 = series_g_dp(3, 3).unwrap();
        assert_eq!(g3.coefficient(3), q(1) + q(2) + q(3) + q(4));
        for p in 1..=5 {
            assert_eq!(series_g_dp(p, 0).unwrap().polynomial(), &Polynomial::one());
        }
    }
}
