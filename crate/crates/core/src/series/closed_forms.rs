//! Closed rational forms of the generating functions, transcribed as stated
//! and normalised so that the denominator has constant term 1.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{Monomial, Polynomial, RationalGF, Var};
use crate::words::check_alphabet;
use crate::Result;

/// `(p + i)(p - i + 1) / 2`: the area of a maximal descending block
/// `p, p-1, ..., i`.
fn block_area(p: u32, i: u32) -> u32 {
    (p + i) * (p - i + 1) / 2
}

fn term(c: i64, pairs: &[(Var, u32)]) -> Polynomial {
    Polynomial::term(c, Monomial::from_pairs(pairs))
}

fn x_pow(e: u32) -> Polynomial {
    Polynomial::var(Var::X, e)
}

fn int(c: i64) -> Polynomial {
    Polynomial::constant(c)
}

/// Columns (`x`), area (`y`) and semi-perimeter (`z`):
///
/// `1 + sum_{i=1..p} x^{p-i+1} y^{(p+i)(p-i+1)/2} z^{2p-i+1}`
/// over `1 - x y^p z - sum_{i=1..p-1} x^{p-i+1} y^{(p+i)(p-i+1)/2} z^{2p-2i+1}`,
/// combined over the common denominator.
pub fn closed_form_f(p: u8) -> Result<RationalGF> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    let numerator_sum: Polynomial = (1..=p)
        .map(|i| {
            term(
                1,
                &[
                    (Var::X, p - i + 1),
                    (Var::Y, block_area(p, i)),
                    (Var::Z, 2 * p - i + 1),
                ],
            )
        })
        .sum();
    let denominator_sum: Polynomial = (1..p)
        .map(|i| {
            term(
                1,
                &[
                    (Var::X, p - i + 1),
                    (Var::Y, block_area(p, i)),
                    (Var::Z, 2 * p - 2 * i + 1),
                ],
            )
        })
        .sum();
    let den = int(1) - term(1, &[(Var::X, 1), (Var::Y, p), (Var::Z, 1)]) - denominator_sum;
    RationalGF::new(&den + &numerator_sum, den, Var::X)
}

/// Columns (`x`) and inner points (`q`):
///
/// `1 + sum_{i=1..p} x^{p-i+1} q^{(p-i)(p+i-3)/2}`
/// over `1 - sum_{i=1..p} x^{p-i+1} q^{((p-i)(p+i-3) + 2(i-1))/2}`.
pub fn closed_form_g(p: u8) -> Result<RationalGF> {
    let p = i64::from(check_alphabet(i64::from(p))?);
    let q_exp = |i: i64| -> u32 { ((p - i) * (p + i - 3) / 2) as u32 };
    let numerator_sum: Polynomial = (1..=p)
        .map(|i| term(1, &[(Var::X, (p - i + 1) as u32), (Var::Q, q_exp(i))]))
        .sum();
    let denominator_sum: Polynomial = (1..=p)
        .map(|i| {
            let e = ((p - i) * (p + i - 3) + 2 * (i - 1)) / 2;
            term(1, &[(Var::X, (p - i + 1) as u32), (Var::Q, e as u32)])
        })
        .sum();
    let den = int(1) - denominator_sum;
    RationalGF::new(&den + &numerator_sum, den, Var::X)
}

/// `(1 - 2x + x^{p+1})^2`, the squared denominator shared by the totals.
fn squared_kernel(p: u32) -> Polynomial {
    (int(1) - term(2, &[(Var::X, 1)]) + x_pow(p + 1)).pow(2)
}

/// Total area over all words with `n` columns:
/// `sum_{i=1..p} i(2p-i+1) x^i / (2 (1 - x - ... - x^p)^2)`.
pub fn gf_total_area(p: u8) -> Result<RationalGF> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    let num: Polynomial = (1..=p)
        .map(|i| term(i64::from(i * (2 * p - i + 1)), &[(Var::X, i)]))
        .sum();
    let kernel = int(1) - (1..=p).map(x_pow).sum::<Polynomial>();
    RationalGF::new(num, kernel.pow(2).scale(&BigInt::from(2)), Var::X)
}

/// Total semi-perimeter:
/// `[p(1-x)x(1 - 2x - 2x^p + 3x^{p+1}) - x(1-x^p)(-1 + x - x^2 + x^{p+2})]`
/// over `(1-x)(1 - 2x + x^{p+1})^2`.
pub fn gf_total_sper(p: u8) -> Result<RationalGF> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    let pc = i64::from(p);
    let one_minus_x = int(1) - x_pow(1);
    let left = int(pc)
        * one_minus_x.clone()
        * x_pow(1)
        * (int(1) - term(2, &[(Var::X, 1)]) - term(2, &[(Var::X, p)])
            + term(3, &[(Var::X, p + 1)]));
    let right = x_pow(1) * (int(1) - x_pow(p)) * (int(-1) + x_pow(1) - x_pow(2) + x_pow(p + 2));
    RationalGF::new(left - right, one_minus_x * squared_kernel(p), Var::X)
}

/// Total inner points:
/// `x((6-4p)x - (2-4p)x^2 - (3-p)p x^p - 2(2-p)^2 x^{p+1} + (2-5p+p^2) x^{p+2} + 2x^{2p+1})`
/// over `2(-1+x)(1 - 2x + x^{p+1})^2`.
pub fn gf_total_inner(p: u8) -> Result<RationalGF> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    let pc = i64::from(p);
    let bracket = term(6 - 4 * pc, &[(Var::X, 1)])
        - term(2 - 4 * pc, &[(Var::X, 2)])
        - term((3 - pc) * pc, &[(Var::X, p)])
        - term(2 * (2 - pc) * (2 - pc), &[(Var::X, p + 1)])
        + term(2 - 5 * pc + pc * pc, &[(Var::X, p + 2)])
        + term(2, &[(Var::X, 2 * p + 1)]);
    let num = x_pow(1) * bracket;
    let den = int(2) * (int(-1) + x_pow(1)) * squared_kernel(p);
    RationalGF::new(num, den, Var::X)
}

/// The part sizes `{(p+i)(p-i+1)/2 : 1 <= i <= p}`, ascending.
pub fn parts_set(p: u8) -> Result<Vec<u64>> {
    let p = u32::from(check_alphabet(i64::from(p))?);
    Ok((1..=p).rev().map(|i| u64::from(block_area(p, i))).collect())
}

/// Polyominoes counted by area (`y`): `1 / (1 - sum_{a in parts} y^a)`.
pub fn gf_area_counts(p: u8) -> Result<RationalGF> {
    let parts = parts_set(p)?;
    let den = int(1)
        - parts
            .iter()
            .map(|&a| Polynomial::var(Var::Y, a as u32))
            .sum::<Polynomial>();
    RationalGF::new(Polynomial::one(), den, Var::Y)
}

/// `d_p(0..=max_area)` from `d(n) = sum_{a in parts} d(n - a)`, `d(0) = 1`.
pub fn area_counts(p: u8, max_area: usize) -> Result<Vec<BigUint>> {
    let parts = parts_set(p)?;
    let mut d: Vec<BigUint> = Vec::with_capacity(max_area + 1);
    for n in 0..=max_area {
        if n == 0 {
            d.push(BigUint::from(1u32));
            continue;
        }
        let v = parts
            .iter()
            .filter(|&&a| a as usize <= n)
            .fold(BigUint::zero(), |acc, &a| acc + &d[n - a as usize]);
        d.push(v);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::expand_rational;

    fn coeffs(r: &RationalGF, n: u32) -> Vec<i64> {
        expand_rational(r, n)
            .unwrap()
            .scalar_coefficients()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn closed_form_f_examples() {
        let f2 = closed_form_f(2).unwrap();
        assert_eq!(
            f2.to_string(),
            "(1 - x*y^2*z + x*y^2*z^3 - x^2*y^3*z^3 + x^2*y^3*z^4)/(1 - x*y^2*z - x^2*y^3*z^3)"
        );
        assert_eq!(
            closed_form_f(3).unwrap().denominator().to_string(),
            "1 - x*y^3*z - x^2*y^5*z^3 - x^3*y^6*z^5"
        );
        assert_eq!(
            closed_form_f(1).unwrap().to_string(),
            "(1 - x*y*z + x*y*z^2)/(1 - x*y*z)"
        );
    }

    #[test]
    fn closed_form_g_examples() {
        assert_eq!(
            closed_form_g(2).unwrap().to_string(),
            "(1 + x - x*q)/(1 - x*q - x^2)"
        );
        // (1 + (1-q^2)x + (1-q)q x^2) / (1 - q x^3 - q^2 x (1+x))
        let g3 = closed_form_g(3).unwrap();
        let x = |e| Polynomial::var(Var::X, e);
        let q = |e| Polynomial::var(Var::Q, e);
        let num = int(1) + (int(1) - q(2)) * x(1) + (int(1) - q(1)) * q(1) * x(2);
        let den = int(1) - q(1) * x(3) - q(2) * x(1) * (int(1) + x(1));
        assert_eq!(g3.numerator(), &num);
        assert_eq!(g3.denominator(), &den);
        // (1 + (1-q^3)x + q^2(1-q^2)x^2 + (1-q)q^3 x^3) / (1 - q^4 x^2 (1+x) - q^3 (x + x^4))
        let g4 = closed_form_g(4).unwrap();
        let num = int(1)
            + (int(1) - q(3)) * x(1)
            + q(2) * (int(1) - q(2)) * x(2)
            + (int(1) - q(1)) * q(3) * x(3);
        let den = int(1) - q(4) * x(2) * (int(1) + x(1)) - q(3) * (x(1) + x(4));
        assert_eq!(g4.numerator(), &num);
        assert_eq!(g4.denominator(), &den);
    }

    #[test]
    fn total_area_values() {
        assert_eq!(coeffs(&gf_total_area(2).unwrap(), 5), [0, 2, 7, 16, 35, 70]);
        assert_eq!(coeffs(&gf_total_area(5).unwrap(), 10)[10], 20094);
        assert_eq!(coeffs(&gf_total_area(3).unwrap(), 1)[1], 3);
    }

    #[test]
    fn total_sper_values() {
        assert_eq!(coeffs(&gf_total_sper(2).unwrap(), 5), [0, 3, 8, 16, 33, 63]);
        assert_eq!(coeffs(&gf_total_sper(4).unwrap(), 5)[5], 152);
        assert_eq!(coeffs(&gf_total_sper(3).unwrap(), 1)[1], 4);
    }

    #[test]
    fn total_inner_values() {
        assert_eq!(coeffs(&gf_total_inner(2).unwrap(), 5), [0, 0, 1, 3, 7, 15]);
        assert_eq!(coeffs(&gf_total_inner(4).unwrap(), 5)[5], 124);
        for p in 1..=8 {
            assert_eq!(coeffs(&gf_total_inner(p).unwrap(), 1)[1], 0);
        }
    }

    #[test]
    fn parts_sets() {
        assert_eq!(parts_set(2).unwrap(), [2, 3]);
        assert_eq!(parts_set(3).unwrap(), [3, 5, 6]);
        assert_eq!(parts_set(1).unwrap(), [1]);
        assert_eq!(parts_set(5).unwrap(), [5, 9, 12, 14, 15]);
    }

    #[test]
    fn area_count_values() {
        let d3 = area_counts(3, 10).unwrap();
        assert_eq!(d3[9], BigUint::from(3u32));
        assert_eq!(area_counts(5, 5).unwrap()[5], BigUint::from(1u32));
        assert_eq!(area_counts(2, 9).unwrap()[9], BigUint::from(5u32));
    }

    #[test]
    fn area_count_series_matches_recurrence() {
        for p in 1..=6 {
            let series = coeffs(&gf_area_counts(p).unwrap(), 40);
            let rec = area_counts(p, 40).unwrap();
            for (a, b) in series.iter().zip(&rec) {
                assert_eq!(BigUint::from(*a as u64), *b);
            }
        }
    }
}
