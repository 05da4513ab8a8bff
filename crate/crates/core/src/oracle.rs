//! Brute-force reference computations.
//!
//! Nothing here calls the closed-form statistics in [`crate::geometry`], the
//! lexicographic enumerator in [`crate::words`] or the series constructions.
//! Polyominoes are built as explicit cell sets and counted directly.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::geometry::PickReport;
use crate::series::{Monomial, Polynomial, TruncatedSeries, Var};
use crate::words::{FibWord, Limits};
use crate::{Error, Result};

/// Which statistics [`brute_force_generating_series`] records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// `x^n y^area z^sper`
    AreaPerimeter,
    /// `x^n q^inn`
    InnerPoints,
}

/// Counts cells, boundary edges and fully surrounded lattice points of the
/// bargraph whose cell `(i, j)` is the unit square `[i-1, i] x [j-1, j]`.
pub fn lattice_stats(w: &FibWord) -> PickReport {
    let cells: HashSet<(i64, i64)> = w
        .digits()
        .iter()
        .enumerate()
        .flat_map(|(i, &h)| (1..=i64::from(h)).map(move |j| (i as i64 + 1, j)))
        .collect();

    let mut boundary_edges = 0u64;
    for &(i, j) in &cells {
        for (di, dj) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            if !cells.contains(&(i + di, j + dj)) {
                boundary_edges += 1;
            }
        }
    }
    assert!(
        boundary_edges.is_multiple_of(2),
        "perimeter of a bargraph is even"
    );

    // lattice point (a, b) touches cells (a, b), (a+1, b), (a, b+1), (a+1, b+1)
    let width = w.len() as i64;
    let height = w.digits().iter().copied().max().map_or(0, i64::from);
    let mut inner = 0u64;
    for a in 0..=width {
        for b in 0..=height {
            let surrounded = [(a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)]
                .iter()
                .all(|c| cells.contains(c));
            if surrounded {
                inner += 1;
            }
        }
    }

    PickReport::new(cells.len() as u64, boundary_edges / 2, inner)
}

/// Walks every word of length `1..=max_len`, calling `visit` on each.
/// Children follow the construction rule directly: after `d >= 2` come
/// `d - 1` and `p`, after `1` only `p`.
fn walk_words(
    p: u8,
    max_len: usize,
    prune: &dyn Fn(&[u8]) -> bool,
    visit: &mut dyn FnMut(&[u8]) -> Result<()>,
) -> Result<()> {
    fn go(
        p: u8,
        max_len: usize,
        digits: &mut Vec<u8>,
        prune: &dyn Fn(&[u8]) -> bool,
        visit: &mut dyn FnMut(&[u8]) -> Result<()>,
    ) -> Result<()> {
        if prune(digits) {
            return Ok(());
        }
        visit(digits)?;
        if digits.len() == max_len {
            return Ok(());
        }
        let last = *digits.last().expect("walk starts from the word p");
        let mut options = vec![p];
        if last >= 2 {
            options.insert(0, last - 1);
        }
        for d in options {
            digits.push(d);
            go(p, max_len, digits, prune, visit)?;
            digits.pop();
        }
        Ok(())
    }
    if max_len == 0 {
        return Ok(());
    }
    go(p, max_len, &mut vec![p], prune, visit)
}

fn visit_counter(cap: u64) -> impl FnMut() -> Result<()> {
    let mut seen = 0u64;
    move || {
        seen += 1;
        if seen > cap {
            return Err(Error::CapExceeded {
                requested: format!("more than {cap}"),
                cap,
            });
        }
        Ok(())
    }
}

pub fn brute_force_generating_series(
    p: u8,
    bound: u32,
    stat: Statistic,
) -> Result<TruncatedSeries> {
    brute_force_generating_series_with(p, bound, stat, &Limits::default())
}

/// Sums the monomial of every word with at most `bound` columns, plus `1` for
/// the empty word.
pub fn brute_force_generating_series_with(
    p: u8,
    bound: u32,
    stat: Statistic,
    limits: &Limits,
) -> Result<TruncatedSeries> {
    limits.check_alphabet(i64::from(p))?;
    let mut poly = Polynomial::one();
    let mut tick = visit_counter(limits.word_cap);
    let one = BigInt::from(1);
    walk_words(p, bound as usize, &|_| false, &mut |digits| {
        tick()?;
        let w = FibWord::new(p, digits.to_vec())?;
        let r = lattice_stats(&w);
        let n = digits.len() as u32;
        let m = match stat {
            Statistic::AreaPerimeter => Monomial::from_pairs(&[
                (Var::X, n),
                (Var::Y, r.area as u32),
                (Var::Z, r.sper as u32),
            ]),
            Statistic::InnerPoints => Monomial::from_pairs(&[(Var::X, n), (Var::Q, r.inn as u32)]),
        };
        poly.add_term(m, one.clone());
        Ok(())
    })?;
    Ok(TruncatedSeries::in_x(bound, poly))
}

pub fn brute_force_area_distribution(p: u8, max_area: usize) -> Result<Vec<u64>> {
    brute_force_area_distribution_with(p, max_area, &Limits::default())
}

/// Number of words of each digit sum `0..=max_area`, by depth-first search
/// that abandons a branch once its digit sum exceeds `max_area`.
pub fn brute_force_area_distribution_with(
    p: u8,
    max_area: usize,
    limits: &Limits,
) -> Result<Vec<u64>> {
    limits.check_alphabet(i64::from(p))?;
    let mut counts = vec![0u64; max_area + 1];
    counts[0] = 1;
    let mut tick = visit_counter(limits.word_cap);
    let digit_sum = |d: &[u8]| d.iter().map(|&x| x as usize).sum::<usize>();
    walk_words(p, max_area, &|d| digit_sum(d) > max_area, &mut |digits| {
        tick()?;
        counts[digit_sum(digits)] += 1;
        Ok(())
    })?;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(p: u8, s: &str) -> (u64, u64, u64) {
        let r = lattice_stats(&FibWord::parse(p, s).unwrap());
        assert!(r.pick_holds);
        (r.area, r.sper, r.inn)
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(report(3, "321"), (6, 6, 1));
        assert_eq!(report(4, "4"), (4, 5, 0));
        assert_eq!(report(3, "333"), (9, 6, 4));
        assert_eq!(report(3, "32323"), (13, 10, 4));
        assert_eq!(report(2, "21"), (3, 4, 0));
    }

    #[test]
    fn series_examples() {
        let f2 = brute_force_generating_series(2, 3, Statistic::AreaPerimeter).unwrap();
        assert_eq!(
            f2.to_string(),
            "1 + y^2*z^3*x + (y^3*z^4 + y^4*z^4)*x^2 + (y^5*z^5 + y^6*z^5 + y^5*z^6)*x^3"
        );
        let g3 = brute_force_generating_series(3, 4, Statistic::InnerPoints).unwrap();
        assert_eq!(
            g3.to_string(),
            "1 + x + (q + q^2)*x^2 + (q + q^2 + q^3 + q^4)*x^3 + (q + 2*q^3 + 2*q^4 + q^5 + q^6)*x^4"
        );
        for p in 1..=4 {
            for stat in [Statistic::AreaPerimeter, Statistic::InnerPoints] {
                let s = brute_force_generating_series(p, 0, stat).unwrap();
                assert_eq!(s.polynomial(), &Polynomial::one());
            }
        }
    }

    #[test]
    fn area_distribution_examples() {
        assert_eq!(
            brute_force_area_distribution(3, 10).unwrap()[1..],
            [0, 0, 1, 0, 1, 2, 0, 2, 3, 1]
        );
        assert_eq!(brute_force_area_distribution(2, 9).unwrap()[9], 5);
        assert_eq!(brute_force_area_distribution(5, 5).unwrap()[5], 1);
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits {
            word_cap: 10,
            ..Limits::default()
        };
        assert!(matches!(
            brute_force_generating_series_with(3, 6, Statistic::InnerPoints, &limits),
            Err(Error::CapExceeded { .. })
        ));
        assert!(brute_force_area_distribution_with(2, 40, &limits).is_err());
    }
}
