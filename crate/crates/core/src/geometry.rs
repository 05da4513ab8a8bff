//! Statistics of the bargraph polyomino induced by a word.
//!
//! Column `i` occupies `[i-1, i] x [0, u_i]`. The semi-perimeter is the column
//! count plus the total upward step along the top profile (the first column
//! rises from the floor); an inner lattice point sits between two adjacent
//! columns strictly below the lower of the two tops.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::words::{self, FibWord, Limits};
use crate::Result;

pub fn area(w: &FibWord) -> u64 {
    w.digits().iter().map(|&d| u64::from(d)).sum()
}

/// Half the boundary length; `0` for the empty word.
pub fn semiperimeter(w: &FibWord) -> u64 {
    let d = w.digits();
    let Some(&first) = d.first() else {
        return 0;
    };
    let ascents: u64 = d
        .windows(2)
        .map(|pair| u64::from(pair[1].saturating_sub(pair[0])))
        .sum();
    d.len() as u64 + u64::from(first) + ascents
}

pub fn inner_points(w: &FibWord) -> u64 {
    w.digits()
        .windows(2)
        .map(|pair| u64::from(pair[0].min(pair[1])) - 1)
        .sum()
}

/// Area, semi-perimeter and inner points of one polyomino, with the outcome
/// of Pick's identity `area = inn + sper - 1` (boundary points = `2 * sper`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PickReport {
    pub area: u64,
    pub sper: u64,
    pub inn: u64,
    pub pick_holds: bool,
}

impl PickReport {
    pub fn new(area: u64, sper: u64, inn: u64) -> Self {
        PickReport {
            area,
            sper,
            inn,
            pick_holds: area + 1 == inn + sper,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "area": self.area,
            "sper": self.sper,
            "inn": self.inn,
            "pick_holds": self.pick_holds,
        })
    }
}

pub fn pick_report(w: &FibWord) -> PickReport {
    PickReport::new(area(w), semiperimeter(w), inner_points(w))
}

/// Totals of the three statistics over all words with `n` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateStats {
    pub p: u8,
    pub n: usize,
    pub count: BigUint,
    pub total_area: BigUint,
    pub total_sper: BigUint,
    pub total_inner: BigUint,
}

impl AggregateStats {
    /// `count = total_inner + total_sper - total_area`.
    pub fn pick_identity_holds(&self) -> bool {
        &self.total_inner + &self.total_sper == &self.count + &self.total_area
    }
}

pub fn aggregate_stats(p: u8, n: usize) -> Result<AggregateStats> {
    aggregate_stats_with(p, n, &Limits::default())
}

pub fn aggregate_stats_with(p: u8, n: usize, limits: &Limits) -> Result<AggregateStats> {
    limits.check_alphabet(i64::from(p))?;
    let expected = words::count_words(p, n)?;
    words::ensure_within_cap(&expected, limits.word_cap)?;

    let (mut count, mut a, mut s, mut i) = (0u64, 0u128, 0u128, 0u128);
    for w in words::WordIter::new(p, n) {
        count += 1;
        a += u128::from(area(&w));
        s += u128::from(semiperimeter(&w));
        i += u128::from(inner_points(&w));
    }
    debug_assert_eq!(BigUint::from(count), expected);
    Ok(AggregateStats {
        p,
        n,
        count: BigUint::from(count),
        total_area: BigUint::from(a),
        total_sper: BigUint::from(s),
        total_inner: BigUint::from(i),
    })
}

/// Glyphs used by [`render_ascii_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsciiStyle {
    pub filled: char,
    pub blank: char,
}

impl Default for AsciiStyle {
    fn default() -> Self {
        AsciiStyle {
            filled: '#',
            blank: ' ',
        }
    }
}

pub fn render_ascii(w: &FibWord) -> String {
    render_ascii_with(w, AsciiStyle::default())
}

/// One character per column, bottom aligned, rows ending in `\n`. Trailing
/// blanks are trimmed from each row.
pub fn render_ascii_with(w: &FibWord, style: AsciiStyle) -> String {
    let heights = w.digits();
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for level in (1..=top).rev() {
        let row: String = heights
            .iter()
            .map(|&h| {
                if h >= level {
                    style.filled
                } else {
                    style.blank
                }
            })
            .collect();
        let _ = writeln!(out, "{}", row.trim_end_matches(style.blank));
    }
    out
}
