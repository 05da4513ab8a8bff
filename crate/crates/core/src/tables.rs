//! The four tabulated sequences (total area, area counts, total
//! semi-perimeter, total inner points) together with their published values
//! for `2 <= p <= 5`, `1 <= n <= 10`.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::series::{self, expand_rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// `a_p(n)`: total area over the words with `n` columns.
    TotalArea,
    /// `d_p(n)`: number of words of area `n`.
    AreaCounts,
    /// `s_p(n)`: total semi-perimeter over the words with `n` columns.
    TotalSper,
    /// `i_p(n)`: total inner points over the words with `n` columns.
    TotalInner,
}

impl Table {
    pub const ALL: [Table; 4] = [
        Table::TotalArea,
        Table::AreaCounts,
        Table::TotalSper,
        Table::TotalInner,
    ];

    /// Table number 1..=4.
    pub fn from_number(k: u32) -> Result<Table> {
        match k {
            1 => Ok(Table::TotalArea),
            2 => Ok(Table::AreaCounts),
            3 => Ok(Table::TotalSper),
            4 => Ok(Table::TotalInner),
            _ => Err(Error::Parse(format!("no table {k}; expected 1, 2, 3 or 4"))),
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Table::TotalArea => 1,
            Table::AreaCounts => 2,
            Table::TotalSper => 3,
            Table::TotalInner => 4,
        }
    }

    pub fn sequence_name(self) -> &'static str {
        match self {
            Table::TotalArea => "a_p(n)",
            Table::AreaCounts => "d_p(n)",
            Table::TotalSper => "s_p(n)",
            Table::TotalInner => "i_p(n)",
        }
    }

    /// Published value, when the cell is part of the printed table.
    pub fn published(self, p: u8, n: usize) -> Option<u64> {
        let rows = match self {
            Table::TotalArea => &TOTAL_AREA,
            Table::AreaCounts => &AREA_COUNTS,
            Table::TotalSper => &TOTAL_SPER,
            Table::TotalInner => &TOTAL_INNER,
        };
        let row = rows.get(usize::from(p).checked_sub(2)?)?;
        row.get(n.checked_sub(1)?).copied()
    }

    /// Computed row `n = 1..=n_max` for one `p`.
    pub fn row(self, p: u8, n_max: usize) -> Result<Vec<BigUint>> {
        let bound = n_max as u32;
        let from_gf = |r: series::RationalGF| -> Result<Vec<BigUint>> {
            let coeffs = expand_rational(&r, bound)?
                .scalar_coefficients()
                .expect("univariate generating function");
            Ok(coeffs[1..].iter().map(non_negative).collect())
        };
        match self {
            Table::TotalArea => from_gf(series::gf_total_area(p)?),
            Table::TotalSper => from_gf(series::gf_total_sper(p)?),
            Table::TotalInner => from_gf(series::gf_total_inner(p)?),
            Table::AreaCounts => Ok(series::area_counts(p, n_max)?.split_off(1)),
        }
    }
}

fn non_negative(c: &BigInt) -> BigUint {
    c.to_biguint().expect("sequence of totals is non-negative")
}

/// One computed cell next to its published counterpart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub p: u8,
    pub n: usize,
    pub value: BigUint,
    pub published: Option<u64>,
}

impl Cell {
    /// True when a published value exists and differs from the computation.
    pub fn is_discrepancy(&self) -> bool {
        self.published
            .is_some_and(|v| self.value.to_u64() != Some(v))
    }
}

/// All cells for `p in p_min..=p_max`, `n in 1..=n_max`, row by row.
pub fn compute(table: Table, p_min: u8, p_max: u8, n_max: usize) -> Result<Vec<Vec<Cell>>> {
    (p_min..=p_max)
        .map(|p| {
            let row = table.row(p, n_max)?;
            Ok(row
                .into_iter()
                .enumerate()
                .map(|(k, value)| Cell {
                    p,
                    n: k + 1,
                    value,
                    published: table.published(p, k + 1),
                })
                .collect())
        })
        .collect()
}

const TOTAL_AREA: [[u64; 10]; 4] = [
    [2, 7, 16, 35, 70, 136, 256, 473, 860, 1545],
    [3, 11, 31, 73, 168, 370, 790, 1658, 3425, 6989],
    [4, 15, 43, 111, 261, 602, 1350, 2966, 6414, 13714],
    [5, 19, 55, 143, 351, 816, 1865, 4178, 9218, 20094],
];

// Cell (p=2, n=9) is printed as 4; the counting sequence gives 5.
const AREA_COUNTS: [[u64; 10]; 4] = [
    [0, 1, 1, 1, 2, 2, 3, 4, 4, 7],
    [0, 0, 1, 0, 1, 2, 0, 2, 3, 1],
    [0, 0, 0, 1, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 1],
];

const TOTAL_SPER: [[u64; 10]; 4] = [
    [3, 8, 16, 33, 63, 119, 219, 398, 714, 1269],
    [4, 10, 25, 54, 118, 251, 521, 1071, 2176, 4380],
    [5, 12, 29, 69, 152, 335, 727, 1557, 3297, 6931],
    [6, 14, 33, 77, 177, 390, 856, 1859, 4001, 8545],
];

const TOTAL_INNER: [[u64; 10]; 4] = [
    [0, 1, 3, 7, 15, 30, 58, 109, 201, 365],
    [0, 3, 10, 26, 63, 143, 313, 668, 1398, 2883],
    [0, 5, 18, 50, 124, 296, 679, 1517, 3325, 7184],
    [0, 7, 26, 74, 190, 457, 1070, 2439, 5453, 12013],
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_lookup() {
        assert_eq!(Table::TotalArea.published(5, 10), Some(20094));
        assert_eq!(Table::TotalInner.published(4, 5), Some(124));
        assert_eq!(Table::TotalSper.published(1, 1), None);
        assert_eq!(Table::AreaCounts.published(2, 11), None);
        assert_eq!(Table::AreaCounts.published(2, 0), None);
    }

    #[test]
    fn only_the_known_cell_disagrees() {
        for table in Table::ALL {
            let flagged: Vec<(u8, usize)> = compute(table, 2, 5, 10)
                .unwrap()
                .into_iter()
                .flatten()
                .filter(Cell::is_discrepancy)
                .map(|c| (c.p, c.n))
                .collect();
            let expected = if table == Table::AreaCounts {
                vec![(2, 9)]
            } else {
                vec![]
            };
            assert_eq!(flagged, expected, "table {}", table.number());
        }
    }

    #[test]
    fn table_numbers_round_trip() {
        for t in Table::ALL {
            assert_eq!(Table::from_number(t.number()).unwrap(), t);
        }
        assert!(Table::from_number(5).is_err());
    }
}
