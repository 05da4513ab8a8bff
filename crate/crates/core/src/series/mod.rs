//! Exact series arithmetic and the generating functions of p-Fibonacci
//! polyominoes.
//!
//! Variables: `x` marks columns, `y` area, `z` semi-perimeter and `q` inner
//! points. Every generating function is built twice, once by formal division
//! of its closed rational form ([`closed_form_f`], [`closed_form_g`]) and once
//! by the column-transfer recurrence ([`series_f_dp`], [`series_g_dp`]).

mod closed_forms;
mod monomial;
mod poly;
mod rational;
mod transfer;
mod truncated;

pub use closed_forms::{
    area_counts, closed_form_f, closed_form_g, gf_area_counts, gf_total_area, gf_total_inner,
    gf_total_sper, parts_set,
};
pub use monomial::{Monomial, Var};
pub use poly::Polynomial;
pub use rational::{expand_rational, RationalGF};
pub use transfer::{series_f_dp, series_g_dp};
pub use truncated::TruncatedSeries;
