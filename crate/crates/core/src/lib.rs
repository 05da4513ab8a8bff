//! Exact combinatorics of p-Fibonacci words and the bargraph polyominoes they
//! induce.
//!
//! A p-Fibonacci word starts with the digit `p`; every later digit is either
//! one less than its predecessor or resets to `p` (after a `1` only the reset
//! is allowed). Reading the digits as column heights gives a bargraph
//! polyomino, and the crate counts these objects by length, area,
//! semi-perimeter and inner lattice points.
//!
//! - [`words`]: validation, counting and lexicographic enumeration.
//! - [`geometry`]: per-polyomino statistics, Pick's identity, ASCII rendering.
//! - [`series`]: truncated multivariate series, rational generating functions
//!   and the column-transfer construction of the same series.
//! - [`bijections`]: words to restricted compositions and to binary words.
//! - [`oracle`]: brute-force lattice computations used for cross-checking.
//! - [`tables`]: reference values of the total area, area count,
//!   semi-perimeter and inner point sequences.

pub mod bijections;
mod error;
pub mod geometry;
pub mod oracle;
pub mod series;
pub mod tables;
pub mod words;

pub use bijections::{BinaryWord, Composition};
pub use error::{Error, Result};
pub use geometry::{AggregateStats, PickReport};
pub use series::{Monomial, Polynomial, RationalGF, TruncatedSeries, Var};
pub use words::{FibWord, WordState};
