//! Exact scalar, polynomial, rational-function and truncated Laurent-series arithmetic.

pub mod laurent;
pub mod mobius;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod reversion;

pub use laurent::{residue, series_expand, LaurentSeries};
pub use mobius::MobiusMap;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{parse_rational, rat, ratio, to_canonical, Rational};
pub use reversion::inverse_branch_series;
