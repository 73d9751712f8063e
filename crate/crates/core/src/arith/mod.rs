//! Exact scalars, polynomials and small symbolic determinants.

mod det;
mod parse;
mod poly;
mod rational;

use thiserror::Error;

pub use det::{det3, Matrix3};
pub use parse::parse_poly;
pub use poly::{Assignment, Monomial, MultiPoly, Variable, NVARS};
pub use rational::{
    abs, format_rational, half, int, is_half_odd, is_integer, parse_rational, rat, rational_grid,
    to_i64, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("variable {0} has no value in the assignment")]
    MissingVariable(Variable),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact, remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("not a rational number: {0:?} (expected \"int\" or \"int/int\")")]
    BadRational(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
