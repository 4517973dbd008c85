//! Exact rationals, decimal rendering and a binary floating-point type
//! with explicit precision.

mod approx;
mod decimal;
mod rational;

pub use approx::{ApproxReal, DEFAULT_PRECISION};
pub use decimal::{matched_digits, matched_digits_at, rat_to_decimal, DecimalString};
pub use rational::{format_rational, int, parse_rational, rat, rat_make, Integer, RatStr, Rational};
pub(crate) use rational::{from_wire, to_wire};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a number")]
    Parse(String),
    #[error("reference has {have} digits but {need} are needed")]
    InsufficientReferenceDigits { have: usize, need: usize },
}
