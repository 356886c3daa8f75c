//! Exact rational and big-integer arithmetic used everywhere else.

mod binom;
mod eps;
mod poly;
mod series;

use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use binom::{
    binomial, binomial_general, catalan_convolution, factorial, mcat_level_closed_form, raney,
    stirling_table, StirlingTable,
};
pub use eps::EpsRational;
pub use poly::{poly_interpolate, CharPoly, Poly};
pub use series::{Series, TruncatedEgf};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    ZeroDenominator,
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series must have a nonzero constant term to be inverted")]
    NotInvertible,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstant,
    #[error("interpolation nodes must be distinct")]
    DuplicateNode,
    #[error("polynomial is not integral and monic")]
    NotCharPoly,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let bad = || NumError::Parse(String::from(s));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(NumError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn format_rational(r: &Rational) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
