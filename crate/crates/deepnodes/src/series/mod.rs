//! Truncated exact power series over arbitrary-precision rationals.
//!
//! Two flavours are provided: [`Series`], univariate in `z`, and
//! [`BiSeries`], bivariate in `(z, t)` where the `z^n` coefficient is a
//! polynomial in `t`.
//!
//! A series of order `N` stores the coefficients of `z^0 .. z^N` with an
//! implicit `O(z^{N+1})` error term. Binary operations truncate to the
//! minimum of the two operand orders, so precision never silently inflates.
//! All arithmetic is exact; nothing in this module touches floating point.

mod bi;
mod error;
mod poly;
mod uni;

pub use bi::BiSeries;
pub use error::SeriesError;
pub use poly::TPoly;
pub use uni::{solve_v, Series};

use num::{BigInt, BigRational};

/// The coefficient scalar: an arbitrary-precision fraction, always stored
/// reduced with a positive denominator (`num::BigRational` guarantees both).
pub type Rat = BigRational;

/// Integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d` as a `Rat`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
