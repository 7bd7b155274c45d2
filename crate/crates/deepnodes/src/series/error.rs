use thiserror::Error;

/// Errors raised by series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The divisor is identically zero up to its truncation order.
    #[error("division by a series that is zero to its truncation order")]
    DivisionByZeroSeries,
    /// The division does not close inside truncated power series: the
    /// divisor's valuation exceeds the dividend's, or a per-coefficient
    /// polynomial division leaves a remainder.
    #[error("non-exact series division: {0}")]
    NonExactDivision(&'static str),
    /// `sqrt` requires constant term 1.
    #[error("sqrt requires constant term 1, found {0}")]
    BadConstantTerm(String),
    /// Coefficient index beyond the truncation order.
    #[error("coefficient index {index} out of range (order {order})")]
    OutOfRange { index: usize, order: usize },
    /// A `z^n` coefficient carries a `t`-degree above `n`. For series with
    /// combinatorial meaning this bound is a theorem (a tree with `n` nodes
    /// has at most `n` deepest nodes), so tripping it signals a bug.
    #[error("t-degree {degree} exceeds z-degree {z_power}")]
    TDegreeOverflow { z_power: usize, degree: usize },
    /// Closed-form route requested outside its validity range.
    #[error("closed form not defined for h = {0}")]
    ClosedFormRange(usize),
}
