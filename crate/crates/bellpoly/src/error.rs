use thiserror::Error;

/// Errors raised by series construction and family builders.
///
/// Everything here is a *domain* error: the inputs describe an object that
/// does not exist (division by the zero series, a generating function with a
/// pole at the origin) or a coefficient that was never computed. There are no
/// numerical failure modes; arithmetic itself is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion of a series with no nonzero coefficient up to its order.
    #[error("division by a series that is zero up to its truncation order")]
    ZeroDivision,

    /// The leading coefficient of the series is not a unit in the
    /// coefficient ring, so no inverse series exists there.
    #[error("leading series coefficient is not invertible in the coefficient ring")]
    NonInvertibleCoefficient,

    /// `exp` of a series with a nonzero constant term.
    #[error("series exponential requires valuation >= 1, got valuation {valuation}")]
    PositiveValuationRequired { valuation: i64 },

    /// EGF coefficient extraction from a series with a pole: the object is a
    /// Laurent series, not a power series.
    #[error("not a power series: valuation {valuation} < 0")]
    NegativeValuation { valuation: i64 },

    /// A coefficient beyond the guaranteed truncation order was requested.
    #[error("coefficient of t^{requested} requested but series is only known to order {order}")]
    OrderExceeded { requested: i64, order: i64 },

    /// The Apostol base factor (2^eta t^delta / (lambda e^t + 1))^alpha has a
    /// pole at t = 0: lambda = -1 makes the denominator vanish at the origin
    /// and delta = 0 provides no zero to cancel it.
    #[error(
        "pole at t=0: lambda = -1 with delta = 0 and alpha >= 1 has no power-series expansion"
    )]
    PoleAtZero,
}

pub type Result<T> = std::result::Result<T, Error>;
