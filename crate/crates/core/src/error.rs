use core::fmt;

use crate::numerics::{QuadratureResult, SnrDomain};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument is outside the operation's domain.
    InvalidArgument {
        name: &'static str,
        reason: &'static str,
    },
    /// Modulation order is not a supported power of two (or not square for QAM).
    InvalidOrder {
        family: &'static str,
        order: u32,
    },
    /// Two SNR quantities that must share a unit do not.
    DomainMismatch {
        expected: SnrDomain,
        found: SnrDomain,
    },
    /// A BER curve or grid violates its construction invariants.
    InvalidCurve(&'static str),
    TooFewPoints {
        found: usize,
        required: usize,
    },
    /// Total sum of squares is zero; R² is undefined.
    ConstantData,
    /// Adaptive quadrature exhausted its evaluation budget.
    QuadratureNotConverged(QuadratureResult),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument { name, reason } => write!(f, "invalid `{name}`: {reason}"),
            Error::InvalidOrder { family, order } => {
                write!(f, "unsupported {family} order {order}")
            }
            Error::DomainMismatch { expected, found } => {
                write!(f, "SNR domain mismatch: expected {expected}, found {found}")
            }
            Error::InvalidCurve(reason) => write!(f, "invalid BER curve: {reason}"),
            Error::TooFewPoints { found, required } => {
                write!(f, "need at least {required} points, got {found}")
            }
            Error::ConstantData => f.write_str("data has zero total variance"),
            Error::QuadratureNotConverged(best) => write!(
                f,
                "quadrature did not converge after {} evaluations (best {:e} ± {:e})",
                best.evaluations, best.value, best.error_estimate
            ),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn invalid(name: &'static str, reason: &'static str) -> Error {
    Error::InvalidArgument { name, reason }
}
