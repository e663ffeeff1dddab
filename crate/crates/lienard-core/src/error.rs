//! Error type shared by all modules.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Domain errors raised by the analysis and construction routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A polynomial identically zero on the queried interval has no
    /// well-defined root set.
    IndeterminateRoots,
    /// Operation requires a coercive potential (even degree, positive
    /// leading coefficient).
    NonCoercive,
    /// The potential has an inflection-type critical point, which the
    /// annulus decomposition does not handle.
    InflectionCritical { x: f64 },
    /// Energy level outside the period annulus (or too close to a critical
    /// energy for the quadrature to be meaningful).
    EnergyOutOfAnnulus { h: f64 },
    /// Adaptive quadrature did not reach the target accuracy within the
    /// node budget.
    QuadratureNoConvergence,
    /// Denominator integral is numerically zero.
    DivisionNearZero,
    /// Zero-placement targets produce a singular or invalid linear system.
    DegenerateTargets,
    /// Post-verification found a different number of sign-change zeros than
    /// requested.
    PlacementFailed { expected: usize, found: usize },
    /// Doubling shift `x0` does not clear the seed's cycle region.
    ShiftTooSmall { x0: f64, x_star: f64 },
    /// The operation needs a certificate whose zeros have been located
    /// numerically.
    CertificateNotRealized,
    /// Certificate degrees may only be relaxed, never tightened.
    InvalidWeaken,
    /// Sequence index outside `1..=2^p`, or a closed form queried at an
    /// interior index.
    IndexOutOfRange,
    /// Recursion depth would overflow the integer certificate arithmetic.
    Overflow,
    /// Numeric realization is only supported up to composition depth 2.
    DepthUnsupported,
    /// Trajectory left the configured bounding box.
    UnboundedOrbit,
    /// Step budget exhausted before the trajectory returned to the section.
    NoReturn,
    /// Displacement evaluated to a non-finite value.
    NonFiniteDisplacement,
    /// Cycle count did not stabilize within the allowed halvings of ε.
    Unresolved,
    /// Precondition violation described by the message.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndeterminateRoots => write!(f, "indeterminate roots"),
            Error::NonCoercive => write!(f, "potential is not coercive"),
            Error::InflectionCritical { x } => {
                write!(f, "inflection-type critical point at x = {x}")
            }
            Error::EnergyOutOfAnnulus { h } => write!(f, "energy out of annulus: h = {h}"),
            Error::QuadratureNoConvergence => write!(f, "quadrature did not converge"),
            Error::DivisionNearZero => write!(f, "division by near-zero integral"),
            Error::DegenerateTargets => write!(f, "degenerate targets"),
            Error::PlacementFailed { expected, found } => {
                write!(f, "placement failed: expected {expected} zeros, found {found}")
            }
            Error::ShiftTooSmall { x0, x_star } => {
                write!(f, "shift too small: x0 = {x0} must be < -x* = {}", -x_star)
            }
            Error::CertificateNotRealized => write!(f, "certificate not numerically realized"),
            Error::InvalidWeaken => write!(f, "certificate degrees may not be strengthened"),
            Error::IndexOutOfRange => write!(f, "index out of range"),
            Error::Overflow => write!(f, "certificate arithmetic overflow"),
            Error::DepthUnsupported => write!(f, "composition depth not supported numerically"),
            Error::UnboundedOrbit => write!(f, "unbounded orbit"),
            Error::NoReturn => write!(f, "no return"),
            Error::NonFiniteDisplacement => write!(f, "non-finite displacement"),
            Error::Unresolved => write!(f, "unresolved at desk scale"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
