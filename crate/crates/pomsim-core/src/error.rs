use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter failed its domain constraint.
    InvalidParam {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    /// A pulsed-regime or other validity bound was exceeded.
    RegimeViolation {
        quantity: &'static str,
        value: f64,
        limit: f64,
    },
    /// Fock-space truncation leaves too much Poisson tail mass.
    CutoffTooSmall { cutoff: usize, required: usize },
    /// A tabulated rate model was queried outside its sampled range.
    OutOfTable { x: f64, max_x: f64 },
    /// Adaptive quadrature hit its evaluation cap before converging.
    QuadratureNoConvergence {
        evaluations: usize,
        estimate: f64,
        error_estimate: f64,
    },
    /// The numerically inverted phase density went negative beyond tolerance.
    NegativeDensity { phi: f64, density: f64 },
    /// The decoherence rate vanishes at the probed displacement scale.
    ZeroRate { scale: f64 },
    /// A Monte Carlo estimate was requested with too few samples.
    InsufficientSamples { needed: u64, got: u64 },
    /// A report failed its internal self-consistency audit.
    Inconsistent { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParam {
                name,
                value,
                constraint,
            } => write!(f, "invalid parameter {name} = {value}: requires {constraint}"),
            Error::RegimeViolation {
                quantity,
                value,
                limit,
            } => write!(f, "regime violation: {quantity} = {value} exceeds {limit}"),
            Error::CutoffTooSmall { cutoff, required } => write!(
                f,
                "photon cutoff {cutoff} too small: tail mass above 1e-12, need at least {required}"
            ),
            Error::OutOfTable { x, max_x } => {
                write!(f, "displacement {x} m outside tabulated range (max {max_x} m)")
            }
            Error::QuadratureNoConvergence {
                evaluations,
                estimate,
                error_estimate,
            } => write!(
                f,
                "quadrature did not converge after {evaluations} evaluations (estimate {estimate}, error {error_estimate})"
            ),
            Error::NegativeDensity { phi, density } => {
                write!(f, "phase density negative at phi = {phi}: {density}")
            }
            Error::ZeroRate { scale } => {
                write!(f, "no decoherence at displacement scale {scale} m")
            }
            Error::InsufficientSamples { needed, got } => {
                write!(f, "insufficient samples: got {got}, need at least {needed}")
            }
            Error::Inconsistent { what } => {
                write!(f, "self-consistency audit failed: {what}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
