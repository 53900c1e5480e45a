use core::fmt;

/// Errors raised by the transforms and their residual checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An axis grid is malformed (count < 2, spacing not positive, ...).
    InvalidGrid(&'static str),
    /// Value buffer length disagrees with the grid shape.
    ShapeMismatch { expected: usize, found: usize },
    /// A stored or produced value is NaN or infinite.
    NonFinite { index: usize },
    /// Two operands live on different grids.
    GridMismatch,
    /// The number of dimensions is unsupported or inconsistent.
    DimensionMismatch { expected: usize, found: usize },
    /// `|sin(alpha)|` is below the degeneracy guard.
    DegenerateOrder { axis: usize, alpha: f64 },
    /// An order lies outside `(-pi, pi)`.
    OrderOutOfRange { axis: usize, alpha: f64 },
    /// Requested output band exceeds the Nyquist limit of the chirped samples.
    Aliasing { required: f64, nyquist: f64 },
    /// `(eta, psi)` is too close to zero for normalization.
    NearOrthogonalWindows { inner: f64 },
    /// Finite-difference stencil does not fit on the grid.
    GridTooCoarse { points: usize, needed: usize },
    /// Too few directions for the angular stencil.
    TooFewDirections { found: usize, needed: usize },
    /// Catch-all for out-of-contract parameters.
    InvalidArgument(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            Error::ShapeMismatch { expected, found } => {
                write!(f, "value count {found} does not match grid size {expected}")
            }
            Error::NonFinite { index } => write!(f, "non-finite value at index {index}"),
            Error::GridMismatch => f.write_str("operands are sampled on different grids"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} dimension(s), found {found}")
            }
            Error::DegenerateOrder { axis, alpha } => write!(
                f,
                "degenerate fractional order {alpha} on axis {axis}: |sin(alpha)| < eps_alpha = {:e}",
                crate::order::DEGENERACY_EPS
            ),
            Error::OrderOutOfRange { axis, alpha } => {
                write!(f, "fractional order {alpha} on axis {axis} is outside (-pi, pi)")
            }
            Error::Aliasing { required, nyquist } => write!(
                f,
                "output band {required} exceeds the Nyquist limit {nyquist} of the chirped samples"
            ),
            Error::NearOrthogonalWindows { inner } => {
                write!(f, "|(eta, psi)| = {inner} is below the normalization guard")
            }
            Error::GridTooCoarse { points, needed } => write!(
                f,
                "grid has {points} points but the difference stencil needs {needed}"
            ),
            Error::TooFewDirections { found, needed } => {
                write!(f, "{found} directions given, angular stencil needs at least {needed}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
