use thiserror::Error;

/// Errors raised by patch construction, evaluation and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("all blending values vanish (evaluation at a base point)")]
    AllZero,

    #[error("point lies outside the domain polytope")]
    OutsideDomain,

    #[error("patch has no control points")]
    MissingControlPoints,

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("points do not affinely span their ambient space")]
    DegenerateHull,

    #[error("dimension {0} is not supported (hull computation needs d <= 3)")]
    UnsupportedDimension(usize),

    #[error("exponent h_i(a) is not a nonnegative integer")]
    NonIntegerExponent,

    #[error("monomial argument must have strictly positive coordinates")]
    NonPositiveArgument,

    #[error("points are not integer lattice points")]
    NonLatticePoints,

    #[error("polynomial vanishes at the argument")]
    PoleAtArgument,

    #[error("target is not strictly inside the convex hull of the lifted points")]
    NotInHull,

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("iterate underflowed to zero or became non-finite")]
    NumericalUnderflow,

    #[error("rejection sampling acceptance rate too low")]
    SamplingFailure,

    #[error("expected a one-dimensional configuration")]
    WrongDimension,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
