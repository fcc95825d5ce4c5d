use thiserror::Error;

/// Errors raised by the evaluation, quadrature and operator routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("multiplicity must be a finite non-negative number, got {0}")]
    InvalidMultiplicity(f64),

    #[error("{what} requires k > 0, got k = {k}")]
    RequiresPositiveMultiplicity { what: &'static str, k: f64 },

    #[error("degree must be non-negative, got {0}")]
    NegativeDegree(i64),

    #[error("quadrature order must be at least {min}, got {got}")]
    InvalidOrder { min: usize, got: usize },

    #[error("weight exponent must be > -1, got {0}")]
    InvalidExponent(f64),

    #[error("radius must satisfy 0 <= r < 1, got {0}")]
    InvalidRadius(f64),

    #[error("order alpha must be positive, got {0}")]
    InvalidAlpha(f64),

    #[error("rule of order {order} cannot resolve truncation degree {degree} (need order >= {required})")]
    UnderResolvedRule {
        order: usize,
        degree: usize,
        required: usize,
    },

    #[error("operation needs a circle rule")]
    NotACircleRule,

    #[error("grid functions are sampled on different grids")]
    MismatchedGrid,

    #[error("expansions have different multiplicities ({0} vs {1})")]
    MismatchedMultiplicity(f64, f64),

    #[error("removable singularity at x = {0}; use the limit branch")]
    RemovableSingularity(f64),

    #[error("kernel is singular on the diagonal x = +-y (x = {x}, y = {y})")]
    DiagonalQuery { x: f64, y: f64 },

    #[error("density branch needs sin x sin y sin z != 0 (x = {x}, y = {y}, z = {z})")]
    DegenerateTriple { x: f64, y: f64, z: f64 },

    #[error("evaluation point +-{x} lies inside the declared support [{a}, {b}]")]
    SupportViolation { x: f64, a: f64, b: f64 },

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
