use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the toolkit.
///
/// Every variant carries the offending values so that callers (in particular
/// the CLI) can echo them back without re-deriving context.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rapidity {eta} out of range: must be finite with |eta| <= {max}")]
    RapidityOutOfRange { eta: f64, max: f64 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error(
        "degenerate coupling: need |C| < A for a positive-definite potential, got A = {a}, C = {c}"
    )]
    DegenerateCoupling { a: f64, c: f64 },

    #[error("quadrature under-resolved: {0}")]
    QuadratureUnderResolved(String),

    #[error("Hermite order {n} exceeds the configured maximum {max}")]
    OrderOverflow { n: usize, max: usize },

    #[error("Fock cutoff n_max = {n_max} too small: this operation needs n_max >= {min}")]
    CutoffTooSmall { n_max: usize, min: usize },

    #[error("operator dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
