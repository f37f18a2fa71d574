use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The assembled matrix exponential retained an imaginary part above
    /// tolerance, which indicates an internal inconsistency (real input
    /// matrices must have real exponentials).
    #[error("matrix exponential has imaginary residual {residual:.3e} above tolerance")]
    ImaginaryResidual { residual: f64 },

    /// A state became non-finite (or left the admissible ball) at the given
    /// step; carried so reports can record the run as "error" instead of
    /// poisoning downstream metrics.
    #[error("integration diverged at step {step}")]
    Divergence { step: usize },

    #[error("t = {t} outside grid span [{t0}, {t1}]")]
    OutOfSpan { t: f64, t0: f64, t1: f64 },

    #[error("trajectories are defined on different grids")]
    GridMismatch,

    #[error("system `{0}` does not define a first integral")]
    MissingFirstIntegral(String),

    /// Taylor-series reference methods need the model's right-hand side over
    /// truncated-series arithmetic, which not every system supplies.
    #[error("system `{0}` does not define a series right-hand side")]
    MissingSeriesRhs(String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
