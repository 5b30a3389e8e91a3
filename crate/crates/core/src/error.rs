use thiserror::Error;

/// Errors raised by the synthesis library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (defect {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("operator has a component outside the distribution (residual {0:.3e})")]
    OutsideDistribution(f64),

    #[error("unitary is not representable in the algebra (residual {0:.3e})")]
    NotRepresentable(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("integrator accuracy loss: {0}; retry with a finer grid")]
    IntegratorAccuracy(String),

    #[error("trajectory is not converged (final infidelity {0:.3e}); classification refused")]
    Unconverged(f64),

    #[error("Krotov step increased the functional by {0:.3e}; reduce lambda")]
    LambdaTooLarge(f64),

    #[error("optimization did not converge: best infidelity {best:.3e} after {evals} evaluations")]
    OptimizerStalled { best: f64, evals: usize },

    #[error("synthesis failed: {0}")]
    SynthesisFailed(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
