use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not invertible: {0}")]
    NonInvertible(String),
    #[error("term cap of {0} exceeded")]
    TermCap(usize),
    #[error("not a uniformizer")]
    NotUniformizer,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("epsilon not of exponential type")]
    NonExponential,
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("negative conductor bound")]
    NegativeConductor,
    #[error("degenerate character: {0}")]
    Degenerate(String),
    #[error("absolute value only defined for untwisted lifts")]
    TwistedAbs,
    #[error("gaussian-sum case: use zeta1d_on_F_regularized")]
    GaussianSumCase,
    #[error("no principal value")]
    NoPrincipalValue,
    #[error("malformed decomposition: {0}")]
    Malformed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}
