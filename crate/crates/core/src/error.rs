use thiserror::Error;

/// Failures reported by the numerical kernels and the analyses built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular to working precision")]
    SingularMatrix,
    #[error("{what} did not converge within {limit} iterations")]
    NoConvergence { what: &'static str, limit: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid index set: {0}")]
    BadIndexSet(String),
    #[error("order {k} outside 1..={n}")]
    BadOrder { k: usize, n: usize },
    #[error("invalid polynomial: {0}")]
    BadPolynomial(&'static str),
    #[error("every mode vanishes below tolerance")]
    DegenerateInput,
    #[error("first finite mode vanishes below tolerance")]
    ZeroMode,
    #[error("coefficient c_{n} vanishes; strength function diverges")]
    DivergentStrength { n: usize },
    #[error("reference energy is not an eigenvalue (|c_0| above tolerance)")]
    NotAnEigenvalue,
    #[error("energy lies on a resonance; the denominator vanishes")]
    OnResonance,
    #[error("perturbation does not lift the degeneracy at first order")]
    ZeroElement,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
