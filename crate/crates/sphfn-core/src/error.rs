use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operands carry different unit signatures")]
    SignatureMismatch,
    #[error("element has zero norm and no inverse")]
    NullNorm,
    #[error("{name} = {value} is outside its range {range}")]
    Range {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("invalid index: {0}")]
    Index(String),
    #[error("pole of the gamma function at {0}")]
    Pole(String),
    #[error("series does not converge at x = {0}")]
    Divergence(f64),
    #[error("series not converged after {0} terms")]
    Convergence(usize),
    #[error("operator is singular at {0}")]
    Singularity(String),
    #[error("truncation j_max = {j_max} is below l0 = {l0}")]
    Truncation { j_max: String, l0: String },
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("argument outside the domain: {0}")]
    Domain(String),
}

impl Error {
    /// Stable variant name used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SignatureMismatch => "SignatureMismatch",
            Error::NullNorm => "NullNorm",
            Error::Range { .. } => "RangeError",
            Error::Index(_) => "IndexError",
            Error::Pole(_) => "PoleError",
            Error::Divergence(_) => "DivergenceError",
            Error::Convergence(_) => "ConvergenceError",
            Error::Singularity(_) => "SingularityError",
            Error::Truncation { .. } => "TruncationError",
            Error::DivisionByZero(_) => "DivisionByZero",
            Error::Domain(_) => "DomainError",
        }
    }
}
