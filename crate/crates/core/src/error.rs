//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A probability table failed validation (negative entries, bad sum, empty support, ...).
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// The components of a model do not fit together (kernel rows vs. degree
    /// support, transmission coverage, ...).
    #[error("invalid model: {0}")]
    InvalidSpec(String),

    /// No stub in the model carries this weight, so stub-weight size-biasing
    /// is undefined for it.
    #[error("weight {0} has no stubs")]
    NoStubsForWeight(u32),

    /// Requested degree is outside the model's degree support.
    #[error("degree {0} is not in the degree support")]
    UnsupportedDegree(usize),

    /// A scalar argument was outside its documented domain.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Two quantities that must share a support/length do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The eigensolver ran out of iterations. Carries the last two
    /// Rayleigh-quotient estimates for diagnosis.
    #[error(
        "spectral radius iteration did not converge within {iterations} iterations \
         (last estimates {previous} and {last})"
    )]
    PowerIterationDiverged {
        iterations: u64,
        previous: f64,
        last: f64,
    },

    /// The extinction-probability fixed point ran out of iterations. Near
    /// criticality the iteration slows down; widening the tolerance helps.
    #[error(
        "fixed-point iteration did not converge within {iterations} iterations \
         (residual {residual}); near criticality convergence is slow, consider a wider tolerance"
    )]
    FixedPointDiverged { iterations: u64, residual: f64 },

    /// A vertex id referenced a vertex that does not exist.
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    /// Problems reading or interpreting a model file.
    #[error("model file: {0}")]
    ModelFile(String),

    /// An ingested table contained no records.
    #[error("no records")]
    EmptyTable,

    /// A table row could not be parsed.
    #[error("line {line}: {message}")]
    MalformedRow { line: usize, message: String },

    /// A table row carried a negative count.
    #[error("line {line}: negative count")]
    NegativeCount { line: usize },

    /// The stub records for a degree are not divisible by it, so they cannot
    /// come from whole vertices.
    #[error("degree {degree} has {stub_records} stub records, not divisible by {degree}")]
    DivisibilityViolation { degree: usize, stub_records: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Numerical failures (iteration caps) as opposed to usage/input errors.
    /// The CLI maps these to a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::PowerIterationDiverged { .. } | Error::FixedPointDiverged { .. }
        )
    }
}
