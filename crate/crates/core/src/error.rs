use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has loops where a simple graph is required")]
    LoopsNotAllowed,

    #[error("polytope has no vertices")]
    EmptyPolytope,

    #[error("interpolation needs {expected} values, got {got}")]
    InterpolationLength { expected: usize, got: usize },

    #[error("not an Ehrhart polynomial: {0}")]
    NotEhrhart(String),

    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,

    #[error("root finder did not converge after {iterations} iterations ({} of {degree} roots certified)", certified.len())]
    NoConvergence {
        iterations: usize,
        degree: usize,
        /// Roots that did meet the residual bound before giving up.
        certified: Vec<num_complex::Complex64>,
    },

    #[error("unpaired complex root {re} {im:+}i")]
    UnpairedRoot { re: f64, im: f64 },
}
