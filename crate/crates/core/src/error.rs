use thiserror::Error;

/// Errors produced by the root-approximation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A kernel parameter or angle lies outside the domain of the kernel functions.
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument such as a truncation order, tolerance or degree is invalid.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A parameter a_r does not lie strictly inside the unit disk.
    #[error("parameter a{index} = {value} has modulus {modulus} >= 1 (parameters must lie in the open unit disk)")]
    OutOfDisk {
        index: usize,
        value: String,
        modulus: f64,
    },

    /// A non-real parameter appears without its complex conjugate.
    #[error("parameter a{index} = {value} is non-real but its complex conjugate is not among the parameters")]
    UnpairedComplex { index: usize, value: String },

    /// The base q lies outside (-1, 1).
    #[error("q = {0} must satisfy -1 < q < 1")]
    QDomain(f64),

    /// k_+ equals k_-: the Chebyshev case, whose roots are known exactly.
    #[error("degenerate parameters (k_+ = k_- = {k}); the roots are exactly pi*j/(n+1)")]
    Degenerate { k: f64, exact_roots: Vec<f64> },

    /// The contraction constant is not below one, so no a-priori error bound exists.
    #[error("no contraction certificate: rho = {rho} >= 1")]
    Uncertified { rho: f64 },

    /// The Newton oracle failed to reach the requested residual.
    #[error("solver did not converge after {steps} steps (max residual {residual:.3e}, tolerance {tol:.3e})")]
    SolverFailure {
        steps: usize,
        residual: f64,
        tol: f64,
        best: Vec<f64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
