//! Error type shared across the crate.

/// Errors reported by model constructors, special functions, quadrature and
/// the verifier.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor or function argument violates its stated constraint
    /// (e.g. `m` outside `(0, 2)`, or `alpha` at or below the confinement
    /// bound).
    #[error("invalid parameter {name} = {value}: must satisfy {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// An evaluation point lies outside the function's domain (e.g. a
    /// potential queried at or below the hard wall).
    #[error("argument {name} = {value} outside domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// Adaptive quadrature exhausted its subdivision budget. The best
    /// estimate and its error bound are preserved so callers can decide
    /// whether the partial answer is still useful.
    #[error(
        "quadrature did not converge after {subdivisions} subdivisions: \
         best estimate {estimate} with error bound {error_bound}"
    )]
    QuadratureDidNotConverge {
        estimate: f64,
        error_bound: f64,
        subdivisions: usize,
    },

    /// A normalization constant is representable only in log space.
    #[error("normalization constant overflows f64: log value {log_value}")]
    NormalizationOverflow { log_value: f64 },

    /// The eigensolver was asked for more eigenvalues than the matrix has.
    #[error("requested {requested} eigenvalues from a {dim}-dimensional matrix")]
    TooManyEigenvalues { requested: usize, dim: usize },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            constraint,
        }
    }

    pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Self {
        Error::OutOfDomain {
            name,
            value,
            domain,
        }
    }
}
