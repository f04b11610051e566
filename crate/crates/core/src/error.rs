use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("insufficient grid: {n_points} points cannot resolve a degree-{degree} polynomial")]
    InsufficientGrid { degree: usize, n_points: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// `1 - |P|^2` was not strictly positive at a grid point in strict mode.
    #[error("gap violated at grid point {index}: 1-|P|^2 = {value:e}")]
    GapViolated { index: usize, value: f64 },

    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("grid of {n_points} points exceeds the supported maximum of {limit}")]
    GridTooLarge { n_points: u64, limit: u64 },

    #[error("target loss not reached for N <= {max_n}; best loss {best_loss:e} at N = {best_n}")]
    TargetNotReached {
        max_n: usize,
        best_n: usize,
        best_loss: f64,
    },

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("circle-root pairing failed: root {root} on the unit circle has odd multiplicity {multiplicity}")]
    CircleRootPairing { root: Complex64, multiplicity: usize },

    #[error("constant coefficient is zero; factor out z^k first (|z^k P| = |P| on the circle)")]
    ZeroConstantTerm,

    #[error("|z| = {modulus} is within {margin} of the unit circle; use the grid representation")]
    NearUnitCircle { modulus: f64, margin: f64 },

    #[error("|z| = {modulus} is not on the unit circle")]
    OffUnitCircle { modulus: f64 },

    #[error("eigenvalue solver failed to converge for the companion matrix")]
    EigenSolver,

    #[error("invalid coefficient data: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }
}
