//! Numerics: the level-`m` gamma function, holomorphic projection through
//! the Sturm integral, the genus-one Poincaré series and the matrix
//! inequalities behind its convergence.

pub mod cone;
pub mod gamma;
pub mod inequalities;
pub mod oracle;
pub mod poincare;
pub mod sturm;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProjectionError {
    #[error("gamma has a pole at {0}")]
    GammaPole(f64),
    #[error("the Euler integral needs Re s > {bound}, got s = {s}")]
    EulerDomain { s: f64, bound: f64 },
    #[error("the weight must exceed the genus (kappa = {kappa}, m = {m})")]
    Weight { kappa: i64, m: usize },
    #[error("matrix is not positive definite")]
    NotPositive,
    #[error("matrix is not half-integral: {0}")]
    NotHalfIntegral(String),
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error("quadrature did not reach the tolerance within {budget} nodes (estimate {estimate:e})")]
    NoConvergence { budget: usize, estimate: f64 },
    #[error("tolerance and node budget must be positive")]
    Spec,
    #[error("sampled data: {0}")]
    Samples(String),
    #[error("outside the convergence region: Re(2s + kappa) = {0} must exceed 2")]
    OutsideConvergence(f64),
    #[error("truncation N = {n} leaves a tail bound {tail:e} above the tolerance {tol:e}")]
    TruncationTooSmall { n: usize, tail: f64, tol: f64 },
    #[error("Im z must be positive")]
    UpperHalfPlane,
}

pub use cone::{HalfIntegralMatrix, QuadratureSpec};
pub use gamma::{gamma_m, GammaMode};
pub use inequalities::{matrix_inequalities, InequalityReport};
pub use poincare::{genus1_poincare, modularity_residual, PoincareValue};
pub use sturm::{sturm_coefficient, FourierDatum, ProjectionResult};
