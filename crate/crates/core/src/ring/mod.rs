//! Exact coefficient arithmetic: Gaussian rationals, π as an indeterminate,
//! and sparse multivariate polynomials over a registered variable order.

mod elem;
mod gauss;
mod poly;
mod rational;
pub mod univariate;

pub use elem::RingElem;
pub use gauss::Gauss;
pub use poly::{parse_poly, Mono, Poly, VarSet, REGISTERED};
pub use rational::Rat;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("polynomials live over different variable sets")]
    VarSetMismatch,
    #[error("variable '{0}' is not registered in this variable set")]
    UnknownVariable(String),
    #[error("variable '{0}' is neither bound nor present in the target ring")]
    UnboundVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error: {0}")]
    Parse(String),
}
