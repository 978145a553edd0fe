//! Differential calculus on the Siegel half-space and the action of the
//! enveloping algebra on the Poincaré-series seed.

pub mod casimir;
pub mod expr;
pub mod genus1;
pub mod group;
pub mod quoted;
pub mod shift;
pub mod trace;

pub use expr::{siegel_vars, Frame, SiegelExpr, SIEGEL_VARS};
pub use group::GroupEngine;
pub use shift::ShiftDecomposition;
