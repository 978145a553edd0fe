//! Exact Casimir calculus for the real symplectic group in genus one and two.

pub mod checks;
pub mod hc;
pub mod lie;
pub mod par;
pub mod projection;
pub mod report;
pub mod ring;
pub mod siegel;
pub mod spectral;
pub mod uea;
