//! For symmetric positive definite `S`, `Y` of size `m`:
//! `tr(S)^m > m! det(S)` and `m1 tr(Y) ≤ tr(SY) ≤ m2 tr(Y)` with
//! `m1` the least eigenvalue of `S` and `m2 = tr(S)`.

use super::ProjectionError;
use nalgebra::DMatrix;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub trace_power: f64,
    pub factorial_det: f64,
    pub m1: f64,
    pub m2: f64,
    pub tr_y: f64,
    pub tr_sy: f64,
    /// Strict for `m ≥ 2`; in genus one both sides equal `s`.
    pub trace_det: bool,
    pub lower: bool,
    pub upper: bool,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.trace_det && self.lower && self.upper
    }
}

fn check_spd(a: &DMatrix<f64>) -> Result<(), ProjectionError> {
    let m = a.nrows();
    if a.ncols() != m {
        return Err(ProjectionError::Shape("not square".into()));
    }
    let sym = (0..m).all(|i| (0..m).all(|j| (a[(i, j)] - a[(j, i)]).abs() <= 1e-12 * (1.0 + a[(i, j)].abs())));
    if !sym {
        return Err(ProjectionError::Shape("not symmetric".into()));
    }
    if (1..=m).any(|k| a.view((0, 0), (k, k)).determinant() <= 0.0) {
        return Err(ProjectionError::NotPositive);
    }
    Ok(())
}

pub fn matrix_inequalities(s: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<InequalityReport, ProjectionError> {
    check_spd(s)?;
    check_spd(y)?;
    let m = s.nrows();
    if y.nrows() != m {
        return Err(ProjectionError::Shape("S and Y differ in size".into()));
    }
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let trace_power = s.trace().powi(m as i32);
    let factorial_det = fact * s.determinant();
    let m1 = s.clone().symmetric_eigen().eigenvalues.min();
    let m2 = s.trace();
    let tr_y = y.trace();
    let tr_sy = (s * y).trace();
    let slack = 1e-12 * (1.0 + m2 * tr_y);
    Ok(InequalityReport {
        trace_power,
        factorial_det,
        m1,
        m2,
        tr_y,
        tr_sy,
        trace_det: if m >= 2 { trace_power > factorial_det } else { trace_power >= factorial_det },
        lower: m1 * tr_y <= tr_sy + slack,
        upper: tr_sy <= m2 * tr_y + slack,
    })
}
