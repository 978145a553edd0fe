//! The Sturm operator
//! `a(τ) = c(m,κ)^{-1} det(τ)^{κ−(m+1)/2} ∫_Y A_τ(y) e^{−2π tr(τy)} det(y)^{κ−(m+1)} dy`,
//! `c(m,κ) = (4π)^{m((m+1)/2−κ)} Γ_m(κ − (m+1)/2)`.
//!
//! The integral is weighted by `e^{−4π tr(τy)} det(y)^{κ−m−1}`, so a holomorphic
//! datum `a e^{−2π tr(τy)}` leaves a constant integrand.

use super::cone::{cone_integral, HalfIntegralMatrix, QuadratureSpec};
use super::gamma::{gamma_m, GammaMode};
use super::ProjectionError;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::Arc;

pub type Profile = Arc<dyn Fn(&DMatrix<f64>) -> Complex64 + Send + Sync>;

#[derive(Clone)]
pub enum FourierData {
    /// `A_τ(y) = a e^{−2π tr(τy)}`.
    Holomorphic(Complex64),
    Function(Profile),
    /// Genus one: values `A_τ(y)` at sample points `y`, interpolated linearly
    /// after removing the factor `e^{−2πτy}`.
    Samples(Vec<(f64, Complex64)>),
}

#[derive(Clone)]
pub struct FourierDatum {
    pub tau: HalfIntegralMatrix,
    pub data: FourierData,
}

impl FourierDatum {
    pub fn holomorphic(tau: HalfIntegralMatrix, a: Complex64) -> FourierDatum {
        FourierDatum { tau, data: FourierData::Holomorphic(a) }
    }

    pub fn function(tau: HalfIntegralMatrix, f: impl Fn(&DMatrix<f64>) -> Complex64 + Send + Sync + 'static) -> FourierDatum {
        FourierDatum { tau, data: FourierData::Function(Arc::new(f)) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionResult {
    pub tau: HalfIntegralMatrix,
    pub a: Complex64,
    pub error: f64,
    pub nodes: usize,
}

#[derive(Serialize)]
struct ResultJson {
    tau: Vec<Vec<f64>>,
    a: [f64; 2],
    error: f64,
    nodes: usize,
}

impl ProjectionResult {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ResultJson {
            tau: self.tau.rows(),
            a: [self.a.re, self.a.im],
            error: self.error,
            nodes: self.nodes,
        })
        .expect("result serializes")
    }
}

/// `c(m, κ)`.
pub fn normalizer(m: usize, kappa: i64) -> Result<f64, ProjectionError> {
    let s = kappa as f64 - (m as f64 + 1.0) / 2.0;
    let e = m as f64 * ((m as f64 + 1.0) / 2.0 - kappa as f64);
    Ok((4.0 * PI).powf(e) * gamma_m(m, s, &GammaMode::Product)?)
}

fn interpolate(pts: &[(f64, Complex64)], y: f64) -> Complex64 {
    let k = pts.partition_point(|(x, _)| *x < y);
    if k == 0 {
        return pts[0].1;
    }
    if k == pts.len() {
        return pts[k - 1].1;
    }
    let (x0, v0) = pts[k - 1];
    let (x1, v1) = pts[k];
    v0 + (v1 - v0) * ((y - x0) / (x1 - x0))
}

pub fn sturm_coefficient(
    m: usize,
    kappa: i64,
    datum: &FourierDatum,
    spec: &QuadratureSpec,
) -> Result<ProjectionResult, ProjectionError> {
    if kappa <= m as i64 {
        return Err(ProjectionError::Weight { kappa, m });
    }
    if datum.tau.m() != m {
        return Err(ProjectionError::Shape(format!("tau is {0}x{0}, genus is {m}", datum.tau.m())));
    }
    if !datum.tau.is_positive_definite() {
        return Err(ProjectionError::NotPositive);
    }
    let tau = datum.tau.to_matrix();
    let t = &tau * (4.0 * PI);
    let beta = (kappa - m as i64 - 1) as f64;
    let trace_ty = |y: &DMatrix<f64>| (&tau * y).trace();
    let r = match &datum.data {
        FourierData::Holomorphic(a) => {
            let a = *a;
            cone_integral(&t, beta, move |_| a, spec)?
        }
        FourierData::Function(f) => cone_integral(&t, beta, |y| f(y) * (2.0 * PI * trace_ty(y)).exp(), spec)?,
        FourierData::Samples(pts) => {
            if m != 1 {
                return Err(ProjectionError::Samples("sampled data is supported in genus one only".into()));
            }
            if pts.len() < 2 {
                return Err(ProjectionError::Samples("need at least two samples".into()));
            }
            let t1 = tau[(0, 0)];
            let mut g: Vec<(f64, Complex64)> = pts.iter().map(|(y, v)| (*y, *v * (2.0 * PI * t1 * y).exp())).collect();
            g.sort_by(|a, b| a.0.total_cmp(&b.0));
            let (lo, hi) = (g[0].0, g[g.len() - 1].0);
            let gmax = g.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max);
            // the weight outside the sampled range must be negligible
            let outside = cone_integral(
                &t,
                beta,
                |y| Complex64::new(if y[(0, 0)] < lo || y[(0, 0)] > hi { gmax } else { 0.0 }, 0.0),
                &QuadratureSpec { abs_tol: f64::INFINITY, ..spec.clone() },
            )?;
            let mass = cone_integral(&t, beta, |_| Complex64::new(gmax, 0.0), spec)?;
            let fraction = outside.value.norm() / mass.value.norm();
            if fraction > spec.rel_tol {
                return Err(ProjectionError::Samples(format!(
                    "samples cover [{lo}, {hi}] but {fraction:.3e} of the weight lies outside"
                )));
            }
            cone_integral(&t, beta, |y| interpolate(&g, y[(0, 0)]), spec)?
        }
    };
    let scale = tau.determinant().powf(kappa as f64 - (m as f64 + 1.0) / 2.0) / normalizer(m, kappa)?;
    Ok(ProjectionResult { tau: datum.tau.clone(), a: r.value * scale, error: r.error * scale.abs(), nodes: r.nodes })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Deserialize)]
struct SamplePoint {
    y: Vec<Vec<f64>>,
    value: [f64; 2],
}

#[derive(Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
enum Entry {
    Holomorphic { tau: Vec<Vec<f64>>, a: Coefficient },
    Samples { tau: Vec<Vec<f64>>, points: Vec<SamplePoint> },
}

#[derive(Deserialize)]
struct DatumFile {
    genus: usize,
    kappa: i64,
    data: Vec<Entry>,
}

/// A parsed Fourier-datum file.
pub struct DatumSet {
    pub genus: usize,
    pub kappa: i64,
    pub data: Vec<FourierDatum>,
}

#[derive(Debug, thiserror::Error)]
pub enum DatumError {
    #[error("malformed datum file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

pub fn parse_datum_file(text: &str) -> Result<DatumSet, DatumError> {
    let f: DatumFile = serde_json::from_str(text)?;
    let mut data = Vec::new();
    for e in f.data {
        data.push(match e {
            Entry::Holomorphic { tau, a } => {
                let a = match a {
                    Coefficient::Real(r) => Complex64::new(r, 0.0),
                    Coefficient::Complex([re, im]) => Complex64::new(re, im),
                };
                FourierDatum::holomorphic(HalfIntegralMatrix::from_rows(&tau)?, a)
            }
            Entry::Samples { tau, points } => {
                let mut pts = Vec::new();
                for p in points {
                    if p.y.len() != 1 || p.y[0].len() != 1 {
                        return Err(ProjectionError::Samples("sample points must be 1x1 in genus one".into()).into());
                    }
                    pts.push((p.y[0][0], Complex64::new(p.value[0], p.value[1])));
                }
                FourierDatum { tau: HalfIntegralMatrix::from_rows(&tau)?, data: FourierData::Samples(pts) }
            }
        });
    }
    Ok(DatumSet { genus: f.genus, kappa: f.kappa, data })
}
