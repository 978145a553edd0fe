//! Integration over the cone `Y` of positive definite matrices in Cholesky
//! coordinates `y = L'^{-1} M M' L^{-1}` where `T = L L'` fixes the
//! exponential weight `e^{−tr(Ty)}`. With `r_i = M_ii²` the diagonal
//! coordinates carry generalized Laguerre weights and the off-diagonal
//! ones Hermite weights.

use super::ProjectionError;
use crate::par;
use crate::ring::univariate::det_rat;
use crate::ring::Rat;
use gauss_quad::{FiniteAboveNegOneF64, GaussHermite, GaussLaguerre};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::num::NonZeroUsize;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Largest number of integrand evaluations for one rule.
    pub budget: usize,
    /// Nodes with a Cholesky coordinate beyond this are dropped.
    pub radius: f64,
    pub start_degree: usize,
    /// Largest degree of each one-dimensional rule.
    pub max_degree: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-10, budget: 300_000, radius: 1e3, start_degree: 8, max_degree: 256 }
    }
}

impl QuadratureSpec {
    pub fn with_tol(tol: f64) -> QuadratureSpec {
        QuadratureSpec { abs_tol: tol, rel_tol: tol, ..Default::default() }
    }

    fn validate(&self) -> Result<(), ProjectionError> {
        let ok = self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.budget > 0 && self.radius > 0.0 && self.start_degree > 0 && self.max_degree >= self.start_degree;
        if ok {
            Ok(())
        } else {
            Err(ProjectionError::Spec)
        }
    }
}

/// Symmetric with integer diagonal and half-integer off-diagonal entries,
/// stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfIntegralMatrix {
    twice: Vec<Vec<i64>>,
}

impl HalfIntegralMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<HalfIntegralMatrix, ProjectionError> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(ProjectionError::Shape(format!("{m} rows of unequal length")));
        }
        let mut twice = vec![vec![0i64; m]; m];
        for i in 0..m {
            for j in 0..m {
                let d = 2.0 * rows[i][j];
                if (d - d.round()).abs() > 1e-12 || (i == j && (d.round() as i64) % 2 != 0) {
                    return Err(ProjectionError::NotHalfIntegral(format!("entry ({i},{j}) = {}", rows[i][j])));
                }
                twice[i][j] = d.round() as i64;
            }
        }
        for i in 0..m {
            for j in 0..i {
                if twice[i][j] != twice[j][i] {
                    return Err(ProjectionError::NotHalfIntegral("not symmetric".into()));
                }
            }
        }
        Ok(HalfIntegralMatrix { twice })
    }

    pub fn scalar(n: i64) -> HalfIntegralMatrix {
        HalfIntegralMatrix { twice: vec![vec![2 * n]] }
    }

    pub fn identity(m: usize) -> HalfIntegralMatrix {
        HalfIntegralMatrix { twice: (0..m).map(|i| (0..m).map(|j| if i == j { 2 } else { 0 }).collect()).collect() }
    }

    pub fn m(&self) -> usize {
        self.twice.len()
    }

    /// All leading principal minors positive, in exact arithmetic.
    pub fn is_positive_definite(&self) -> bool {
        (1..=self.m()).all(|k| {
            let d = det_rat(self.minor(k));
            !d.is_negative() && !d.is_zero()
        })
    }

    fn minor(&self, k: usize) -> Vec<Vec<Rat>> {
        (0..k).map(|i| (0..k).map(|j| Rat::new(self.twice[i][j], 2)).collect()).collect()
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        let m = self.m();
        DMatrix::from_fn(m, m, |i, j| self.twice[i][j] as f64 / 2.0)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.twice.iter().map(|r| r.iter().map(|x| *x as f64 / 2.0).collect()).collect()
    }
}

/// A value with its error estimate and the size of the rule that produced it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeIntegral {
    pub value: Complex64,
    pub error: f64,
    pub nodes: usize,
}

struct Rule {
    diag: Vec<Vec<(f64, f64)>>,
    off: Vec<(f64, f64)>,
}

fn rule(m: usize, beta: f64, n: usize) -> Result<Rule, ProjectionError> {
    let deg = NonZeroUsize::new(n).ok_or(ProjectionError::Spec)?;
    let mut diag = Vec::with_capacity(m);
    for i in 1..=m {
        let alpha = beta + (m - i) as f64 / 2.0;
        let a = FiniteAboveNegOneF64::new(alpha).ok_or(ProjectionError::EulerDomain { s: beta, bound: -1.0 })?;
        diag.push(GaussLaguerre::new(deg, a).iter().map(|(x, w)| (*x, *w)).collect());
    }
    let off = GaussHermite::new(deg).iter().map(|(x, w)| (*x, *w)).collect();
    Ok(Rule { diag, off })
}

/// `∫_Y G(y) e^{−tr(Ty)} det(y)^β dy` with `β > −1`, refined until two
/// successive rules agree.
pub fn cone_integral<G>(t: &DMatrix<f64>, beta: f64, g: G, spec: &QuadratureSpec) -> Result<ConeIntegral, ProjectionError>
where
    G: Fn(&DMatrix<f64>) -> Complex64 + Sync,
{
    spec.validate()?;
    let m = t.nrows();
    let chol = t.clone().cholesky().ok_or(ProjectionError::NotPositive)?;
    let l = chol.l();
    let linv = l.clone().try_inverse().ok_or(ProjectionError::NotPositive)?;
    let det_t = t.determinant();
    let pref = det_t.powf(-((m + 1) as f64) / 2.0 - beta);
    let dims = m * (m + 1) / 2;
    let eval = |n: usize| -> Result<Complex64, ProjectionError> {
        let r = rule(m, beta, n)?;
        Ok(integrate(m, &r, &linv, &g, spec.radius) * pref)
    };
    let mut n = spec.start_degree;
    let mut prev = eval(n)?;
    let mut est = f64::INFINITY;
    loop {
        let nn = 2 * n;
        let nodes = nn.pow(dims as u32);
        if nodes > spec.budget || nn > spec.max_degree {
            return Err(ProjectionError::NoConvergence { budget: spec.budget, estimate: est });
        }
        let cur = eval(nn)?;
        est = (cur - prev).norm();
        if est <= spec.abs_tol.max(spec.rel_tol * cur.norm()) {
            return Ok(ConeIntegral { value: cur, error: est, nodes });
        }
        prev = cur;
        n = nn;
    }
}

fn integrate<G>(m: usize, r: &Rule, linv: &DMatrix<f64>, g: &G, radius: f64) -> Complex64
where
    G: Fn(&DMatrix<f64>) -> Complex64 + Sync,
{
    let n = r.off.len();
    let rest_dims = m * (m + 1) / 2 - 1;
    let first: Vec<usize> = (0..n).collect();
    let parts = par::map(&first, |&i0| {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut idx = vec![0usize; rest_dims];
        loop {
            // coordinates: diagonal i0, then the other diagonals, then the off-diagonals row by row
            let mut mm = DMatrix::<f64>::zeros(m, m);
            let mut w = 1.0;
            let mut inside = true;
            let mut k = 0;
            for d in 0..m {
                let (x, wt) = if d == 0 { r.diag[0][i0] } else { let p = r.diag[d][idx[k]]; k += 1; p };
                inside &= x <= radius;
                mm[(d, d)] = x.sqrt();
                w *= wt;
            }
            for a in 1..m {
                for b in 0..a {
                    let (x, wt) = r.off[idx[k]];
                    k += 1;
                    inside &= x.abs() <= radius;
                    mm[(a, b)] = x;
                    w *= wt;
                }
            }
            if inside {
                let y = linv.transpose() * (&mm * mm.transpose()) * linv;
                acc += g(&y) * w;
            }
            // odometer over the remaining coordinates
            let mut p = 0;
            while p < rest_dims {
                idx[p] += 1;
                if idx[p] < n {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == rest_dims {
                break;
            }
        }
        acc
    });
    parts.into_iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b)
}
