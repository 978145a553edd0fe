//! Genus one: `p(z, s) = Σ_{Γ∞\SL2(Z)} (cz+d)^{−κ} e(τ·γz) (Im γz)^s`,
//! summed over coprime `(c, d)` with `|c|, |d| ≤ N`, one representative
//! of each `±` pair (`c > 0`, or `(0, 1)`).
//!
//! Tail bound: `|term| ≤ y^{Re s} |cz+d|^{−σ}` with `σ = κ + 2 Re s`, and
//! `|cz+d|² ≥ μ (c² + d²)` with `μ` the least eigenvalue of the form
//! `[[x²+y², x], [x, 1]]`. The `8k` pairs of max-norm `k` have
//! `c² + d² ≥ k²`, so the tail beyond `N` is at most
//! `8 μ^{−σ/2} y^{Re s} N^{2−σ} / (σ − 2)`.

use super::ProjectionError;
use crate::par;
use num_complex::Complex64 as C;
use num_integer::Integer;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoincareArgs {
    pub z: C,
    pub s: C,
    pub kappa: i64,
    pub tau: i64,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoincareValue {
    pub value: C,
    pub tail: f64,
    pub terms: usize,
}

fn sigma(a: &PoincareArgs) -> f64 {
    a.kappa as f64 + 2.0 * a.s.re
}

pub fn tail_bound(a: &PoincareArgs) -> Result<f64, ProjectionError> {
    let sg = sigma(a);
    if sg <= 2.0 {
        return Err(ProjectionError::OutsideConvergence(sg));
    }
    let (x, y) = (a.z.re, a.z.im);
    let tr = x * x + y * y + 1.0;
    let mu = (tr - (tr * tr - 4.0 * y * y).sqrt()) / 2.0;
    Ok(8.0 * mu.powf(-sg / 2.0) * y.powf(a.s.re) * (a.n as f64).powf(2.0 - sg) / (sg - 2.0))
}

/// `(a, b)` with `ad − bc = 1`.
fn complete(c: i64, d: i64) -> (i64, i64) {
    let e = c.extended_gcd(&d);
    // e.x c + e.y d = 1, so a = e.y, b = −e.x
    (e.y, -e.x)
}

fn term(a: &PoincareArgs, c: i64, d: i64) -> C {
    let (aa, bb) = complete(c, d);
    let j = a.z * c as f64 + d as f64;
    let gz = (a.z * aa as f64 + bb as f64) / j;
    let e = (C::new(0.0, 2.0 * PI * a.tau as f64) * gz).exp();
    j.powi(-(a.kappa as i32)) * e * C::new(gz.im, 0.0).powc(a.s)
}

pub fn genus1_poincare(a: &PoincareArgs, tol: Option<f64>) -> Result<PoincareValue, ProjectionError> {
    if a.z.im <= 0.0 {
        return Err(ProjectionError::UpperHalfPlane);
    }
    if a.n == 0 {
        return Err(ProjectionError::TruncationTooSmall { n: 0, tail: f64::INFINITY, tol: tol.unwrap_or(0.0) });
    }
    let tail = tail_bound(a)?;
    if let Some(t) = tol {
        if tail > t {
            return Err(ProjectionError::TruncationTooSmall { n: a.n, tail, tol: t });
        }
    }
    let n = a.n as i64;
    let cs: Vec<i64> = (0..=n).collect();
    // one block per c, summed in order
    let blocks = par::map(&cs, |&c| {
        let mut acc = C::new(0.0, 0.0);
        let mut count = 0usize;
        if c == 0 {
            return (term(a, 0, 1), 1);
        }
        for d in -n..=n {
            if c.gcd(&d) == 1 {
                acc += term(a, c, d);
                count += 1;
            }
        }
        (acc, count)
    });
    let (value, terms) = blocks.into_iter().fold((C::new(0.0, 0.0), 0), |(v, k), (b, c)| (v + b, k + c));
    Ok(PoincareValue { value, tail, terms })
}

/// `|p(γz) (cz+d)^{−κ} − p(z)|` for `γ = [[a, b], [c, d]] ∈ SL2(Z)`, with
/// the sum of the two tail bounds it should stay under.
pub fn modularity_residual(gamma: [[i64; 2]; 2], a: &PoincareArgs) -> Result<(f64, f64), ProjectionError> {
    let [[ga, gb], [gc, gd]] = gamma;
    if ga * gd - gb * gc != 1 {
        return Err(ProjectionError::Shape("gamma must have determinant one".into()));
    }
    let j = a.z * gc as f64 + gd as f64;
    let gz = (a.z * ga as f64 + gb as f64) / j;
    let at_z = genus1_poincare(a, None)?;
    let at_gz = genus1_poincare(&PoincareArgs { z: gz, ..*a }, None)?;
    let res = (at_gz.value * j.powi(-(a.kappa as i32)) - at_z.value).norm();
    Ok((res, at_z.tail + at_gz.tail * j.norm().powf(-(a.kappa as f64))))
}
