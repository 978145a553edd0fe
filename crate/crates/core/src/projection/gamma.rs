//! `Γ_m(s) = π^{m(m−1)/4} ∏_{ν<m} Γ(s − ν/2)` and its Euler integral
//! `∫_Y e^{−tr y} det(y)^{s−(m+1)/2} dy`.

use super::cone::{cone_integral, QuadratureSpec};
use super::ProjectionError;
use crate::ring::Rat;
use nalgebra::DMatrix;
use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub enum GammaMode {
    Product,
    Euler(QuadratureSpec),
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

pub fn gamma_m(m: usize, s: f64, mode: &GammaMode) -> Result<f64, ProjectionError> {
    match mode {
        GammaMode::Product => {
            let mut v = std::f64::consts::PI.powf((m * (m.saturating_sub(1))) as f64 / 4.0);
            for nu in 0..m {
                let x = s - nu as f64 / 2.0;
                if is_pole(x) {
                    return Err(ProjectionError::GammaPole(x));
                }
                v *= statrs::function::gamma::gamma(x);
            }
            Ok(v)
        }
        GammaMode::Euler(spec) => {
            let bound = (m as f64 - 1.0) / 2.0;
            if s <= bound {
                return Err(ProjectionError::EulerDomain { s, bound });
            }
            let beta = s - (m as f64 + 1.0) / 2.0;
            let r = cone_integral(&DMatrix::identity(m, m), beta, |_| Complex64::new(1.0, 0.0), spec)?;
            Ok(r.value.re)
        }
    }
}

/// `q · π^{k/2}`, the exact value of `Γ_m` at a half-integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: Rat,
    pub half_pi_power: u32,
}

impl PiMultiple {
    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powf(self.half_pi_power as f64 / 2.0)
    }
}

/// `Γ(x)` for `x ∈ ½Z` away from the poles, as a multiple of `π^{0 or ½}`.
fn gamma_half_integer(x: &Rat) -> Option<PiMultiple> {
    let two_x = x * &Rat::from_int(2);
    if !two_x.is_integer() || (x.is_integer() && !(x > &Rat::zero())) {
        return None;
    }
    let half = !x.is_integer();
    // start from Γ(1) = 1 or Γ(½) = √π and step by one
    let (mut cur, mut c) = if half { (Rat::new(1, 2), Rat::one()) } else { (Rat::one(), Rat::one()) };
    while &cur < x {
        c = &c * &cur;
        cur = &cur + &Rat::one();
    }
    while &cur > x {
        cur = &cur - &Rat::one();
        c = &c / &cur;
    }
    Some(PiMultiple { coeff: c, half_pi_power: half as u32 })
}

pub fn gamma_m_exact(m: usize, s: &Rat) -> Option<PiMultiple> {
    let mut coeff = Rat::one();
    let mut power = (m * m.saturating_sub(1) / 2) as u32;
    for nu in 0..m {
        let g = gamma_half_integer(&(s - &Rat::new(nu as i64, 2)))?;
        coeff = &coeff * &g.coeff;
        power += g.half_pi_power;
    }
    Some(PiMultiple { coeff, half_pi_power: power })
}
