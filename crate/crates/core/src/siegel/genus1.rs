//! Genus one, weight two: the Casimir element on
//! `h(g, s) = e(τz) y^{s−½} j(g,i)^{−κ}` by two unrelated engines.

use super::expr::SiegelExpr;
use super::group::GroupEngine;
use super::shift::{decompose, shift_vars, ShiftDecomposition};
use super::trace::group_free;
use crate::ring::{Gauss, Poly, Rat, RingElem};
use crate::uea::{LetterOrder, Uea};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Genus1Engine {
    /// Group-level rewriting with the enveloping-algebra element.
    Rewriting,
    /// `4y²(∂x² + ∂y²) − 4y ∂x ∂θ` on `e^{2πiτ(x+iy)} y^{(κ−1)/2+s} e^{iκθ}`.
    Classical,
}

pub const GENUS1_KAPPA: i64 = 2;

/// Shift keys are `(0, k)` for `h(s + k)`; coefficients use `s` and `tau11`.
pub fn genus1_action(engine: Genus1Engine) -> Result<ShiftDecomposition, super::casimir::CasimirError> {
    match engine {
        Genus1Engine::Rewriting => rewriting(),
        Genus1Engine::Classical => Ok(classical()),
    }
}

fn rewriting() -> Result<ShiftDecomposition, super::casimir::CasimirError> {
    use super::casimir::CasimirError;
    let vars = super::expr::siegel_vars();
    let eng = GroupEngine::new(1, Poly::int(&vars, GENUS1_KAPPA)).map_err(|e| CasimirError::Setup(e.to_string()))?;
    let uea = Uea::new(1, LetterOrder::HarishChandra).map_err(|e| CasimirError::Setup(e.to_string()))?;
    let c1 = uea.build_c(1);
    let raw = eng.apply_uea(&uea, &c1, &eng.seed()).map_err(|e| CasimirError::Setup(e.to_string()))?;
    let free = group_free(&eng, &raw)?;
    // s1 = 0, s2 = s − ½
    let s_half = Poly::var(&vars, "s").add_constant(&RingElem::rat(-1, 2));
    let bind = [("s1", Poly::zero(&vars)), ("s2", s_half)];
    let e = free.map_polys(|p| p.substitute(&bind));
    Ok(decompose(&eng.frame, &e)?)
}

/// Sum of `c_k y^k` times `e^{2πiτx} e^{−2πτy} y^β e^{iκθ}`, `β = (κ−1)/2 + s`.
#[derive(Clone, Debug)]
struct YSeries {
    c: std::collections::BTreeMap<i32, Poly>,
}

impl YSeries {
    fn add(&mut self, k: i32, p: Poly) {
        let e = self.c.entry(k).or_insert_with(|| Poly::zero(p.vars()));
        *e = e.add(&p);
    }
}

fn classical() -> ShiftDecomposition {
    let v = shift_vars();
    let tau = Poly::var(&v, "tau11");
    let pi = RingElem::pi();
    let i = RingElem::from_gauss(Gauss::i());
    let beta = Poly::var(&v, "s").add_constant(&RingElem::from_rat(Rat::new(GENUS1_KAPPA - 1, 2)));
    let dx = tau.scale(&pi.scale_gauss(&Gauss::new(Rat::zero(), Rat::from_int(2))));
    let dtheta = Poly::constant(&v, i.scale_rat(&Rat::from_int(GENUS1_KAPPA)));
    let dy = |s: &YSeries| -> YSeries {
        let mut out = YSeries { c: Default::default() };
        for (k, p) in &s.c {
            let bk = beta.add_constant(&RingElem::int(*k as i64));
            out.add(k - 1, p.mul(&bk));
            out.add(*k, p.mul(&tau).scale(&pi.scale_rat(&Rat::from_int(-2))));
        }
        out
    };
    let one = YSeries { c: [(0, Poly::one(&v))].into_iter().collect() };
    let yy = dy(&dy(&one));
    let mut total = YSeries { c: Default::default() };
    // 4y²∂x²
    total.add(2, dx.mul(&dx).scale_int(4));
    // 4y²∂y²
    for (k, p) in &yy.c {
        total.add(k + 2, p.scale_int(4));
    }
    // −4y∂x∂θ
    total.add(1, dx.mul(&dtheta).scale_int(-4));
    let mut dec = ShiftDecomposition::zero();
    for (k, p) in total.c {
        dec.insert((0, k), p);
    }
    dec
}

/// Numeric check of the classical shape itself: finite differences of the
/// operator on the explicit function at one point.
pub fn classical_numeric_residual(s: f64, tau: f64, x: f64, y: f64, theta: f64) -> f64 {
    use num_complex::Complex64 as C;
    let k = GENUS1_KAPPA as f64;
    let beta = (k - 1.0) / 2.0 + s;
    let f = |x: f64, y: f64, th: f64| -> C {
        let tp = 2.0 * std::f64::consts::PI * tau;
        C::new(0.0, tp * x).exp() * (-tp * y).exp() * y.powf(beta) * C::new(0.0, k * th).exp()
    };
    let h = 1e-4;
    let fxx = (f(x + h, y, theta) - f(x, y, theta) * 2.0 + f(x - h, y, theta)) / (h * h);
    let fyy = (f(x, y + h, theta) - f(x, y, theta) * 2.0 + f(x, y - h, theta)) / (h * h);
    let fxt = (f(x + h, y, theta + h) - f(x + h, y, theta - h) - f(x - h, y, theta + h) + f(x - h, y, theta - h))
        / (4.0 * h * h);
    let lhs = (fxx + fyy) * 4.0 * y * y - fxt * 4.0 * y;
    let dec = classical();
    let vals = [("s", (s, 0.0)), ("tau11", (tau, 0.0))];
    let mut rhs = C::new(0.0, 0.0);
    for ((_, kk), p) in &dec.coeffs {
        let c = p.eval_c64(&vals);
        rhs += C::new(c.0, c.1) * y.powi(*kk) * f(x, y, theta);
    }
    (lhs - rhs).norm() / f(x, y, theta).norm()
}

/// The seed of the rewriting engine in genus one before `s1 = 0`.
pub fn genus1_seed() -> SiegelExpr {
    SiegelExpr::seed(&super::expr::Frame::new(1))
}
