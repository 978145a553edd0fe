//! The trace operators `tr(E+E−)` and `tr(E+E−E+E−)` on `j^{−κ} h`:
//! closed forms in `∂`, `∂̄` next to the group-level rewriting.

use super::expr::{left_mul, right_mul, smat_trace, Frame, SMat, SiegelExpr};
use super::group::GroupEngine;
use crate::lie::{Kind, LieError};
use crate::ring::{Gauss, Poly, Rat, RingElem};

fn ci(re: i64, im: i64) -> RingElem {
    RingElem::from_gauss(Gauss::new(Rat::from_int(re), Rat::from_int(im)))
}

/// `y ∂̄(h) y`.
pub fn y_dbar_y(frame: &Frame, h: &SiegelExpr) -> SMat {
    right_mul(&left_mul(&frame.y, &h.grad_bar(frame)), &frame.y)
}

/// `tr(y ∂̄ h)`.
pub fn tr_y_dbar(frame: &Frame, h: &SiegelExpr) -> SiegelExpr {
    smat_trace(&left_mul(&frame.y, &h.grad_bar(frame)))
}

/// `D(h) = Σ_ab (∂((y∂̄h y)_ab))_ba`.
pub fn big_d(frame: &Frame, h: &SiegelExpr) -> SiegelExpr {
    let f = y_dbar_y(frame, h);
    let m = frame.m;
    let mut acc = SiegelExpr::zero(h.m, h.exp);
    for a in 0..m {
        for b in 0..m {
            acc.add_assign(f[a][b].d(frame, b, a));
        }
    }
    acc
}

/// Closed form of `j^κ tr(E+E−)(j^{−κ} h)`: `16 D(h) + 8i(m+1−κ) tr(y∂̄h)`.
pub fn closed_order2(frame: &Frame, h: &SiegelExpr, kappa: &Poly) -> SiegelExpr {
    let m1 = Poly::int(&frame.vars, frame.m as i64 + 1).sub(kappa);
    big_d(frame, h)
        .scale(&RingElem::int(16))
        .add(&tr_y_dbar(frame, h).mul_poly(&m1.scale(&ci(0, 8))))
}

/// Closed form of `j^κ tr(E+E−E+E−)(j^{−κ} h)` as a seven-term sum.
pub fn closed_order4(frame: &Frame, h: &SiegelExpr, kappa: &Poly) -> SiegelExpr {
    let vars = &frame.vars;
    let m = frame.m;
    let mi = |n: i64| Poly::int(vars, n);
    let a1 = mi(m as i64 + 1).sub(kappa); // m+1−κ
    let a2 = mi(m as i64 + 2).sub(&kappa.scale_int(2)); // m+2−2κ
    let a3 = mi(3 * m as i64 + 4).sub(&kappa.scale_int(4)); // 3m+4−4κ
    let mp1 = m as i64 + 1;
    let f = y_dbar_y(frame, h);
    let tyd = tr_y_dbar(frame, h);

    let mut out = tyd.mul_poly(&a1.mul(&a2).scale_int(mp1).scale(&ci(0, 8)));
    out.add_assign(big_d(frame, h).mul_poly(&a3.scale_int(16 * mp1)));
    out.add_assign(closed_order2(frame, &tyd, kappa).scale(&ci(0, 4)));

    let mut l4 = SiegelExpr::zero(h.m, h.exp);
    let mut l5 = SiegelExpr::zero(h.m, h.exp);
    let mut l6 = SiegelExpr::zero(h.m, h.exp);
    let mut l7 = SiegelExpr::zero(h.m, h.exp);
    for a in 0..m {
        for b in 0..m {
            l4.add_assign(f[a][b].dbar(frame, b, a));
            let yb = left_mul(&frame.y, &f[a][b].grad_bar(frame));
            let yd = left_mul(&frame.y, &f[a][b].grad(frame));
            for c in 0..m {
                l5.add_assign(yb[c][b].d(frame, a, c));
                l6.add_assign(yd[c][b].dbar(frame, a, c));
            }
        }
    }
    for a in 0..m {
        for c in 0..m {
            // Σ_b (∂ f_ab)_bc, then y ∂̄(·) y, entry (c,d), then ∂ entry (d,a)
            let mut s = SiegelExpr::zero(h.m, h.exp);
            for b in 0..m {
                s.add_assign(f[a][b].d(frame, b, c));
            }
            let sand = y_dbar_y(frame, &s);
            for d in 0..m {
                l7.add_assign(sand[c][d].d(frame, d, a));
            }
        }
    }
    out.add_assign(l4.mul_poly(&a1.mul(&a2).scale_int(-32)));
    out.add_assign(l5.mul_poly(&a2.scale(&ci(0, 64))));
    out.add_assign(l6.mul_poly(&a1.scale(&ci(0, 128))));
    out.add_assign(l7.scale(&RingElem::int(256)));
    out
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("trace operators of order {0} are not available (orders 2 and 4 are)")]
    Order(usize),
    #[error("result still depends on the group variables: the rewriting rules are inconsistent")]
    NotInClosure,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Group-level rewriting of `j^κ tr((E+E−)^{order/2})(j^{−κ} h)`. The
/// result is evaluated at two group points over the same `z` and must
/// agree there, otherwise it is not a function on the half-space.
pub fn rewrite_trace(engine: &GroupEngine, order: usize, h: &SiegelExpr) -> Result<SiegelExpr, TraceError> {
    let factors: &[Kind] = match order {
        2 => &[Kind::Eplus, Kind::Eminus],
        4 => &[Kind::Eplus, Kind::Eminus, Kind::Eplus, Kind::Eminus],
        n => return Err(TraceError::Order(n)),
    };
    let raw = engine.apply_trace(factors, h)?;
    group_free(engine, &raw)
}

/// Sets `J = I` after checking that a second, non-unitary choice of `J` gives the same function.
pub fn group_free(engine: &GroupEngine, raw: &SiegelExpr) -> Result<SiegelExpr, TraceError> {
    let fr = &engine.frame;
    let at_id = raw.at_identity(fr);
    let (k, kit) = test_point(fr);
    let other = raw.at_group_point(fr, &k, &kit);
    if !at_id.same_function(&other, fr) {
        return Err(TraceError::NotInClosure);
    }
    Ok(at_id)
}

/// `K = [[1,2],[0,1]]` (or `2` in genus one) with its inverse transpose.
fn test_point(fr: &Frame) -> (Vec<Vec<Poly>>, Vec<Vec<Poly>>) {
    let v = &fr.vars;
    if fr.m == 1 {
        return (vec![vec![Poly::int(v, 2)]], vec![vec![Poly::rat(v, 1, 2)]]);
    }
    let k = vec![vec![Poly::int(v, 1), Poly::int(v, 2)], vec![Poly::int(v, 0), Poly::int(v, 1)]];
    let kit = vec![vec![Poly::int(v, 1), Poly::int(v, 0)], vec![Poly::int(v, -2), Poly::int(v, 1)]];
    (k, kit)
}

/// Result of comparing the two derivations of one trace operator.
#[derive(Clone, Debug)]
pub struct TraceCheck {
    pub order: usize,
    pub m: usize,
    pub rewritten: SiegelExpr,
    pub closed: SiegelExpr,
    pub agree: bool,
}

/// Both derivations on the seed `e(τz) tr^{s1} det^{s2}`.
pub fn check_trace_on_seed(engine: &GroupEngine, order: usize) -> Result<TraceCheck, TraceError> {
    let h = engine.seed();
    let rewritten = rewrite_trace(engine, order, &h)?;
    let closed = match order {
        2 => closed_order2(&engine.frame, &h, &engine.kappa),
        4 => closed_order4(&engine.frame, &h, &engine.kappa),
        n => return Err(TraceError::Order(n)),
    };
    let agree = rewritten.same_function(&closed, &engine.frame);
    Ok(TraceCheck { order, m: engine.m(), rewritten, closed, agree })
}
