//! Harish-Chandra projection and ρ-shift, images of the Casimir elements,
//! infinitesimal characters and the center elements `D+(u)`, `D-(v)`.

use crate::lie::BasisIndex;
use crate::ring::univariate::{resultant, UPoly};
use crate::ring::{Poly, Rat, RingElem, VarSet};
use crate::uea::{LetterOrder, Uea, UeaElem};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HcError {
    #[error("Harish-Chandra projection needs the Harish-Chandra letter order")]
    WrongOrder,
    #[error("center elements D+ and D- are defined for genus two only")]
    GenusTwoOnly,
    #[error("polynomial is not univariate with rational coefficients in {0}")]
    NotUnivariate(String),
}

/// Variables of Cartan polynomials and infinitesimal-character evaluations.
pub const CARTAN_VARS: &[&str] = &["u", "v", "kappa", "L1", "L2", "t", "t1", "t2", "B11", "B22"];

pub fn cartan_vars() -> Arc<VarSet> {
    VarSet::of(CARTAN_VARS)
}

fn cartan_name(k: u8) -> &'static str {
    match k {
        1 => "B11",
        2 => "B22",
        _ => panic!("Cartan letters beyond genus two are not modelled"),
    }
}

/// Genus-one and genus-two Harish-Chandra machinery over one enveloping algebra.
pub struct HarishChandra<'a> {
    pub uea: &'a Uea,
    pub cvars: Arc<VarSet>,
    delta: Vec<Rat>,
}

impl<'a> HarishChandra<'a> {
    pub fn new(uea: &'a Uea) -> Result<Self, HcError> {
        if uea.order() != LetterOrder::HarishChandra {
            return Err(HcError::WrongOrder);
        }
        let lie = &uea.lie;
        let mut delta = vec![Rat::zero(); lie.m];
        for (i, b) in lie.basis().iter().enumerate() {
            if b.is_positive() {
                let w = lie.weight(i).expect("root vectors are weight vectors");
                for (d, x) in delta.iter_mut().zip(w) {
                    *d = &*d + &x.re;
                }
            }
        }
        let half = Rat::new(1, 2);
        let delta = delta.into_iter().map(|d| &d * &half).collect();
        Ok(HarishChandra { uea, cvars: cartan_vars(), delta })
    }

    /// Half the sum of positive roots, computed from the weights of the positive letters.
    pub fn delta(&self) -> &[Rat] {
        &self.delta
    }

    /// `p+`: keeps only purely Cartan words, read as commutative monomials.
    pub fn p_plus(&self, x: &UeaElem) -> Poly {
        let nf = self.uea.normal_form(x);
        let mut acc = Poly::zero(&self.cvars);
        for (w, p) in nf.terms() {
            let letters: Vec<BasisIndex> = w.iter().map(|r| self.uea.letter_of_rank(*r)).collect();
            if !letters.iter().all(|b| b.is_cartan()) {
                continue;
            }
            let mut mono = p.embed(&self.cvars).expect("coefficient variables are Cartan variables");
            for b in letters {
                mono = mono.mul(&Poly::var(&self.cvars, cartan_name(b.k)));
            }
            acc = acc.add(&mono);
        }
        acc
    }

    /// `τ+`: `B_jj ↦ B_jj − δ_j`.
    pub fn tau_plus(&self, p: &Poly) -> Poly {
        let binds: Vec<(&str, Poly)> = self
            .delta
            .iter()
            .enumerate()
            .map(|(j, d)| {
                let name = cartan_name(j as u8 + 1);
                (name, Poly::var(&self.cvars, name).sub(&Poly::constant(&self.cvars, RingElem::from_rat(d.clone()))))
            })
            .collect();
        p.substitute(&binds)
    }

    pub fn gamma_image(&self, x: &UeaElem) -> Poly {
        self.tau_plus(&self.p_plus(x))
    }

    /// Substitutes `B_jj ↦ Λ_j`.
    pub fn eval_inf_char(&self, lambda: &[Poly], gamma: &Poly) -> Poly {
        let binds: Vec<(&str, Poly)> =
            lambda.iter().enumerate().map(|(j, l)| (cartan_name(j as u8 + 1), l.clone())).collect();
        gamma.substitute(&binds)
    }

    pub fn eval_at_ints(&self, lambda: &[i64], gamma: &Poly) -> Poly {
        let l: Vec<Poly> = lambda.iter().map(|x| Poly::int(&self.cvars, *x)).collect();
        self.eval_inf_char(&l, gamma)
    }

    /// The polynomial `Λ(γ(x))` with `Λ = (L1, L2)`.
    pub fn lambda_form(&self, gamma: &Poly) -> Poly {
        let names = ["L1", "L2"];
        let l: Vec<Poly> = (0..self.uea.m()).map(|j| Poly::var(&self.cvars, names[j])).collect();
        self.eval_inf_char(&l, gamma)
    }
}

/// Casimir elements of genus two and the two center elements built from them.
pub struct CenterElements {
    pub c1: UeaElem,
    pub c2: UeaElem,
    pub d_plus: UeaElem,
    pub d_minus: UeaElem,
}

impl CenterElements {
    pub fn build(uea: &Uea) -> Result<Self, HcError> {
        if uea.m() != 2 {
            return Err(HcError::GenusTwoOnly);
        }
        let c1 = uea.build_c(1);
        let c2 = uea.build_c(2);
        let d_plus = d_plus_from(uea, &c1, &c2, &uea.poly_var("u"));
        let d_minus = d_minus_from(uea, &c1, &c2, &uea.poly_var("v"));
        Ok(CenterElements { c1, c2, d_plus, d_minus })
    }
}

/// `½(C1² − C2 + 11C1 − 2(u²−1)C1 + 2(u²−1)(u²−4))` for any value of `u`.
pub fn d_plus_from(uea: &Uea, c1: &UeaElem, c2: &UeaElem, u: &Poly) -> UeaElem {
    let vars = &uea.vars;
    let u2m1 = u.mul(u).sub(&Poly::one(vars));
    let u2m4 = u.mul(u).sub(&Poly::int(vars, 4));
    uea.mul(c1, c1)
        .sub(c2)
        .add(&c1.scale_rat(11, 1))
        .sub(&c1.scale(&u2m1.scale_int(2)))
        .add(&UeaElem::scalar(u2m1.mul(&u2m4).scale_int(2)))
        .scale_rat(1, 2)
}

/// `2C2 − C1² − 34C1 − 2(v²−9)C1 + (v²−9)(v²−1)`.
pub fn d_minus_from(uea: &Uea, c1: &UeaElem, c2: &UeaElem, v: &Poly) -> UeaElem {
    let vars = &uea.vars;
    let v2m9 = v.mul(v).sub(&Poly::int(vars, 9));
    let v2m1 = v.mul(v).sub(&Poly::one(vars));
    c2.scale_rat(2, 1)
        .sub(&uea.mul(c1, c1))
        .sub(&c1.scale_rat(34, 1))
        .sub(&c1.scale(&v2m9.scale_int(2)))
        .add(&UeaElem::scalar(v2m9.mul(&v2m1)))
}

/// Target factorizations `(Λ1²−u²)(Λ2²−u²)` and `((Λ1+Λ2)²−v²)((Λ1−Λ2)²−v²)`.
pub fn factored_targets(cvars: &Arc<VarSet>) -> (Poly, Poly) {
    let l1 = Poly::var(cvars, "L1");
    let l2 = Poly::var(cvars, "L2");
    let u = Poly::var(cvars, "u");
    let v = Poly::var(cvars, "v");
    let u2 = u.mul(&u);
    let v2 = v.mul(&v);
    let plus = l1.mul(&l1).sub(&u2).mul(&l2.mul(&l2).sub(&u2));
    let sum = l1.add(&l2);
    let diff = l1.sub(&l2);
    let minus = sum.mul(&sum).sub(&v2).mul(&diff.mul(&diff).sub(&v2));
    (plus, minus)
}

/// The intermediate projections quoted on the way to the images of `C1`, `C2`.
pub struct ProjectionPieces {
    pub tr_b2: Poly,
    pub sym_b4: Poly,
    pub half_em_ep_em_ep: Poly,
    pub two_em_ep_b_b: Poly,
    pub anticommutator_sum: Poly,
}

pub fn projection_pieces(hc: &HarishChandra) -> ProjectionPieces {
    let u = hc.uea;
    let (ep, em, b, bs) = (u.mat_eplus(), u.mat_eminus(), u.mat_b(), u.mat_bstar());
    let tr_b2 = hc.p_plus(&u.trace_of(&[&b, &b]));
    let sym_b4 = hc.p_plus(&u.trace_of(&[&b, &b, &b, &b]).add(&u.trace_of(&[&bs, &bs, &bs, &bs])).scale_rat(1, 2));
    let half = hc.p_plus(&u.trace_of(&[&em, &ep, &em, &ep]).scale_rat(1, 2));
    let two = hc.p_plus(&u.trace_of(&[&em, &ep, &b, &b]).scale_rat(2, 1));
    let m = u.m() as u8;
    let mut anti = UeaElem::zero(&u.vars);
    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=m {
                    let p = u.letter(BasisIndex::eplus(k, l));
                    let q = u.letter(BasisIndex::eminus(i, j));
                    let ac = u.mul(&p, &q).add(&u.mul(&q, &p));
                    let bb = u.mul(&u.letter(BasisIndex::b(k, j)), &u.letter(BasisIndex::b(l, i)));
                    anti = anti.add(&u.mul(&ac, &bb));
                }
            }
        }
    }
    ProjectionPieces {
        tr_b2,
        sym_b4,
        half_em_ep_em_ep: half,
        two_em_ep_b_b: two,
        anticommutator_sum: hc.p_plus(&anti),
    }
}

/// Converts a polynomial in one variable with rational coefficients.
pub fn to_upoly(p: &Poly, var: &str) -> Result<UPoly, HcError> {
    let idx = p.vars().index(var);
    let mut coeffs: Vec<Rat> = Vec::new();
    for (m, c) in p.terms() {
        let bad = m.iter().enumerate().any(|(i, e)| *e > 0 && Some(i) != idx);
        let r = c.as_rat();
        if bad || r.is_none() {
            return Err(HcError::NotUnivariate(var.to_string()));
        }
        let e = idx.map(|i| m[i] as usize).unwrap_or(0);
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rat::zero());
        }
        coeffs[e] = &coeffs[e] + &r.unwrap();
    }
    Ok(UPoly::new(coeffs))
}

/// Rational common zeros of two polynomials in `x`, `y` by resultant elimination.
#[derive(Clone, Debug)]
pub struct CommonZeros {
    pub resultant_in_x: UPoly,
    pub points: Vec<(Rat, Rat)>,
    pub bezout_bound: usize,
}

pub fn common_zeros(f: &Poly, g: &Poly, x: &str, y: &str) -> Result<CommonZeros, HcError> {
    let dx = (f.degree_in(x).unwrap_or(0) as usize) * (g.degree_in(y).unwrap_or(0) as usize)
        + (g.degree_in(x).unwrap_or(0) as usize) * (f.degree_in(y).unwrap_or(0) as usize);
    let fy = f.degree_in(y).unwrap_or(0) as usize;
    let gy = g.degree_in(y).unwrap_or(0) as usize;
    let at = |p: &Poly, k: &Rat| -> Result<UPoly, HcError> {
        let s = p.substitute(&[(x, Poly::constant(p.vars(), RingElem::from_rat(k.clone())))]);
        to_upoly(&s, y)
    };
    let mut pts = Vec::new();
    let mut k = 0i64;
    while pts.len() <= dx {
        let kr = Rat::from_int(k);
        let (a, b) = (at(f, &kr)?, at(g, &kr)?);
        // skip points where a leading coefficient in y vanishes
        if a.degree() == Some(fy) && b.degree() == Some(gy) {
            pts.push((kr, resultant(&a, &b)));
        }
        k = if k >= 0 { -k - 1 } else { -k };
    }
    let res = UPoly::interpolate(&pts);
    let mut points = Vec::new();
    if !res.is_zero() {
        for (r, _) in res.rational_roots() {
            let (a, b) = (at(f, &r)?, at(g, &r)?);
            let h = a.gcd(&b);
            for (s, _) in h.rational_roots() {
                points.push((r.clone(), s));
            }
        }
    }
    points.sort();
    let bezout = (f.total_degree() * g.total_degree()) as usize;
    Ok(CommonZeros { resultant_in_x: res, points, bezout_bound: bezout })
}

/// Images of the Weyl group of type C2 acting on Cartan polynomials.
pub fn weyl_images(p: &Poly) -> Vec<Poly> {
    let vars = p.vars();
    let b1 = Poly::var(vars, "B11");
    let b2 = Poly::var(vars, "B22");
    let mut out = Vec::new();
    for swap in [false, true] {
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                let (x, y) = if swap { (b2.clone(), b1.clone()) } else { (b1.clone(), b2.clone()) };
                out.push(p.substitute(&[("B11", x.scale_int(s1)), ("B22", y.scale_int(s2))]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    #[test]
    fn delta_from_positive_roots() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let hc = HarishChandra::new(&u).unwrap();
        assert_eq!(hc.delta(), &[Rat::from_int(2), Rat::from_int(1)]);
        let u1 = Uea::new(1, LetterOrder::HarishChandra).unwrap();
        assert_eq!(HarishChandra::new(&u1).unwrap().delta(), &[Rat::one()]);
    }

    #[test]
    fn gamma_c1_genus_two() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let hc = HarishChandra::new(&u).unwrap();
        let g = hc.gamma_image(&u.build_c(1));
        assert_eq!(g, parse_poly(&hc.cvars, "B11^2 + B22^2 - 5").unwrap());
        assert_eq!(hc.gamma_image(&u.one()), Poly::one(&hc.cvars));
    }

    #[test]
    fn wrong_order_rejected() {
        let u = Uea::new(2, LetterOrder::CompactRight).unwrap();
        assert!(HarishChandra::new(&u).is_err());
    }

    #[test]
    fn common_zeros_of_circle_and_line() {
        let v = cartan_vars();
        let f = parse_poly(&v, "L1^2 + L2^2 - 5").unwrap();
        let g = parse_poly(&v, "L1 - 2*L2").unwrap();
        let z = common_zeros(&f, &g, "L1", "L2").unwrap();
        assert_eq!(z.points, vec![(Rat::from_int(-2), Rat::from_int(-1)), (Rat::from_int(2), Rat::from_int(1))]);
    }
}
