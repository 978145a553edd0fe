//! Decompositions `Z·H(s) = Σ_Δ c_Δ(s) · H(s + Δ)` into shifted seeds.
//!
//! Shifts are stored as `(Δs1, Δs2)`; the `(u, v)` view uses
//! `Δu = 2Δs2`, `Δv = 2Δs1 + 4Δs2`.

use super::expr::{Frame, SiegelExpr};
use crate::ring::{Mono, Poly, RingElem, VarSet};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Coefficient variables; `D` stands for `det τ`.
pub const SHIFT_VARS: &[&str] = &["s1", "s2", "s", "u", "v", "kappa", "tau11", "D"];

pub fn shift_vars() -> Arc<VarSet> {
    VarSet::of(SHIFT_VARS)
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ShiftError {
    #[error("the expression is not a combination of shifted seeds (left over: {0})")]
    Decomposition(String),
    #[error("the expression still carries group variables")]
    GroupVariables,
    #[error("expected an expression with the exponential factor")]
    NoExponential,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShiftDecomposition {
    pub vars: Arc<VarSet>,
    pub coeffs: BTreeMap<(i32, i32), Poly>,
}

pub fn uv_shift(ds: (i32, i32)) -> (i32, i32) {
    (2 * ds.1, 2 * ds.0 + 4 * ds.1)
}

pub fn s_shift(duv: (i32, i32)) -> Option<(i32, i32)> {
    let (du, dv) = duv;
    if du % 2 != 0 || (dv - 2 * du) % 2 != 0 {
        return None;
    }
    Some(((dv - 2 * du) / 2, du / 2))
}

impl ShiftDecomposition {
    pub fn zero() -> Self {
        ShiftDecomposition { vars: shift_vars(), coeffs: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        let mut d = Self::zero();
        d.coeffs.insert((0, 0), Poly::one(&d.vars));
        d
    }

    pub fn scalar(p: Poly) -> Self {
        let mut d = Self::zero();
        d.insert((0, 0), p);
        d
    }

    pub fn insert(&mut self, k: (i32, i32), p: Poly) {
        if p.is_zero() {
            return;
        }
        let s = match self.coeffs.get(&k) {
            Some(q) => q.add(&p),
            None => p,
        };
        if s.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, s);
        }
    }

    pub fn get(&self, ds: (i32, i32)) -> Poly {
        self.coeffs.get(&ds).cloned().unwrap_or_else(|| Poly::zero(&self.vars))
    }

    pub fn get_uv(&self, duv: (i32, i32)) -> Poly {
        s_shift(duv).map(|k| self.get(k)).unwrap_or_else(|| Poly::zero(&self.vars))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut d = self.clone();
        for (k, p) in &o.coeffs {
            d.insert(*k, p.clone());
        }
        d
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Poly::int(&self.vars, -1)))
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut d = Self::zero();
        for (k, p) in &self.coeffs {
            d.insert(*k, p.mul(c));
        }
        d
    }

    /// `Z ∘ G`: apply `self` to every shifted seed appearing in `g`.
    /// Coefficients of `self` are evaluated at the shifted point.
    pub fn compose(&self, g: &Self) -> Self {
        let s1 = Poly::var(&self.vars, "s1");
        let s2 = Poly::var(&self.vars, "s2");
        let mut out = Self::zero();
        for ((a, b), gc) in &g.coeffs {
            let bind = [
                ("s1", s1.add_constant(&RingElem::int(*a as i64))),
                ("s2", s2.add_constant(&RingElem::int(*b as i64))),
            ];
            for ((c, d), zc) in &self.coeffs {
                out.insert((a + c, b + d), gc.mul(&zc.substitute(&bind)));
            }
        }
        out
    }

    /// Substitutes variables in every coefficient.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Self {
        let mut d = Self::zero();
        for (k, p) in &self.coeffs {
            d.insert(*k, p.substitute(bindings));
        }
        d
    }

    /// Rewrites `u`, `v` through `u = 2s2+2`, `v = 2s1+4s2+5`.
    pub fn in_s_coordinates(&self) -> Self {
        self.substitute(&uv_in_s(&self.vars))
    }

    pub fn zero_shift(&self) -> Poly {
        self.get((0, 0))
    }
}

/// `u = 2s2 + 2`, `v = 2s1 + 4s2 + 5`.
pub fn uv_in_s(vars: &Arc<VarSet>) -> Vec<(&'static str, Poly)> {
    let s1 = Poly::var(vars, "s1");
    let s2 = Poly::var(vars, "s2");
    vec![
        ("u", s2.scale_int(2).add_constant(&RingElem::int(2))),
        ("v", s1.scale_int(2).add(&s2.scale_int(4)).add_constant(&RingElem::int(5))),
    ]
}

/// `s1 = (v − 2u − 1)/2`, `s2 = (u − 2)/2`.
pub fn s_in_uv(vars: &Arc<VarSet>) -> Vec<(&'static str, Poly)> {
    let u = Poly::var(vars, "u");
    let v = Poly::var(vars, "v");
    vec![
        ("s1", v.sub(&u.scale_int(2)).add_constant(&RingElem::int(-1)).scale_rat(1, 2)),
        ("s2", u.add_constant(&RingElem::int(-2)).scale_rat(1, 2)),
    ]
}

/// Decomposes a genus-two expression `Z·H / H` into shifted seeds by reducing
/// the cleared numerator to a polynomial in `t = tr(τy)`, `d = det y`, `D = det τ`.
pub fn decompose(frame: &Frame, e: &SiegelExpr) -> Result<ShiftDecomposition, ShiftError> {
    if !e.is_free_of_group_vars() {
        return Err(ShiftError::GroupVariables);
    }
    if e.is_zero() {
        return Ok(ShiftDecomposition::zero());
    }
    if !e.exp {
        return Err(ShiftError::NoExponential);
    }
    if frame.m == 1 {
        return decompose_genus1(frame, e);
    }
    let (a0, b0, n) = e.to_single(frame);
    let out_vars = shift_vars();
    let outer = ["y11", "y12", "y22", "tau11", "tau12", "tau22"];
    let idx: Vec<usize> = outer.iter().map(|v| frame.vars.index(v).unwrap()).collect();
    let mut rest = n;
    let mut cache: HashMap<(u32, u32, u32), Poly> = HashMap::new();
    let mut dec = ShiftDecomposition::zero();
    let dvar = Poly::var(&out_vars, "D");
    while !rest.is_zero() {
        // leading term, measured on the y/τ part only (lex, y11 first)
        let key = |m: &Mono| idx.iter().map(|i| m[*i]).collect::<Vec<u16>>();
        let lead = rest.terms().iter().map(|(m, _)| key(m)).max().unwrap();
        let [e11, e12, e22, t11, t12, t22] = [lead[0], lead[1], lead[2], lead[3], lead[4], lead[5]];
        if e12 != 0 || t12 != 0 || e11 < e22 {
            return Err(ShiftError::Decomposition(format!("leading y/τ exponents {lead:?}")));
        }
        let (j, i, k) = (e22 as u32, (e11 - e22) as u32, t22 as u32);
        if t11 as u32 != i + k {
            return Err(ShiftError::Decomposition(format!("leading y/τ exponents {lead:?}")));
        }
        // the coefficient polynomial of that y/τ monomial
        let mut coeff_terms = Vec::new();
        for (m, c) in rest.terms() {
            if key(m) == lead {
                let mut mm = m.clone();
                for ii in &idx {
                    mm[*ii] = 0;
                }
                coeff_terms.push((mm, c.clone()));
            }
        }
        let coeff = Poly::from_terms(&frame.vars, coeff_terms);
        let basis = cache
            .entry((i, j, k))
            .or_insert_with(|| frame.tr.pow(i).mul(&frame.det.pow(j)).mul(&frame.det_tau.pow(k)))
            .clone();
        rest = rest.sub(&basis.mul(&coeff));
        let c_out = coeff.embed(&out_vars).map_err(|_| ShiftError::Decomposition("coefficient variables".into()))?;
        dec.insert((a0 + i as i32, b0 + j as i32), c_out.mul(&dvar.pow(k)));
    }
    Ok(dec)
}

/// Genus one: `tr = τ y`, `det = y`, and the seed is `e(τz) y^{s2}` with `s1 = 0`,
/// so only the total power of `y` is a shift.
fn decompose_genus1(frame: &Frame, e: &SiegelExpr) -> Result<ShiftDecomposition, ShiftError> {
    let out_vars = shift_vars();
    let iy = frame.vars.index("y11").unwrap();
    let it = frame.vars.index("tau11").unwrap();
    let tau = Poly::var(&out_vars, "tau11");
    let mut dec = ShiftDecomposition::zero();
    for ((a, b), p) in e.terms() {
        for (m, c) in p.terms() {
            let ky = a + b + m[iy] as i32;
            let kt = a + m[it] as i32;
            if kt < 0 {
                return Err(ShiftError::Decomposition("negative power of τ".into()));
            }
            let mut mm = m.clone();
            mm[iy] = 0;
            mm[it] = 0;
            let single = Poly::from_terms(&frame.vars, [(mm, c.clone())])
                .embed(&out_vars)
                .map_err(|_| ShiftError::Decomposition("coefficient variables".into()))?;
            dec.insert((0, ky), single.mul(&tau.pow(kt as u32)));
        }
    }
    Ok(dec)
}

/// One compared coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct CoefficientVerdict {
    pub shift_uv: (i32, i32),
    pub derived: String,
    pub quoted: String,
    pub equal: bool,
}

/// Compares a decomposition with a quoted display given as `(Δu, Δv) → text`;
/// all shifts present on either side are reported.
pub fn compare_with_quoted(dec: &ShiftDecomposition, quoted: &[((i32, i32), String)]) -> Vec<CoefficientVerdict> {
    let vars = &dec.vars;
    let mut keys: Vec<(i32, i32)> = dec.coeffs.keys().map(|k| uv_shift(*k)).collect();
    for (k, _) in quoted {
        if !keys.contains(k) {
            keys.push(*k);
        }
    }
    keys.sort();
    let lhs = dec.in_s_coordinates();
    let bind = uv_in_s(vars);
    keys.into_iter()
        .map(|k| {
            let derived = lhs.get_uv(k);
            let q = quoted
                .iter()
                .find(|(kk, _)| *kk == k)
                .map(|(_, t)| crate::ring::parse_poly(vars, t).expect("quoted display parses").substitute(&bind))
                .unwrap_or_else(|| Poly::zero(vars));
            CoefficientVerdict { shift_uv: k, derived: derived.to_string(), quoted: q.to_string(), equal: derived == q }
        })
        .collect()
}
