//! Functions on the Siegel half-space of the shape
//! `e(τz)^[exp] · tr(τy)^{s1} · det(y)^{s2} · Σ tr(τy)^a det(y)^b · P_ab`
//! with `P_ab` polynomial in the entries of `y`, `τ` and, at group level,
//! the entries of `J`, `J̄`. Nothing depends on `x` except the exponential.

use crate::ring::{Mono, Poly, RingElem, VarSet};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const SIEGEL_VARS: &[&str] = &[
    "y11", "y12", "y22", "tau11", "tau12", "tau22", "s1", "s2", "s", "u", "v", "kappa", "J11", "J12", "J21", "J22",
    "Jb11", "Jb12", "Jb21", "Jb22",
];

pub fn siegel_vars() -> Arc<VarSet> {
    VarSet::of(SIEGEL_VARS)
}

pub(crate) fn sym_name(prefix: &str, p: usize, q: usize) -> &'static str {
    let (a, b) = if p <= q { (p, q) } else { (q, p) };
    match (prefix, a, b) {
        ("y", 0, 0) => "y11",
        ("y", 0, 1) => "y12",
        ("y", 1, 1) => "y22",
        ("tau", 0, 0) => "tau11",
        ("tau", 0, 1) => "tau12",
        ("tau", 1, 1) => "tau22",
        _ => panic!("no symmetric entry {prefix}{a}{b}"),
    }
}

pub(crate) fn full_name(prefix: &str, p: usize, q: usize) -> &'static str {
    match (prefix, p, q) {
        ("J", 0, 0) => "J11",
        ("J", 0, 1) => "J12",
        ("J", 1, 0) => "J21",
        ("J", 1, 1) => "J22",
        ("Jb", 0, 0) => "Jb11",
        ("Jb", 0, 1) => "Jb12",
        ("Jb", 1, 0) => "Jb21",
        ("Jb", 1, 1) => "Jb22",
        _ => panic!("no entry {prefix}{p}{q}"),
    }
}

/// Square matrix of polynomials.
pub type PMat = Vec<Vec<Poly>>;

pub fn pmat_mul(a: &PMat, b: &PMat) -> PMat {
    let n = a.len();
    let vars = a[0][0].vars().clone();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Poly::zero(&vars), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn pmat_transpose(a: &PMat) -> PMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

pub fn pmat_trace(a: &PMat) -> Poly {
    let vars = a[0][0].vars().clone();
    (0..a.len()).fold(Poly::zero(&vars), |acc, i| acc.add(&a[i][i]))
}

/// Polynomial building blocks for one genus.
#[derive(Clone, Debug)]
pub struct Frame {
    pub m: usize,
    pub vars: Arc<VarSet>,
    pub y: PMat,
    pub tau: PMat,
    pub adj_y: PMat,
    pub tr: Poly,
    pub det: Poly,
    pub det_tau: Poly,
    pub j: PMat,
    pub jb: PMat,
}

impl Frame {
    pub fn new(m: usize) -> Frame {
        assert!(m == 1 || m == 2, "the half-space calculus covers genus one and two");
        let vars = siegel_vars();
        let v = |n: &str| Poly::var(&vars, n);
        let y: PMat = (0..m).map(|p| (0..m).map(|q| v(sym_name("y", p, q))).collect()).collect();
        let tau: PMat = (0..m).map(|p| (0..m).map(|q| v(sym_name("tau", p, q))).collect()).collect();
        let j: PMat = (0..m).map(|p| (0..m).map(|q| v(full_name("J", p, q))).collect()).collect();
        let jb: PMat = (0..m).map(|p| (0..m).map(|q| v(full_name("Jb", p, q))).collect()).collect();
        let (adj_y, det, det_tau) = if m == 1 {
            (vec![vec![Poly::one(&vars)]], y[0][0].clone(), tau[0][0].clone())
        } else {
            let adj = vec![vec![y[1][1].clone(), y[0][1].neg()], vec![y[1][0].neg(), y[0][0].clone()]];
            let det = y[0][0].mul(&y[1][1]).sub(&y[0][1].mul(&y[0][1]));
            let dt = tau[0][0].mul(&tau[1][1]).sub(&tau[0][1].mul(&tau[0][1]));
            (adj, det, dt)
        };
        let tr = pmat_trace(&pmat_mul(&tau, &y));
        Frame { m, vars, y, tau, adj_y, tr, det, det_tau, j, jb }
    }
}

/// Sum of `tr^a det^b · P_ab` on top of the implicit base
/// `e^[exp] · tr^{s1} · det^{s2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelExpr {
    pub m: usize,
    pub exp: bool,
    terms: BTreeMap<(i32, i32), Poly>,
}

impl SiegelExpr {
    pub fn zero(m: usize, exp: bool) -> Self {
        SiegelExpr { m, exp, terms: BTreeMap::new() }
    }

    /// The seed `e(τz) tr(τy)^{s1} det(y)^{s2}` itself.
    pub fn seed(frame: &Frame) -> Self {
        let mut e = SiegelExpr::zero(frame.m, true);
        e.push((0, 0), Poly::one(&frame.vars));
        e
    }

    pub fn from_terms(m: usize, exp: bool, terms: impl IntoIterator<Item = ((i32, i32), Poly)>) -> Self {
        let mut e = SiegelExpr::zero(m, exp);
        for (k, p) in terms {
            e.push(k, p);
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<(i32, i32), Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, k: (i32, i32), p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(q) => {
                let s = q.add(&p);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *q = s;
                }
            }
            None => {
                self.terms.insert(k, p);
            }
        }
    }

    pub fn add(&self, o: &SiegelExpr) -> SiegelExpr {
        debug_assert_eq!(self.exp, o.exp);
        let mut e = self.clone();
        for (k, p) in &o.terms {
            e.push(*k, p.clone());
        }
        e
    }

    pub fn add_assign(&mut self, o: SiegelExpr) {
        for (k, p) in o.terms {
            self.push(k, p);
        }
    }

    pub fn sub(&self, o: &SiegelExpr) -> SiegelExpr {
        self.add(&o.scale(&RingElem::int(-1)))
    }

    pub fn scale(&self, c: &RingElem) -> SiegelExpr {
        let mut e = SiegelExpr::zero(self.m, self.exp);
        for (k, p) in &self.terms {
            e.push(*k, p.scale(c));
        }
        e
    }

    pub fn mul_poly(&self, c: &Poly) -> SiegelExpr {
        let mut e = SiegelExpr::zero(self.m, self.exp);
        if c.is_zero() {
            return e;
        }
        for (k, p) in &self.terms {
            e.push(*k, p.mul(c));
        }
        e
    }

    /// Multiplies by `tr^a det^b`.
    pub fn shift(&self, a: i32, b: i32) -> SiegelExpr {
        let mut e = SiegelExpr::zero(self.m, self.exp);
        for ((x, y), p) in &self.terms {
            e.push((x + a, y + b), p.clone());
        }
        e
    }

    pub fn map_polys(&self, f: impl Fn(&Poly) -> Poly) -> SiegelExpr {
        let mut e = SiegelExpr::zero(self.m, self.exp);
        for (k, p) in &self.terms {
            e.push(*k, f(p));
        }
        e
    }

    /// The real matrix derivative `(∂_y)_pq = ((1+δ_pq)/2) ∂/∂y_pq` of everything but the exponential.
    pub fn dy(&self, frame: &Frame, p: usize, q: usize) -> SiegelExpr {
        let vars = &frame.vars;
        let s1 = Poly::var(vars, "s1");
        let s2 = Poly::var(vars, "s2");
        let tau_pq = &frame.tau[p][q];
        let adj_pq = &frame.adj_y[p][q];
        let yname = sym_name("y", p, q);
        let mut out = SiegelExpr::zero(self.m, self.exp);
        for ((a, b), poly) in &self.terms {
            let ca = s1.add_constant(&RingElem::int(*a as i64));
            out.push((a - 1, *b), poly.mul(&ca).mul(tau_pq));
            let cb = s2.add_constant(&RingElem::int(*b as i64));
            out.push((*a, b - 1), poly.mul(&cb).mul(adj_pq));
            let mut d = poly.derivative(yname);
            if p != q {
                d = d.scale_rat(1, 2);
            }
            out.push((*a, *b), d);
        }
        out
    }

    /// Holomorphic Wirtinger derivative `∂_pq`.
    pub fn d(&self, frame: &Frame, p: usize, q: usize) -> SiegelExpr {
        let mi_half = RingElem::from_gauss(crate::ring::Gauss::new(crate::ring::Rat::zero(), crate::ring::Rat::new(-1, 2)));
        let mut out = self.dy(frame, p, q).scale(&mi_half);
        if self.exp {
            let two_pi_i = RingElem::pi().scale_gauss(&crate::ring::Gauss::new(crate::ring::Rat::zero(), 2.into()));
            out.add_assign(self.mul_poly(&frame.tau[p][q].scale(&two_pi_i)));
        }
        out
    }

    /// Antiholomorphic Wirtinger derivative `∂̄_pq`; the exponential is holomorphic.
    pub fn dbar(&self, frame: &Frame, p: usize, q: usize) -> SiegelExpr {
        let i_half = RingElem::from_gauss(crate::ring::Gauss::new(crate::ring::Rat::zero(), crate::ring::Rat::new(1, 2)));
        self.dy(frame, p, q).scale(&i_half)
    }

    pub fn grad(&self, frame: &Frame) -> SMat {
        let m = frame.m;
        (0..m).map(|p| (0..m).map(|q| self.d(frame, p, q)).collect()).collect()
    }

    pub fn grad_bar(&self, frame: &Frame) -> SMat {
        let m = frame.m;
        (0..m).map(|p| (0..m).map(|q| self.dbar(frame, p, q)).collect()).collect()
    }

    /// Partial derivative in a plain polynomial variable (the `J` entries).
    pub fn derivative_var(&self, name: &str) -> SiegelExpr {
        self.map_polys(|p| p.derivative(name))
    }

    /// Clears all powers of `tr` and `det` to one polynomial:
    /// `self = tr^{a0} det^{b0} · N` relative to the base.
    pub fn to_single(&self, frame: &Frame) -> (i32, i32, Poly) {
        let a0 = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let b0 = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        let mut n = Poly::zero(&frame.vars);
        for ((a, b), p) in &self.terms {
            let f = frame.tr.pow((a - a0) as u32).mul(&frame.det.pow((b - b0) as u32));
            n = n.add(&p.mul(&f));
        }
        (a0, b0, n)
    }

    /// Equality as functions (representation by `(a,b)` is not unique).
    pub fn same_function(&self, o: &SiegelExpr, frame: &Frame) -> bool {
        self.exp == o.exp && self.sub(o).to_single(frame).2.is_zero()
    }

    /// Evaluates the group-level variables at `J = K`, `J̄ = y⁻¹ K'⁻¹` for a
    /// constant invertible `K` given with its inverse transpose.
    pub fn at_group_point(&self, frame: &Frame, k: &PMat, k_inv_t: &PMat) -> SiegelExpr {
        let m = frame.m;
        let jb_num = pmat_mul(&frame.adj_y, k_inv_t);
        let mut bind: Vec<(&str, Poly)> = Vec::new();
        for p in 0..m {
            for q in 0..m {
                bind.push((full_name("J", p, q), k[p][q].clone()));
                bind.push((full_name("Jb", p, q), jb_num[p][q].clone()));
            }
        }
        let jb_idx: Vec<usize> =
            (0..m).flat_map(|p| (0..m).map(move |q| (p, q))).filter_map(|(p, q)| frame.vars.index(full_name("Jb", p, q))).collect();
        let mut out = SiegelExpr::zero(self.m, self.exp);
        for ((a, b), poly) in &self.terms {
            // group terms by J̄-degree: each J̄ factor carries one det⁻¹
            let mut by_deg: BTreeMap<u32, Vec<(Mono, RingElem)>> = BTreeMap::new();
            for (mono, c) in poly.terms() {
                let d: u32 = jb_idx.iter().map(|i| mono[*i] as u32).sum();
                by_deg.entry(d).or_default().push((mono.clone(), c.clone()));
            }
            for (d, ts) in by_deg {
                let part = Poly::from_terms(&frame.vars, ts);
                out.push((*a, b - d as i32), part.substitute(&bind));
            }
        }
        out
    }

    /// `J = I`, `J̄ = y⁻¹`.
    pub fn at_identity(&self, frame: &Frame) -> SiegelExpr {
        let id = identity_pmat(frame);
        self.at_group_point(frame, &id, &id)
    }

    pub fn is_free_of_group_vars(&self) -> bool {
        let names = ["J11", "J12", "J21", "J22", "Jb11", "Jb12", "Jb21", "Jb22"];
        self.terms.values().all(|p| p.is_free_of(&names))
    }

    /// Numeric value at a point; `tr_tau_x` supplies the only `x` dependence.
    pub fn eval_c64(&self, frame: &Frame, point: &NumPoint) -> (f64, f64) {
        use num_complex::Complex64 as C;
        let vals = &point.values;
        let get = |n: &str| vals.iter().find(|(k, _)| *k == n).map(|(_, v)| C::new(v.0, v.1)).unwrap_or_default();
        let trv = frame.tr.eval_c64(vals).0;
        let detv = frame.det.eval_c64(vals).0;
        let mut base = C::new(trv, 0.0).powc(get("s1")) * C::new(detv, 0.0).powc(get("s2"));
        if self.exp {
            let tpi = 2.0 * std::f64::consts::PI;
            base *= C::new(-tpi * trv, tpi * point.tr_tau_x).exp();
        }
        let mut acc = C::new(0.0, 0.0);
        for ((a, b), p) in &self.terms {
            let v = p.eval_c64(vals);
            acc += C::new(v.0, v.1) * trv.powi(*a) * detv.powi(*b);
        }
        let r = acc * base;
        (r.re, r.im)
    }
}

/// Named numeric values for evaluation, plus `tr(τx)`.
#[derive(Clone, Debug)]
pub struct NumPoint {
    pub values: Vec<(&'static str, (f64, f64))>,
    pub tr_tau_x: f64,
}

pub fn identity_pmat(frame: &Frame) -> PMat {
    let m = frame.m;
    (0..m)
        .map(|p| (0..m).map(|q| if p == q { Poly::one(&frame.vars) } else { Poly::zero(&frame.vars) }).collect())
        .collect()
}

/// Square matrix of expressions.
pub type SMat = Vec<Vec<SiegelExpr>>;

/// `L · M` for a polynomial matrix on the left.
pub fn left_mul(l: &PMat, a: &SMat) -> SMat {
    let n = l.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = SiegelExpr::zero(a[0][0].m, a[0][0].exp);
                    for k in 0..n {
                        acc.add_assign(a[k][j].mul_poly(&l[i][k]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `M · R` for a polynomial matrix on the right.
pub fn right_mul(a: &SMat, r: &PMat) -> SMat {
    let n = r.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = SiegelExpr::zero(a[0][0].m, a[0][0].exp);
                    for k in 0..n {
                        acc.add_assign(a[i][k].mul_poly(&r[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn smat_trace(a: &SMat) -> SiegelExpr {
    let mut acc = SiegelExpr::zero(a[0][0].m, a[0][0].exp);
    for (i, row) in a.iter().enumerate() {
        acc.add_assign(row[i].clone());
    }
    acc
}

/// Drops unused monomial slots: helper for tests building polynomials by hand.
pub fn mono_of(frame: &Frame, powers: &[(&str, u16)]) -> Mono {
    let mut m: Mono = SmallVec::from_elem(0, frame.vars.len());
    for (n, e) in powers {
        m[frame.vars.index(n).expect("siegel variable")] = *e;
    }
    m
}
