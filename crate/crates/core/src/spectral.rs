//! Spectral side of the argument: how the zero loci of the images of
//! `D±` meet the spectral lines, the resolvent domains that follow, regions
//! of convergence with their shift closures, and the limit equation in `Λ`.
//!
//! Everything is exact. Lines are `K_γ(c) = (c/2) b_γ + i t d_γ`, `t` real.

use crate::hc::factored_targets;
use crate::ring::univariate::UPoly;
use crate::ring::{Poly, Rat, RingElem, VarSet};
use crate::siegel::casimir::{specialize_line, Line, SeedActions};
use crate::siegel::quoted;
use crate::siegel::shift::{s_shift, shift_vars, uv_shift, ShiftDecomposition};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("line parameter c = {0} lies outside [0, 1]")]
    Parameter(String),
    #[error("the restricted image on {0} does not factor into the line forms")]
    Factorization(String),
    #[error("the convergence cone is set up in genus two only, not genus {0}")]
    Genus(usize),
    #[error("limit coefficient: {0}")]
    Limit(String),
    #[error("no fixpoint after {0} rounds")]
    NoFixpoint(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    Alpha1,
    Alpha2,
    Alpha1PlusAlpha2,
    Alpha1PlusTwoAlpha2,
}

impl Root {
    pub const ALL: [Root; 4] = [Root::Alpha1, Root::Alpha2, Root::Alpha1PlusAlpha2, Root::Alpha1PlusTwoAlpha2];

    fn base(self) -> [i64; 2] {
        match self {
            Root::Alpha1 => [0, 2],
            Root::Alpha2 => [1, -1],
            Root::Alpha1PlusAlpha2 => [1, 1],
            Root::Alpha1PlusTwoAlpha2 => [2, 0],
        }
    }

    fn dir(self) -> [i64; 2] {
        match self {
            Root::Alpha1 => [1, 0],
            Root::Alpha2 => [1, 1],
            Root::Alpha1PlusAlpha2 => [1, -1],
            Root::Alpha1PlusTwoAlpha2 => [0, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::Alpha1 => "a1",
            Root::Alpha2 => "a2",
            Root::Alpha1PlusAlpha2 => "a1+a2",
            Root::Alpha1PlusTwoAlpha2 => "a1+2a2",
        }
    }

    /// The simple root whose line is carried onto this one by a Weyl reflection.
    pub fn simple_partner(self) -> Root {
        match self {
            Root::Alpha1PlusAlpha2 => Root::Alpha2,
            Root::Alpha1PlusTwoAlpha2 => Root::Alpha1,
            r => r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralLine {
    pub root: Root,
    pub c: Rat,
}

impl SpectralLine {
    pub fn new(root: Root, c: Rat) -> Result<SpectralLine, SpectralError> {
        if c.is_negative() || c > Rat::one() {
            return Err(SpectralError::Parameter(c.to_string()));
        }
        Ok(SpectralLine { root, c })
    }

    pub fn base(&self) -> [Rat; 2] {
        let half = &self.c * &Rat::new(1, 2);
        self.root.base().map(|b| &half * &Rat::from_int(b))
    }

    pub fn dir(&self) -> [Rat; 2] {
        self.root.dir().map(Rat::from_int)
    }

    /// `Λ` along the line as polynomials in `t`.
    pub fn lambda(&self, vars: &Arc<VarSet>) -> [Poly; 2] {
        let t = Poly::var(vars, "t");
        let (b, d) = (self.base(), self.dir());
        [0, 1].map(|k| {
            t.scale(&RingElem::i().scale_rat(&d[k])).add_constant(&RingElem::from_rat(b[k].clone()))
        })
    }
}

impl fmt::Display for SpectralLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}({})", self.root.name(), self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Plus,
    Minus,
}

impl Which {
    pub fn var(self) -> &'static str {
        match self {
            Which::Plus => "u",
            Which::Minus => "v",
        }
    }

    /// Coefficients of the linear forms in `Λ` whose squares meet `var²`.
    fn forms(self) -> [[i64; 2]; 2] {
        match self {
            Which::Plus => [[1, 0], [0, 1]],
            Which::Minus => [[1, 1], [1, -1]],
        }
    }

    fn target(self) -> Poly {
        let (plus, minus) = factored_targets(&crate::hc::cartan_vars());
        match self {
            Which::Plus => plus,
            Which::Minus => minus,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Plus => "D+",
            Which::Minus => "D-",
        })
    }
}

/// One piece of the zero locus with `Re var > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    /// The image vanishes along the whole line at `var = at`, through `order` factors.
    FullLine { at: Rat, order: usize },
    /// For `var = re + iy` the image vanishes at the points `t = r·y`, `r ∈ t_over_y`.
    TwoPoints { re: Rat, t_over_y: Vec<Rat> },
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::FullLine { at, order } => write!(f, "whole line at {at} (order {order})"),
            Locus::TwoPoints { re, t_over_y } => {
                let ts: Vec<String> = t_over_y.iter().map(|r| format!("t={r}y")).collect();
                write!(f, "{re}+iy at {}", ts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Intersection {
    pub line: SpectralLine,
    pub which: Which,
    pub pieces: Vec<Locus>,
    /// The image restricted to the line, a polynomial in `t` and the parameter.
    pub restricted: Poly,
}

impl Intersection {
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn describe(&self) -> String {
        if self.pieces.is_empty() {
            return format!("{} on {}: empty", self.which, self.line);
        }
        let p: Vec<String> = self.pieces.iter().map(|l| format!("{} = {l}", self.which.var())).collect();
        format!("{} on {}: {}", self.which, self.line, p.join("; "))
    }
}

/// Classifies where the image of `D±(var)` vanishes on a line, after checking
/// that the restricted image is the product of the restricted line forms.
pub fn intersect_zero_locus(line: &SpectralLine, which: Which) -> Result<Intersection, SpectralError> {
    let target = which.target();
    let vars = target.vars().clone();
    let lam = line.lambda(&vars);
    let restricted = target.substitute(&[("L1", lam[0].clone()), ("L2", lam[1].clone())]);
    let x = Poly::var(&vars, which.var());
    let (b, d) = (line.base(), line.dir());
    let mut product = Poly::one(&vars);
    let mut full: Vec<Rat> = Vec::new();
    let mut two: Vec<(Rat, Rat)> = Vec::new();
    for form in which.forms() {
        let f = lam[0].scale_int(form[0]).add(&lam[1].scale_int(form[1]));
        product = product.mul(&f.mul(&f).sub(&x.mul(&x)));
        // f = p + i q t
        let p = &(&b[0] * &Rat::from_int(form[0])) + &(&b[1] * &Rat::from_int(form[1]));
        let q = &(&d[0] * &Rat::from_int(form[0])) + &(&d[1] * &Rat::from_int(form[1]));
        if p.is_zero() {
            continue;
        }
        if q.is_zero() {
            full.push(p.abs());
        } else {
            // var = ±f with Re var = |p| forces the sign of p; Im var = y gives t
            let sign = if p.is_negative() { Rat::from_int(-1) } else { Rat::one() };
            two.push((p.abs(), &sign / &q));
        }
    }
    if product != restricted {
        return Err(SpectralError::Factorization(line.to_string()));
    }
    let mut pieces = Vec::new();
    full.sort();
    for at in full.iter() {
        match pieces.last_mut() {
            Some(Locus::FullLine { at: a, order }) if a == at => *order += 1,
            _ => pieces.push(Locus::FullLine { at: at.clone(), order: 1 }),
        }
    }
    two.sort();
    for (re, r) in two {
        let found = pieces.iter_mut().find(|l| matches!(l, Locus::TwoPoints { re: e, .. } if *e == re));
        match found {
            Some(Locus::TwoPoints { t_over_y, .. }) => {
                if !t_over_y.contains(&r) {
                    t_over_y.push(r);
                    t_over_y.sort();
                }
            }
            _ => pieces.push(Locus::TwoPoints { re, t_over_y: vec![r] }),
        }
    }
    Ok(Intersection { line: line.clone(), which, pieces, restricted })
}

/// Half-plane of holomorphy of `var ↦ D±(var)^{-1}` on the continuous
/// spectrum of the lines with the given `c`, and the poles left inside it.
#[derive(Clone, Debug)]
pub struct ResolventReport {
    pub which: Which,
    pub c_values: Vec<Rat>,
    pub bound: Rat,
    pub poles: Vec<(Rat, usize)>,
    pub intersections: Vec<Intersection>,
}

impl ResolventReport {
    pub fn describe(&self) -> String {
        let var = self.which.var();
        let mut s = format!("{}: holomorphic for Re {var} > {}", self.which, self.bound);
        if self.poles.is_empty() {
            s.push_str(", no poles");
        }
        for (p, k) in &self.poles {
            s.push_str(&format!(", pole of order {k} at {var} = {p}"));
        }
        s
    }
}

pub fn resolvent_domain_report(which: Which, c_values: &[Rat]) -> Result<ResolventReport, SpectralError> {
    let mut intersections = Vec::new();
    for c in c_values {
        for r in Root::ALL {
            intersections.push(intersect_zero_locus(&SpectralLine::new(r, c.clone())?, which)?);
        }
    }
    // the two-dimensional continuous spectrum Λ ∈ iR² meets nothing with Re var > 0
    let mut bound = Rat::zero();
    for i in &intersections {
        for l in &i.pieces {
            if let Locus::TwoPoints { re, .. } = l {
                if *re > bound {
                    bound = re.clone();
                }
            }
        }
    }
    let mut poles: Vec<(Rat, usize)> = Vec::new();
    for i in &intersections {
        for l in &i.pieces {
            if let Locus::FullLine { at, order } = l {
                if *at > bound {
                    match poles.iter_mut().find(|(p, _)| p == at) {
                        Some((_, k)) => *k = (*k).max(*order),
                        None => poles.push((at.clone(), *order)),
                    }
                }
            }
        }
    }
    poles.sort();
    Ok(ResolventReport { which, c_values: c_values.to_vec(), bound, poles, intersections })
}

pub fn default_c_values() -> Vec<Rat> {
    vec![Rat::one()]
}

/// `D+` image at `Λ = (it, c)` equals `−(c² − u²)(t² + u²)`.
pub fn line_identity() -> bool {
    let v = VarSet::of(&["u", "L1", "L2", "t", "c"]);
    let target = Which::Plus.target().embed(&v).expect("target lives in u, L1, L2");
    let (t, c, u) = (Poly::var(&v, "t"), Poly::var(&v, "c"), Poly::var(&v, "u"));
    let got = target.substitute(&[("L1", t.scale(&RingElem::i())), ("L2", c.clone())]);
    let want = c.mul(&c).sub(&u.mul(&u)).mul(&t.mul(&t).add(&u.mul(&u))).neg();
    got == want
}

/// `{Re u > u, Re v > v}`; `None` leaves that coordinate free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadrant {
    pub u: Option<Rat>,
    pub v: Option<Rat>,
}

fn max_bound(a: &Option<Rat>, b: &Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(x.max(y).clone()),
    }
}

fn bound_le(a: &Option<Rat>, b: &Option<Rat>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

impl Quadrant {
    pub fn new(u: Option<Rat>, v: Option<Rat>) -> Quadrant {
        Quadrant { u, v }
    }

    pub fn contains(&self, o: &Quadrant) -> bool {
        bound_le(&self.u, &o.u) && bound_le(&self.v, &o.v)
    }

    pub fn contains_point(&self, u: &Rat, v: &Rat) -> bool {
        self.u.as_ref().is_none_or(|a| u > a) && self.v.as_ref().is_none_or(|b| v > b)
    }

    fn meet(&self, o: &Quadrant) -> Quadrant {
        Quadrant { u: max_bound(&self.u, &o.u), v: max_bound(&self.v, &o.v) }
    }

    /// Points `p` with `p + s` inside.
    fn pullback(&self, s: (i32, i32)) -> Quadrant {
        Quadrant {
            u: self.u.as_ref().map(|a| a - &Rat::from_int(s.0 as i64)),
            v: self.v.as_ref().map(|b| b - &Rat::from_int(s.1 as i64)),
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.u, &self.v) {
            (None, None) => write!(f, "C^2"),
            (Some(a), None) => write!(f, "{{Re u > {a}}}"),
            (None, Some(b)) => write!(f, "{{Re v > {b}}}"),
            (Some(a), Some(b)) => write!(f, "{{Re u > {a}, Re v > {b}}}"),
        }
    }
}

/// A finite union of quadrants, kept as the sorted antichain of maximal
/// ones. Such unions are upward closed, so this form is unique and
/// equality of regions is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    quads: Vec<Quadrant>,
}

impl Region {
    pub fn empty() -> Region {
        Region { quads: Vec::new() }
    }

    pub fn whole() -> Region {
        Region { quads: vec![Quadrant::new(None, None)] }
    }

    pub fn quadrant(u: Option<Rat>, v: Option<Rat>) -> Region {
        Region { quads: vec![Quadrant::new(u, v)] }
    }

    pub fn u_above(a: Rat) -> Region {
        Region::quadrant(Some(a), None)
    }

    pub fn v_above(b: Rat) -> Region {
        Region::quadrant(None, Some(b))
    }

    pub fn from_quadrants(qs: impl IntoIterator<Item = Quadrant>) -> Region {
        let all: Vec<Quadrant> = qs.into_iter().collect();
        let mut keep: Vec<Quadrant> = Vec::new();
        for (i, q) in all.iter().enumerate() {
            // drop q if another quadrant contains it; of equal copies keep the first
            let dominated = all.iter().enumerate().any(|(j, o)| j != i && o.contains(q) && (o != q || j < i));
            if !dominated {
                keep.push(q.clone());
            }
        }
        keep.sort();
        Region { quads: keep }
    }

    pub fn quadrants(&self) -> &[Quadrant] {
        &self.quads
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    pub fn union(&self, o: &Region) -> Region {
        Region::from_quadrants(self.quads.iter().chain(&o.quads).cloned())
    }

    pub fn intersect(&self, o: &Region) -> Region {
        Region::from_quadrants(self.quads.iter().flat_map(|a| o.quads.iter().map(move |b| a.meet(b))))
    }

    pub fn pullback(&self, s: (i32, i32)) -> Region {
        Region::from_quadrants(self.quads.iter().map(|q| q.pullback(s)))
    }

    pub fn contains_point(&self, u: &Rat, v: &Rat) -> bool {
        self.quads.iter().any(|q| q.contains_point(u, v))
    }

    pub fn is_subset(&self, o: &Region) -> bool {
        self.quads.iter().all(|q| o.quads.iter().any(|p| p.contains(q)))
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.quads.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.quads.iter().map(|q| q.to_string()).collect();
        f.write_str(&parts.join(" u "))
    }
}

/// Points where every shifted series `P(p + s)` lies in `r`.
pub fn shift_closure(r: &Region, shifts: &[(i32, i32)]) -> Region {
    shifts.iter().fold(Region::whole(), |acc, s| acc.intersect(&r.pullback(*s)))
}

/// Absolute convergence of the Poincaré series in `(u, v)` coordinates:
/// `Re(2s2 + κ) > 2m` and `Re(s1 + 2s2 + κ) > 2m` with
/// `s2 = (u − (κ − m))/2`, `s1 = (v − 2u − 1)/2`, that is `u > m`, `v > 2m + 1`.
pub fn convergence_cone(m: usize, _kappa: i64) -> Result<Region, SpectralError> {
    if m != 2 {
        return Err(SpectralError::Genus(m));
    }
    let m = m as i64;
    Ok(Region::quadrant(Some(Rat::from_int(m)), Some(Rat::from_int(2 * m + 1))))
}

/// Nonzero `(Δu, Δv)` shifts of a decomposition other than the zero shift,
/// with free `u`, `v` parameters tied to the point.
pub fn nonzero_shifts(dec: &ShiftDecomposition) -> Vec<(i32, i32)> {
    dec.in_s_coordinates()
        .coeffs
        .iter().filter(|(k, p)| **k != (0, 0) && !p.is_zero()).map(|(k, _)| uv_shift(*k)).collect()
}

#[derive(Clone, Debug)]
pub struct Continuation {
    pub rounds: Vec<Region>,
    pub result: Region,
}

/// Grows `start` by the shift closures under `D±`, each cut to the
/// half-plane where the resolvent of that operator is holomorphic, until
/// nothing changes.
pub fn continuation(
    start: &Region,
    plus_shifts: &[(i32, i32)],
    minus_shifts: &[(i32, i32)],
    plus_bound: &Rat,
    minus_bound: &Rat,
) -> Result<Continuation, SpectralError> {
    const MAX_ROUNDS: usize = 64;
    let plus_half = Region::u_above(plus_bound.clone());
    let minus_half = Region::v_above(minus_bound.clone());
    let mut cur = start.clone();
    let mut rounds = vec![cur.clone()];
    for _ in 0..MAX_ROUNDS {
        let next = cur
            .union(&shift_closure(&cur, plus_shifts).intersect(&plus_half))
            .union(&shift_closure(&cur, minus_shifts).intersect(&minus_half));
        if next == cur {
            return Ok(Continuation { rounds, result: cur });
        }
        rounds.push(next.clone());
        cur = next;
    }
    Err(SpectralError::NoFixpoint(MAX_ROUNDS))
}

/// Coefficients of the three limit relations at `u = 2` on the line `v = 2u+1`:
/// `(X − 1 − a0) L0 = b0 L1`, `(X − 1 − a1) L1 = b1 L2` and
/// `Λ(D−(5)) L0 = d4 L2 + d2 L1`, with `X = Λ2²` at `Λ1 = 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainCoefficients {
    pub a0: RingElem,
    pub b0: RingElem,
    pub a1: RingElem,
    pub b1: RingElem,
    pub d4: RingElem,
    pub d2: RingElem,
}

fn at_two(p: &Poly, what: &str) -> Result<RingElem, SpectralError> {
    let v = p.vars();
    p.substitute(&[("u", Poly::int(v, 2))])
        .as_constant()
        .ok_or_else(|| SpectralError::Limit(format!("{what} still depends on other variables at u = 2")))
}

/// `p(u) / (u − 2)` at `u = 2`, for `p` vanishing there.
fn slope_at_two(p: &Poly, what: &str) -> Result<RingElem, SpectralError> {
    if !at_two(p, what)?.is_zero() {
        return Err(SpectralError::Limit(format!("{what} does not vanish at u = 2")));
    }
    at_two(&p.derivative("u"), what)
}

fn vanishes_at_two(dec: &ShiftDecomposition, keep: &[(i32, i32)], what: &str) -> Result<(), SpectralError> {
    for (k, p) in &dec.coeffs {
        let uv = uv_shift(*k);
        if !keep.contains(&uv) && !p.is_zero() && !at_two(p, what)?.is_zero() {
            return Err(SpectralError::Limit(format!("{what}: shift {uv:?} survives at u = 2")));
        }
    }
    Ok(())
}

/// `s2 = (u−2)/2` so that line coefficients are written in `u`.
fn to_u(dec: &ShiftDecomposition) -> ShiftDecomposition {
    let s2 = Poly::var(&dec.vars, "u").add_constant(&RingElem::int(-2)).scale_rat(1, 2);
    dec.substitute(&[("s2", s2)])
}

impl ChainCoefficients {
    fn from_lines(
        s1_zero: &ShiftDecomposition,
        s1_one: &ShiftDecomposition,
        d_minus: &ShiftDecomposition,
        relation_constants: Option<(RingElem, RingElem)>,
    ) -> Result<ChainCoefficients, SpectralError> {
        // convergent terms must drop out where the relation is not multiplied by (u − 2)
        vanishes_at_two(s1_zero, &[(0, 0), (0, 2)], "C1 on s1 = 0")?;
        vanishes_at_two(d_minus, &[(0, 4), (0, 2)], "D-(2u+1)")?;
        let (a0, a1) = match relation_constants {
            Some(c) => c,
            None => (at_two(&s1_zero.get_uv((0, 0)), "a0")?, at_two(&s1_one.get_uv((0, 0)), "a1")?),
        };
        Ok(ChainCoefficients {
            a0,
            b0: slope_at_two(&s1_zero.get_uv((0, 2)), "b0")?,
            a1,
            b1: at_two(&s1_one.get_uv((0, 2)), "b1")?,
            d4: slope_at_two(&d_minus.get_uv((0, 4)), "d4")?,
            d2: slope_at_two(&d_minus.get_uv((0, 2)), "d2")?,
        })
    }

    /// Every coefficient from the derived seed actions.
    pub fn derived(actions: &SeedActions) -> Result<ChainCoefficients, SpectralError> {
        let vars = &actions.c1.vars;
        let z = specialize_line(&actions.c1, Line::VTwoUPlusOne);
        let o = to_u(&specialize_line(&actions.c1, Line::S1One));
        let v = Poly::var(vars, "u").scale_int(2).add_constant(&RingElem::one());
        let dm = specialize_line(&actions.d_minus_at(&v), Line::VTwoUPlusOne);
        ChainCoefficients::from_lines(&z, &o, &dm, None)
    }

    /// The printed chain: `a0`, `a1` from the printed relations, the rest
    /// from the printed line tables.
    pub fn printed() -> Result<ChainCoefficients, SpectralError> {
        let z = to_u(&table_decomposition(&quoted::C1_ON_S1_ZERO));
        let o = to_u(&table_decomposition(&quoted::C1_ON_S1_ONE));
        let dm = table_decomposition(&quoted::D_MINUS_ON_LINE);
        let a = |r: i64| RingElem::int(r - 1);
        ChainCoefficients::from_lines(
            &z,
            &o,
            &dm,
            Some((a(quoted::RELATION_S1_ZERO_ROOT), a(quoted::RELATION_S1_ONE_ROOT))),
        )
    }
}

fn table_decomposition(table: &quoted::QuotedTable) -> ShiftDecomposition {
    let vars = shift_vars();
    let mut d = ShiftDecomposition::zero();
    for q in table.terms {
        let k = s_shift(q.shift_uv).expect("printed shifts are lattice shifts");
        d.insert(k, crate::ring::parse_poly(&vars, q.text).expect("printed table parses"));
    }
    d
}

/// Splits coefficients of the form `q·π^n` with one common `n`.
fn pi_normalize(coeffs: &[RingElem]) -> Result<(u32, Vec<Rat>), SpectralError> {
    let mut deg = None;
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if c.is_zero() {
            out.push(Rat::zero());
            continue;
        }
        let terms: Vec<(u32, &crate::ring::Gauss)> = c.terms().collect();
        let [(n, g)] = terms.as_slice() else {
            return Err(SpectralError::Limit(format!("{c} is not a single power of pi")));
        };
        if !g.is_real() || deg.is_some_and(|d| d != *n) {
            return Err(SpectralError::Limit(format!("{c} does not share the common pi power")));
        }
        deg = Some(*n);
        out.push(g.re.clone());
    }
    Ok((deg.unwrap_or(0), out))
}

fn x_coefficients(p: &Poly) -> Vec<RingElem> {
    p.coefficients_in("X").iter().map(|c| c.as_constant().expect("constant in X")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub x: Rat,
    pub lambda2: Option<Rat>,
    pub norm_sq: Rat,
    pub accepted: bool,
    pub reason: String,
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer_big(), x.denom_big());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == n && &rd * &rd == d).then(|| Rat::from_big(num_rational::BigRational::new(rn, rd)))
}

/// `Λ = (2, √X)` survives if it is integral (discrete series) or within the
/// unitary bound `‖Λ‖² ≤ ‖δ‖² = 5` (Eisenstein).
pub fn classify_candidate(x: &Rat) -> Candidate {
    let lambda2 = rational_sqrt(x);
    let norm_sq = &Rat::from_int(4) + x;
    let integral = lambda2.as_ref().is_some_and(|l| l.is_integer());
    let small = norm_sq <= Rat::from_int(5);
    let reason = match (integral, small) {
        (true, _) => "integral".to_string(),
        (false, true) => "within the unitary bound".to_string(),
        (false, false) => format!("not integral and |Λ|² = {norm_sq} > 5"),
    };
    Candidate { x: x.clone(), lambda2, norm_sq, accepted: integral || small, reason }
}

/// The limit equation `LHS(X) = Λ(D−(5))` with the left side divided by `b0 b1`.
#[derive(Clone, Debug)]
pub struct LimitEquation {
    pub lhs: UPoly,
    pub rhs: UPoly,
    pub identity: bool,
    pub roots: Vec<Rat>,
    pub candidates: Vec<Candidate>,
}

impl LimitEquation {
    fn solve(lhs: UPoly, rhs: UPoly) -> LimitEquation {
        let diff = lhs.sub(&rhs);
        let identity = diff.is_zero();
        let roots: Vec<Rat> = if identity { Vec::new() } else { diff.rational_roots().into_iter().map(|(r, _)| r).collect() };
        let candidates = roots.iter().map(classify_candidate).collect();
        LimitEquation { lhs, rhs, identity, roots, candidates }
    }

    pub fn accepted(&self) -> Vec<&Candidate> {
        self.candidates.iter().filter(|c| c.accepted).collect()
    }

    pub fn describe(&self) -> String {
        if self.identity {
            return format!("{} = {} identically in X", self.lhs.to_string_in("X"), self.rhs.to_string_in("X"));
        }
        let roots: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        let acc: Vec<String> = self
            .accepted()
            .iter()
            .map(|c| format!("(2,{})", c.lambda2.as_ref().map(|l| l.to_string()).unwrap_or_else(|| format!("sqrt({})", c.x))))
            .collect();
        format!(
            "{} = {}; X in {{{}}}; accepted {}",
            self.lhs.to_string_in("X"),
            self.rhs.to_string_in("X"),
            roots.join(", "),
            if acc.is_empty() { "none".to_string() } else { acc.join(", ") }
        )
    }
}

/// `Λ(D−(5))` at `Λ = (2, Λ2)` as a polynomial in `X = Λ2²`.
pub fn limit_rhs() -> UPoly {
    let (_, minus) = factored_targets(&crate::hc::cartan_vars());
    let v = minus.vars().clone();
    let at = minus.substitute(&[("L1", Poly::int(&v, 2)), ("v", Poly::int(&v, 5))]);
    let c = at.coefficients_in("L2");
    let mut xs = Vec::new();
    for (k, p) in c.iter().enumerate() {
        let r = p.as_constant().and_then(|e| e.as_rat()).expect("rational in L2");
        if k % 2 == 1 {
            assert!(r.is_zero(), "Λ(D−) is even in Λ2");
        } else {
            xs.push(r);
        }
    }
    UPoly::new(xs)
}

pub fn lambda_elimination(ch: &ChainCoefficients) -> Result<LimitEquation, SpectralError> {
    let xv = VarSet::of(&["X"]);
    let x = Poly::var(&xv, "X");
    let k = |e: &RingElem| Poly::constant(&xv, e.clone());
    let one = RingElem::one();
    let rel0 = x.add_constant(&(-&(&one + &ch.a0)));
    let rel1 = x.add_constant(&(-&(&one + &ch.a1)));
    let lhs = k(&ch.d4).mul(&rel1).add(&k(&(&ch.d2 * &ch.b1))).mul(&rel0);
    let scale = &ch.b0 * &ch.b1;
    if scale.is_zero() {
        return Err(SpectralError::Limit("b0 b1 vanishes".into()));
    }
    let mut all = x_coefficients(&lhs);
    all.push(scale);
    let (_, rats) = pi_normalize(&all)?;
    let (den, num) = rats.split_last().expect("nonempty");
    let lhs = UPoly::new(num.iter().map(|r| r / den).collect());
    Ok(LimitEquation::solve(lhs, limit_rhs()))
}

/// The equation exactly as displayed: `c (X − r1)(X − r2) = Λ(D−(5))`.
pub fn literal_display_equation() -> LimitEquation {
    let (c, r1, r2) = quoted::LIMIT_DISPLAY;
    let lhs = UPoly::from_ints(&[-r1, 1]).mul(&UPoly::from_ints(&[-r2, 1])).mul(&UPoly::from_ints(&[c]));
    LimitEquation::solve(lhs, limit_rhs())
}

/// Left side of the limit equation implied by a chain, divided by `b0 b1`.
pub fn implied_limit_lhs(ch: &ChainCoefficients) -> Result<UPoly, SpectralError> {
    Ok(lambda_elimination(ch)?.lhs)
}
