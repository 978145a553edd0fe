//! Casimir elements acting on the genus-two seed of weight four, written
//! as combinations of shifted Poincaré series.

use super::expr::SiegelExpr;
use super::group::GroupEngine;
use super::quoted::QuotedTable;
use crate::report::{suspects, CheckReport};
use super::shift::{compare_with_quoted, decompose, CoefficientVerdict, ShiftDecomposition, ShiftError};
use super::trace::{group_free, rewrite_trace, TraceError};
use crate::hc::CenterElements;
use crate::ring::{Poly, RingElem};
use crate::uea::{LetterOrder, Uea};
use serde::Serialize;

#[derive(thiserror::Error, Debug)]
pub enum CasimirError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error("{0}")]
    Setup(String),
}

/// `C1 H / H` and `C2 H / H` in shifted-series form.
#[derive(Clone, Debug)]
pub struct SeedActions {
    pub c1: ShiftDecomposition,
    pub c2: ShiftDecomposition,
}

impl SeedActions {
    /// `D+(u) = ½(C1² − C2 + 11C1 − 2(u²−1)C1 + 2(u²−1)(u²−4))` with `u` a free parameter.
    pub fn d_plus(&self) -> ShiftDecomposition {
        let v = &self.c1.vars;
        let u = Poly::var(v, "u");
        self.d_plus_at(&u)
    }

    pub fn d_plus_at(&self, u: &Poly) -> ShiftDecomposition {
        let v = &self.c1.vars;
        let u2m1 = u.mul(u).add_constant(&RingElem::int(-1));
        let u2m4 = u.mul(u).add_constant(&RingElem::int(-4));
        self.c1
            .compose(&self.c1)
            .sub(&self.c2)
            .add(&self.c1.scale(&Poly::int(v, 11)))
            .sub(&self.c1.scale(&u2m1.scale_int(2)))
            .add(&ShiftDecomposition::scalar(u2m1.mul(&u2m4).scale_int(2)))
            .scale(&Poly::rat(v, 1, 2))
    }

    /// `D−(v) = 2C2 − C1² − 34C1 − 2(v²−9)C1 + (v²−9)(v²−1)`.
    pub fn d_minus(&self) -> ShiftDecomposition {
        let v = Poly::var(&self.c1.vars, "v");
        self.d_minus_at(&v)
    }

    pub fn d_minus_at(&self, v: &Poly) -> ShiftDecomposition {
        let vars = &self.c1.vars;
        let v2m9 = v.mul(v).add_constant(&RingElem::int(-9));
        let v2m1 = v.mul(v).add_constant(&RingElem::int(-1));
        self.c2
            .scale(&Poly::int(vars, 2))
            .sub(&self.c1.compose(&self.c1))
            .sub(&self.c1.scale(&Poly::int(vars, 34)))
            .sub(&self.c1.scale(&v2m9.scale_int(2)))
            .add(&ShiftDecomposition::scalar(v2m9.mul(&v2m1)))
    }
}

pub fn weight_four_engine() -> Result<GroupEngine, CasimirError> {
    let vars = super::expr::siegel_vars();
    GroupEngine::new(2, Poly::int(&vars, 4)).map_err(|e| CasimirError::Setup(e.to_string()))
}

/// Applies the normal-formed `C1`, `C2` letter by letter.
pub fn seed_actions_direct(engine: &GroupEngine) -> Result<SeedActions, CasimirError> {
    let uea = Uea::new(2, LetterOrder::HarishChandra).map_err(|e| CasimirError::Setup(e.to_string()))?;
    let ce = CenterElements::build(&uea).map_err(|e| CasimirError::Setup(e.to_string()))?;
    let h = engine.seed();
    let act = |z| -> Result<ShiftDecomposition, CasimirError> {
        let raw = engine.apply_uea(&uea, z, &h).map_err(|e| CasimirError::Setup(e.to_string()))?;
        Ok(decompose(&engine.frame, &group_free(engine, &raw)?)?)
    };
    Ok(SeedActions { c1: act(&ce.c1)?, c2: act(&ce.c2)? })
}

/// The scalar-K-type reduction: `C1 = T2 − κm(m+1−κ)` and
/// `C2 = T4 + mκ⁴ + ((m+1)² − 2κ(m+1) + 2κ²)(T2 − κm(m+1))`, with
/// `T2 = tr(E+E−)`, `T4 = tr(E+E−E+E−)`, for `m = 2`, `κ = 4`.
pub fn seed_actions_k_type(engine: &GroupEngine) -> Result<SeedActions, CasimirError> {
    let h = engine.seed();
    let t2 = rewrite_trace(engine, 2, &h)?;
    let t4 = rewrite_trace(engine, 4, &h)?;
    seed_actions_from_traces(engine, &h, &t2, &t4)
}

pub fn seed_actions_from_traces(
    engine: &GroupEngine,
    h: &SiegelExpr,
    t2: &SiegelExpr,
    t4: &SiegelExpr,
) -> Result<SeedActions, CasimirError> {
    let (m, k) = (2i64, 4i64);
    let c1 = t2.add(&h.scale(&RingElem::int(-k * m * (m + 1 - k))));
    let mid = (m + 1) * (m + 1) - 2 * k * (m + 1) + 2 * k * k;
    let c2 = t4
        .add(&h.scale(&RingElem::int(m * k.pow(4))))
        .add(&t2.add(&h.scale(&RingElem::int(-k * m * (m + 1)))).scale(&RingElem::int(mid)));
    Ok(SeedActions { c1: decompose(&engine.frame, &c1)?, c2: decompose(&engine.frame, &c2)? })
}

/// Per-coefficient comparison with a printed table.
#[derive(Clone, Debug, Serialize)]
pub struct DisplayReport {
    pub name: String,
    pub verdicts: Vec<(String, CoefficientVerdict)>,
}

impl DisplayReport {
    /// Every coefficient agrees except, possibly, configured typo suspects.
    pub fn acceptable(&self) -> bool {
        self.verdicts.iter().all(|(id, v)| v.equal || suspects().contains(id))
    }

    pub fn mismatches(&self) -> Vec<(&str, &CoefficientVerdict)> {
        self.verdicts.iter().filter(|(_, v)| !v.equal).map(|(id, v)| (id.as_str(), v)).collect()
    }

    pub fn checks(&self) -> Vec<CheckReport> {
        self.verdicts
            .iter()
            .map(|(id, v)| {
                let diff = if v.equal { String::new() } else { format!("printed {}", v.quoted) };
                CheckReport::compare(id, v.derived.clone(), diff)
            })
            .collect()
    }
}

pub fn compare_display(dec: &ShiftDecomposition, table: &QuotedTable) -> DisplayReport {
    let quoted: Vec<((i32, i32), String)> = table.terms.iter().map(|q| (q.shift_uv, q.text.to_string())).collect();
    DisplayReport {
        name: table.id.to_string(),
        verdicts: compare_with_quoted(dec, &quoted).into_iter().map(|v| (table.check_id(v.shift_uv), v)).collect(),
    }
}

/// Lines of the limit argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Line {
    S1Zero,
    S1One,
    VTwoUPlusOne,
}

/// Restricts a decomposition to a line; for `v = 2u+1` (i.e. `s1 = 0`)
/// coefficients are written in `u`, on `s1 = 0, 1` in `s2` and `u`.
/// Any free `u`, `v` parameters are tied to the point first.
pub fn specialize_line(dec: &ShiftDecomposition, line: Line) -> ShiftDecomposition {
    let vars = &dec.vars;
    let tied = dec.in_s_coordinates();
    let s1v = match line {
        Line::S1Zero | Line::VTwoUPlusOne => 0,
        Line::S1One => 1,
    };
    let on = tied.substitute(&[("s1", Poly::int(vars, s1v))]);
    match line {
        Line::VTwoUPlusOne => {
            let s2 = Poly::var(vars, "u").add_constant(&RingElem::int(-2)).scale_rat(1, 2);
            on.substitute(&[("s2", s2)])
        }
        _ => on,
    }
}

/// Compares a line restriction with a printed table written in `s2` and `u`
/// (`u` is rewritten as `2s2+2`), or purely in `u` on `v = 2u+1`.
pub fn compare_line(dec: &ShiftDecomposition, line: Line, table: &QuotedTable) -> DisplayReport {
    let vars = &dec.vars;
    let on = specialize_line(dec, line);
    let mut keys: Vec<(i32, i32)> = on.coeffs.keys().map(|k| super::shift::uv_shift(*k)).collect();
    for q in table.terms {
        if !keys.contains(&q.shift_uv) {
            keys.push(q.shift_uv);
        }
    }
    keys.sort();
    let normalize = |p: &Poly| -> Poly {
        match line {
            Line::VTwoUPlusOne => p.clone(),
            _ => p.substitute(&[("u", Poly::var(vars, "s2").scale_int(2).add_constant(&RingElem::int(2)))]),
        }
    };
    let verdicts = keys
        .into_iter()
        .map(|k| {
            let derived = normalize(&on.get_uv(k));
            let quoted = table
                .terms
                .iter()
                .find(|q| q.shift_uv == k)
                .map(|q| normalize(&crate::ring::parse_poly(vars, q.text).expect("quoted display parses")))
                .unwrap_or_else(|| Poly::zero(vars));
            let v = CoefficientVerdict {
                shift_uv: k,
                derived: derived.to_string(),
                quoted: quoted.to_string(),
                equal: derived == quoted,
            };
            (table.check_id(k), v)
        })
        .collect();
    DisplayReport { name: table.id.to_string(), verdicts }
}

/// `D+(2) − (u²−4)(C1 − (u²−1))` on the line, the remainder that converges at `(2,5)`.
pub fn d_plus_two_remainder(actions: &SeedActions) -> ShiftDecomposition {
    let vars = &actions.c1.vars;
    let u = Poly::var(vars, "u");
    let u2m4 = u.mul(&u).add_constant(&RingElem::int(-4));
    let u2m1 = u.mul(&u).add_constant(&RingElem::int(-1));
    let d2 = actions.d_plus_at(&Poly::int(vars, 2));
    let c1_shifted = actions.c1.sub(&ShiftDecomposition::scalar(u2m1));
    d2.sub(&c1_shifted.scale(&u2m4))
}
