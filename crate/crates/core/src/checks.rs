//! Verification suites. Each check is keyed by a catalogue id; failures
//! inside a check become failed reports rather than aborting the suite.

use crate::hc::{common_zeros, d_plus_from, factored_targets, projection_pieces, weyl_images, CenterElements, HarishChandra};
use crate::lie::{BasisIndex, Kind};
use crate::report::CheckReport;
use crate::ring::{parse_poly, Gauss, Poly, Rat, RingElem};
use crate::siegel::casimir::{
    compare_display, compare_line, d_plus_two_remainder, seed_actions_direct, seed_actions_k_type, weight_four_engine,
    Line, SeedActions,
};
use crate::siegel::expr::{pmat_mul, pmat_transpose, PMat};
use crate::siegel::genus1::{genus1_action, Genus1Engine, GENUS1_KAPPA};
use crate::siegel::quoted;
use crate::siegel::trace::check_trace_on_seed;
use crate::siegel::{siegel_vars, GroupEngine, SiegelExpr};
use crate::spectral::{self, Locus, Region, Root, SpectralLine, Which};
use crate::uea::{LetterOrder, TraceForms, Uea, UeaElem};
use std::fmt::Display;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kappa {
    Symbolic,
    Value(i64),
}

impl Kappa {
    fn poly(self) -> Poly {
        let v = siegel_vars();
        match self {
            Kappa::Symbolic => Poly::var(&v, "kappa"),
            Kappa::Value(k) => Poly::int(&v, k),
        }
    }

    fn admits(self, k: i64) -> bool {
        self == Kappa::Symbolic || self == Kappa::Value(k)
    }
}

/// Which parts of the calculus suite to run. `genus: None` runs both.
#[derive(Clone, Copy, Debug)]
pub struct CalculusOptions {
    pub genus: Option<usize>,
    pub kappa: Kappa,
}

impl Default for CalculusOptions {
    fn default() -> Self {
        CalculusOptions { genus: None, kappa: Kappa::Symbolic }
    }
}

fn guard(id: &str, f: impl FnOnce() -> Result<CheckReport, String>) -> CheckReport {
    f().unwrap_or_else(|e| CheckReport::error(id, &e))
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

/// Derived value against the expected one; the difference names the expected side.
fn equal_check<T: PartialEq + Display>(id: &str, derived: &T, expected: &T) -> CheckReport {
    let diff = if derived == expected { String::new() } else { format!("expected {expected}") };
    CheckReport::compare(id, derived.to_string(), diff)
}

fn genus_two_uea() -> Result<&'static Uea, String> {
    static U: OnceLock<Result<Uea, String>> = OnceLock::new();
    U.get_or_init(|| Uea::new(2, LetterOrder::HarishChandra).map_err(err)).as_ref().map_err(Clone::clone)
}

fn center() -> Result<&'static CenterElements, String> {
    static C: OnceLock<Result<CenterElements, String>> = OnceLock::new();
    C.get_or_init(|| CenterElements::build(genus_two_uea()?).map_err(err)).as_ref().map_err(Clone::clone)
}

/// `C1 H / H`, `C2 H / H` for the weight-four genus-two seed, computed once.
pub fn weight_four_actions() -> Result<&'static SeedActions, String> {
    static A: OnceLock<Result<SeedActions, String>> = OnceLock::new();
    A.get_or_init(|| {
        let eng = weight_four_engine().map_err(err)?;
        seed_actions_direct(&eng).map_err(err)
    })
    .as_ref()
    .map_err(Clone::clone)
}

fn identity_check(u: &Uea, id: &str, lhs: &UeaElem, rhs: &UeaElem) -> CheckReport {
    let r = u.verify_identity(lhs, rhs);
    let diff = if r.equal { String::new() } else { format!("lhs - rhs = {}", u.format(&r.difference)) };
    CheckReport::compare(id, if r.equal { "identity holds in normal form".into() } else { "identity fails".into() }, diff)
}

fn central_check(u: &Uea, id: &str, z: &UeaElem) -> CheckReport {
    let bad = u.non_commuting_letters(z);
    let derived = if bad.is_empty() {
        format!("commutes with all {} basis letters", u.lie.dim())
    } else {
        format!("fails to commute with {}", bad.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", "))
    };
    CheckReport::boolean(id, bad.is_empty(), derived)
}

pub fn algebra() -> Vec<CheckReport> {
    let u = match genus_two_uea() {
        Ok(u) => u,
        Err(e) => return vec![CheckReport::error("algebra.root_table", &e)],
    };
    let tf = TraceForms::new(u);
    let d2 = u.build_casimir(2);
    let d4 = u.build_casimir(4);
    let mut out = vec![guard("algebra.root_table", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for (idx, w) in [
            (BasisIndex::b(1, 2), (1, -1)),
            (BasisIndex::eminus(1, 1), (2, 0)),
            (BasisIndex::eminus(1, 2), (1, 1)),
            (BasisIndex::eminus(2, 2), (0, 2)),
        ] {
            let pos = u.lie.position(idx).map_err(err)?;
            let wt = u.lie.weight(pos).ok_or_else(|| format!("{idx} has no weight"))?;
            ok &= wt[0] == Gauss::int(w.0) && wt[1] == Gauss::int(w.1);
            rows.push(format!("{idx}: ({}, {})", wt[0], wt[1]));
        }
        Ok(CheckReport::boolean("algebra.root_table", ok, rows.join("; ")))
    })];
    out.push(identity_check(u, "algebra.rearrange_sym2", &tf.sym2(), &tf.sym2_rearranged()));
    out.push(identity_check(u, "algebra.rearrange_sym4", &tf.sym4(), &tf.sym4_rearranged()));
    let half_d2 = d2.scale_rat(1, 2);
    let c1 = u.build_c(1);
    let r = u.verify_identity(&c1, &half_d2);
    let r2 = u.verify_identity(&tf.c1_rearranged(), &half_d2);
    out.push(CheckReport::boolean(
        "algebra.C1_half_D2",
        r.equal && r2.equal,
        format!("C1 = D2/2: {}, displayed form = D2/2: {}", r.equal, r2.equal),
    ));
    let half_d4 = d4.scale_rat(1, 2);
    let r = u.verify_identity(&u.build_c(2), &half_d4);
    let r2 = u.verify_identity(&tf.c2_rearranged(), &half_d4);
    out.push(CheckReport::boolean(
        "algebra.C2_half_D4",
        r.equal && r2.equal,
        format!("C2 = D4/2: {}, displayed form = D4/2: {}", r.equal, r2.equal),
    ));
    out.push(central_check(u, "algebra.D2_central", &d2));
    out.push(central_check(u, "algebra.D4_central", &d4));
    // the printed cyclic form against the generic basis sum
    let printed = u.normal_form(&tf.d4_basis_expression());
    let corrected = u.verify_identity(&d4, &tf.d4_corrected_expression()).equal;
    let r = u.verify_identity(&d4, &printed);
    let noncentral = u.non_commuting_letters(&printed);
    let derived = format!(
        "corrected cyclic form equals D4: {corrected}; printed form central: {}",
        noncentral.is_empty()
    );
    let diff = if r.equal { String::new() } else { format!("printed form differs from D4 in {} normal-form terms", r.difference.terms().len()) };
    out.push(if corrected { CheckReport::compare("algebra.D4_display", derived, diff) } else {
        CheckReport::compare("algebra.D4_display", derived, "D4 is not any of the cyclic forms".into())
    });
    out
}

pub fn hc() -> Vec<CheckReport> {
    let setup = || -> Result<(&'static Uea, &'static CenterElements), String> { Ok((genus_two_uea()?, center()?)) };
    let (u, ce) = match setup() {
        Ok(x) => x,
        Err(e) => return vec![CheckReport::error("hc.gamma_C1", &e)],
    };
    let hc = match HarishChandra::new(u) {
        Ok(h) => h,
        Err(e) => return vec![CheckReport::error("hc.gamma_C1", &e)],
    };
    let v = &hc.cvars;
    let q = |t: &str| parse_poly(v, t).expect("expected image parses");
    let g1 = hc.gamma_image(&ce.c1);
    let g2 = hc.gamma_image(&ce.c2);
    let mut out = vec![
        equal_check("hc.gamma_C1", &g1, &q("B11^2 + B22^2 - 5")),
        equal_check("hc.gamma_C2", &g2, &q("B11^4 + B22^4 - 17 + 3*(B11^2 + B22^2 - 5)")),
    ];
    let stable = [&g1, &g2].iter().all(|g| weyl_images(g).iter().all(|w| w == *g));
    out.push(CheckReport::boolean("hc.weyl_invariance", stable, format!("all 8 Weyl images fixed: {stable}")));
    let prod = hc.gamma_image(&u.mul(&ce.c1, &ce.c2));
    out.push(equal_check("hc.homomorphism", &prod, &g1.mul(&g2)));
    let p = projection_pieces(&hc);
    let pieces = [
        (&p.tr_b2, "B11^2 + B22^2 + B11 - B22"),
        (&p.sym_b4, "B11^4 + B22^4 + (B11 - B22)*(2*(B11^2 + B22^2 + B11*B22) + B11 - B22 + 1)"),
        (&p.half_em_ep_em_ep, "8*(B11^2 + B22^2) + 5*(B11 + B22)^2 + 8*(B11 - B22)"),
        (&p.two_em_ep_b_b, "8*(B11^3 + B22^3) + 2*(B11 + B22)*(B11^2 + B22^2) + 2*(B11 - B22)*(9*B11 + 5*B22 + 4)"),
        (&p.anticommutator_sum, "4*(B11^3 + B22^3) + 2*(B11 + B22)*B11*B22 + 5*(B11^2 - B22^2)"),
    ];
    let bad: Vec<String> = pieces.iter().filter(|(d, t)| **d != q(t)).map(|(d, t)| format!("{d} vs {t}")).collect();
    out.push(CheckReport::compare("hc.projection_pieces", format!("{} pieces", pieces.len()), bad.join("; ")));
    let f = hc.lambda_form(&g1);
    let g = hc.lambda_form(&g2);
    out.push(guard("hc.common_zeros", || {
        let z = common_zeros(&f, &g, "L1", "L2").map_err(err)?;
        let mut expect = vec![];
        for (a, b) in [(1, 2), (2, 1)] {
            for sa in [1, -1] {
                for sb in [1, -1] {
                    expect.push((Rat::from_int(sa * a), Rat::from_int(sb * b)));
                }
            }
        }
        expect.sort();
        let show = |p: &[(Rat, Rat)]| p.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
        let derived = format!("{} (Bezout bound {})", show(&z.points), z.bezout_bound);
        let diff = if z.points == expect { String::new() } else { format!("expected {}", show(&expect)) };
        Ok(CheckReport::compare("hc.common_zeros", derived, diff))
    }));
    let (plus, minus) = factored_targets(v);
    out.push(equal_check("hc.gamma_Dplus", &hc.lambda_form(&hc.gamma_image(&ce.d_plus)), &plus));
    out.push(equal_check("hc.gamma_Dminus", &hc.lambda_form(&hc.gamma_image(&ce.d_minus)), &minus));
    let d2 = d_plus_from(u, &ce.c1, &ce.c2, &Poly::int(&u.vars, 2));
    let uu = u.poly_var("u");
    let u2 = uu.mul(&uu);
    let shift = ce.c1.sub(&u.constant(u2.sub(&Poly::one(&u.vars)))).scale(&u2.sub(&Poly::int(&u.vars, 4)));
    out.push(identity_check(u, "hc.Dplus2_identity", &d2, &ce.d_plus.add(&shift)));
    out
}

fn sandwich(left: &PMat, mid: &PMat) -> PMat {
    pmat_mul(&pmat_mul(&pmat_transpose(left), mid), left)
}

fn trace_check(id: &str, m: usize, order: usize, kappa: Poly) -> CheckReport {
    guard(id, || {
        let eng = GroupEngine::new(m, kappa.clone()).map_err(err)?;
        let chk = check_trace_on_seed(&eng, order).map_err(err)?;
        let derived = format!("order {order}, genus {m}, kappa = {kappa}: rewriting and closed form agree: {}", chk.agree);
        Ok(CheckReport::boolean(id, chk.agree, derived))
    })
}

/// The three generator families on the genus-two seed against their closed forms.
fn generator_checks(kappa: Poly) -> Vec<CheckReport> {
    let eng = match GroupEngine::new(2, kappa.clone()) {
        Ok(e) => e,
        Err(e) => return vec![CheckReport::error("calc.generators.Eminus", &e)],
    };
    let fr = &eng.frame;
    let v = &fr.vars;
    let kappa = kappa.embed(v).unwrap_or(kappa);
    let (s1, s2) = (Poly::var(v, "s1"), Poly::var(v, "s2"));
    let y_tau_y = pmat_mul(&pmat_mul(&fr.y, &fr.tau), &fr.y);
    let (j_tau, j_y) = (sandwich(&fr.j, &y_tau_y), sandwich(&fr.j, &fr.y));
    let (jb_tau, jb_y) = (sandwich(&fr.jb, &y_tau_y), sandwich(&fr.jb, &fr.y));
    let pi8 = RingElem::pi().scale_rat(&Rat::from_int(-8));
    let mut out = Vec::new();

    out.push(guard("calc.generators.Eminus", || {
        let em = eng.generator_action_on_seed(Kind::Eminus).map_err(err)?;
        let mut ok = true;
        for a in 0..2 {
            for c in 0..2 {
                let want = SiegelExpr::from_terms(
                    2,
                    true,
                    [((-1, 0), s1.mul(&j_tau[a][c]).scale_int(2)), ((0, 0), s2.mul(&j_y[a][c]).scale_int(2))],
                );
                ok &= em[a][c].same_function(&want, fr);
            }
        }
        Ok(CheckReport::boolean("calc.generators.Eminus", ok, "(E-)_ac H = 2 s1 H(s1-1) (J'y tau y J)_ac + 2 s2 H (J'yJ)_ac".into()))
    }));
    out.push(guard("calc.generators.Eplus", || {
        let ep = eng.generator_action_on_seed(Kind::Eplus).map_err(err)?;
        let mut ok = true;
        for a in 0..2 {
            for c in 0..2 {
                let want = SiegelExpr::from_terms(
                    2,
                    true,
                    [
                        ((0, 0), kappa.add(&s2).mul(&jb_y[a][c]).scale_int(2).add(&jb_tau[a][c].scale(&pi8))),
                        ((-1, 0), s1.mul(&jb_tau[a][c]).scale_int(2)),
                    ],
                );
                ok &= ep[a][c].at_identity(fr).same_function(&want.at_identity(fr), fr);
            }
        }
        let derived = "(E+)_ac H = 2(kappa+s2) H (Jb'yJb) - 8 pi H (Jb'y tau y Jb) + 2 s1 H(s1-1) (Jb'y tau y Jb)";
        Ok(CheckReport::boolean("calc.generators.Eplus", ok, derived.into()))
    }));
    out.push(guard("calc.generators.B", || {
        let b = eng.generator_action_on_seed(Kind::B).map_err(err)?;
        let acts_as = |sign: i64| {
            (0..2).all(|a| {
                (0..2).all(|c| {
                    let want = if a == c { eng.seed().mul_poly(&kappa.scale_int(sign)) } else { SiegelExpr::zero(2, true) };
                    b[a][c].same_function(&want, fr)
                })
            })
        };
        let r = if acts_as(1) {
            CheckReport::compare("calc.generators.B", "B_ab H = kappa delta_ab H".into(), String::new())
        } else if acts_as(-1) {
            CheckReport::compare("calc.generators.B", "B_ab H = -kappa delta_ab H".into(), "printed +kappa delta_ab H".into())
        } else {
            CheckReport::compare("calc.generators.B", "B_ab H is not a multiple of H".into(), "printed +kappa delta_ab H".into())
        };
        Ok(r)
    }));
    out
}

fn zero_shift_at_origin(dec: &crate::siegel::shift::ShiftDecomposition) -> Option<RingElem> {
    let v = &dec.vars;
    dec.in_s_coordinates()
        .zero_shift()
        .substitute(&[("s1", Poly::zero(v)), ("s2", Poly::zero(v))])
        .as_constant()
}

/// `Λ(Z)` at `Λ = (2,3)`, `u = 2`, `v = 5` from the Harish-Chandra images.
fn infinitesimal_characters() -> Result<[RingElem; 4], String> {
    let u = genus_two_uea()?;
    let ce = center()?;
    let hc = HarishChandra::new(u).map_err(err)?;
    let at = |z: &UeaElem| -> Result<RingElem, String> {
        let f = hc.lambda_form(&hc.gamma_image(z));
        let v = f.vars().clone();
        let mut bind = vec![("L1", Poly::int(&v, 2)), ("L2", Poly::int(&v, 3))];
        for (name, val) in [("u", 2), ("v", 5)] {
            if v.index(name).is_some() {
                bind.push((name, Poly::int(&v, val)));
            }
        }
        f.substitute(&bind).as_constant().ok_or_else(|| "infinitesimal character is not a constant".to_string())
    };
    Ok([at(&ce.c1)?, at(&ce.c2)?, at(&ce.d_plus)?, at(&ce.d_minus)?])
}

fn weight_four_checks() -> Vec<CheckReport> {
    let acts = match weight_four_actions() {
        Ok(a) => a,
        Err(e) => return vec![CheckReport::error("calc.C1", &e)],
    };
    let vars = &acts.c1.vars;
    let mut out = vec![guard("calc.engines_agree", || {
        let eng = weight_four_engine().map_err(err)?;
        let kt = seed_actions_k_type(&eng).map_err(err)?;
        let ok = kt.c1 == acts.c1 && kt.c2 == acts.c2;
        Ok(CheckReport::boolean("calc.engines_agree", ok, format!("letter-by-letter and trace reduction agree: {ok}")))
    })];
    let (dp, dm) = (acts.d_plus(), acts.d_minus());
    let displays = [
        compare_display(&acts.c1, &quoted::C1_ON_P),
        compare_display(&acts.c2, &quoted::C2_ON_P),
        compare_display(&dp, &quoted::D_PLUS_ON_P),
        compare_display(&dm, &quoted::D_MINUS_ON_P),
    ];
    for d in &displays {
        out.extend(d.checks());
    }
    match infinitesimal_characters() {
        Ok(lam) => {
            for ((name, dec), want) in [("C1", &acts.c1), ("C2", &acts.c2), ("Dplus", &dp), ("Dminus", &dm)].into_iter().zip(lam) {
                let id = format!("calc.invariant.{name}");
                out.push(match zero_shift_at_origin(dec) {
                    Some(got) => equal_check(&id, &got, &want),
                    None => CheckReport::error(&id, &"zero-shift coefficient is not a constant at s = 0"),
                });
            }
        }
        Err(e) => out.push(CheckReport::error("calc.invariant.C1", &e)),
    }
    let v_line = parse_poly(vars, "2*u+1").expect("line parses");
    let lines = [
        compare_line(&d_plus_two_remainder(acts), Line::VTwoUPlusOne, &quoted::D_PLUS_2_REMAINDER_ON_LINE),
        compare_line(&acts.d_minus_at(&v_line), Line::VTwoUPlusOne, &quoted::D_MINUS_ON_LINE),
        compare_line(&acts.c1, Line::S1Zero, &quoted::C1_ON_S1_ZERO),
        compare_line(&acts.c1, Line::S1One, &quoted::C1_ON_S1_ONE),
    ];
    for l in &lines {
        out.extend(l.checks());
    }
    out
}

fn genus_one_checks() -> Vec<CheckReport> {
    let (rw, cl) = match (genus1_action(Genus1Engine::Rewriting), genus1_action(Genus1Engine::Classical)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return vec![CheckReport::error("calc.genus1.C1", &e)],
    };
    let v = &rw.vars;
    let table = &quoted::GENUS1_C1;
    let mut keys: Vec<(i32, i32)> = rw.coeffs.keys().copied().collect();
    for q in table.terms {
        if !keys.contains(&q.shift_uv) {
            keys.push(q.shift_uv);
        }
    }
    keys.sort();
    let mut out = Vec::new();
    for k in keys {
        let printed = table
            .terms
            .iter()
            .find(|q| q.shift_uv == k)
            .map(|q| parse_poly(v, q.text).expect("printed display parses"))
            .unwrap_or_else(|| Poly::zero(v));
        out.push(equal_check(&table.check_id(k), &rw.get(k), &printed));
    }
    out.push(CheckReport::boolean(
        "calc.genus1.engines_agree",
        rw == cl,
        format!("rewriting and classical operator agree: {}", rw == cl),
    ));
    let half = [("s", Poly::rat(v, 1, 2))];
    let vanish = rw.coeffs.values().all(|p| p.substitute(&half).is_zero());
    out.push(CheckReport::boolean("calc.genus1.zero_at_half", vanish, format!("all coefficients vanish at s = 1/2: {vanish}")));
    out
}

pub fn calculus(opts: CalculusOptions) -> Vec<CheckReport> {
    let genus = |m| opts.genus.is_none_or(|g| g == m);
    let mut out = Vec::new();
    if genus(1) {
        out.push(trace_check("calc.trace2.genus1", 1, 2, opts.kappa.poly()));
    }
    if genus(2) {
        out.push(trace_check("calc.trace2.genus2", 2, 2, opts.kappa.poly()));
        let k4 = match opts.kappa {
            Kappa::Symbolic => Kappa::Value(4).poly(),
            Kappa::Value(_) => opts.kappa.poly(),
        };
        out.push(trace_check("calc.trace4.genus2", 2, 4, k4));
        out.extend(generator_checks(opts.kappa.poly()));
        if opts.kappa.admits(4) {
            out.extend(weight_four_checks());
        }
    }
    if genus(1) && opts.kappa.admits(GENUS1_KAPPA) {
        out.extend(genus_one_checks());
    }
    out
}

fn pieces_text(p: &[Locus]) -> String {
    p.iter()
        .map(|l| match l {
            Locus::FullLine { at, order } => format!("line at {at} (order {order})"),
            Locus::TwoPoints { re, t_over_y } => {
                format!("points Re = {re}, t/y in {{{}}}", t_over_y.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))
            }
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn region_check(id: &str, got: &Region, want: &Region) -> CheckReport {
    equal_check(id, got, want)
}

pub fn spectral() -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(guard("spectral.intersections", || {
        let one = Rat::one();
        let full = || vec![Locus::FullLine { at: Rat::one(), order: 1 }];
        let two = |re: Rat| vec![Locus::TwoPoints { re, t_over_y: vec![Rat::from_int(-1), Rat::one()] }];
        let half = Rat::new(1, 2);
        let expect = [
            (Which::Plus, [full(), two(half.clone()), two(half.clone()), full()]),
            (Which::Minus, [two(one.clone()), full(), full(), two(one.clone())]),
        ];
        let mut rows = Vec::new();
        let mut bad = Vec::new();
        for (which, want) in expect {
            for (g, w) in Root::ALL.iter().zip(want) {
                let i = spectral::intersect_zero_locus(&SpectralLine::new(*g, one.clone()).map_err(err)?, which).map_err(err)?;
                let row = format!("{which} on {}: {}", g.name(), pieces_text(&i.pieces));
                if i.pieces != w {
                    bad.push(format!("{which} on {}: expected {}", g.name(), pieces_text(&w)));
                }
                rows.push(row);
            }
        }
        Ok(CheckReport::compare("spectral.intersections", rows.join(" | "), bad.join(" | ")))
    }));
    for (id, which, bound, poles) in [
        ("spectral.resolvent.plus", Which::Plus, Rat::new(1, 2), vec![(Rat::one(), 1)]),
        ("spectral.resolvent.minus", Which::Minus, Rat::one(), vec![]),
    ] {
        out.push(guard(id, || {
            let r = spectral::resolvent_domain_report(which, &spectral::default_c_values()).map_err(err)?;
            let ok = r.bound == bound && r.poles == poles;
            Ok(CheckReport::boolean(id, ok, r.describe()))
        }));
    }
    let q = |u: i64, v: i64| Region::quadrant(Some(Rat::from_int(u)), Some(Rat::from_int(v)));
    let a = match spectral::convergence_cone(2, 4) {
        Ok(a) => a,
        Err(e) => {
            out.push(CheckReport::error("spectral.region.A", &e));
            return out;
        }
    };
    out.push(region_check("spectral.region.A", &a, &q(2, 5)));
    let shifts = weight_four_actions().map(|acts| (spectral::nonzero_shifts(&acts.d_plus()), spectral::nonzero_shifts(&acts.d_minus())));
    match &shifts {
        Ok((plus, minus)) => {
            out.push(region_check("spectral.region.AuB", &spectral::shift_closure(&a, plus), &q(0, 5)));
            out.push(region_check("spectral.region.AuC", &spectral::shift_closure(&a, minus), &q(2, 3)));
            out.push(guard("spectral.continuation", || {
                let c = spectral::continuation(&a, plus, minus, &Rat::new(1, 2), &Rat::one()).map_err(err)?;
                let want = Region::quadrant(Some(Rat::new(1, 2)), Some(Rat::one()));
                let derived = format!("{} after {} rounds", c.result, c.rounds.len());
                let diff = if c.result == want { String::new() } else { format!("expected {want}") };
                Ok(CheckReport::compare("spectral.continuation", derived, diff))
            }));
        }
        Err(e) => out.push(CheckReport::error("spectral.region.AuB", e)),
    }
    out.push(CheckReport::boolean(
        "spectral.line_identity",
        spectral::line_identity(),
        "D+ image at (it, c) = -(c^2-u^2)(t^2+u^2)".into(),
    ));
    out.extend(proof_checks());
    out
}

fn proof_checks() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let derived = weight_four_actions().and_then(|a| spectral::ChainCoefficients::derived(a).map_err(err));
    match &derived {
        Ok(ch) => {
            for (id, a, printed) in [
                ("proof.relation_s1_0", &ch.a0, quoted::RELATION_S1_ZERO_ROOT),
                ("proof.relation_s1_1", &ch.a1, quoted::RELATION_S1_ONE_ROOT),
            ] {
                let root = a + &RingElem::one();
                let diff = if root == RingElem::int(printed) { String::new() } else { format!("printed factor (L2^2 - {printed})") };
                out.push(CheckReport::compare(id, format!("factor (L2^2 - {root})"), diff));
            }
        }
        Err(e) => out.push(CheckReport::error("proof.relation_s1_0", e)),
    }
    let printed = spectral::ChainCoefficients::printed().map_err(err);
    out.push(guard("proof.limit_display", || {
        let lhs = spectral::implied_limit_lhs(printed.as_ref().map_err(Clone::clone)?).map_err(err)?;
        let lit = spectral::literal_display_equation();
        let diff = if lhs == lit.lhs { String::new() } else { format!("printed {}", lit.lhs.to_string_in("X")) };
        Ok(CheckReport::compare("proof.limit_display", lhs.to_string_in("X"), diff))
    }));
    let expected_roots = vec![Rat::from_int(9), Rat::from_int(65)];
    let elim_check = |id: &str, ch: &spectral::ChainCoefficients| -> Result<CheckReport, String> {
        let eq = spectral::lambda_elimination(ch).map_err(err)?;
        let acc = eq.accepted();
        let ok = eq.roots == expected_roots && acc.len() == 1 && acc[0].lambda2 == Some(Rat::from_int(3));
        let diff = if ok { String::new() } else { "expected X in {9, 65} with only (2,3) accepted".to_string() };
        Ok(CheckReport::compare(id, eq.describe(), diff))
    };
    out.push(guard("proof.lambda_elim", || elim_check("proof.lambda_elim", printed.as_ref().map_err(Clone::clone)?)));
    out.push(guard("proof.derived_chain", || elim_check("proof.derived_chain", derived.as_ref().map_err(Clone::clone)?)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Hc,
    Calculus,
    Spectral,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Algebra, Suite::Hc, Suite::Calculus, Suite::Spectral];

    pub fn run(self, opts: CalculusOptions) -> Vec<CheckReport> {
        match self {
            Suite::Algebra => algebra(),
            Suite::Hc => hc(),
            Suite::Calculus => calculus(opts),
            Suite::Spectral => spectral(),
        }
    }
}

/// Runs suites in order; the weight-four seed actions are shared between them.
pub fn run(suites: &[Suite], opts: CalculusOptions) -> Vec<CheckReport> {
    suites.iter().flat_map(|s| s.run(opts)).collect()
}
