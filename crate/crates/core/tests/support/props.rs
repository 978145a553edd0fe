//! Randomized invariants, shared by the property tests and the acceptance run.
//! Every suite uses a fixed seed so failures reproduce.

use casimir_core::hc::{weyl_images, CenterElements, HarishChandra};
use casimir_core::lie::SpLie;
use casimir_core::ring::{Gauss, Poly, Rat, RingElem, VarSet};
use casimir_core::siegel::shift::{decompose, shift_vars, ShiftDecomposition};
use casimir_core::siegel::{Frame, SiegelExpr};
use casimir_core::uea::{LetterOrder, Uea, UeaElem};
use casimir_core::projection::inequalities::matrix_inequalities;
use nalgebra::DMatrix;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::{Arc, OnceLock};

fn check<S: Strategy>(cases: u32, strategy: &S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng).run(strategy, test).map_err(|e| e.to_string())
}

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn gauss() -> impl Strategy<Value = Gauss> {
    (rat(), rat()).prop_map(|(a, b)| Gauss::new(a, b))
}

fn elem() -> impl Strategy<Value = RingElem> {
    prop::collection::vec((0u32..3, gauss()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(RingElem::zero(), |acc, (d, g)| &acc + &RingElem::monomial(d, g))
    })
}

fn small_vars() -> Arc<VarSet> {
    VarSet::of(&["s1", "s2", "u"])
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), elem()), 0..4).prop_map(|ts| {
        let v = small_vars();
        let (a, b, c) = (Poly::var(&v, "s1"), Poly::var(&v, "s2"), Poly::var(&v, "u"));
        ts.into_iter().fold(Poly::zero(&v), |acc, ((i, j, k), e)| {
            acc.add(&a.pow(i).mul(&b.pow(j)).mul(&c.pow(k)).scale(&e))
        })
    })
}
pub fn scalar_ring_axioms() -> Result<(), String> {
    check(64, &(elem(), elem(), elem()), |(x, y, z)| {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &RingElem::one(), x.clone());
        prop_assert!((&x + &y).is_canonical() && (&x * &y).is_canonical());
        Ok(())
    })
}

pub fn polynomial_ring_axioms_and_leibniz() -> Result<(), String> {
    check(64, &(poly(), poly(), poly()), |(f, g, h)| {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert!(f.mul(&g).is_canonical());
        for x in ["s1", "s2"] {
            let lhs = f.mul(&g).derivative(x);
            let rhs = f.derivative(x).mul(&g).add(&f.mul(&g.derivative(x)));
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(f.derivative("s1").derivative("s2"), f.derivative("s2").derivative("s1"));
        Ok(())
    })
}


fn lie2() -> &'static SpLie {
    static L: OnceLock<SpLie> = OnceLock::new();
    L.get_or_init(|| SpLie::new(2).unwrap())
}

type Comb = Vec<Gauss>;

fn bracket(l: &SpLie, x: &Comb, y: &Comb) -> Comb {
    let mut out = vec![Gauss::zero(); l.dim()];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in l.bracket_pos(i, j) {
                out[*k] = &out[*k] + &(&ab * c);
            }
        }
    }
    out
}

fn form(l: &SpLie, x: &Comb, y: &Comb) -> Gauss {
    let mut acc = Gauss::zero();
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(&(a * b) * &l.bilinear(l.letter(i), l.letter(j)).unwrap());
            }
        }
    }
    acc
}

fn comb() -> impl Strategy<Value = Comb> {
    prop::collection::vec(prop_oneof![3 => Just(Gauss::zero()), 1 => gauss()], 10)
}
pub fn lie_bracket_laws() -> Result<(), String> {
    check(48, &(comb(), comb(), comb()), |(x, y, z)| {
        let l = lie2();
        let xy = bracket(l, &x, &y);
        let yx = bracket(l, &y, &x);
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| (a + b).is_zero()));
        let j1 = bracket(l, &x, &bracket(l, &y, &z));
        let j2 = bracket(l, &y, &bracket(l, &z, &x));
        let j3 = bracket(l, &z, &bracket(l, &x, &y));
        prop_assert!((0..l.dim()).all(|k| (&(&j1[k] + &j2[k]) + &j3[k]).is_zero()));
        // invariance of the trace form
        prop_assert_eq!(form(l, &xy, &z), form(l, &x, &bracket(l, &y, &z)));
        Ok(())
    })
}


fn uea2() -> &'static Uea {
    static U: OnceLock<Uea> = OnceLock::new();
    U.get_or_init(|| Uea::new(2, LetterOrder::HarishChandra).unwrap())
}

/// Sums of short words with small integer coefficients.
fn uea_elem() -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..10, 0..3), -3i64..=3), 1..3)
}

fn build(u: &Uea, spec: &[(Vec<usize>, i64)]) -> UeaElem {
    let mut acc = UeaElem::zero(&u.vars);
    for (letters, c) in spec {
        let idx: Vec<_> = letters.iter().map(|p| u.lie.letter(*p)).collect();
        acc = acc.add(&u.word(&idx, Poly::int(&u.vars, *c)).unwrap());
    }
    acc
}
pub fn pbw_linearity_and_associativity() -> Result<(), String> {
    check(40, &(uea_elem(), uea_elem(), uea_elem(), -4i64..=4), |(a, b, c, k)| {
        let u = uea2();
        let (x, y, z) = (build(u, &a), build(u, &b), build(u, &c));
        prop_assert!(u.verify_identity(&u.mul(&x, &y.add(&z)), &u.mul(&x, &y).add(&u.mul(&x, &z))).equal);
        prop_assert!(u.verify_identity(&u.mul(&x.scale_rat(k, 1), &y), &u.mul(&x, &y).scale_rat(k, 1)).equal);
        prop_assert!(u.verify_identity(&u.mul(&u.mul(&x, &y), &z), &u.mul(&x, &u.mul(&y, &z))).equal);
        prop_assert!(u.verify_identity(&u.normal_form(&x.add(&y)), &x.add(&y)).equal);
        Ok(())
    })
}

pub fn letter_commutators_are_brackets() -> Result<(), String> {
    check(40, &(0usize..10, 0usize..10), |(i, j)| {
        let u = uea2();
        let (a, b) = (u.lie.letter(i), u.lie.letter(j));
        let lhs = u.commutator(&u.letter(a), &u.letter(b));
        let mut rhs = UeaElem::zero(&u.vars);
        for (k, c) in u.lie.bracket(a, b).unwrap() {
            rhs = rhs.add(&u.letter(k).scale_elem(&RingElem::from_gauss(c)));
        }
        prop_assert!(u.verify_identity(&lhs, &rhs).equal);
        Ok(())
    })
}


struct Images {
    g1: Poly,
    g2: Poly,
    g11: Poly,
}

fn images() -> &'static Images {
    static I: OnceLock<Images> = OnceLock::new();
    I.get_or_init(|| {
        let u = uea2();
        let hc = HarishChandra::new(u).unwrap();
        let ce = CenterElements::build(u).unwrap();
        Images { g1: hc.gamma_image(&ce.c1), g2: hc.gamma_image(&ce.c2), g11: hc.gamma_image(&u.mul(&ce.c1, &ce.c1)) }
    })
}
pub fn images_of_central_combinations_are_weyl_invariant() -> Result<(), String> {
    check(32, &(rat(), rat(), rat()), |(a, b, c)| {
        let im = images();
        let g = im.g1.scale(&RingElem::from_rat(a)).add(&im.g2.scale(&RingElem::from_rat(b))).add(&im.g11.scale(&RingElem::from_rat(c)));
        for w in weyl_images(&g) {
            prop_assert_eq!(&w, &g);
        }
        // and the image of C1² is the square of the image
        prop_assert_eq!(&im.g11, &im.g1.mul(&im.g1));
        Ok(())
    })
}


/// Random functions `Σ tr^a det^b P_ab` with `P_ab` polynomial in `y`, `τ`, `s`.
fn siegel_expr() -> impl Strategy<Value = SiegelExpr> {
    let names = ["y11", "y12", "y22", "tau11", "tau12", "s1", "s2"];
    prop::collection::vec(((-1i32..2, -1i32..2), prop::collection::vec((0usize..7, 0u32..3), 0..3), -4i64..=4), 1..4)
        .prop_map(move |ts| {
            let fr = frame2();
            let terms = ts.into_iter().map(|(k, mono, c)| {
                let p = mono.iter().fold(Poly::int(&fr.vars, c), |acc, (i, e)| acc.mul(&Poly::var(&fr.vars, names[*i]).pow(*e)));
                (k, p)
            });
            SiegelExpr::from_terms(2, true, terms)
        })
}

fn frame2() -> &'static Frame {
    static F: OnceLock<Frame> = OnceLock::new();
    F.get_or_init(|| Frame::new(2))
}

const PAIRS: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
pub fn half_space_derivatives_commute_and_obey_leibniz() -> Result<(), String> {
    check(48, &(siegel_expr(), 0usize..3, 0usize..3, poly_y()), |(f, i, j, c)| {
        let fr = frame2();
        let (p, q) = PAIRS[i];
        let (r, s) = PAIRS[j];
        let a = f.dy(fr, p, q).dy(fr, r, s);
        let b = f.dy(fr, r, s).dy(fr, p, q);
        prop_assert!(a.same_function(&b, fr));
        let a = f.d(fr, p, q).dbar(fr, r, s);
        let b = f.dbar(fr, r, s).d(fr, p, q);
        prop_assert!(a.same_function(&b, fr));
        // multiplying by a polynomial in y
        let name = ["y11", "y12", "y22"][i];
        let mut dc = c.derivative(name);
        if p != q {
            dc = dc.scale_rat(1, 2);
        }
        let lhs = f.mul_poly(&c).dy(fr, p, q);
        let rhs = f.dy(fr, p, q).mul_poly(&c).add(&f.mul_poly(&dc));
        prop_assert!(lhs.same_function(&rhs, fr));
        Ok(())
    })
}


fn poly_y() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..2, 0u32..2, 0u32..2), -3i64..=3), 0..3).prop_map(|ts| {
        let fr = frame2();
        let v = |n| Poly::var(&fr.vars, n);
        ts.into_iter().fold(Poly::zero(&fr.vars), |acc, ((a, b, c), k)| {
            acc.add(&v("y11").pow(a).mul(&v("y12").pow(b)).mul(&v("y22").pow(c)).scale_int(k))
        })
    })
}

/// Coefficients in `s1`, `s2` and `D = det τ`, as exponent triples.
fn shift_table() -> impl Strategy<Value = Vec<((i32, i32), Vec<((u32, u32, u32), i64)>)>> {
    prop::collection::vec(((0i32..3, 0i32..3), prop::collection::vec(((0u32..2, 0u32..2, 0u32..2), -3i64..=3), 1..3)), 1..4)
}
pub fn shift_decomposition_is_unique() -> Result<(), String> {
    check(32, &(shift_table(), 0usize..4), |(table, mv)| {
        let fr = frame2();
        let sv = shift_vars();
        let mut want = ShiftDecomposition::zero();
        let mut terms = Vec::new();
        for (k, monos) in &table {
            let mut on_frame = Poly::zero(&fr.vars);
            for ((i, j, d), c) in monos {
                let m = |v: &Arc<VarSet>, det: &Poly| {
                    Poly::var(v, "s1").pow(*i).mul(&Poly::var(v, "s2").pow(*j)).mul(&det.pow(*d)).scale_int(*c)
                };
                on_frame = on_frame.add(&m(&fr.vars, &fr.det_tau));
                want.insert(*k, m(&sv, &Poly::var(&sv, "D")));
            }
            terms.push((*k, on_frame));
        }
        // an equivalent but non-canonical representation: one term carries an explicit factor tr
        if let Some(t) = terms.get_mut(mv % table.len().max(1)) {
            t.0 .0 -= 1;
            t.1 = t.1.mul(&fr.tr);
        }
        let e = SiegelExpr::from_terms(2, true, terms);
        let got = decompose(fr, &e).unwrap();
        prop_assert_eq!(got, want);
        Ok(())
    })
}

fn random_spd(rng: &mut ChaCha8Rng, m: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(m, m, |_, _| rng.random_range(-2.0..2.0));
    &a * a.transpose() + DMatrix::identity(m, m) * 1e-3
}

/// The trace and determinant inequalities with `k = m!`, `m1` the least
/// eigenvalue and `m2` the trace, on 100 seeded draws of size 2 to 4.
pub fn spd_inequalities() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..100 {
        let m = 2 + k % 3;
        let (s, y) = (random_spd(&mut rng, m), random_spd(&mut rng, m));
        let r = matrix_inequalities(&s, &y).map_err(|e| e.to_string())?;
        // m1 is an attained eigenvalue, so no diagonal entry lies below it
        if !(0..m).all(|i| r.m1 <= s[(i, i)] + 1e-12) || !r.all_hold() {
            return Err(format!("draw {k}: {r:?}"));
        }
    }
    Ok(())
}

pub const SUITES: &[(&str, fn() -> Result<(), String>)] = &[
    ("scalar ring axioms", scalar_ring_axioms),
    ("polynomial ring axioms and Leibniz rule", polynomial_ring_axioms_and_leibniz),
    ("Lie bracket antisymmetry, Jacobi, invariant form", lie_bracket_laws),
    ("PBW linearity and associativity", pbw_linearity_and_associativity),
    ("letter commutators are brackets", letter_commutators_are_brackets),
    ("Weyl invariance of central images", images_of_central_combinations_are_weyl_invariant),
    ("mixed partials and Leibniz on the half-space", half_space_derivatives_commute_and_obey_leibniz),
    ("shift decomposition uniqueness", shift_decomposition_is_unique),
    ("SPD inequalities on 100 draws", spd_inequalities),
];
