use casimir_core::ring::univariate::UPoly;
use casimir_core::ring::Rat;
use casimir_core::siegel::casimir::{seed_actions_direct, weight_four_engine};
use casimir_core::spectral::*;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn line(root: Root, c: Rat) -> SpectralLine {
    SpectralLine::new(root, c).unwrap()
}

#[test]
fn intersections_at_c_one() {
    let one = Rat::one();
    let full = |at: Rat| vec![Locus::FullLine { at, order: 1 }];
    let two = |re: Rat| vec![Locus::TwoPoints { re, t_over_y: vec![r(-1, 1), r(1, 1)] }];
    let plus: Vec<_> = Root::ALL.iter().map(|g| intersect_zero_locus(&line(*g, one.clone()), Which::Plus).unwrap().pieces).collect();
    assert_eq!(plus[0], full(one.clone()));
    assert_eq!(plus[1], two(r(1, 2)));
    assert_eq!(plus[2], two(r(1, 2)));
    assert_eq!(plus[3], full(one.clone()));
    let minus: Vec<_> = Root::ALL.iter().map(|g| intersect_zero_locus(&line(*g, one.clone()), Which::Minus).unwrap().pieces).collect();
    assert_eq!(minus[0], two(one.clone()));
    assert_eq!(minus[1], full(one.clone()));
    assert_eq!(minus[2], full(one.clone()));
    assert_eq!(minus[3], two(one.clone()));
}

#[test]
fn zero_parameter_lines_meet_nothing_in_the_right_half_plane() {
    for g in Root::ALL {
        let i = intersect_zero_locus(&line(g, Rat::zero()), Which::Plus).unwrap();
        let ok = i.pieces.iter().all(|l| matches!(l, Locus::TwoPoints { .. }) || matches!(l, Locus::FullLine { at, .. } if !at.is_zero()));
        assert!(ok, "{}", i.describe());
    }
    assert!(SpectralLine::new(Root::Alpha1, r(3, 2)).is_err());
}

#[test]
fn resolvent_domains() {
    let p = resolvent_domain_report(Which::Plus, &default_c_values()).unwrap();
    assert_eq!(p.bound, r(1, 2));
    assert_eq!(p.poles, vec![(Rat::one(), 1)]);
    let m = resolvent_domain_report(Which::Minus, &default_c_values()).unwrap();
    assert_eq!(m.bound, Rat::one());
    assert!(m.poles.is_empty(), "{}", m.describe());
    let p0 = resolvent_domain_report(Which::Plus, &[Rat::zero()]).unwrap();
    assert_eq!(p0.bound, Rat::zero());
}

#[test]
fn line_identity_holds() {
    assert!(line_identity());
}

#[test]
fn cone_and_closures() {
    let a = convergence_cone(2, 4).unwrap();
    assert_eq!(a, Region::quadrant(Some(r(2, 1)), Some(r(5, 1))));
    assert!(convergence_cone(1, 4).is_err());
    let plus = [(4, 0), (4, 2), (4, 4), (2, 0), (2, 2), (2, 4)];
    let minus = [(0, 4), (0, 2), (2, 2), (2, 4)];
    assert_eq!(shift_closure(&a, &plus), Region::quadrant(Some(Rat::zero()), Some(r(5, 1))));
    assert_eq!(shift_closure(&a, &minus), Region::quadrant(Some(r(2, 1)), Some(r(3, 1))));
    let c = continuation(&a, &plus, &minus, &r(1, 2), &Rat::one()).unwrap();
    assert_eq!(c.result, Region::quadrant(Some(r(1, 2)), Some(Rat::one())));
    assert!(c.rounds.len() >= 3);
}

#[test]
fn printed_chain_and_literal_display() {
    let x = |a: i64, b: i64| UPoly::from_ints(&[-a, 1]).mul(&UPoly::from_ints(&[-b, 1]));
    assert_eq!(limit_rhs(), x(9, 49));
    let printed = lambda_elimination(&ChainCoefficients::printed().unwrap()).unwrap();
    assert_eq!(printed.lhs, x(9, 57).mul(&UPoly::from_ints(&[2])));
    assert_eq!(printed.roots, vec![r(9, 1), r(65, 1)]);
    let acc = printed.accepted();
    assert_eq!(acc.len(), 1);
    assert_eq!(acc[0].lambda2, Some(r(3, 1)));
    let literal = literal_display_equation();
    assert_eq!(literal.roots, vec![r(9, 1), r(41, 1)]);
}

#[test]
fn derived_chain_is_an_identity() {
    let eng = weight_four_engine().unwrap();
    let acts = seed_actions_direct(&eng).unwrap();
    let ch = ChainCoefficients::derived(&acts).unwrap();
    assert_eq!(ch.a0.as_rat(), Some(r(8, 1)));
    assert_eq!(ch.a1.as_rat(), Some(r(24, 1)));
    let eq = lambda_elimination(&ch).unwrap();
    assert!(eq.identity, "{}", eq.describe());
    let plus = nonzero_shifts(&acts.d_plus());
    let minus = nonzero_shifts(&acts.d_minus());
    let mut p = plus.clone();
    p.sort();
    assert_eq!(p, vec![(2, 0), (2, 2), (2, 4), (4, 0), (4, 2), (4, 4)]);
    let mut m = minus.clone();
    m.sort();
    assert_eq!(m, vec![(0, 2), (0, 4), (2, 2), (2, 4)]);
}

#[test]
fn candidate_filter() {
    assert!(classify_candidate(&r(9, 1)).accepted);
    assert!(!classify_candidate(&r(65, 1)).accepted);
    assert!(!classify_candidate(&r(41, 1)).accepted);
    assert!(classify_candidate(&r(1, 4)).accepted);
}

fn bound() -> impl Strategy<Value = Option<Rat>> {
    prop_oneof![Just(None), (-8i64..8, 1i64..4).prop_map(|(n, d)| Some(Rat::new(n, d)))]
}

fn region() -> impl Strategy<Value = Region> {
    prop::collection::vec((bound(), bound()).prop_map(|(u, v)| Quadrant::new(u, v)), 0..4).prop_map(Region::from_quadrants)
}

fn point() -> impl Strategy<Value = (Rat, Rat)> {
    ((-20i64..20, 1i64..5), (-20i64..20, 1i64..5)).prop_map(|((a, b), (c, d))| (Rat::new(a, b), Rat::new(c, d)))
}

proptest! {
    #[test]
    fn region_lattice_laws(a in region(), b in region(), c in region(), (u, v) in point()) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.intersect(&b.union(&c)), a.intersect(&b).union(&a.intersect(&c)));
        prop_assert_eq!(a.union(&a.intersect(&b)), a.clone());
        prop_assert!(a.intersect(&b).is_subset(&a));
        prop_assert!(a.is_subset(&a.union(&b)));
        prop_assert_eq!(a.union(&b).contains_point(&u, &v), a.contains_point(&u, &v) || b.contains_point(&u, &v));
        prop_assert_eq!(a.intersect(&b).contains_point(&u, &v), a.contains_point(&u, &v) && b.contains_point(&u, &v));
    }

    #[test]
    fn closure_is_pointwise(a in region(), (u, v) in point(), shifts in prop::collection::vec((0i32..5, 0i32..5), 1..4)) {
        let cl = shift_closure(&a, &shifts);
        let direct = shifts.iter().all(|s| a.contains_point(&(&u + &Rat::from_int(s.0 as i64)), &(&v + &Rat::from_int(s.1 as i64))));
        prop_assert_eq!(cl.contains_point(&u, &v), direct);
    }

    #[test]
    fn intersections_are_weyl_stable(n in 0i64..=8, which in prop_oneof![Just(Which::Plus), Just(Which::Minus)]) {
        let c = Rat::new(n, 8);
        for g in Root::ALL {
            let a = intersect_zero_locus(&line(g, c.clone()), which).unwrap();
            let b = intersect_zero_locus(&line(g.simple_partner(), c.clone()), which).unwrap();
            let shape = |i: &Intersection| -> Vec<(bool, Rat)> {
                i.pieces.iter().map(|l| match l {
                    Locus::FullLine { at, .. } => (true, at.clone()),
                    Locus::TwoPoints { re, .. } => (false, re.clone()),
                }).collect()
            };
            prop_assert_eq!(shape(&a), shape(&b));
        }
    }
}
