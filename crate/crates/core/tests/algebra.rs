use casimir_core::lie::BasisIndex;
use casimir_core::uea::{LetterOrder, TraceForms, Uea};
use std::time::Instant;

#[test]
fn degree_four_identities_genus_two() {
    let t0 = Instant::now();
    let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
    let tf = TraceForms::new(&u);
    let d4 = u.build_casimir(4);
    eprintln!("D4 built: {} terms in {:?}", d4.terms().len(), t0.elapsed());
    // the printed cyclic-sum form is off; the corrected one is exact
    let printed = u.normal_form(&tf.d4_basis_expression());
    assert!(!u.verify_identity(&d4, &printed).equal);
    assert!(!u.non_commuting_letters(&printed).is_empty());
    let r = u.verify_identity(&d4, &tf.d4_corrected_expression());
    assert!(r.equal, "D4 corrected: {}", u.format(&r.difference));
    let r = u.verify_identity(&tf.sym4(), &tf.sym4_rearranged());
    assert!(r.equal, "sym4 rearrangement: {}", u.format(&r.difference));
    let r = u.verify_identity(&d4.scale_rat(1, 2), &tf.c2_rearranged());
    assert!(r.equal, "C2 display: {}", u.format(&r.difference));
    assert!(u.non_commuting_letters(&d4).is_empty());
    assert!(u.non_commuting_letters(&u.build_casimir(2)).is_empty());
    eprintln!("total {:?}", t0.elapsed());
}

#[test]
fn root_table_from_brackets() {
    let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
    for (idx, w) in [
        (BasisIndex::b(1, 2), (1, -1)),
        (BasisIndex::eminus(1, 1), (2, 0)),
        (BasisIndex::eminus(1, 2), (1, 1)),
        (BasisIndex::eminus(2, 2), (0, 2)),
    ] {
        let pos = u.lie.position(idx).unwrap();
        let wt = u.lie.weight(pos).unwrap();
        assert_eq!(wt[0], casimir_core::ring::Gauss::int(w.0));
        assert_eq!(wt[1], casimir_core::ring::Gauss::int(w.1));
    }
}
