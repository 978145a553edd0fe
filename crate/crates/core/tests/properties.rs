mod support;

use support::props;

#[test]
fn scalar_ring_axioms() {
    props::scalar_ring_axioms().unwrap();
}

#[test]
fn polynomial_ring_axioms_and_leibniz() {
    props::polynomial_ring_axioms_and_leibniz().unwrap();
}

#[test]
fn lie_bracket_laws() {
    props::lie_bracket_laws().unwrap();
}

#[test]
fn pbw_linearity_and_associativity() {
    props::pbw_linearity_and_associativity().unwrap();
}

#[test]
fn letter_commutators_are_brackets() {
    props::letter_commutators_are_brackets().unwrap();
}

#[test]
fn central_images_are_weyl_invariant() {
    props::images_of_central_combinations_are_weyl_invariant().unwrap();
}

#[test]
fn half_space_derivatives_commute_and_obey_leibniz() {
    props::half_space_derivatives_commute_and_obey_leibniz().unwrap();
}

#[test]
fn shift_decomposition_is_unique() {
    props::shift_decomposition_is_unique().unwrap();
}

#[test]
fn spd_inequalities_with_proof_constants() {
    props::spd_inequalities().unwrap();
}
