use casimir_core::projection::cone::{cone_integral, HalfIntegralMatrix, QuadratureSpec};
use casimir_core::projection::gamma::{gamma_m, gamma_m_exact, GammaMode};
use casimir_core::projection::inequalities::matrix_inequalities;
use casimir_core::projection::oracle::{delta_coefficients, delta_fourier_profile};
use casimir_core::projection::poincare::{genus1_poincare, modularity_residual, PoincareArgs};
use casimir_core::projection::sturm::{parse_datum_file, sturm_coefficient, FourierData, FourierDatum};
use casimir_core::projection::ProjectionError;
use casimir_core::ring::Rat;
use nalgebra::DMatrix;
use num_complex::Complex64 as C;
use std::f64::consts::PI;

fn euler() -> GammaMode {
    GammaMode::Euler(QuadratureSpec::default())
}

#[test]
fn gamma_one_is_gamma() {
    for s in [0.5, 1.0, 2.5, 7.0] {
        let g = gamma_m(1, s, &GammaMode::Product).unwrap();
        let want = statrs::function::gamma::gamma(s);
        assert!((g - want).abs() <= 1e-10 * want, "{s}");
    }
    assert!(matches!(gamma_m(1, 0.0, &GammaMode::Product), Err(ProjectionError::GammaPole(_))));
}

#[test]
fn gamma_two_closed_form_and_euler() {
    let exact = gamma_m_exact(2, &Rat::new(5, 2)).unwrap();
    assert_eq!(exact.coeff, Rat::new(3, 4));
    assert_eq!(exact.half_pi_power, 2);
    for s in [2.5, 3.0, 4.0] {
        let p = gamma_m(2, s, &GammaMode::Product).unwrap();
        let e = gamma_m(2, s, &euler()).unwrap();
        assert!(((p - e) / p).abs() < 1e-6, "s = {s}: product {p}, euler {e}");
    }
    assert!((gamma_m(2, 2.5, &GammaMode::Product).unwrap() - 0.75 * PI).abs() < 1e-12);
    assert!(matches!(gamma_m(2, 0.5, &euler()), Err(ProjectionError::EulerDomain { .. })));
}

/// The Jacobian of the Cholesky chart, checked on an integrand that is not
/// already absorbed into the weight.
#[test]
fn cone_integral_of_a_polynomial() {
    // ∫_Y tr(y) e^{−tr y} det(y)^{s−3/2} dy = 2 s Γ_2(s)
    let s = 3.0;
    let r = cone_integral(&DMatrix::identity(2, 2), s - 1.5, |y| C::new(y.trace(), 0.0), &QuadratureSpec::default()).unwrap();
    let want = 2.0 * s * gamma_m(2, s, &GammaMode::Product).unwrap();
    assert!((r.value.re - want).abs() < 1e-8 * want, "{} vs {want}", r.value.re);
}

#[test]
fn round_trip_holomorphic() {
    let spec = QuadratureSpec::default();
    for tau in [HalfIntegralMatrix::identity(2), HalfIntegralMatrix::from_rows(&[vec![1.0, 0.5], vec![0.5, 1.0]]).unwrap()] {
        let d = FourierDatum::holomorphic(tau, C::new(1.0, 0.0));
        let r = sturm_coefficient(2, 4, &d, &spec).unwrap();
        assert!((r.a - C::new(1.0, 0.0)).norm() < 1e-6, "{:?}", r.a);
    }
    let zero = FourierDatum::holomorphic(HalfIntegralMatrix::scalar(1), C::new(0.0, 0.0));
    assert!(sturm_coefficient(1, 12, &zero, &spec).unwrap().a.norm() < 1e-12);
}

#[test]
fn round_trip_discriminant() {
    let coeffs = delta_coefficients(5);
    assert_eq!(coeffs, vec![1, -24, 252, -1472, 4830]);
    let spec = QuadratureSpec::with_tol(1e-9);
    for n in [1i64, 2] {
        let d = FourierDatum::function(HalfIntegralMatrix::scalar(n), move |y| delta_fourier_profile(n, y[(0, 0)], 48));
        let r = sturm_coefficient(1, 12, &d, &spec).unwrap();
        let want = coeffs[(n - 1) as usize] as f64;
        assert!((r.a.re - want).abs() < 1e-6 * want.abs() && r.a.im.abs() < 1e-6, "tau {n}: {:?}", r.a);
    }
}

#[test]
fn sturm_preconditions() {
    let spec = QuadratureSpec::default();
    let d = FourierDatum::holomorphic(HalfIntegralMatrix::identity(2), C::new(1.0, 0.0));
    assert!(matches!(sturm_coefficient(2, 2, &d, &spec), Err(ProjectionError::Weight { .. })));
    let bad = FourierDatum::holomorphic(HalfIntegralMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap(), C::new(1.0, 0.0));
    assert!(matches!(sturm_coefficient(2, 4, &bad, &spec), Err(ProjectionError::NotPositive)));
    assert!(HalfIntegralMatrix::from_rows(&[vec![0.5]]).is_err());
    assert!(HalfIntegralMatrix::from_rows(&[vec![1.0, 0.25], vec![0.25, 1.0]]).is_err());
}

#[test]
fn linearity_scaling_and_domain() {
    let spec = QuadratureSpec::with_tol(1e-9);
    let tau = HalfIntegralMatrix::scalar(1);
    let f = |y: f64| C::new((-2.0 * PI * y).exp() * (1.0 + y), 0.0);
    let g = |y: f64| C::new(0.0, (-2.0 * PI * y).exp() * y * y);
    let proj = |h: std::sync::Arc<dyn Fn(f64) -> C + Send + Sync>, spec: &QuadratureSpec| {
        let d = FourierDatum::function(tau.clone(), move |y| h(y[(0, 0)]));
        sturm_coefficient(1, 12, &d, spec).unwrap()
    };
    let (a, b) = (C::new(2.0, 0.5), C::new(-1.0, 3.0));
    let pf = proj(std::sync::Arc::new(f), &spec);
    let pg = proj(std::sync::Arc::new(g), &spec);
    let both = proj(std::sync::Arc::new(move |y| a * f(y) + b * g(y)), &spec);
    let comb = a * pf.a + b * pg.a;
    assert!((both.a - comb).norm() <= 2.0 * (1e-9 * comb.norm()).max(pf.error + pg.error + both.error));
    // det(y)^ε → 1
    let base = pf.a;
    let mut last = f64::INFINITY;
    for eps in [0.1, 0.01] {
        let p = proj(std::sync::Arc::new(move |y| f(y) * y.powf(eps)), &spec);
        let d = (p.a - base).norm();
        assert!(d < last);
        last = d;
    }
    assert!(last < 0.05 * base.norm());
    // doubling the truncation radius
    let r1 = proj(std::sync::Arc::new(f), &QuadratureSpec { radius: 60.0, ..spec.clone() });
    let r2 = proj(std::sync::Arc::new(f), &QuadratureSpec { radius: 120.0, ..spec.clone() });
    assert!((r1.a - r2.a).norm() <= r1.error.max(r2.error).max(1e-12));
}

#[test]
fn sampled_datum_from_json() {
    let mut pts = Vec::new();
    for k in 0..=400 {
        let y = 0.005 + k as f64 * 0.01;
        let v = 3.0 * (-2.0 * PI * y).exp();
        pts.push(format!("{{\"y\": [[{y}]], \"value\": [{v}, 0.0]}}"));
    }
    let text = format!(
        "{{\"genus\": 1, \"kappa\": 12, \"data\": [{{\"tau\": [[1]], \"form\": \"holomorphic\", \"a\": 2.5}}, {{\"tau\": [[1]], \"form\": \"samples\", \"points\": [{}]}}]}}",
        pts.join(",")
    );
    let set = parse_datum_file(&text).unwrap();
    assert_eq!((set.genus, set.kappa, set.data.len()), (1, 12, 2));
    let spec = QuadratureSpec::with_tol(1e-8);
    let r0 = sturm_coefficient(1, 12, &set.data[0], &spec).unwrap();
    assert!((r0.a.re - 2.5).abs() < 1e-9);
    assert!(matches!(set.data[1].data, FourierData::Samples(_)));
    let r1 = sturm_coefficient(1, 12, &set.data[1], &spec).unwrap();
    assert!((r1.a.re - 3.0).abs() < 1e-6, "{:?}", r1.a);
    let short = r#"{"genus": 1, "kappa": 12, "data": [{"tau": [[1]], "form": "samples", "points": [{"y": [[1.0]], "value": [1, 0]}, {"y": [[1.1]], "value": [1, 0]}]}]}"#;
    let s = parse_datum_file(short).unwrap();
    assert!(matches!(sturm_coefficient(1, 12, &s.data[0], &spec), Err(ProjectionError::Samples(_))));
}

fn args(z: C, n: usize) -> PoincareArgs {
    PoincareArgs { z, s: C::new(0.0, 0.0), kappa: 4, tau: 1, n }
}

#[test]
fn poincare_self_consistency_and_modularity() {
    let i = C::new(0.0, 1.0);
    let v20 = genus1_poincare(&args(i, 20), None).unwrap();
    let v40 = genus1_poincare(&args(i, 40), None).unwrap();
    assert!((v40.value - v20.value).norm() <= v20.tail);
    let (res, bound) = modularity_residual([[0, -1], [1, 0]], &args(C::new(0.3, 1.0), 50)).unwrap();
    assert!(res <= bound, "{res} > {bound}");
    let (res, bound) = modularity_residual([[1, 1], [0, 1]], &args(C::new(0.3, 1.0), 50)).unwrap();
    assert!(res <= bound, "{res} > {bound}");
    let outside = PoincareArgs { kappa: 2, ..args(i, 20) };
    assert!(matches!(genus1_poincare(&outside, None), Err(ProjectionError::OutsideConvergence(_))));
    assert!(matches!(genus1_poincare(&args(i, 5), Some(1e-6)), Err(ProjectionError::TruncationTooSmall { .. })));
}

#[test]
fn inequality_examples() {
    let r = matrix_inequalities(&DMatrix::identity(2, 2), &DMatrix::identity(2, 2)).unwrap();
    assert_eq!((r.trace_power, r.factorial_det), (4.0, 2.0));
    assert!(r.all_hold());
    // eigenvalues 1 and 3
    let s = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
    let r = matrix_inequalities(&s, &DMatrix::identity(2, 2)).unwrap();
    assert!((r.m1 - 1.0).abs() < 1e-12 && r.m2 == 4.0);
    assert_eq!((r.m1 * r.tr_y).round(), 2.0);
    assert_eq!(r.tr_sy, 4.0);
    assert!(r.all_hold());
    let bad = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
    assert!(matrix_inequalities(&bad, &DMatrix::identity(2, 2)).is_err());
}
