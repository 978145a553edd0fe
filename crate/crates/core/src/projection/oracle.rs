//! An independent source of holomorphic Fourier data: the discriminant
//! `Δ = q ∏ (1 − qⁿ)^24`, both as an exact `q`-expansion and numerically
//! on the upper half-plane.

use num_complex::Complex64 as C;
use std::f64::consts::PI;

/// The first `n` coefficients of `Δ` (index 0 is the coefficient of `q`).
pub fn delta_coefficients(n: usize) -> Vec<i64> {
    // ∏_{k ≤ n} (1 − q^k)^24 truncated below degree n
    let mut p = vec![0i64; n];
    p[0] = 1;
    for k in 1..n {
        for _ in 0..24 {
            for i in (k..n).rev() {
                p[i] -= p[i - k];
            }
        }
    }
    p
}

/// `Δ(z)` by the product, stopping once factors are within rounding of one.
pub fn delta(z: C) -> C {
    let q = (C::new(0.0, 2.0 * PI) * z).exp();
    let mut prod = C::new(1.0, 0.0);
    let mut qn = q;
    for _ in 0..10_000 {
        prod *= (C::new(1.0, 0.0) - qn).powi(24);
        if qn.norm() < 1e-18 {
            break;
        }
        qn *= q;
    }
    q * prod
}

/// `A_n(y) = ∫_0^1 Δ(x + iy) e^{−2πinx} dx` by the trapezoidal rule in `x`,
/// exact up to aliasing of the coefficients `n ± k·points`.
pub fn delta_fourier_profile(n: i64, y: f64, points: usize) -> C {
    let mut acc = C::new(0.0, 0.0);
    for k in 0..points {
        let x = k as f64 / points as f64;
        acc += delta(C::new(x, y)) * (C::new(0.0, -2.0 * PI * n as f64 * x)).exp();
    }
    acc / points as f64
}
