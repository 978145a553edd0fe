//! Dense univariate polynomials over Q, enough for exact root isolation of
//! rational roots, gcds and resultants by interpolation.

use super::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients in ascending powers; trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|x| Rat::from_int(*x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        UPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rat::zero();
        UPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        UPoly::new(c)
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = d.lead();
        if r.len() < d.coeffs.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dc);
                }
            }
            q[k] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Distinct rational roots with multiplicities, ascending.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(&c.denom_big());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| c.numer_big() * (&lcm / c.denom_big())).collect();
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            roots.push((Rat::zero(), low));
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors(&a0);
        let qs = divisors(&an);
        let mut cands: Vec<Rat> = Vec::new();
        for p in &ps {
            for q in &qs {
                let r = Rat::from_big(num_rational::BigRational::new(p.clone(), q.clone()));
                if !cands.contains(&r) {
                    cands.push(r.clone());
                }
                let nr = -r;
                if !cands.contains(&nr) {
                    cands.push(nr);
                }
            }
        }
        for r in cands {
            let mut mult = 0;
            let mut p = self.clone();
            let lin = UPoly::new(vec![-r.clone(), Rat::one()]);
            loop {
                let (q, rem) = p.divrem(&lin);
                if rem.is_zero() && !p.is_zero() {
                    mult += 1;
                    p = q;
                } else {
                    break;
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Lagrange interpolation through (x_k, y_k).
    pub fn interpolate(points: &[(Rat, Rat)]) -> UPoly {
        let mut acc = UPoly::zero();
        for (k, (xk, yk)) in points.iter().enumerate() {
            let mut basis = UPoly::new(vec![Rat::one()]);
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if j != k {
                    basis = basis.mul(&UPoly::new(vec![-xj.clone(), Rat::one()]));
                    denom = &denom * &(xk - xj);
                }
            }
            let scale = yk / &denom;
            acc = acc.sub(&UPoly::new(basis.coeffs.iter().map(|c| -(c * &scale)).collect()));
        }
        acc
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let m = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(if m.is_empty() { c.to_string() } else if c.is_one() { m } else { format!("{c}*{m}") });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let limit = n.to_u64().map(|v| (v as f64).sqrt() as u64 + 1).unwrap_or(1_000_000);
    let mut d = 1u64;
    while d <= limit {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(bd.clone());
            let other = &n / &bd;
            if other != bd {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_rat(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|r| !a[*r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] = &a[r][c] - &v;
            }
        }
    }
    det
}

/// Resultant of two univariate polynomials via the Sylvester matrix.
pub fn resultant(f: &UPoly, g: &UPoly) -> Rat {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Rat::zero();
    };
    if m == 0 && n == 0 {
        return Rat::one();
    }
    let size = m + n;
    let mut rows = vec![vec![Rat::zero(); size]; size];
    for r in 0..n {
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            rows[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            rows[n + r][r + j] = c.clone();
        }
    }
    det_rat(rows)
}
