use super::gauss::Gauss;
use super::rational::Rat;
use smallvec::SmallVec;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of `Q(i)[π]`: a polynomial in the transcendental π with
/// Gaussian-rational coefficients. Terms are sorted by π-degree and
/// never carry a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    terms: SmallVec<[(u32, Gauss); 1]>,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem::default()
    }

    pub fn one() -> Self {
        RingElem::from_gauss(Gauss::one())
    }

    pub fn i() -> Self {
        RingElem::from_gauss(Gauss::i())
    }

    pub fn pi() -> Self {
        RingElem::monomial(1, Gauss::one())
    }

    pub fn int(n: i64) -> Self {
        RingElem::from_gauss(Gauss::int(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        RingElem::from_gauss(Gauss::real(Rat::new(n, d)))
    }

    pub fn from_rat(r: Rat) -> Self {
        RingElem::from_gauss(Gauss::real(r))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        RingElem::monomial(0, g)
    }

    /// `g·π^deg`.
    pub fn monomial(deg: u32, g: Gauss) -> Self {
        let mut terms = SmallVec::new();
        if !g.is_zero() {
            terms.push((deg, g));
        }
        RingElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Gauss)> {
        self.terms.iter().map(|(d, g)| (*d, g))
    }

    pub fn pi_degree(&self) -> Option<u32> {
        self.terms.last().map(|(d, _)| *d)
    }

    /// The constant (π-free) Gaussian rational if this element has no π terms.
    pub fn as_gauss(&self) -> Option<Gauss> {
        match self.terms.len() {
            0 => Some(Gauss::zero()),
            1 if self.terms[0].0 == 0 => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| g.re)
    }

    pub fn scale_gauss(&self, g: &Gauss) -> RingElem {
        if g.is_zero() {
            return RingElem::zero();
        }
        RingElem { terms: self.terms.iter().map(|(d, c)| (*d, c * g)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> RingElem {
        self.scale_gauss(&Gauss::real(r.clone()))
    }

    pub fn conj(&self) -> RingElem {
        RingElem { terms: self.terms.iter().map(|(d, c)| (*d, c.conj())).collect() }
    }

    pub fn pow(&self, e: u32) -> RingElem {
        let mut acc = RingElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value with π replaced by its floating value.
    pub fn to_c64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (d, g) in &self.terms {
            let p = std::f64::consts::PI.powi(*d as i32);
            let (a, b) = g.to_c64();
            re += a * p;
            im += b * p;
        }
        (re, im)
    }

    pub fn add_assign_ref(&mut self, o: &RingElem) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        *self = &*self + o;
    }

    /// Trivially canonical check: sorted, distinct degrees, no zeros.
    pub fn is_canonical(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0 < w[1].0) && self.terms.iter().all(|(_, g)| !g.is_zero())
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, o: &'a RingElem) -> RingElem {
        let mut terms: SmallVec<[(u32, Gauss); 1]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                terms.push(a[i].clone());
                i += 1;
            } else if a[i].0 > b[j].0 {
                terms.push(b[j].clone());
                j += 1;
            } else {
                let s = &a[i].1 + &b[j].1;
                if !s.is_zero() {
                    terms.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().cloned());
        RingElem { terms }
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, o: &'a RingElem) -> RingElem {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, o: &'a RingElem) -> RingElem {
        if self.is_zero() || o.is_zero() {
            return RingElem::zero();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 {
            let (d1, g1) = &self.terms[0];
            let (d2, g2) = &o.terms[0];
            return RingElem::monomial(d1 + d2, g1 * g2);
        }
        let mut out = RingElem::zero();
        for (d1, g1) in &self.terms {
            for (d2, g2) in &o.terms {
                out = &out + &RingElem::monomial(d1 + d2, g1 * g2);
            }
        }
        out
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { terms: self.terms.iter().map(|(d, g)| (*d, -g)).collect() }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, o: RingElem) -> RingElem {
        &self + &o
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, o: RingElem) -> RingElem {
        &self - &o
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, o: RingElem) -> RingElem {
        &self * &o
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::int(n)
    }
}

impl From<Rat> for RingElem {
    fn from(r: Rat) -> Self {
        RingElem::from_rat(r)
    }
}

impl From<Gauss> for RingElem {
    fn from(g: Gauss) -> Self {
        RingElem::from_gauss(g)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest π-degree first
        for (k, (d, g)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{g}")?,
                1 if g.is_one() => write!(f, "pi")?,
                1 => write!(f, "{g}*pi")?,
                _ if g.is_one() => write!(f, "pi^{d}")?,
                _ => write!(f, "{g}*pi^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_plus_i_times_pi_minus_i() {
        let a = &RingElem::pi() + &RingElem::i();
        let b = &RingElem::pi() - &RingElem::i();
        let p = &a * &b;
        assert_eq!(p, &RingElem::pi().pow(2) + &RingElem::one());
    }

    #[test]
    fn i_squared() {
        assert_eq!(&RingElem::i() * &RingElem::i(), RingElem::int(-1));
    }
}
