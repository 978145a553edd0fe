use super::rational::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn real(re: Rat) -> Self {
        Gauss { re, im: Rat::zero() }
    }

    pub fn int(n: i64) -> Self {
        Gauss::real(Rat::from_int(n))
    }

    pub fn zero() -> Self {
        Gauss::default()
    }

    pub fn one() -> Self {
        Gauss::int(1)
    }

    pub fn i() -> Self {
        Gauss { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Gauss {
        Gauss { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, r: &Rat) -> Gauss {
        Gauss { re: &self.re * r, im: &self.im * r }
    }

    pub fn norm_sqr(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Gauss {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero");
        let c = self.conj();
        Gauss { re: &c.re / &n, im: &c.im / &n }
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl<'a> Add<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn add(self, o: &'a Gauss) -> Gauss {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn sub(self, o: &'a Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn mul(self, o: &'a Gauss) -> Gauss {
        if self.im.is_zero() {
            if o.im.is_zero() {
                return Gauss::real(&self.re * &o.re);
            }
            return Gauss { re: &self.re * &o.re, im: &self.re * &o.im };
        }
        if o.im.is_zero() {
            return Gauss { re: &self.re * &o.re, im: &self.im * &o.re };
        }
        if self.re.is_zero() && o.re.is_zero() {
            return Gauss::real(-(&self.im * &o.im));
        }
        Gauss {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        &self + &o
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        &self - &o
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        &self * &o
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }
}

impl From<Rat> for Gauss {
    fn from(r: Rat) -> Self {
        Gauss::real(r)
    }
}

impl From<i64> for Gauss {
    fn from(n: i64) -> Self {
        Gauss::int(n)
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            }
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({}-{}i)", self.re, (-&self.im))
                } else {
                    write!(f, "({}+{}i)", self.re, self.im)
                }
            }
        }
    }
}
