//! Arbitrary-precision rationals with an `i64` fast path.
//!
//! Values stay in `Small` while numerator and denominator fit in `i64`;
//! any overflowing operation is redone in `BigRational`.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rat {
    pub fn zero() -> Self {
        Rat::Small(Ratio::zero())
    }

    pub fn one() -> Self {
        Rat::Small(Ratio::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat::Small(Ratio::from_integer(n))
    }

    /// `n/d`; panics on `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat::Small(Ratio::new(n, d))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat::Big(r).normalized()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_one(),
            Rat::Big(r) => r.is_one(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_integer(),
            Rat::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_negative(),
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Rat::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn numer_big(&self) -> BigInt {
        match self {
            Rat::Small(r) => BigInt::from(*r.numer()),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom_big(&self) -> BigInt {
        match self {
            Rat::Small(r) => BigInt::from(*r.denom()),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        match self {
            Rat::Small(r) => {
                if *r.numer() == i64::MIN {
                    Rat::from_big(self.to_big().recip())
                } else {
                    Rat::Small(r.recip())
                }
            }
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn normalized(self) -> Self {
        match self {
            Rat::Big(r) => match (r.numer().to_i64(), r.denom().to_i64()) {
                (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rat::Small(Ratio::new_raw(n, d)),
                _ => Rat::Big(r),
            },
            s => s,
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(a), Rat::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Small and Big never both hold the same value after normalization.
        match self {
            Rat::Small(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Rat::Big(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small(a), Rat::Small(b)) => {
                // cross-multiply in i128 to avoid overflow
                let l = *a.numer() as i128 * *b.denom() as i128;
                let r = *b.numer() as i128 * *a.denom() as i128;
                l.cmp(&r)
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                if let (Rat::Small(a), Rat::Small(b)) = (self, rhs) {
                    if let Some(r) = a.$checked(b) {
                        return Rat::Small(r);
                    }
                }
                Rat::from_big(self.to_big().$m(rhs.to_big()))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        self * &rhs.recip()
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-r),
            other => Rat::from_big(-other.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -(self.clone())
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Rat::Big(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_to_big() {
        let a = Rat::from_int(i64::MAX);
        let b = &a * &a;
        assert!(matches!(b, Rat::Big(_)));
        let c = &b / &a;
        assert_eq!(c, a);
        assert!(matches!(c, Rat::Small(_)));
    }

    #[test]
    fn ordering_matches_values() {
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-7, 2) < Rat::from_int(-3));
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Rat::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rat::from_int(5).to_string(), "5");
    }
}
