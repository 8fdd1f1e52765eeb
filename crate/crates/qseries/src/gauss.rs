//! Gaussian integers with arbitrary-precision components.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// a + b·i with big-integer a, b.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt { re: BigInt::from(re), im: BigInt::from(im) }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// i^k.
    pub fn i_power(k: u64) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    /// (−i)^k.
    pub fn neg_i_power(k: u64) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => -Self::i(),
            2 => -Self::one(),
            _ => Self::i(),
        }
    }

    /// Inverse when self is one of the four units ±1, ±i.
    pub fn unit_inverse(&self) -> Option<Self> {
        let one = BigInt::one();
        if self.im.is_zero() && (self.re == one || self.re == -&one) {
            Some(self.clone())
        } else if self.re.is_zero() && (self.im == one || self.im == -&one) {
            Some(GaussInt { re: BigInt::ZERO, im: -self.im.clone() })
        } else {
            None
        }
    }
}

impl From<BigInt> for GaussInt {
    fn from(re: BigInt) -> Self {
        GaussInt { re, im: BigInt::ZERO }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt { re: BigInt::ZERO, im: BigInt::ZERO }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::ZERO }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigInt, leading: bool| {
            let one = BigInt::one();
            if *im == one {
                write!(f, "{}i", if leading { "" } else { "+" })
            } else if *im == -&one {
                write!(f, "-i")
            } else if im.is_zero() || leading || im < &BigInt::ZERO {
                write!(f, "{im}i")
            } else {
                write!(f, "+{im}i")
            }
        };
        if self.re.is_zero() {
            imag(f, &self.im, true)
        } else {
            write!(f, "{}", self.re)?;
            imag(f, &self.im, false)
        }
    }
}
