//! Gaussian integers with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// The k with self = i^k, if self is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        let one = BigInt::one();
        if self.im.is_zero() && self.re == one {
            Some(0)
        } else if self.re.is_zero() && self.im == one {
            Some(1)
        } else if self.im.is_zero() && self.re == -&one {
            Some(2)
        } else if self.re.is_zero() && self.im == -one {
            Some(3)
        } else {
            None
        }
    }

    /// Positive when re > 0, or re = 0 and im > 0.
    pub fn is_canonical_positive(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && self.im.is_positive())
    }

    /// Splits self as u * m with u a unit and m a positive integer, if possible.
    pub fn as_unit_times_natural(&self) -> Option<(u8, BigInt)> {
        match (self.re.is_zero(), self.im.is_zero()) {
            (false, true) if self.re.is_positive() => Some((0, self.re.clone())),
            (false, true) => Some((2, -&self.re)),
            (true, false) if self.im.is_positive() => Some((1, self.im.clone())),
            (true, false) => Some((3, -&self.im)),
            _ => None,
        }
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

impl Add for &GaussInt {
    type Output = GaussInt;
    fn add(self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        &self + &o
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, o: &GaussInt) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        &self - &o
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        &self * &o
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

/// Renders `3`, `-2i`, `i`, `-i`, `1+2i`, `-3-i`.
impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &BigInt| -> String {
            if im.is_one() {
                "i".to_string()
            } else if *im == -BigInt::one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", im_part(&self.im))
        } else {
            let im = im_part(&self.im);
            if im.starts_with('-') {
                write!(f, "{}{}", self.re, im)
            } else {
                write!(f, "{}+{}", self.re, im)
            }
        }
    }
}
