//! 2x2 matrices over [`GaussPoly`].

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::poly::GaussPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: GaussPoly,
    pub b: GaussPoly,
    pub c: GaussPoly,
    pub d: GaussPoly,
}

impl Mat2 {
    pub fn new(a: GaussPoly, b: GaussPoly, c: GaussPoly, d: GaussPoly) -> Result<Self> {
        let n = a.arity();
        for e in [&b, &c, &d] {
            if e.arity() != n {
                return Err(Error::ArityMismatch(n, e.arity()));
            }
        }
        Ok(Mat2 { a, b, c, d })
    }

    /// Constant matrix with Gaussian-integer entries.
    pub fn constant(arity: usize, e: [GaussInt; 4]) -> Self {
        let [a, b, c, d] = e.map(|v| GaussPoly::constant(arity, v));
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(arity: usize, e: [i64; 4]) -> Self {
        Self::constant(arity, e.map(GaussInt::from))
    }

    pub fn identity(arity: usize) -> Self {
        Self::from_ints(arity, [1, 0, 0, 1])
    }

    pub fn arity(&self) -> usize {
        self.a.arity()
    }

    pub fn checked_mul(&self, o: &Mat2) -> Result<Mat2> {
        if self.arity() != o.arity() {
            return Err(Error::ArityMismatch(self.arity(), o.arity()));
        }
        Ok(Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        })
    }

    pub fn trace(&self) -> GaussPoly {
        &self.a + &self.d
    }

    pub fn det(&self) -> GaussPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// [[d,-b],[-c,a]]; the inverse when det = 1.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn scale(&self, k: &GaussInt) -> Mat2 {
        Mat2 { a: self.a.scale(k), b: self.b.scale(k), c: self.c.scale(k), d: self.d.scale(k) }
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(&GaussInt::from(-1))
    }

    pub fn pow(&self, n: u32) -> Mat2 {
        let mut r = Mat2::identity(self.arity());
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    pub fn entries(&self) -> [&GaussPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        self.checked_mul(o).expect("matrix arity mismatch")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
