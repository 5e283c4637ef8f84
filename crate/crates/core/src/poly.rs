//! Sparse multivariate polynomials over the Gaussian integers.
//!
//! Variables are `t1 .. tN` (the plumbing parameters). Terms are kept in a
//! `BTreeMap` under graded-lex order with `t1 < t2 < ...`, so iteration in
//! reverse yields the display order and the leading term comes last.
//!
//! Text grammar (used for golden output):
//!
//! ```text
//! poly  := "0" | term (sep term)*
//! sep   := " + " | " - "            (a leading "-" of a term moves into sep)
//! term  := gauss | [coeff "*"] mono
//! coeff := int | imag | "(" int ("+"|"-") [nat] "i" ")"
//! gauss := int | imag | int ("+"|"-") [nat] "i"
//! imag  := ["-"] [nat] "i"
//! mono  := var ("*" var)*
//! var   := "t" index ["^" exponent]
//! ```
//!
//! Unit coefficients are omitted in front of a monomial (`t1`, `-t1`, `i*t1`, `-i*t1`).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The variable t_{i+1} (zero-based index).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussPoly {
    arity: usize,
    terms: BTreeMap<Monomial, GaussInt>,
}

impl GaussPoly {
    pub fn zero(arity: usize) -> Self {
        GaussPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: impl Into<GaussInt>) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::one(arity), c.into());
        p
    }

    /// t_{i+1}.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::var(arity, i), GaussInt::one());
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, GaussInt)>) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch(arity, m.arity()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: GaussInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussInt {
        self.terms.get(m).cloned().unwrap_or_else(GaussInt::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn is_constant(&self, c: &GaussInt) -> bool {
        *self == GaussPoly::constant(self.arity, c.clone())
    }

    fn check(&self, o: &GaussPoly) -> Result<()> {
        if self.arity != o.arity {
            return Err(Error::ArityMismatch(self.arity, o.arity));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &GaussPoly) -> Result<GaussPoly> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &GaussPoly) -> Result<GaussPoly> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &GaussPoly) -> Result<GaussPoly> {
        self.check(o)?;
        let mut acc: BTreeMap<Monomial, GaussInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(GaussInt::zero) += &(c1 * c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GaussPoly { arity: self.arity, terms: acc })
    }

    pub fn scale(&self, c: &GaussInt) -> GaussPoly {
        if c.is_zero() {
            return GaussPoly::zero(self.arity);
        }
        GaussPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// p or -p, whichever has a canonically positive leading coefficient.
    pub fn canonical_sign(&self) -> Result<GaussPoly> {
        let (_, c) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        if c.is_canonical_positive() {
            Ok(self.clone())
        } else {
            Ok(-self)
        }
    }

    /// Substitutes t_{i+1} -> t_{i+1} + s.
    pub fn shift_variable(&self, i: usize, s: i64) -> GaussPoly {
        let s = BigInt::from(s);
        let mut out = GaussPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.0[i];
            // sum_k C(e,k) s^(e-k) t^k
            let mut binom = BigInt::one();
            for k in 0..=e {
                let pow = num_traits::pow(s.clone(), (e - k) as usize);
                let coeff = c * &GaussInt::new(&binom * pow, 0);
                let mut mm = m.clone();
                mm.0[i] = k;
                out.add_term(mm, coeff);
                binom = binom * BigInt::from(e - k) / BigInt::from(k + 1);
            }
        }
        out
    }

    /// The terms of one total degree.
    pub fn homogeneous_part(&self, degree: u32) -> GaussPoly {
        GaussPoly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }
}

impl Add for &GaussPoly {
    type Output = GaussPoly;
    fn add(self, o: &GaussPoly) -> GaussPoly {
        self.checked_add(o).expect("polynomial arity mismatch")
    }
}

impl Sub for &GaussPoly {
    type Output = GaussPoly;
    fn sub(self, o: &GaussPoly) -> GaussPoly {
        self.checked_sub(o).expect("polynomial arity mismatch")
    }
}

impl Mul for &GaussPoly {
    type Output = GaussPoly;
    fn mul(self, o: &GaussPoly) -> GaussPoly {
        self.checked_mul(o).expect("polynomial arity mismatch")
    }
}

impl Neg for &GaussPoly {
    type Output = GaussPoly;
    fn neg(self) -> GaussPoly {
        GaussPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for GaussPoly {
    type Output = GaussPoly;
    fn neg(self) -> GaussPoly {
        -&self
    }
}

fn render_term(m: &Monomial, c: &GaussInt) -> String {
    if m.degree() == 0 {
        return c.to_string();
    }
    let one = BigInt::one();
    let prefix = if c.im.is_zero() {
        if c.re == one {
            String::new()
        } else if c.re == -one {
            "-".to_string()
        } else {
            format!("{}*", c.re)
        }
    } else if c.re.is_zero() {
        format!("{c}*")
    } else {
        format!("({c})*")
    };
    format!("{prefix}{m}")
}

impl fmt::Display for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let t = render_term(m, c);
            if k == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: usize, i: usize) -> GaussPoly {
        GaussPoly::var(a, i)
    }
    fn c(a: usize, re: i64, im: i64) -> GaussPoly {
        GaussPoly::constant(a, GaussInt::new(re, im))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 1]);
        let c2 = Monomial::new(vec![2, 0]);
        assert!(a < b);
        assert!(b < c2);
        assert!(Monomial::new(vec![1, 1]) < Monomial::new(vec![0, 2]));
    }

    #[test]
    fn add_examples() {
        assert!((&t(1, 0) + &-t(1, 0)).is_zero());
        let x = &(&c(1, 0, 1) * &t(1, 0)) + &c(1, 1, 0);
        let y = &t(1, 0) - &c(1, 1, 0);
        assert_eq!((&x + &y).to_string(), "(1+i)*t1");
        let tt = &t(2, 0) * &t(2, 1);
        assert_eq!((&tt.scale(&GaussInt::from(2)) + &tt.scale(&GaussInt::from(3))).to_string(), "5*t1*t2");
    }

    #[test]
    fn mul_examples() {
        let p = &(&t(1, 0) + &c(1, 1, 0)) * &(&t(1, 0) - &c(1, 1, 0));
        assert_eq!(p.to_string(), "t1^2 - 1");
        assert_eq!(&c(1, 0, 1) * &c(1, 0, 1), c(1, -1, 0));
        let d = &t(1, 0) - &c(1, 1, 0);
        let sq = &c(1, 4, 0) * &(&d * &d);
        assert_eq!(sq.to_string(), "4*t1^2 - 8*t1 + 4");
    }

    #[test]
    fn arity_mismatch_is_error() {
        assert_eq!(t(1, 0).checked_add(&t(2, 0)), Err(Error::ArityMismatch(1, 2)));
        assert!(t(1, 0).checked_mul(&t(2, 1)).is_err());
    }

    #[test]
    fn coefficients_and_sign() {
        let tt = t(1, 0);
        let p = &(&c(1, -4, 0) * &(&tt * &tt)) + &(&(&c(1, 8, 0) * &tt) - &c(1, 6, 0));
        assert_eq!(p.to_string(), "-4*t1^2 + 8*t1 - 6");
        assert_eq!(p.coefficient(&Monomial::new(vec![2])), GaussInt::from(-4));
        assert_eq!(p.coefficient(&Monomial::new(vec![3])), GaussInt::zero());
        assert_eq!(p.canonical_sign().unwrap().to_string(), "4*t1^2 - 8*t1 + 6");
        assert_eq!(c(1, 2, 0).canonical_sign().unwrap(), c(1, 2, 0));
        let mi = &c(1, 0, -1) * &tt;
        assert_eq!(mi.canonical_sign().unwrap().to_string(), "i*t1");
        assert_eq!(GaussPoly::zero(1).canonical_sign(), Err(Error::ZeroPolynomial));
        let x = &(&c(2, 1, 1) * &t(2, 0)) * &t(2, 1);
        assert_eq!(x.coefficient(&Monomial::new(vec![1, 1])), GaussInt::new(1, 1));
    }

    #[test]
    fn rendering() {
        let p = &(&c(2, 0, -1) * &t(2, 0)) + &(&c(2, 2, -3) * &(&t(2, 1) * &t(2, 1)));
        assert_eq!(p.to_string(), "(2-3i)*t2^2 - i*t1");
        assert_eq!(GaussPoly::zero(3).to_string(), "0");
        assert_eq!(c(1, 0, -1).to_string(), "-i");
    }

    #[test]
    fn shift() {
        let tt = t(1, 0);
        let p = &tt * &tt;
        assert_eq!(p.shift_variable(0, 2).to_string(), "t1^2 + 4*t1 + 4");
        let q = &(&t(2, 0) * &t(2, 1)) * &t(2, 1);
        assert_eq!(q.shift_variable(1, -1).to_string(), "t1*t2^2 - 2*t1*t2 + t1");
    }
}
