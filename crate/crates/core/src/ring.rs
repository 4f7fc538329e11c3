//! Exact scalars: arbitrary-precision rationals and polynomials in the
//! formal deformation parameter `h`.
//!
//! `h` is treated as an indeterminate. Every finite-dimensional object built
//! by this crate has entries in `Q[h]`; numeric values of `h` only enter
//! through [`HPoly::eval`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_LIMIT: usize = 4096;

static DEGREE_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_LIMIT);

/// Current process-wide cap on polynomial degree.
pub fn degree_limit() -> usize {
    DEGREE_LIMIT.load(Ordering::Relaxed)
}

pub fn set_degree_limit(limit: usize) {
    DEGREE_LIMIT.store(limit, Ordering::Relaxed);
}

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(numer, denom)))
        }
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64`, if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Re-reduces the fraction. Values are always kept reduced, so this is
    /// the identity; it exists to make that property testable.
    pub fn normalized(&self) -> Self {
        Rational(BigRational::new(self.numer().clone(), self.denom().clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::from_bigints(n, d).ok_or_else(bad)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// Polynomial in `h` with rational coefficients. `coeffs[k]` multiplies
/// `h^k`; trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        HPoly::constant(Rational::one())
    }

    /// The indeterminate `h` itself.
    pub fn h() -> Self {
        HPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        HPoly::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        HPoly::constant(Rational::from_integer(n))
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        HPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        if c.is_zero() {
            return HPoly::zero();
        }
        HPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `h^k`.
    pub fn shift(&self, k: usize) -> HPoly {
        if self.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }

    pub fn checked_mul(&self, other: &HPoly) -> Result<HPoly> {
        let mut out = HPoly::zero();
        out.add_product(self, other)?;
        Ok(out)
    }

    /// `self += a * b`, in place.
    pub fn add_product(&mut self, a: &HPoly, b: &HPoly) -> Result<()> {
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        let degree = a.coeffs.len() + b.coeffs.len() - 2;
        let limit = degree_limit();
        if degree > limit {
            return Err(Error::DegreeLimit { degree, limit });
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, Rational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    self.coeffs[i + j] += &(x * y);
                }
            }
        }
        self.trim();
        Ok(())
    }

    /// Exact division by `c * h^k`; fails if any coefficient below `h^k`
    /// is nonzero.
    pub fn div_monomial(&self, c: &Rational, k: usize) -> Result<HPoly> {
        let inv = c
            .recip()
            .ok_or_else(|| Error::NotDivisible(self.to_string(), "0".into()))?;
        if self.coeffs.iter().take(k).any(|a| !a.is_zero()) {
            return Err(Error::NotDivisible(
                self.to_string(),
                HPoly::monomial(c.clone(), k).to_string(),
            ));
        }
        Ok(HPoly::from_coeffs(
            self.coeffs.iter().skip(k).map(|a| a * &inv).collect(),
        ))
    }

    /// Exact division by `h`.
    pub fn div_h(&self) -> Result<HPoly> {
        self.div_monomial(&Rational::one(), 1)
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, h0: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * h0 + c.to_f64())
    }

    pub fn eval_f64(&self, h0: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * h0 + c.to_f64())
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, h0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * h0) + c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<Rational> for HPoly {
    fn from(c: Rational) -> Self {
        HPoly::constant(c)
    }
}

impl From<i64> for HPoly {
    fn from(n: i64) -> Self {
        HPoly::from_int(n)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag} {var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({self})")
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(HPoly::from_coeffs(Vec::<Rational>::deserialize(d)?))
    }
}

impl<'a> Add<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn add(self, rhs: &'a HPoly) -> HPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &'a HPoly) -> HPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(mut self, rhs: HPoly) -> HPoly {
        self += &rhs;
        self
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(mut self, rhs: HPoly) -> HPoly {
        self -= &rhs;
        self
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&HPoly> for HPoly {
    fn sub_assign(&mut self, rhs: &HPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

/// Panics if the product exceeds the degree limit; use
/// [`HPoly::checked_mul`] where that must be reported instead.
impl<'a> Mul<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &'a HPoly) -> HPoly {
        self.checked_mul(rhs).expect("polynomial degree limit exceeded")
    }
}

impl Mul for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: HPoly) -> HPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> HPoly {
        HPoly::from_coeffs(cs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn zero_absorbs() {
        let q = p(&[3, 0, -2, 5]);
        assert!((&HPoly::zero() * &q).is_zero());
        assert!((&q * &HPoly::zero()).is_zero());
    }

    #[test]
    fn monomial_addition() {
        let a = HPoly::monomial(Rational::one(), 2);
        let b = HPoly::monomial(Rational::from_integer(6), 2);
        assert_eq!(&a + &b, HPoly::monomial(Rational::from_integer(7), 2));
    }

    #[test]
    fn cancellation_trims() {
        let a = p(&[1, 2, 3]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 2]).eval(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
        assert_eq!(p(&[0, 0, 1]).eval_f64(2.0), 4.0);
        let q = HPoly::from_coeffs(vec![Rational::one(), Rational::zero(), Rational::new(-1, 4)]);
        assert!((q.eval_f64(1.0) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(Rational::from_integer(3).to_string(), "3");
        assert_eq!(Rational::new(1, -2).to_string(), "-1/2");
        assert_eq!("6/4".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn hpoly_json_form() {
        let q = HPoly::from_coeffs(vec![Rational::one(), Rational::zero(), Rational::from_integer(2)]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["1","0","2"]"#);
        let back: HPoly = serde_json::from_str(r#"["1","0","2","0"]"#).unwrap();
        assert_eq!(back, q);
        assert_eq!(serde_json::to_string(&HPoly::zero()).unwrap(), "[]");
    }

    #[test]
    fn display() {
        let q = HPoly::from_coeffs(vec![Rational::one(), Rational::from_integer(-1), Rational::new(-3, 2)]);
        assert_eq!(q.to_string(), "1 - h - 3/2 h^2");
        assert_eq!(HPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let q = p(&[0, 0, 6, 3]);
        assert_eq!(q.div_monomial(&Rational::from_integer(3), 2).unwrap(), p(&[2, 1]));
        assert!(p(&[1, 1]).div_h().is_err());
    }

    #[test]
    fn degree_limit_is_reported() {
        let big = HPoly::monomial(Rational::one(), DEFAULT_DEGREE_LIMIT);
        let err = big.checked_mul(&HPoly::h()).unwrap_err();
        assert!(matches!(err, Error::DegreeLimit { degree, .. } if degree == DEFAULT_DEGREE_LIMIT + 1));
    }
}
