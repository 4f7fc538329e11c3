//! Truncated formal power series with rational coefficients.
//!
//! Supplies Taylor coefficients for the matrix functions in
//! [`crate::matrix::analytic`] and the series manipulations behind the
//! `f_k` generating-function checks.

use crate::ring::Rational;

/// `coeffs[k]` is the coefficient of `x^k`; all terms of order
/// `>= coeffs.len()` are discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::new(vec![Rational::one()], order)
    }

    /// Number of retained coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Option<Series> {
        let n = self.order();
        let c0 = self.coeffs.first()?.recip()?;
        let mut out = vec![Rational::zero(); n];
        if n == 0 {
            return Some(Series { coeffs: out });
        }
        out[0] = c0.clone();
        for k in 1..n {
            let mut s = Rational::zero();
            for i in 1..=k {
                s += &(&self.coeffs[i] * &out[k - i]);
            }
            out[k] = -(&s * &c0);
        }
        Some(Series { coeffs: out })
    }

    /// `f(g(x))` for `f` given by its Taylor coefficients; `g` must have
    /// zero constant term.
    pub fn compose(f: &[Rational], g: &Series) -> Option<Series> {
        if !g.coeff(0).is_zero() {
            return None;
        }
        let n = g.order();
        let mut out = Series::zero(n);
        let mut power = Series::one(n);
        for (k, c) in f.iter().enumerate() {
            if k >= n.max(1) {
                break;
            }
            if !c.is_zero() {
                out = out.add(&power.scale(c));
            }
            power = power.mul(g);
        }
        Some(out)
    }

    /// `d/dx`, losing one order of precision.
    pub fn derivative(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_integer(k as i64))
                .collect(),
        }
    }

    /// Divides by `x`; the constant term must vanish.
    pub fn div_x(&self) -> Option<Series> {
        if !self.coeff(0).is_zero() {
            return None;
        }
        Some(Series {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        })
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| &acc * &Rational::from_integer(k))
}

/// Taylor coefficients of `exp(x)`.
pub fn exp_coeffs(n: usize) -> Vec<Rational> {
    (0..n).map(|k| factorial(k).recip().unwrap()).collect()
}

pub fn sinh_coeffs(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| {
            if k % 2 == 1 {
                factorial(k).recip().unwrap()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

pub fn cosh_coeffs(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| {
            if k % 2 == 0 {
                factorial(k).recip().unwrap()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// `arctanh(x) = x + x^3/3 + x^5/5 + ...`
pub fn arctanh_coeffs(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| {
            if k % 2 == 1 {
                Rational::new(1, k as i64)
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// `tanh = sinh / cosh`, expanded by series division.
pub fn tanh_coeffs(n: usize) -> Vec<Rational> {
    let s = Series::new(sinh_coeffs(n), n);
    let c = Series::new(cosh_coeffs(n), n);
    s.mul(&c.recip().expect("cosh(0) = 1")).into_coeffs()
}

/// `log(1 + x) = x - x^2/2 + x^3/3 - ...`
pub fn log1p_coeffs(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| match k {
            0 => Rational::zero(),
            _ if k % 2 == 1 => Rational::new(1, k as i64),
            _ => Rational::new(-1, k as i64),
        })
        .collect()
}

/// Binomial series of `sqrt(1 + x)`: `binom(1/2, k)`.
pub fn sqrt1p_coeffs(n: usize) -> Vec<Rational> {
    let half = Rational::new(1, 2);
    let mut out = Vec::with_capacity(n);
    let mut c = Rational::one();
    for k in 0..n {
        out.push(c.clone());
        let k = k as i64;
        c = &(&c * &(&half - &Rational::from_integer(k))) / &Rational::from_integer(k + 1);
    }
    out
}

/// `1 / (1 + x) = 1 - x + x^2 - ...`
pub fn geom_inv_coeffs(n: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| Rational::from_integer(if k % 2 == 0 { 1 } else { -1 }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn tanh_leading_terms() {
        // tanh x = x - x^3/3 + 2x^5/15 - 17x^7/315
        let t = tanh_coeffs(8);
        assert_eq!(t[1], r(1, 1));
        assert_eq!(t[3], r(-1, 3));
        assert_eq!(t[5], r(2, 15));
        assert_eq!(t[7], r(-17, 315));
        assert!(t[0].is_zero() && t[2].is_zero());
    }

    #[test]
    fn sqrt_squares_back() {
        let s = Series::new(sqrt1p_coeffs(12), 12);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(0), r(1, 1));
        assert_eq!(sq.coeff(1), r(1, 1));
        assert!((2..12).all(|k| sq.coeff(k).is_zero()));
    }

    #[test]
    fn tanh_of_arctanh_is_identity() {
        let n = 15;
        let at = Series::new(arctanh_coeffs(n), n);
        let back = Series::compose(&tanh_coeffs(n), &at).unwrap();
        let mut x = vec![Rational::zero(); n];
        x[1] = Rational::one();
        assert_eq!(back, Series::new(x, n));
    }

    #[test]
    fn log_of_exp() {
        let n = 10;
        let mut e = Series::new(exp_coeffs(n), n);
        e = e.sub(&Series::one(n));
        let l = Series::compose(&log1p_coeffs(n), &e).unwrap();
        assert_eq!(l.coeff(1), r(1, 1));
        assert!((2..n).all(|k| l.coeff(k).is_zero()));
    }

    #[test]
    fn recip_of_geometric() {
        let n = 6;
        let g = Series::new(geom_inv_coeffs(n), n);
        let inv = g.recip().unwrap();
        assert_eq!(inv, Series::new(vec![r(1, 1), r(1, 1)], n));
        assert!(Series::zero(3).recip().is_none());
    }
}
