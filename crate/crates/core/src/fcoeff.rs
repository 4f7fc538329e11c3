//! The coefficients `f_k` governing how the raising generator `X` reaches
//! across weight levels: by their convolution recurrence, by closed form,
//! and through the generating-function ODE `(xF)' = sinh(xF)/x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Rational;
use crate::series::{self, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSequence {
    values: Vec<Rational>,
}

impl FSequence {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.values.get(k)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FMethod {
    Recurrence,
    Closed,
}

impl FromStr for FMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence" => Ok(FMethod::Recurrence),
            "closed" => Ok(FMethod::Closed),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for FMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FMethod::Recurrence => "recurrence",
            FMethod::Closed => "closed",
        })
    }
}

pub fn f_sequence(max_k: usize, method: FMethod) -> FSequence {
    match method {
        FMethod::Recurrence => f_recurrence(max_k),
        FMethod::Closed => f_closed(max_k),
    }
}

/// `f_0 .. f_K` from
/// `f_k = 1/(2k) * sum_{s=1..k} 1/(2s+1)! * sum_{i_1+..+i_{2s+1} = k-s} f_{i_1}..f_{i_{2s+1}}`.
///
/// The inner sum runs over ordered compositions, i.e. it is the coefficient
/// of `y^{k-s}` in `Φ(y)^{2s+1}` with `Φ(y) = sum f_i y^i`. Those odd
/// powers are carried along incrementally: once `f_k` is known, the
/// `y^k` coefficient of every `Φ^n` follows from
/// `[y^k] Φ^n = [y^k] Φ^{n-1}·Φ`, which only needs lower coefficients.
pub fn f_recurrence(max_k: usize) -> FSequence {
    let len = max_k + 1;
    let max_power = 2 * max_k + 1;
    let mut f = vec![Rational::zero(); len];
    f[0] = Rational::one();
    // powers[n][k] = [y^k] Φ^n, filled in column by column.
    let mut powers = vec![vec![Rational::zero(); len]; max_power + 1];
    powers[0][0] = Rational::one();
    for row in powers.iter_mut().skip(1) {
        row[0] = Rational::one();
    }
    let inv_fact: Vec<Rational> = series::exp_coeffs(max_power + 1);
    for k in 1..len {
        let mut acc = Rational::zero();
        for s in 1..=k {
            let n = 2 * s + 1;
            acc += &(&inv_fact[n] * &powers[n][k - s]);
        }
        f[k] = &acc / &Rational::from_integer(2 * k as i64);
        for n in 1..=max_power {
            let mut c = Rational::zero();
            for i in 0..=k {
                if !powers[n - 1][k - i].is_zero() {
                    c += &(&powers[n - 1][k - i] * &f[i]);
                }
            }
            powers[n][k] = c;
        }
    }
    FSequence { values: f }
}

/// `f_k = 1 / ((2k+1) 2^{2k})`.
pub fn f_closed(max_k: usize) -> FSequence {
    let values = (0..=max_k)
        .map(|k| {
            let den = num_bigint::BigInt::from(2 * k + 1) << (2 * k);
            Rational::from_bigints(1.into(), den).expect("nonzero")
        })
        .collect();
    FSequence { values }
}

/// Coefficients of `d(xF)/dx - sinh(xF)/x` through `x^{2K}`, with `F`
/// built from the given sequence. All zero when the sequence solves the
/// generating-function ODE.
pub fn ode_residual_of(f: &FSequence, max_k: usize) -> Vec<Rational> {
    // G(x) = x F(x) = sum f_k x^{2k+1}, kept through x^{2K+1}.
    let order = 2 * max_k + 2;
    let mut g = vec![Rational::zero(); order];
    for (k, v) in f.values.iter().enumerate().take(max_k + 1) {
        g[2 * k + 1] = v.clone();
    }
    let g = Series::new(g, order);
    let lhs = g.derivative();
    let sinh_g = Series::compose(&series::sinh_coeffs(order), &g).expect("G(0) = 0");
    let rhs = sinh_g.div_x().expect("sinh(G(0)) = 0");
    lhs.sub(&rhs).into_coeffs().into_iter().take(2 * max_k + 1).collect()
}

/// Residual of the ODE for the closed-form sequence.
pub fn ode_residual(max_k: usize) -> Vec<Rational> {
    ode_residual_of(&f_closed(max_k), max_k)
}

/// Taylor coefficients of `(2/x) arctanh(x/2)` in powers of `x^2`, computed
/// from the arctanh series directly.
pub fn arctanh_generating_coeffs(max_k: usize) -> Vec<Rational> {
    let at = series::arctanh_coeffs(2 * max_k + 2);
    (0..=max_k)
        .map(|k| {
            // [x^{2k}] (2/x) arctanh(x/2) = 2 * [x^{2k+1}] arctanh(x/2)
            let scale = Rational::new(1, 2).pow(2 * k as u32 + 1);
            &(&at[2 * k + 1] * &scale) * &Rational::from_integer(2)
        })
        .collect()
}
