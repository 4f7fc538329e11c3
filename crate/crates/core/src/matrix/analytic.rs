//! Analytic functions of nilpotent matrices, the exact `exp(±iπM)` for
//! triangular `M` with distinct integer eigenvalues, and triangular
//! diagonalization/inversion.
//!
//! Nothing here ever divides by a polynomial in `h`: series terminate on
//! nilpotent arguments, and triangular solves divide only by constant
//! diagonal entries or constant eigenvalue gaps.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::ring::{HPoly, Rational};
use crate::series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnalyticFn {
    Exp,
    /// `sqrt(1 + x)`
    Sqrt1p,
    Arctanh,
    Tanh,
    Cosh,
    Sinh,
    /// `log(1 + x)`
    Log1p,
    /// `1 / (1 + x)`
    GeomInv,
}

impl AnalyticFn {
    pub const ALL: [AnalyticFn; 8] = [
        AnalyticFn::Exp,
        AnalyticFn::Sqrt1p,
        AnalyticFn::Arctanh,
        AnalyticFn::Tanh,
        AnalyticFn::Cosh,
        AnalyticFn::Sinh,
        AnalyticFn::Log1p,
        AnalyticFn::GeomInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AnalyticFn::Exp => "exp",
            AnalyticFn::Sqrt1p => "sqrt1p",
            AnalyticFn::Arctanh => "arctanh",
            AnalyticFn::Tanh => "tanh",
            AnalyticFn::Cosh => "cosh",
            AnalyticFn::Sinh => "sinh",
            AnalyticFn::Log1p => "log1p",
            AnalyticFn::GeomInv => "geom_inv",
        }
    }

    /// First `n` Taylor coefficients at zero.
    pub fn taylor(self, n: usize) -> Vec<Rational> {
        match self {
            AnalyticFn::Exp => series::exp_coeffs(n),
            AnalyticFn::Sqrt1p => series::sqrt1p_coeffs(n),
            AnalyticFn::Arctanh => series::arctanh_coeffs(n),
            AnalyticFn::Tanh => series::tanh_coeffs(n),
            AnalyticFn::Cosh => series::cosh_coeffs(n),
            AnalyticFn::Sinh => series::sinh_coeffs(n),
            AnalyticFn::Log1p => series::log1p_coeffs(n),
            AnalyticFn::GeomInv => series::geom_inv_coeffs(n),
        }
    }
}

impl fmt::Display for AnalyticFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AnalyticFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AnalyticFn::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown function {s:?}")))
    }
}

/// `f(N)` for nilpotent `N`, summed exactly up to the last nonvanishing
/// power. The result does not depend on how many extra terms one would add.
pub fn analytic_series(m: &PolyMatrix, f: AnalyticFn) -> Result<PolyMatrix> {
    let index = m.nilpotency_index()?.ok_or(Error::NotNilpotent(f.name()))?;
    let coeffs = f.taylor(index);
    let n = m.rows();
    let mut out = PolyMatrix::zeros(n, n);
    let mut power = PolyMatrix::identity(n);
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&power.scale_rational(c))?;
        }
        if k + 1 < coeffs.len() {
            power = power.mul(m)?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Constant integer diagonal of an upper-triangular matrix, checked for
/// pairwise distinctness.
fn distinct_constant_diagonal(m: &PolyMatrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    if !m.is_upper_triangular() {
        return Err(Error::NotUpperTriangular);
    }
    let diag = m
        .diagonal()
        .iter()
        .enumerate()
        .map(|(index, d)| d.as_constant().ok_or(Error::NonConstantDiagonal { index }))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if diag[i] == diag[j] {
                return Err(Error::RepeatedDiagonal { first: i, second: j });
            }
        }
    }
    Ok(diag)
}

/// `exp(sign * iπ * M)` for upper-triangular `M` whose diagonal consists of
/// pairwise distinct integer constants.
///
/// The diagonal of the result is `(-1)^{d_i}`; the remaining entries follow
/// from `F M = M F`, solved along superdiagonals (Parlett's recurrence). Only
/// integer gaps `d_j - d_i` are ever divided by, so the output lies in
/// `Q[h]`. Because every eigenvalue is an integer, both signs give the same
/// matrix.
pub fn exp_ipi_triangular(m: &PolyMatrix, _sign: Sign) -> Result<PolyMatrix> {
    let diag = distinct_constant_diagonal(m)?;
    let mut parity = Vec::with_capacity(diag.len());
    for (index, d) in diag.iter().enumerate() {
        let v = d.to_i64().ok_or_else(|| Error::NonIntegerDiagonal {
            index,
            value: d.to_string(),
        })?;
        parity.push(if v.rem_euclid(2) == 0 { 1 } else { -1 });
    }
    let n = diag.len();
    let mut f = PolyMatrix::zeros(n, n);
    for (i, &p) in parity.iter().enumerate() {
        f.set(i, i, HPoly::from_int(p));
    }
    for gap in 1..n {
        for i in 0..n - gap {
            let j = i + gap;
            // F_ij (d_j - d_i) = M_ij (F_jj - F_ii) + sum_{i<k<j} (M_ik F_kj - F_ik M_kj)
            let mut acc = m.get(i, j).scale(&Rational::from_integer(parity[j] - parity[i]));
            for k in i + 1..j {
                acc.add_product(m.get(i, k), f.get(k, j))?;
                acc -= &f.get(i, k).checked_mul(m.get(k, j))?;
            }
            let gap_value = &diag[j] - &diag[i];
            f.set(i, j, acc.scale(&gap_value.recip().expect("distinct diagonal")));
        }
    }
    Ok(f)
}

/// `P^{-1} M P = D` with `P` unipotent upper-triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonalization {
    pub p: PolyMatrix,
    pub d: PolyMatrix,
    pub p_inv: PolyMatrix,
}

/// Diagonalizes an upper-triangular matrix with distinct constant rational
/// diagonal. Column `j` of `P` is the eigenvector for `d_j`, normalized to
/// have unit `j`-th component.
pub fn diagonalize_distinct(m: &PolyMatrix) -> Result<Diagonalization> {
    let diag = distinct_constant_diagonal(m)?;
    let n = diag.len();
    let mut p = PolyMatrix::identity(n);
    for j in 0..n {
        for i in (0..j).rev() {
            // (d_i - d_j) P_ij + sum_{i<k<=j} M_ik P_kj = 0
            let mut acc = HPoly::zero();
            for k in i + 1..=j {
                acc.add_product(m.get(i, k), p.get(k, j))?;
            }
            let gap = &diag[j] - &diag[i];
            p.set(i, j, acc.scale(&gap.recip().expect("distinct diagonal")));
        }
    }
    let p_inv = upper_triangular_inverse(&p)?;
    Ok(Diagonalization {
        p,
        d: PolyMatrix::diagonal_of(&diag),
        p_inv,
    })
}

/// Inverse of an upper-triangular matrix with nonzero constant diagonal,
/// by back-substitution.
pub fn upper_triangular_inverse(m: &PolyMatrix) -> Result<PolyMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    if !m.is_upper_triangular() {
        return Err(Error::NotUpperTriangular);
    }
    let n = m.rows();
    let mut inv_diag = Vec::with_capacity(n);
    for index in 0..n {
        let d = m
            .get(index, index)
            .as_constant()
            .ok_or(Error::NonConstantDiagonal { index })?;
        inv_diag.push(d.recip().ok_or(Error::SingularDiagonal { index })?);
    }
    let mut x = PolyMatrix::zeros(n, n);
    for j in 0..n {
        x.set(j, j, HPoly::constant(inv_diag[j].clone()));
        for i in (0..j).rev() {
            let mut acc = HPoly::zero();
            for k in i + 1..=j {
                acc.add_product(m.get(i, k), x.get(k, j))?;
            }
            x.set(i, j, -acc.scale(&inv_diag[i]));
        }
    }
    Ok(x)
}
