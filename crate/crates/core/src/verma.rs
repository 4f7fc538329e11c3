//! Truncated Verma modules computed from the defining relations alone, their
//! first singular vectors, and the resulting irreducible quotients.
//!
//! This route never touches the classical map and serves as an independent
//! check on [`crate::represent`].
//!
//! Basis `w_m = Y^m w_0`, `m = 0..=depth`. Generator matrices act on columns:
//! column `m` holds the image of `w_m`. `T`, `T⁻¹` and `H` never raise the
//! level, so they are upper-triangular and truncation at any depth is exact
//! on the retained span.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::analytic::{analytic_series, diagonalize_distinct, upper_triangular_inverse, AnalyticFn};
use crate::matrix::PolyMatrix;
use crate::represent::{from_quantum, Irrep};
use crate::ring::{HPoly, Rational};
use crate::spin::{Epsilon, HalfInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaModule {
    lambda: u32,
    epsilon: Epsilon,
    depth: usize,
    t: PolyMatrix,
    t_inv: PolyMatrix,
    h: PolyMatrix,
    /// Pure shift; its last column is zero because `w_{depth+1}` lies outside
    /// the truncation.
    y: PolyMatrix,
}

impl VermaModule {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }
    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }
    pub fn depth(&self) -> usize {
        self.depth
    }
    pub fn t(&self) -> &PolyMatrix {
        &self.t
    }
    pub fn t_inv(&self) -> &PolyMatrix {
        &self.t_inv
    }
    pub fn h(&self) -> &PolyMatrix {
        &self.h
    }
    pub fn y(&self) -> &PolyMatrix {
        &self.y
    }
}

/// Column vector `Y·v` for `v` given by its coefficients on `w_0..w_depth`.
fn shift(v: &[HPoly]) -> Vec<HPoly> {
    let mut out = vec![HPoly::zero(); v.len()];
    out[1..].clone_from_slice(&v[..v.len() - 1]);
    out
}

fn apply(m: &PolyMatrix, v: &[HPoly], upto: usize) -> Result<Vec<HPoly>> {
    let mut out = vec![HPoly::zero(); m.rows()];
    for (i, slot) in out.iter_mut().enumerate() {
        for (k, x) in v.iter().enumerate().take(upto + 1) {
            slot.add_product(m.get(i, k), x)?;
        }
    }
    Ok(out)
}

fn combine(terms: &[(&Rational, &[HPoly])]) -> Vec<HPoly> {
    let n = terms[0].1.len();
    (0..n)
        .map(|i| {
            let mut acc = HPoly::zero();
            for (c, v) in terms {
                acc += &v[i].scale(c);
            }
            acc
        })
        .collect()
}

fn set_column(m: &mut PolyMatrix, col: usize, v: Vec<HPoly>) {
    for (i, x) in v.into_iter().enumerate() {
        m.set(i, col, x);
    }
}

fn column(m: &PolyMatrix, col: usize) -> Vec<HPoly> {
    (0..m.rows()).map(|i| m.get(i, col).clone()).collect()
}

/// Builds the Verma module with `H w_0 = ελ w_0`, `T w_0 = ε w_0` on
/// `w_0..w_depth`, level by level:
///
/// ```text
/// T w_{m+1}  = Y T w_m  + (h/2)(HT + TH) w_m
/// T⁻¹ w_{m+1}: back-substitution against T
/// H w_{m+1}  = Y H w_m  - ½ (Y T + T Y + Y T⁻¹ + T⁻¹ Y) w_m
/// ```
///
/// The highest weight is `ελ` rather than `λ` because `H = 2εJ₃` on the
/// finite-dimensional `ε = -1` representations; with `+λ` the `ε = -1`
/// module has no finite-dimensional quotient.
pub fn build_verma(lambda: u32, epsilon: Epsilon, depth: usize) -> Result<VermaModule> {
    if depth < lambda as usize + 2 {
        return Err(Error::Truncation { lambda, depth });
    }
    let n = depth + 1;
    let eps = epsilon.as_rational();
    let h_half = HPoly::monomial(Rational::new(1, 2), 1);
    let mut t = PolyMatrix::zeros(n, n);
    let mut h = PolyMatrix::zeros(n, n);
    let mut y = PolyMatrix::zeros(n, n);
    for m in 0..depth {
        y.set(m + 1, m, HPoly::one());
    }
    t.set(0, 0, HPoly::constant(eps.clone()));
    h.set(0, 0, HPoly::constant(&eps * &Rational::from_integer(lambda as i64)));
    let mut t_inv = PolyMatrix::zeros(n, n);

    let one = Rational::one();
    let minus_half = Rational::new(-1, 2);
    for m in 0..depth {
        let t_m = column(&t, m);
        let h_m = column(&h, m);
        let ht = apply(&h, &t_m, m)?;
        let th = apply(&t, &h_m, m)?;
        let sym: Vec<HPoly> = ht
            .iter()
            .zip(&th)
            .map(|(a, b)| (a + b).checked_mul(&h_half))
            .collect::<Result<_>>()?;
        let t_next = combine(&[(&one, &shift(&t_m)), (&one, &sym)]);
        set_column(&mut t, m + 1, t_next.clone());

        let block = upper_triangular_inverse(&t.block(0, m + 2, 0, m + 2))?;
        for col in [m, m + 1] {
            for i in 0..=col {
                t_inv.set(i, col, block.get(i, col).clone());
            }
        }
        let ti_m = column(&t_inv, m);
        let ti_next = column(&t_inv, m + 1);

        let h_next = combine(&[
            (&one, &shift(&h_m)),
            (&minus_half, &shift(&t_m)),
            (&minus_half, &t_next),
            (&minus_half, &shift(&ti_m)),
            (&minus_half, &ti_next),
        ]);
        set_column(&mut h, m + 1, h_next);
    }
    for (name, mat) in [("T", &t), ("T^-1", &t_inv), ("H", &h)] {
        if !mat.is_upper_triangular() {
            return Err(Error::Invariant(format!("Verma action of {name} raises the level")));
        }
    }
    Ok(VermaModule {
        lambda,
        epsilon,
        depth,
        t,
        t_inv,
        h,
        y,
    })
}

/// `v = w_level + Σ_{k=1}^{level-1} c_k w_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularVector {
    pub level: usize,
    /// Coefficients of `w_1 .. w_level`; the last one is `1`.
    pub coefficients: Vec<HPoly>,
}

impl SingularVector {
    /// Full coefficient vector on `w_0..w_level`.
    pub fn full(&self) -> Vec<HPoly> {
        let mut v = vec![HPoly::zero()];
        v.extend(self.coefficients.iter().cloned());
        v
    }
}

/// Solves `T v = ε v` for `v = w_{λ+1} + Σ_{k=1}^{λ} c_k w_k`.
///
/// The superdiagonal of `T - ε` is `hε(i+1)(λ-i)`, nonzero for `i < λ`, so
/// the coefficients follow by back-substitution with exact division by a
/// monomial in `h`. The solution is then checked to be an `H`-eigenvector,
/// which makes the submodule it generates proper.
pub fn find_singular(vm: &VermaModule) -> Result<SingularVector> {
    let level = vm.lambda as usize + 1;
    if vm.depth < level + 1 {
        return Err(Error::Truncation {
            lambda: vm.lambda,
            depth: vm.depth,
        });
    }
    let eps = vm.epsilon.as_rational();
    let mut tm = vm.t.clone();
    for i in 0..tm.rows() {
        let d = tm.get(i, i) - &HPoly::constant(eps.clone());
        tm.set(i, i, d);
    }
    let mut c = vec![HPoly::zero(); level + 1];
    c[level] = HPoly::one();
    for i in (0..level - 1).rev() {
        // row i: t_{i,i+1} c_{i+1} = -Σ_{k>i+1} t_{ik} c_k
        let mut rhs = HPoly::zero();
        for (k, ck) in c.iter().enumerate().skip(i + 2) {
            rhs.add_product(tm.get(i, k), ck)?;
        }
        let pivot = tm.get(i, i + 1);
        let (pk, pc) = match pivot.coeffs().iter().position(|x| !x.is_zero()) {
            Some(p) if pivot.degree() == Some(p) => (p, pivot.coeffs()[p].clone()),
            _ => return Err(Error::NoSingularVector(level)),
        };
        c[i + 1] = (-rhs)
            .div_monomial(&pc, pk)
            .map_err(|_| Error::NoSingularVector(level))?;
    }
    let residual = apply(&tm, &c, level)?;
    if residual.iter().any(|x| !x.is_zero()) {
        return Err(Error::NoSingularVector(level));
    }
    let hv = apply(&vm.h, &c, level)?;
    let mu = hv[level].clone();
    let eigen = hv
        .iter()
        .zip(&c)
        .all(|(a, b)| *a == mu.checked_mul(b).unwrap_or_default());
    if !eigen || mu.as_constant().is_none() {
        return Err(Error::NoSingularVector(level));
    }
    Ok(SingularVector {
        level,
        coefficients: c[1..].to_vec(),
    })
}

/// The irreducible quotient `M / U·v` on `w_0..w_λ`, before `H` is
/// diagonalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRep {
    pub lambda: u32,
    pub epsilon: Epsilon,
    pub h: PolyMatrix,
    pub t: PolyMatrix,
    pub t_inv: PolyMatrix,
    pub y: PolyMatrix,
}

/// Restricts the Verma actions to `w_0..w_λ`, replacing `w_{λ+1}` by
/// `-Σ c_k w_k` wherever `Y` produces it.
pub fn quotient_irrep(vm: &VermaModule, sv: &SingularVector) -> Result<QuotientRep> {
    let d = vm.lambda as usize + 1;
    if sv.level != d {
        return Err(Error::Invariant(format!(
            "singular vector level {} does not match λ = {}",
            sv.level, vm.lambda
        )));
    }
    let mut y = vm.y.block(0, d, 0, d);
    let full = sv.full();
    for (k, c) in full.iter().enumerate().take(d) {
        y.set(k, d - 1, -c);
    }
    Ok(QuotientRep {
        lambda: vm.lambda,
        epsilon: vm.epsilon,
        h: vm.h.block(0, d, 0, d),
        t: vm.t.block(0, d, 0, d),
        t_inv: vm.t_inv.block(0, d, 0, d),
        y,
    })
}

impl QuotientRep {
    /// `Xreg = log(εT)/h`, defined because `εT - 1` is nilpotent.
    pub fn x_reg(&self) -> Result<PolyMatrix> {
        let n = self.t.rows();
        let shifted = self
            .t
            .scale_rational(&self.epsilon.as_rational())
            .sub(&PolyMatrix::identity(n))?;
        analytic_series(&shifted, AnalyticFn::Log1p)?.div_h()
    }

    /// Conjugates by the unipotent matrix diagonalizing `H` and completes
    /// the result to an [`Irrep`] through the inverse map.
    pub fn diagonalized(&self) -> Result<Irrep> {
        let dz = diagonalize_distinct(&self.h)?;
        let conj = |m: &PolyMatrix| -> Result<PolyMatrix> { dz.p_inv.mul(m)?.mul(&dz.p) };
        from_quantum(
            HalfInt::from_twice(self.lambda),
            self.epsilon,
            dz.d.clone(),
            conj(&self.t)?,
            conj(&self.t_inv)?,
            conj(&self.y)?,
        )
    }
}

/// Verma module, singular vector and diagonalized quotient for `λ` in one go.
pub fn quotient_route(lambda: u32, epsilon: Epsilon) -> Result<Irrep> {
    let vm = build_verma(lambda, epsilon, lambda as usize + 2)?;
    let sv = find_singular(&vm)?;
    quotient_irrep(&vm, &sv)?.diagonalized()
}
