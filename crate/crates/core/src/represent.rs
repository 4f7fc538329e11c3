//! Finite-dimensional irreducible representations built from classical
//! `sl(2)` generators through the nonlinear map
//!
//! ```text
//! T = ε (1 + hJ₊/2)(1 - hJ₊/2)⁻¹      Y = ε φ J₋ φ,  φ = sqrt(1 - h²J₊²/4)
//! H = 2ε J₃                          X = (1-ε)iπ/(2h) + (2/h) arctanh(hJ₊/2)
//! ```
//!
//! # Basis
//!
//! Everything is expressed in the H-diagonal basis `v_0 .. v_{2j}` whose
//! lowering generator `Y` has unit subdiagonal, i.e. the basis obtained by
//! diagonalizing `H` on the Verma quotient spanned by `w_m = Y^m w_0`. In
//! this basis every entry is a polynomial in `h` with rational
//! coefficients.
//!
//! For `ε = -1` the map is fed the classical triple `(-J₊, -J₋, J₃)`, an
//! equivalent `sl(2)` representation; this keeps `Y`'s subdiagonal equal to
//! `+1` so that the result agrees with the Verma construction and with the
//! known `ε = -1` R-matrices. The stored `j_plus`/`j_minus` are the
//! classical generators actually fed to the map.
//!
//! The `iπ/h` part of `X` is never materialized: [`Irrep::x_reg`] holds the
//! `Q[h]` part `(2/h) arctanh(hJ₊/2)` and the branch is carried by
//! [`Irrep::epsilon`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::analytic::{analytic_series, AnalyticFn};
use crate::matrix::PolyMatrix;
use crate::ring::{HPoly, Rational};
use crate::spin::{Epsilon, HalfInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    VermaDiagonal,
    SymmetricNumeric,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verma" | "verma_diagonal" => Ok(Basis::VermaDiagonal),
            "symmetric" | "symmetric_numeric" => Ok(Basis::SymmetricNumeric),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Names of the stored generator matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    H,
    T,
    TInv,
    Y,
    XReg,
    JPlus,
    JMinus,
    J3,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::H,
        Generator::T,
        Generator::TInv,
        Generator::Y,
        Generator::XReg,
        Generator::JPlus,
        Generator::JMinus,
        Generator::J3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::H => "H",
            Generator::T => "T",
            Generator::TInv => "Tinv",
            Generator::Y => "Y",
            Generator::XReg => "Xreg",
            Generator::JPlus => "Jplus",
            Generator::JMinus => "Jminus",
            Generator::J3 => "J3",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// Classical `sl(2)` generators on `v_0 .. v_{2j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classical {
    pub j_plus: PolyMatrix,
    pub j_minus: PolyMatrix,
    pub j3: PolyMatrix,
}

/// `J₃ v_k = (j-k) v_k`, `J₋ v_k = v_{k+1}`, `J₊ v_k = k(2j+1-k) v_{k-1}`.
pub fn classical_generators(j: HalfInt) -> Classical {
    let d = j.dim();
    let tj = j.twice() as i64;
    let j_plus = PolyMatrix::from_fn(d, d, |r, c| {
        if c == r + 1 {
            let k = c as i64;
            HPoly::from_int(k * (tj + 1 - k))
        } else {
            HPoly::zero()
        }
    });
    let j_minus = PolyMatrix::from_fn(d, d, |r, c| if r == c + 1 { HPoly::one() } else { HPoly::zero() });
    let weights: Vec<Rational> = (0..d as i64).map(|k| Rational::new(tj - 2 * k, 2)).collect();
    Classical {
        j_plus,
        j_minus,
        j3: PolyMatrix::diagonal_of(&weights),
    }
}

/// An exact `(2j+1)`-dimensional representation of the Jordanian algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    j: HalfInt,
    epsilon: Epsilon,
    basis: Basis,
    h: PolyMatrix,
    t: PolyMatrix,
    t_inv: PolyMatrix,
    y: PolyMatrix,
    x_reg: PolyMatrix,
    j_plus: PolyMatrix,
    j_minus: PolyMatrix,
    j3: PolyMatrix,
}

impl Irrep {
    pub fn j(&self) -> HalfInt {
        self.j
    }
    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }
    pub fn basis(&self) -> Basis {
        self.basis
    }
    pub fn dim(&self) -> usize {
        self.j.dim()
    }
    pub fn h(&self) -> &PolyMatrix {
        &self.h
    }
    pub fn t(&self) -> &PolyMatrix {
        &self.t
    }
    pub fn t_inv(&self) -> &PolyMatrix {
        &self.t_inv
    }
    pub fn y(&self) -> &PolyMatrix {
        &self.y
    }
    /// The `Q[h]` part of `X`; the full generator is this plus
    /// `iπ/h · I` on the `ε = -1` branch.
    pub fn x_reg(&self) -> &PolyMatrix {
        &self.x_reg
    }
    pub fn j_plus(&self) -> &PolyMatrix {
        &self.j_plus
    }
    pub fn j_minus(&self) -> &PolyMatrix {
        &self.j_minus
    }
    pub fn j3(&self) -> &PolyMatrix {
        &self.j3
    }

    pub fn generator(&self, g: Generator) -> &PolyMatrix {
        match g {
            Generator::H => &self.h,
            Generator::T => &self.t,
            Generator::TInv => &self.t_inv,
            Generator::Y => &self.y,
            Generator::XReg => &self.x_reg,
            Generator::JPlus => &self.j_plus,
            Generator::JMinus => &self.j_minus,
            Generator::J3 => &self.j3,
        }
    }

    fn generator_mut(&mut self, g: Generator) -> &mut PolyMatrix {
        match g {
            Generator::H => &mut self.h,
            Generator::T => &mut self.t,
            Generator::TInv => &mut self.t_inv,
            Generator::Y => &mut self.y,
            Generator::XReg => &mut self.x_reg,
            Generator::JPlus => &mut self.j_plus,
            Generator::JMinus => &mut self.j_minus,
            Generator::J3 => &mut self.j3,
        }
    }

    /// Copy with one matrix entry overwritten. The result is generally not a
    /// representation any more; this exists to check that the verification
    /// suites notice.
    pub fn with_entry(&self, g: Generator, row: usize, col: usize, value: HPoly) -> Irrep {
        let mut out = self.clone();
        out.generator_mut(g).set(row, col, value);
        out
    }

    /// Conjugation by `diag(1, -1, 1, ...)`, an intertwiner between the two
    /// sign conventions for the lowering generators.
    pub fn parity_conjugate(&self) -> Irrep {
        let flip = |m: &PolyMatrix| {
            PolyMatrix::from_fn(m.rows(), m.cols(), |i, j| {
                if (i + j) % 2 == 0 {
                    m.get(i, j).clone()
                } else {
                    -m.get(i, j)
                }
            })
        };
        let mut out = self.clone();
        for g in Generator::ALL {
            let m = flip(out.generator(g));
            *out.generator_mut(g) = m;
        }
        out
    }

    pub fn to_json(&self) -> IrrepJson {
        IrrepJson {
            j: self.j,
            epsilon: self.epsilon,
            basis: self.basis,
            dimension: self.dim(),
            generators: Generators {
                h: self.h.clone(),
                t: self.t.clone(),
                t_inv: self.t_inv.clone(),
                y: self.y.clone(),
                x_reg: self.x_reg.clone(),
                j_plus: self.j_plus.clone(),
                j_minus: self.j_minus.clone(),
                j3: self.j3.clone(),
            },
        }
    }
}

/// Wire form of an [`Irrep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepJson {
    pub j: HalfInt,
    pub epsilon: Epsilon,
    pub basis: Basis,
    pub dimension: usize,
    pub generators: Generators,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generators {
    #[serde(rename = "H")]
    pub h: PolyMatrix,
    #[serde(rename = "T")]
    pub t: PolyMatrix,
    #[serde(rename = "Tinv")]
    pub t_inv: PolyMatrix,
    #[serde(rename = "Y")]
    pub y: PolyMatrix,
    #[serde(rename = "Xreg")]
    pub x_reg: PolyMatrix,
    #[serde(rename = "Jplus")]
    pub j_plus: PolyMatrix,
    #[serde(rename = "Jminus")]
    pub j_minus: PolyMatrix,
    #[serde(rename = "J3")]
    pub j3: PolyMatrix,
}

fn h_times(c: Rational) -> HPoly {
    HPoly::monomial(c, 1)
}

/// Applies the map to an arbitrary classical triple on branch `epsilon`.
pub fn from_classical(j: HalfInt, epsilon: Epsilon, classical: Classical) -> Result<Irrep> {
    let d = j.dim();
    let eps = epsilon.as_rational();
    let id = PolyMatrix::identity(d);
    // N = hJ₊/2
    let n = classical.j_plus.scale(&h_times(Rational::new(1, 2)))?;
    let t = id
        .add(&n)?
        .mul(&analytic_series(&n.neg(), AnalyticFn::GeomInv)?)?
        .scale_rational(&eps);
    let t_inv = id
        .sub(&n)?
        .mul(&analytic_series(&n, AnalyticFn::GeomInv)?)?
        .scale_rational(&eps);
    let phi = analytic_series(&n.mul(&n)?.neg(), AnalyticFn::Sqrt1p)?;
    let y = phi.mul(&classical.j_minus)?.mul(&phi)?.scale_rational(&eps);
    let h = classical.j3.scale_rational(&(&eps * &Rational::from_integer(2)));
    // (2/h) arctanh(N): every term carries at least one power of h.
    let x_reg = analytic_series(&n, AnalyticFn::Arctanh)?
        .div_h()?
        .scale_rational(&Rational::from_integer(2));
    Ok(Irrep {
        j,
        epsilon,
        basis: Basis::VermaDiagonal,
        h,
        t,
        t_inv,
        y,
        x_reg,
        j_plus: classical.j_plus,
        j_minus: classical.j_minus,
        j3: classical.j3,
    })
}

/// The spin-`j` representation on branch `epsilon`, in the canonical basis.
pub fn build_irrep(j: HalfInt, epsilon: Epsilon) -> Result<Irrep> {
    let mut c = classical_generators(j);
    if epsilon == Epsilon::Minus {
        c.j_plus = c.j_plus.neg();
        c.j_minus = c.j_minus.neg();
    }
    from_classical(j, epsilon, c)
}

/// Classical generators recovered from `(H, T, T⁻¹, Y)` by the inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Recovered {
    x_reg: PolyMatrix,
    j_plus_tanh: PolyMatrix,
    j_plus_cayley: PolyMatrix,
    j_minus_sqrt: PolyMatrix,
    j_minus_cosh: PolyMatrix,
    j3: PolyMatrix,
}

fn recover(epsilon: Epsilon, h: &PolyMatrix, t: &PolyMatrix, t_inv: &PolyMatrix, y: &PolyMatrix) -> Result<Recovered> {
    let eps = epsilon.as_rational();
    let d = t.rows();
    let id = PolyMatrix::identity(d);
    // U = εT is unipotent; M = U - I is nilpotent.
    let m = t.scale_rational(&eps).sub(&id)?;
    let m_inv = t_inv.scale_rational(&eps).sub(&id)?;
    let x_reg = analytic_series(&m, AnalyticFn::Log1p)?.div_h()?;

    // J₊ = (2/h) tanh(h X / 2)
    let half_hx = analytic_series(&m, AnalyticFn::Log1p)?.scale_rational(&Rational::new(1, 2));
    let j_plus_tanh = analytic_series(&half_hx, AnalyticFn::Tanh)?
        .div_h()?
        .scale_rational(&Rational::from_integer(2));
    // J₊ = (2/h)(U - 1)(U + 1)⁻¹ = (1/h) M (1 + M/2)⁻¹
    let j_plus_cayley = m
        .mul(&analytic_series(
            &m.scale_rational(&Rational::new(1, 2)),
            AnalyticFn::GeomInv,
        )?)?
        .div_h()?;

    // J₋ = ε/4 (U^{1/2} + U^{-1/2}) Y (U^{1/2} + U^{-1/2})
    let k = analytic_series(&m, AnalyticFn::Sqrt1p)?.add(&analytic_series(&m_inv, AnalyticFn::Sqrt1p)?)?;
    let j_minus_sqrt = k.mul(y)?.mul(&k)?.scale_rational(&(&eps * &Rational::new(1, 4)));
    // J₋ = ε cosh(hX/2) Y cosh(hX/2)
    let c = analytic_series(&half_hx, AnalyticFn::Cosh)?;
    let j_minus_cosh = c.mul(y)?.mul(&c)?.scale_rational(&eps);

    let j3 = h.scale_rational(&(&eps * &Rational::new(1, 2)));
    Ok(Recovered {
        x_reg,
        j_plus_tanh,
        j_plus_cayley,
        j_minus_sqrt,
        j_minus_cosh,
        j3,
    })
}

/// Assembles an [`Irrep`] from quantum generators alone, recovering `X` and
/// the classical triple through the inverse map. `h` must already be
/// diagonal.
pub fn from_quantum(
    j: HalfInt,
    epsilon: Epsilon,
    h: PolyMatrix,
    t: PolyMatrix,
    t_inv: PolyMatrix,
    y: PolyMatrix,
) -> Result<Irrep> {
    if !h.is_diagonal() {
        return Err(Error::Invariant("H is not diagonal".into()));
    }
    let rec = recover(epsilon, &h, &t, &t_inv, &y)?;
    Ok(Irrep {
        j,
        epsilon,
        basis: Basis::VermaDiagonal,
        h,
        t,
        t_inv,
        y,
        x_reg: rec.x_reg,
        j_plus: rec.j_plus_cayley,
        j_minus: rec.j_minus_sqrt,
        j3: rec.j3,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseMapReport {
    pub j: HalfInt,
    pub epsilon: Epsilon,
    /// `(check name, passed)`
    pub checks: Vec<(String, bool)>,
}

impl InverseMapReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Recomputes the classical generators from `(H, T, T⁻¹, Y)` along every
/// inverse route and demands exact agreement with the stored ones.
pub fn inverse_map_check(r: &Irrep) -> Result<InverseMapReport> {
    let rec = recover(r.epsilon, &r.h, &r.t, &r.t_inv, &r.y)?;
    let checks = vec![
        ("Xreg = log(εT)/h".to_string(), rec.x_reg == r.x_reg),
        ("J+ = (2/h) tanh(hX/2)".to_string(), rec.j_plus_tanh == r.j_plus),
        ("J+ = (2/h)(T-1)(T+1)^-1".to_string(), rec.j_plus_cayley == r.j_plus),
        (
            "J- = (T^1/2 + T^-1/2) Y (T^1/2 + T^-1/2) / 4".to_string(),
            rec.j_minus_sqrt == r.j_minus,
        ),
        (
            "J- = cosh(hX/2) Y cosh(hX/2)".to_string(),
            rec.j_minus_cosh == r.j_minus,
        ),
        ("J3 = H/2".to_string(), rec.j3 == r.j3),
    ];
    let report = InverseMapReport {
        j: r.j,
        epsilon: r.epsilon,
        checks,
    };
    if let Some((name, _)) = report.checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::InverseMapMismatch(format!(
            "j = {}, ε = {}: {name}",
            r.j, r.epsilon
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Automorphism {
    /// `T ↔ T⁻¹, Y → -Y, H → H, X → -X`
    Omega,
    /// `T → -T, T⁻¹ → -T⁻¹, Y → -Y, H → -H, X → X + iπ/h`
    Varpi,
}

impl FromStr for Automorphism {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(Automorphism::Omega),
            "varpi" => Ok(Automorphism::Varpi),
            _ => Err(Error::Parse(format!("unknown automorphism {s:?}"))),
        }
    }
}

/// The representation `ρ ∘ α`. The classical triple is transformed so that
/// the result is again the image of the map on its branch.
pub fn apply_automorphism(r: &Irrep, which: Automorphism) -> Irrep {
    let mut out = r.clone();
    match which {
        Automorphism::Omega => {
            std::mem::swap(&mut out.t, &mut out.t_inv);
            out.y = r.y.neg();
            out.x_reg = r.x_reg.neg();
            out.j_plus = r.j_plus.neg();
            out.j_minus = r.j_minus.neg();
        }
        Automorphism::Varpi => {
            out.t = r.t.neg();
            out.t_inv = r.t_inv.neg();
            out.y = r.y.neg();
            out.h = r.h.neg();
            out.epsilon = r.epsilon.flip();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spin(twice: u32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn hp(cs: &[(i64, i64)]) -> HPoly {
        HPoly::from_coeffs(cs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    fn ints(rows: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| HPoly::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn classical_ladders() {
        let c = classical_generators(spin(2));
        assert_eq!(c.j_plus, ints(&[&[0, 2, 0], &[0, 0, 2], &[0, 0, 0]]));
        let c = classical_generators(spin(3));
        let sup: Vec<_> = (0..3).map(|i| c.j_plus.get(i, i + 1).clone()).collect();
        assert_eq!(sup, vec![HPoly::from_int(3), HPoly::from_int(4), HPoly::from_int(3)]);
        let c = classical_generators(spin(0));
        assert!(c.j_plus.is_zero() && c.j_minus.is_zero() && c.j3.is_zero());
    }

    #[test]
    fn classical_sl2_relations() {
        for twice in 0..6 {
            let c = classical_generators(spin(twice));
            assert_eq!(c.j3.commutator(&c.j_plus).unwrap(), c.j_plus);
            assert_eq!(c.j3.commutator(&c.j_minus).unwrap(), c.j_minus.neg());
            assert_eq!(
                c.j_plus.commutator(&c.j_minus).unwrap(),
                c.j3.scale_rational(&Rational::from_integer(2))
            );
        }
    }

    #[test]
    fn fundamental_is_undeformed() {
        let r = build_irrep(spin(1), Epsilon::Plus).unwrap();
        assert_eq!(r.h(), &ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(r.x_reg(), &ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(r.y(), &ints(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn spin_one_matches_diagonal_display() {
        let r = build_irrep(spin(2), Epsilon::Plus).unwrap();
        let mh2 = hp(&[(0, 1), (0, 1), (-1, 2)]);
        let z = HPoly::zero;
        let y = PolyMatrix::from_rows(vec![
            vec![z(), mh2.clone(), z()],
            vec![HPoly::one(), z(), mh2],
            vec![z(), HPoly::one(), z()],
        ])
        .unwrap();
        assert_eq!(r.y(), &y);
        assert_eq!(r.x_reg(), &ints(&[&[0, 2, 0], &[0, 0, 2], &[0, 0, 0]]));
        assert_eq!(r.h(), &ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
    }

    #[test]
    fn t_is_inverse_and_exponential() {
        for twice in 0..6 {
            for eps in Epsilon::BOTH {
                let r = build_irrep(spin(twice), eps).unwrap();
                assert!(r.t().mul(r.t_inv()).unwrap().is_identity());
                assert!(r.x_reg().is_strictly_upper_triangular());
                let e = analytic_series(&r.x_reg().scale(&HPoly::h()).unwrap(), AnalyticFn::Exp).unwrap();
                assert_eq!(e.scale_rational(&eps.as_rational()), *r.t());
            }
        }
    }

    #[test]
    fn inverse_map_round_trip() {
        for twice in 0..=7 {
            for eps in Epsilon::BOTH {
                let r = build_irrep(spin(twice), eps).unwrap();
                assert!(inverse_map_check(&r).unwrap().passed());
            }
        }
    }

    #[test]
    fn inverse_map_detects_corruption() {
        let r = build_irrep(spin(2), Epsilon::Plus).unwrap();
        let bad = r.with_entry(Generator::Y, 1, 0, HPoly::from_int(2));
        assert!(matches!(inverse_map_check(&bad), Err(Error::InverseMapMismatch(_))));
    }

    #[test]
    fn omega_is_involution() {
        let r = build_irrep(spin(3), Epsilon::Plus).unwrap();
        let o = apply_automorphism(&r, Automorphism::Omega);
        assert_ne!(o, r);
        assert_eq!(apply_automorphism(&o, Automorphism::Omega), r);
        assert!(inverse_map_check(&o).unwrap().passed());
    }

    #[test]
    fn varpi_reaches_minus_branch() {
        for twice in 0..6 {
            let plus = build_irrep(spin(twice), Epsilon::Plus).unwrap();
            let minus = build_irrep(spin(twice), Epsilon::Minus).unwrap();
            let v = apply_automorphism(&plus, Automorphism::Varpi);
            assert_eq!(v.epsilon(), Epsilon::Minus);
            assert_eq!(v.parity_conjugate(), minus);
            let vo = apply_automorphism(&apply_automorphism(&plus, Automorphism::Omega), Automorphism::Varpi);
            assert_eq!(vo, minus);
        }
    }

    #[test]
    fn from_quantum_recovers_build() {
        for eps in Epsilon::BOTH {
            let r = build_irrep(spin(4), eps).unwrap();
            let q = from_quantum(
                r.j(),
                eps,
                r.h().clone(),
                r.t().clone(),
                r.t_inv().clone(),
                r.y().clone(),
            )
            .unwrap();
            assert_eq!(q, r);
        }
    }
}
