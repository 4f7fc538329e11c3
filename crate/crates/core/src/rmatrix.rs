//! Images of the universal R-matrix
//!
//! ```text
//! R = exp(-h X ⊗ T H) · exp(h T H ⊗ X)
//! ```
//!
//! on pairs of irreps, and exact Yang-Baxter checks on triples.
//!
//! Tensor products use the slot-1-major composite index
//! `(i1, i2) ↦ i1·d2 + i2`, the same convention as [`PolyMatrix::kron`].
//!
//! On the `ε = -1` branch `hX = iπ + h·Xreg`. The `iπ` part of each
//! exponent commutes with the nilpotent part and is exponentiated on its
//! own slot with [`exp_ipi_triangular`], which keeps every entry in `Q[h]`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::analytic::{analytic_series, exp_ipi_triangular, upper_triangular_inverse, AnalyticFn, Sign};
use crate::matrix::{PolyMatrix, Witness};
use crate::numeric::CMatrix;
use crate::represent::{build_irrep, Basis, Irrep};
use crate::ring::HPoly;
use crate::spin::{Epsilon, HalfInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    pub j1: HalfInt,
    pub eps1: Epsilon,
    pub j2: HalfInt,
    pub eps2: Epsilon,
    pub matrix: PolyMatrix,
}

#[derive(Serialize)]
pub struct RMatrixJson<'a> {
    pub j1: HalfInt,
    pub eps1: Epsilon,
    pub j2: HalfInt,
    pub eps2: Epsilon,
    pub dimension: usize,
    pub matrix: &'a PolyMatrix,
}

impl RMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Product of the diagonal; `±1` for every valid R-matrix.
    pub fn det(&self) -> HPoly {
        self.matrix.diagonal().iter().fold(HPoly::one(), |acc, d| &acc * d)
    }

    pub fn inverse(&self) -> Result<PolyMatrix> {
        upper_triangular_inverse(&self.matrix)
    }

    pub fn to_json(&self) -> RMatrixJson<'_> {
        RMatrixJson {
            j1: self.j1,
            eps1: self.eps1,
            j2: self.j2,
            eps2: self.eps2,
            dimension: self.dim(),
            matrix: &self.matrix,
        }
    }
}

/// `exp(N)` for nilpotent `N`.
fn exp_nilpotent(n: &PolyMatrix) -> Result<PolyMatrix> {
    analytic_series(n, AnalyticFn::Exp)
}

fn ensure_commute(a: &PolyMatrix, b: &PolyMatrix, what: &str) -> Result<()> {
    if a.commutator(b)?.is_zero() {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "{what}: split exponential factors do not commute"
        )))
    }
}

pub fn universal_r(r1: &Irrep, r2: &Irrep) -> Result<RMatrix> {
    for r in [r1, r2] {
        if r.basis() != Basis::VermaDiagonal {
            return Err(Error::BasisMismatch(format!("{:?}", r.basis())));
        }
    }
    let (d1, d2) = (r1.dim(), r2.dim());
    let h = HPoly::h();
    let b1 = r1.t().mul(r1.h())?;
    let b2 = r2.t().mul(r2.h())?;

    let n1 = r1.x_reg().kron(&b2)?.scale(&-&h)?;
    let mut factor1 = exp_nilpotent(&n1)?;
    if r1.epsilon() == Epsilon::Minus {
        let lift = PolyMatrix::identity(d1).kron(&exp_ipi_triangular(&b2, Sign::Minus)?)?;
        ensure_commute(&PolyMatrix::identity(d1).kron(&b2)?, &n1, "first factor")?;
        factor1 = lift.mul(&factor1)?;
    }

    let n2 = b1.kron(r2.x_reg())?.scale(&h)?;
    let mut factor2 = exp_nilpotent(&n2)?;
    if r2.epsilon() == Epsilon::Minus {
        let lift = exp_ipi_triangular(&b1, Sign::Plus)?.kron(&PolyMatrix::identity(d2))?;
        ensure_commute(&b1.kron(&PolyMatrix::identity(d2))?, &n2, "second factor")?;
        factor2 = lift.mul(&factor2)?;
    }

    Ok(RMatrix {
        j1: r1.j(),
        eps1: r1.epsilon(),
        j2: r2.j(),
        eps2: r2.epsilon(),
        matrix: factor1.mul(&factor2)?,
    })
}

/// Builds both irreps and evaluates the R-matrix on them.
pub fn r_matrix(j1: HalfInt, eps1: Epsilon, j2: HalfInt, eps2: Epsilon) -> Result<RMatrix> {
    universal_r(&build_irrep(j1, eps1)?, &build_irrep(j2, eps2)?)
}

/// Entrywise evaluation at `h = h0`.
pub fn specialize(r: &RMatrix, h0: Complex64) -> CMatrix {
    r.matrix.eval(h0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YbeReport {
    pub triple: [(HalfInt, Epsilon); 3],
    pub dimension: usize,
    pub passed: bool,
    /// First nonzero entry of `R12 R13 R23 - R23 R13 R12`.
    pub witness: Option<Witness>,
}

/// `R` acting on slots 1 and 3 of `V1 ⊗ V2 ⊗ V3`, by index arithmetic.
fn embed_13(r13: &PolyMatrix, d1: usize, d2: usize, d3: usize) -> PolyMatrix {
    let n = d1 * d2 * d3;
    let mut out = PolyMatrix::zeros(n, n);
    for a1 in 0..d1 {
        for a3 in 0..d3 {
            for b1 in 0..d1 {
                for b3 in 0..d3 {
                    let v = r13.get(a1 * d3 + a3, b1 * d3 + b3);
                    if v.is_zero() {
                        continue;
                    }
                    for k in 0..d2 {
                        out.set((a1 * d2 + k) * d3 + a3, (b1 * d2 + k) * d3 + b3, v.clone());
                    }
                }
            }
        }
    }
    out
}

/// `R12 R13 R23 - R23 R13 R12` over `V1 ⊗ V2 ⊗ V3`.
pub fn ybe_difference(triple: [(HalfInt, Epsilon); 3]) -> Result<PolyMatrix> {
    let reps = triple
        .iter()
        .map(|&(j, e)| build_irrep(j, e))
        .collect::<Result<Vec<_>>>()?;
    let (d1, d2, d3) = (reps[0].dim(), reps[1].dim(), reps[2].dim());
    let r12 = universal_r(&reps[0], &reps[1])?
        .matrix
        .kron(&PolyMatrix::identity(d3))?;
    let r23 = PolyMatrix::identity(d1).kron(&universal_r(&reps[1], &reps[2])?.matrix)?;
    let r13 = embed_13(&universal_r(&reps[0], &reps[2])?.matrix, d1, d2, d3);
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    lhs.sub(&rhs)
}

pub fn check_ybe(triple: [(HalfInt, Epsilon); 3]) -> Result<YbeReport> {
    let diff = ybe_difference(triple)?;
    let witness = diff.witness();
    Ok(YbeReport {
        triple,
        dimension: diff.rows(),
        passed: witness.is_none(),
        witness,
    })
}

/// Parses `"1/2:+1,1:+1,3/2:-1"`.
pub fn parse_triple(s: &str) -> Result<[(HalfInt, Epsilon); 3]> {
    let parts = s
        .split(',')
        .map(|item| {
            let (j, e) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected j:eps, got {item:?}")))?;
            Ok((j.parse()?, e.parse()?))
        })
        .collect::<Result<Vec<_>>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<_>| Error::Parse(format!("expected three j:eps pairs, got {}", v.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    fn half(t: u32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn m(c: i64, p: usize) -> HPoly {
        HPoly::monomial(Rational::from_integer(c), p)
    }

    #[test]
    fn fundamental_pair_is_upper_unitriangular() {
        let r = r_matrix(half(1), Epsilon::Plus, half(1), Epsilon::Plus).unwrap();
        assert!(r.matrix.is_upper_triangular());
        assert_eq!(r.det(), HPoly::one());
        assert_eq!(r.matrix.get(0, 1), &m(1, 1));
        assert_eq!(r.matrix.get(0, 2), &m(-1, 1));
    }

    #[test]
    fn spin_half_spin_one_corner_entries() {
        let r = r_matrix(half(1), Epsilon::Plus, half(2), Epsilon::Plus).unwrap();
        assert_eq!(r.matrix.get(0, 1), &m(2, 1));
        assert_eq!(r.matrix.get(0, 3), &m(-2, 1));
        assert_eq!(r.matrix.get(0, 5), &HPoly::zero());
    }

    #[test]
    fn minus_branch_diagonal() {
        let r = r_matrix(half(1), Epsilon::Plus, half(1), Epsilon::Minus).unwrap();
        assert_eq!(r.matrix.diagonal(), vec![HPoly::from_int(-1); 4]);
        assert_eq!(r.matrix.get(0, 3), &m(1, 2));
        let r = r_matrix(half(2), Epsilon::Minus, half(1), Epsilon::Minus).unwrap();
        assert!(r.det() == HPoly::one() || r.det() == HPoly::from_int(-1));
    }

    #[test]
    fn inverse_is_exact() {
        let r = r_matrix(half(3), Epsilon::Minus, half(2), Epsilon::Plus).unwrap();
        assert!(r.matrix.mul(&r.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn specialize_at_zero() {
        let r = r_matrix(half(2), Epsilon::Plus, half(3), Epsilon::Plus).unwrap();
        assert!(specialize(&r, Complex64::new(0.0, 0.0)).distance(&CMatrix::identity(12)) == 0.0);
    }

    #[test]
    fn embed_13_matches_swap_conjugation() {
        let r = r_matrix(half(1), Epsilon::Plus, half(2), Epsilon::Minus)
            .unwrap()
            .matrix;
        let (d1, d2, d3) = (2, 2, 3);
        let e = embed_13(&r, d1, d2, d3);
        // P_{23} (R ⊗ I) P_{23}
        let n = d1 * d2 * d3;
        let swap = PolyMatrix::from_fn(n, n, |row, col| {
            let (a1, a2, a3) = (row / (d2 * d3), (row / d3) % d2, row % d3);
            if col == (a1 * d3 + a3) * d2 + a2 {
                HPoly::one()
            } else {
                HPoly::zero()
            }
        });
        let lifted = r.kron(&PolyMatrix::identity(d2)).unwrap();
        let expect = swap.mul(&lifted).unwrap().mul(&swap.transpose()).unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn ybe_small_triples() {
        for t in ["1/2:+1,1/2:+1,1/2:+1", "1/2:+1,1/2:-1,1/2:-1", "1/2:-1,1:+1,1/2:-1"] {
            let report = check_ybe(parse_triple(t).unwrap()).unwrap();
            assert!(report.passed, "{t}: {:?}", report.witness);
        }
    }

    #[test]
    fn triple_parsing() {
        assert!(parse_triple("1/2:+1,1:+1").is_err());
        assert!(parse_triple("1/2:+1,1:2,1:+1").is_err());
        assert_eq!(parse_triple("3/2:-1,0:+1,1:+1").unwrap()[0], (half(3), Epsilon::Minus));
    }
}
