//! The symmetric (hermitian at `h = 0`) basis `w_m^j`, where the classical
//! generators act through `a_m = sqrt((j-m)(j+m+1))`. Its matrix entries
//! involve square roots, so this basis is handled numerically.
//!
//! [`symmetric_oracle`] evaluates the closed-form basis actions of `X`, `T`
//! and `Y` term by term; [`to_symmetric_basis`] conjugates an exact
//! representation into this basis and checks it against those formulas.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fcoeff::f_closed;
use crate::numeric::CMatrix;
use crate::represent::{Basis, Generator, Irrep};
use crate::spin::{Epsilon, HalfInt};

pub const ORACLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymGenerator {
    X,
    T,
    Y,
}

/// One term `coeff · h^power · w_{target}` of a basis action.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymTerm {
    /// `2 m'`
    pub twice_target: i64,
    pub power: u32,
    pub coeff: f64,
}

/// `a_m` with `m = twice_m / 2`; vanishes at and beyond the top weight.
fn a(twice_j: i64, twice_m: i64) -> f64 {
    let p = (twice_j - twice_m) * (twice_j + twice_m + 2);
    if p <= 0 {
        0.0
    } else {
        (p as f64 / 4.0).sqrt()
    }
}

/// `a_m a_{m+1} ... a_{m+len-1}`
fn a_run(twice_j: i64, twice_m: i64, len: i64) -> f64 {
    (0..len).map(|s| a(twice_j, twice_m + 2 * s)).product()
}

/// `ψ_s(m) = a_m ... a_{m+2s-1}`
fn psi(twice_j: i64, twice_m: i64, s: i64) -> f64 {
    a_run(twice_j, twice_m, 2 * s)
}

/// `ζ_k = (1/k!) ∏_{s<k} (1/2 - s)`, the binomial coefficients of `sqrt(1+x)`.
fn zeta(k: i64) -> f64 {
    (0..k).fold(1.0, |acc, s| acc * (0.5 - s as f64) / (s + 1) as f64)
}

/// Closed-form action of `X`, `T` or `Y` on `w_m^j`, `ε = +1`.
pub fn symmetric_oracle(j: HalfInt, twice_m: i64, generator: SymGenerator) -> Result<Vec<SymTerm>> {
    let tj = j.twice() as i64;
    if twice_m.abs() > tj || (tj - twice_m) % 2 != 0 {
        return Err(Error::WeightOutOfRange {
            twice_j: j.twice(),
            twice_m,
        });
    }
    // n = j - m
    let n = (tj - twice_m) / 2;
    let mut out = Vec::new();
    match generator {
        SymGenerator::X => {
            if n >= 1 {
                let f = f_closed(((n - 1) / 2) as usize);
                for k in 0..=(n - 1) / 2 {
                    out.push(SymTerm {
                        twice_target: twice_m + 2 * (2 * k + 1),
                        power: 2 * k as u32,
                        coeff: f.values()[k as usize].to_f64() * a_run(tj, twice_m, 2 * k + 1),
                    });
                }
            }
        }
        SymGenerator::T => {
            out.push(SymTerm {
                twice_target: twice_m,
                power: 0,
                coeff: 1.0,
            });
            for k in 1..=n {
                out.push(SymTerm {
                    twice_target: twice_m + 2 * k,
                    power: k as u32,
                    coeff: a_run(tj, twice_m, k) / 2f64.powi(k as i32 - 1),
                });
            }
        }
        SymGenerator::Y => {
            for k in 0..=(n + 1) / 2 {
                let twice_target = twice_m + 2 * (2 * k - 1);
                if twice_target < -tj || twice_target > tj {
                    continue;
                }
                // J₊^{2s} J₋ J₊^{2k-2s} applied to w_m
                let inner: f64 = (0..=k)
                    .map(|s| {
                        let mid = twice_m + 2 * (2 * k - 2 * s - 1);
                        zeta(s) * zeta(k - s) * psi(tj, mid, s) * a(tj, mid) * psi(tj, twice_m, k - s)
                    })
                    .sum();
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                out.push(SymTerm {
                    twice_target,
                    power: 2 * k as u32,
                    coeff: sign * inner / 4f64.powi(k as i32),
                });
            }
        }
    }
    Ok(out)
}

/// Numeric generators in the symmetric basis, rows/columns ordered
/// `m = j, j-1, ..., -j`.
#[derive(Debug, Clone, Serialize)]
pub struct NumericIrrep {
    pub j: HalfInt,
    pub epsilon: Epsilon,
    pub basis: Basis,
    pub h0: [f64; 2],
    pub generators: Vec<(String, CMatrix)>,
}

impl NumericIrrep {
    pub fn get(&self, g: Generator) -> &CMatrix {
        &self
            .generators
            .iter()
            .find(|(name, _)| name == g.name())
            .expect("all generators present")
            .1
    }
}

/// Diagonal of the basis change `w_{j-k} = v_k / c_k`:
/// `c_0 = 1`, `c_{k+1} = c_k sqrt((k+1)(2j-k))`.
fn scaling(j: HalfInt) -> Vec<f64> {
    let tj = j.twice() as i64;
    let mut c = vec![1.0];
    for k in 0..tj {
        let last = *c.last().unwrap();
        c.push(last * (((k + 1) * (tj - k)) as f64).sqrt());
    }
    c
}

fn oracle_matrix(j: HalfInt, g: SymGenerator, h0: Complex64) -> Result<CMatrix> {
    let tj = j.twice() as i64;
    let d = j.dim();
    let mut m = CMatrix::zeros(d, d);
    for col in 0..d {
        let twice_m = tj - 2 * col as i64;
        for term in symmetric_oracle(j, twice_m, g)? {
            let row = ((tj - term.twice_target) / 2) as usize;
            let v = m.get(row, col) + h0.powu(term.power) * term.coeff;
            m.set(row, col, v);
        }
    }
    Ok(m)
}

/// Conjugates `r` into the symmetric basis at `h = h0` and verifies `X`,
/// `T` and `Y` against [`symmetric_oracle`].
pub fn to_symmetric_basis(r: &Irrep, h0: Complex64) -> Result<NumericIrrep> {
    if r.epsilon() != Epsilon::Plus {
        return Err(Error::WrongBranch);
    }
    let c = scaling(r.j());
    let conj = |m: &CMatrix| CMatrix::from_fn(m.rows(), m.cols(), |i, l| m.get(i, l) * (c[i] / c[l]));
    let generators: Vec<(String, CMatrix)> = Generator::ALL
        .iter()
        .map(|&g| (g.name().to_string(), conj(&r.generator(g).eval(h0))))
        .collect();
    let out = NumericIrrep {
        j: r.j(),
        epsilon: r.epsilon(),
        basis: Basis::SymmetricNumeric,
        h0: [h0.re, h0.im],
        generators,
    };
    for (g, sg) in [
        (Generator::XReg, SymGenerator::X),
        (Generator::T, SymGenerator::T),
        (Generator::Y, SymGenerator::Y),
    ] {
        let expect = oracle_matrix(r.j(), sg, h0)?;
        let got = out.get(g);
        let scale = expect.max_abs().max(1.0);
        let err = got.distance(&expect);
        if err > ORACLE_TOLERANCE * scale {
            return Err(Error::OracleMismatch(format!(
                "{} for j = {} at h = {h0}: deviation {err:e}",
                g.name(),
                r.j()
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::represent::build_irrep;

    fn spin(twice: u32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn x_annihilates_top() {
        for t in 0..6 {
            assert!(symmetric_oracle(spin(t), t as i64, SymGenerator::X).unwrap().is_empty());
        }
    }

    #[test]
    fn t_fixes_top() {
        let terms = symmetric_oracle(spin(3), 3, SymGenerator::T).unwrap();
        assert_eq!(
            terms,
            vec![SymTerm {
                twice_target: 3,
                power: 0,
                coeff: 1.0
            }]
        );
    }

    #[test]
    fn x_spin_one_bottom() {
        let terms = symmetric_oracle(spin(2), -2, SymGenerator::X).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].twice_target, terms[0].power), (0, 0));
        assert!((terms[0].coeff - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_weight() {
        assert!(symmetric_oracle(spin(2), 4, SymGenerator::Y).is_err());
        assert!(symmetric_oracle(spin(2), 1, SymGenerator::Y).is_err());
    }

    #[test]
    fn fundamental_is_unchanged() {
        let r = build_irrep(spin(1), Epsilon::Plus).unwrap();
        let n = to_symmetric_basis(&r, Complex64::new(0.4, 0.0)).unwrap();
        assert_eq!(n.get(Generator::XReg).get(0, 1), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn spin_one_at_zero() {
        let r = build_irrep(spin(2), Epsilon::Plus).unwrap();
        let n = to_symmetric_basis(&r, Complex64::new(0.0, 0.0)).unwrap();
        let x = n.get(Generator::XReg);
        assert!((x.get(0, 1).re - 2f64.sqrt()).abs() < 1e-14);
        assert!((x.get(1, 2).re - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_exact_route() {
        for t in 0..=7 {
            let r = build_irrep(spin(t), Epsilon::Plus).unwrap();
            for h0 in [Complex64::new(0.3, 0.0), Complex64::new(-0.7, 0.2)] {
                to_symmetric_basis(&r, h0).unwrap();
            }
        }
    }

    #[test]
    fn hermitian_at_zero() {
        for t in 0..=7 {
            let r = build_irrep(spin(t), Epsilon::Plus).unwrap();
            let n = to_symmetric_basis(&r, Complex64::new(0.0, 0.0)).unwrap();
            let h = n.get(Generator::H);
            assert!(h.distance(&h.transpose()) < 1e-14);
            let x = n.get(Generator::XReg);
            assert!(x.distance(&n.get(Generator::Y).transpose()) < 1e-12);
        }
    }

    #[test]
    fn minus_branch_rejected() {
        let r = build_irrep(spin(1), Epsilon::Minus).unwrap();
        assert_eq!(
            to_symmetric_basis(&r, Complex64::new(0.1, 0.0)).unwrap_err(),
            Error::WrongBranch
        );
    }
}
