//! Verification suites over the exact representations: defining relations,
//! the Casimir element, automorphisms, and agreement between the map route,
//! the Verma route and the numeric symmetric-basis oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::analytic::{analytic_series, AnalyticFn};
use crate::matrix::{PolyMatrix, Witness};
use crate::numeric::CMatrix;
use crate::represent::{apply_automorphism, build_irrep, inverse_map_check, Automorphism, Generator, Irrep};
use crate::ring::{HPoly, Rational};
use crate::spin::{Epsilon, HalfInt};
use crate::symmetric::to_symmetric_basis;
use crate::verma::{build_verma, find_singular, quotient_irrep};

/// Tolerance for exact-versus-float comparisons on the `ε = -1` branch.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Wall-clock milliseconds per check id. Kept out of the default
    /// serialization so reports are byte-deterministic.
    #[serde(skip)]
    pub timings: BTreeMap<String, f64>,
}

#[derive(Serialize)]
struct TimedReport<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    metadata: Metadata<'a>,
}

#[derive(Serialize)]
struct Metadata<'a> {
    timings_ms: &'a BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    /// Runs one check. `Ok(None)` passes, `Ok(Some(w))` fails with witness
    /// `w`, an error fails with its message.
    pub fn run(&mut self, id: impl Into<String>, f: impl FnOnce() -> Result<Option<Witness>>) {
        let id = id.into();
        let start = Instant::now();
        let outcome = f();
        self.timings.insert(id.clone(), start.elapsed().as_secs_f64() * 1e3);
        let check = match outcome {
            Ok(None) => Check {
                id,
                status: Status::Pass,
                witness: None,
                message: None,
            },
            Ok(Some(w)) => Check {
                id,
                status: Status::Fail,
                witness: Some(w),
                message: None,
            },
            Err(e) => Check {
                id,
                status: Status::Fail,
                witness: None,
                message: Some(e.to_string()),
            },
        };
        self.passed &= check.status != Status::Fail;
        self.checks.push(check);
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: &str) {
        self.checks.push(Check {
            id: id.into(),
            status: Status::Skipped,
            witness: None,
            message: Some(reason.to_string()),
        });
    }

    /// Appends the checks of `other`, prefixing nothing; ids are already
    /// unique per suite.
    pub fn merge(&mut self, other: VerificationReport) {
        self.passed &= other.passed;
        self.checks.extend(other.checks);
        self.timings.extend(other.timings);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self, with_timings: bool) -> String {
        let out = if with_timings {
            serde_json::to_string_pretty(&TimedReport {
                report: self,
                metadata: Metadata {
                    timings_ms: &self.timings,
                },
            })
        } else {
            serde_json::to_string_pretty(self)
        };
        out.expect("report serializes")
    }
}

fn exact_eq(lhs: &PolyMatrix, rhs: &PolyMatrix) -> Result<Option<Witness>> {
    Ok(lhs.sub(rhs)?.witness())
}

fn numeric_eq(lhs: &CMatrix, rhs: &CMatrix, tol: f64) -> Option<Witness> {
    let diff = lhs.sub(rhs);
    let scale = lhs.max_abs().max(rhs.max_abs()).max(1.0);
    let mut worst = (0, 0, 0.0f64);
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            let d = diff.get(i, j).norm();
            if d > worst.2 {
                worst = (i, j, d);
            }
        }
    }
    (worst.2 > tol * scale).then(|| Witness {
        row: worst.0,
        col: worst.1,
        value: format!("deviation {:e}", worst.2),
    })
}

fn half(h: &HPoly, r: i64) -> HPoly {
    h.scale(&Rational::new(r, 2))
}

/// Named relation outcomes: `Ok(None)` holds, `Ok(Some(w))` fails at `w`.
pub type RelationOutcomes = Vec<(&'static str, Result<Option<Witness>>)>;

/// The defining relations in `T`-form, named as in the report ids.
pub fn t_form_relations(r: &Irrep) -> RelationOutcomes {
    let (h, t, ti, y) = (r.h(), r.t(), r.t_inv(), r.y());
    let id = PolyMatrix::identity(r.dim());
    let hp = HPoly::h();
    let rel = |f: &dyn Fn() -> Result<Option<Witness>>| f();
    vec![
        ("T T^-1 = 1", rel(&|| exact_eq(&t.mul(ti)?, &id))),
        ("T^-1 T = 1", rel(&|| exact_eq(&ti.mul(t)?, &id))),
        (
            "[H,T] = T^2 - 1",
            rel(&|| exact_eq(&h.commutator(t)?, &t.mul(t)?.sub(&id)?)),
        ),
        (
            "[H,T^-1] = T^-2 - 1",
            rel(&|| exact_eq(&h.commutator(ti)?, &ti.mul(ti)?.sub(&id)?)),
        ),
        (
            "[H,Y] = -(YT + TY + YT^-1 + T^-1Y)/2",
            rel(&|| {
                let s = y.anticommutator(t)?.add(&y.anticommutator(ti)?)?;
                exact_eq(&h.commutator(y)?, &s.scale_rational(&Rational::new(-1, 2)))
            }),
        ),
        (
            "[Y,T] = -h(HT + TH)/2",
            rel(&|| exact_eq(&y.commutator(t)?, &h.anticommutator(t)?.scale(&half(&hp, -1))?)),
        ),
        (
            "[Y,T^-1] = h(HT^-1 + T^-1H)/2",
            rel(&|| exact_eq(&y.commutator(ti)?, &h.anticommutator(ti)?.scale(&half(&hp, 1))?)),
        ),
    ]
}

/// `X`-form relations, exact, for `ε = +1` where `X = Xreg` is nilpotent.
pub fn x_form_relations_exact(r: &Irrep) -> Result<RelationOutcomes> {
    if r.epsilon() != Epsilon::Plus {
        return Err(Error::WrongBranch);
    }
    let (h, y, x) = (r.h(), r.y(), r.x_reg());
    let hx = x.scale(&HPoly::h())?;
    let sinh = analytic_series(&hx, AnalyticFn::Sinh)?;
    let cosh = analytic_series(&hx, AnalyticFn::Cosh)?;
    let exp = analytic_series(&hx, AnalyticFn::Exp)?;
    Ok(vec![
        (
            "[H,X] = 2 sinh(hX)/h",
            (|| {
                exact_eq(
                    &h.commutator(x)?,
                    &sinh.div_h()?.scale_rational(&Rational::from_integer(2)),
                )
            })(),
        ),
        (
            "[H,Y] = -Y cosh(hX) - cosh(hX) Y",
            (|| exact_eq(&h.commutator(y)?, &y.anticommutator(&cosh)?.neg()))(),
        ),
        ("[X,Y] = H", (|| exact_eq(&x.commutator(y)?, h))()),
        ("T = exp(hX)", exact_eq(r.t(), &exp)),
    ])
}

/// `X`-form relations at a numeric `h0`, with `X = iπ(1-ε)/(2h) + Xreg`.
pub fn x_form_relations_numeric(r: &Irrep, h0: Complex64, tol: f64) -> Vec<(&'static str, Option<Witness>)> {
    let n = r.dim();
    let shift = if r.epsilon() == Epsilon::Minus {
        Complex64::new(0.0, std::f64::consts::PI) / h0
    } else {
        Complex64::new(0.0, 0.0)
    };
    let x = r.x_reg().eval(h0).add(&CMatrix::identity(n).scale(shift));
    let (h, y, t) = (r.h().eval(h0), r.y().eval(h0), r.t().eval(h0));
    let e_plus = x.scale(h0).expm();
    let e_minus = x.scale(-h0).expm();
    let sinh = e_plus.sub(&e_minus).scale(Complex64::new(0.5, 0.0));
    let cosh = e_plus.add(&e_minus).scale(Complex64::new(0.5, 0.0));
    vec![
        (
            "[H,X] = 2 sinh(hX)/h",
            numeric_eq(&h.commutator(&x), &sinh.scale(2.0 / h0), tol),
        ),
        (
            "[H,Y] = -Y cosh(hX) - cosh(hX) Y",
            numeric_eq(
                &h.commutator(&y),
                &y.mul(&cosh).add(&cosh.mul(&y)).scale(Complex64::new(-1.0, 0.0)),
                tol,
            ),
        ),
        ("[X,Y] = H", numeric_eq(&x.commutator(&y), &h, tol)),
        ("T = exp(hX)", numeric_eq(&t, &e_plus, tol)),
    ]
}

/// Sample points for the numeric `X`-form checks.
pub fn numeric_samples() -> [Complex64; 2] {
    [Complex64::new(0.1, 0.0), Complex64::new(0.3, 0.2)]
}

fn rep_id(suite: &str, j: HalfInt, eps: Epsilon) -> String {
    format!("{suite}/j={j}/eps={eps}")
}

/// Adds every relation check for one representation to `report`.
pub fn relation_checks(report: &mut VerificationReport, r: &Irrep) {
    let base = rep_id("relations", r.j(), r.epsilon());
    for (name, outcome) in t_form_relations(r) {
        report.run(format!("{base}/{name}"), || outcome);
    }
    match r.epsilon() {
        Epsilon::Plus => match x_form_relations_exact(r) {
            Ok(checks) => {
                for (name, outcome) in checks {
                    report.run(format!("{base}/exact/{name}"), || outcome);
                }
            }
            Err(e) => report.run(format!("{base}/exact"), || Err(e)),
        },
        Epsilon::Minus => {
            for h0 in numeric_samples() {
                for (name, w) in x_form_relations_numeric(r, h0, NUMERIC_TOLERANCE) {
                    report.run(format!("{base}/h={h0}/{name}"), || Ok(w));
                }
            }
        }
    }
}

pub fn run_relation_suite(j_max: HalfInt) -> VerificationReport {
    let mut report = VerificationReport::new("relations");
    for j in j_max.up_to() {
        for eps in Epsilon::BOTH {
            match build_irrep(j, eps) {
                Ok(r) => relation_checks(&mut report, &r),
                Err(e) => report.run(rep_id("relations", j, eps), || Err(e)),
            }
        }
    }
    report
}

/// `C` from `(H, T, T⁻¹, Y)`:
/// `(YT - YT⁻¹ + TY - T⁻¹Y)/(4h) + H²/4 + (T² + T⁻² - 2)/16`.
/// The bracket must be divisible by `h`.
pub fn casimir_t_form(h: &PolyMatrix, t: &PolyMatrix, t_inv: &PolyMatrix, y: &PolyMatrix) -> Result<PolyMatrix> {
    let n = h.rows();
    let bracket = y.mul(t)?.sub(&y.mul(t_inv)?)?.add(&t.mul(y)?)?.sub(&t_inv.mul(y)?)?;
    let first = bracket.div_h()?.scale_rational(&Rational::new(1, 4));
    let second = h.mul(h)?.scale_rational(&Rational::new(1, 4));
    let third = t
        .mul(t)?
        .add(&t_inv.mul(t_inv)?)?
        .sub(&PolyMatrix::identity(n).scale_rational(&Rational::from_integer(2)))?
        .scale_rational(&Rational::new(1, 16));
    first.add(&second)?.add(&third)
}

/// `(J₊J₋ + J₋J₊)/2 + J₃²`
pub fn casimir_classical(r: &Irrep) -> Result<PolyMatrix> {
    let (jp, jm, j3) = (r.j_plus(), r.j_minus(), r.j3());
    jp.anticommutator(jm)?
        .scale_rational(&Rational::new(1, 2))
        .add(&j3.mul(j3)?)
}

/// `(Y sinh hX + sinh hX Y)/(2h) + H²/4 + (sinh hX)²/4`, `ε = +1` only.
pub fn casimir_sinh_form(r: &Irrep) -> Result<PolyMatrix> {
    if r.epsilon() != Epsilon::Plus {
        return Err(Error::WrongBranch);
    }
    let sinh = analytic_series(&r.x_reg().scale(&HPoly::h())?, AnalyticFn::Sinh)?;
    let quarter = Rational::new(1, 4);
    r.y()
        .anticommutator(&sinh)?
        .div_h()?
        .scale_rational(&Rational::new(1, 2))
        .add(&r.h().mul(r.h())?.scale_rational(&quarter))?
        .add(&sinh.mul(&sinh)?.scale_rational(&quarter))
}

/// The Casimir element in `T`-form, cross-checked exactly against the
/// classical form and, for `ε = +1`, the `sinh` form.
pub fn casimir(r: &Irrep) -> Result<PolyMatrix> {
    let c = casimir_t_form(r.h(), r.t(), r.t_inv(), r.y())?;
    if let Some(w) = c.sub(&casimir_classical(r)?)?.witness() {
        return Err(Error::Invariant(format!(
            "Casimir T-form and classical form differ at ({}, {}): {}",
            w.row, w.col, w.value
        )));
    }
    if r.epsilon() == Epsilon::Plus {
        if let Some(w) = c.sub(&casimir_sinh_form(r)?)?.witness() {
            return Err(Error::Invariant(format!(
                "Casimir T-form and sinh form differ at ({}, {}): {}",
                w.row, w.col, w.value
            )));
        }
    }
    Ok(c)
}

fn scalar(n: usize, c: Rational) -> PolyMatrix {
    PolyMatrix::scalar(n, &HPoly::constant(c))
}

pub fn run_casimir_suite(j_max: HalfInt) -> VerificationReport {
    let mut report = VerificationReport::new("casimir");
    for j in j_max.up_to() {
        for eps in Epsilon::BOTH {
            let base = rep_id("casimir", j, eps);
            let r = match build_irrep(j, eps) {
                Ok(r) => r,
                Err(e) => {
                    report.run(base, || Err(e));
                    continue;
                }
            };
            let c = casimir(&r);
            let expect = scalar(r.dim(), j.casimir_value());
            report.run(format!("{base}/C = j(j+1)"), || {
                exact_eq(c.as_ref().map_err(Clone::clone)?, &expect)
            });
            for g in [Generator::H, Generator::T, Generator::TInv, Generator::Y] {
                report.run(format!("{base}/[C,{}] = 0", g.name()), || {
                    Ok(c.as_ref().map_err(Clone::clone)?.commutator(r.generator(g))?.witness())
                });
            }
            for (name, a) in [("omega", Automorphism::Omega), ("varpi", Automorphism::Varpi)] {
                report.run(format!("{base}/C invariant under {name}"), || {
                    let image = apply_automorphism(&r, a);
                    exact_eq(&casimir(&image)?, c.as_ref().map_err(Clone::clone)?)
                });
            }
        }
    }
    report
}

/// Singular vectors printed in the literature for `λ ≤ 3`, as
/// `(power, coefficient)` monomials on `w_1..w_{λ+1}`.
fn singular_fixture(lambda: u32) -> Option<Vec<Option<(usize, i64)>>> {
    match lambda {
        0 => Some(vec![Some((0, 1))]),
        1 => Some(vec![None, Some((0, 1))]),
        2 => Some(vec![Some((2, 1)), None, Some((0, 1))]),
        3 => Some(vec![None, Some((2, 6)), None, Some((0, 1))]),
        _ => None,
    }
}

pub fn run_equivalence_suite(lambda_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("equivalence");
    for lambda in 0..=lambda_max {
        let j = HalfInt::from_twice(lambda);
        for eps in Epsilon::BOTH {
            let base = format!("equivalence/lambda={lambda}/eps={eps}");
            let built = build_irrep(j, eps);
            let vm = build_verma(lambda, eps, lambda as usize + 2);
            let sv = vm.as_ref().map_err(Clone::clone).and_then(find_singular);
            if let Some(fixture) = singular_fixture(lambda) {
                report.run(format!("{base}/singular vector"), || {
                    let sv = sv.as_ref().map_err(Clone::clone)?;
                    let expect: Vec<HPoly> = fixture
                        .iter()
                        .map(|m| m.map_or_else(HPoly::zero, |(p, c)| HPoly::monomial(Rational::from_integer(c), p)))
                        .collect();
                    Ok(sv
                        .coefficients
                        .iter()
                        .zip(&expect)
                        .position(|(a, b)| a != b)
                        .map(|k| Witness {
                            row: k + 1,
                            col: 0,
                            value: sv.coefficients[k].to_string(),
                        }))
                });
            } else {
                report.skip(format!("{base}/singular vector"), "no published fixture");
            }
            let quotient = vm
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|vm| quotient_irrep(vm, sv.as_ref().map_err(Clone::clone)?));
            report.run(format!("{base}/quotient Casimir = j(j+1)"), || {
                let q = quotient.as_ref().map_err(Clone::clone)?;
                exact_eq(
                    &casimir_t_form(&q.h, &q.t, &q.t_inv, &q.y)?,
                    &scalar(lambda as usize + 1, j.casimir_value()),
                )
            });
            report.run(format!("{base}/quotient route = map route"), || {
                let q = quotient.as_ref().map_err(Clone::clone)?.diagonalized()?;
                let b = built.as_ref().map_err(Clone::clone)?;
                for g in Generator::ALL {
                    if let Some(w) = exact_eq(q.generator(g), b.generator(g))? {
                        return Ok(Some(Witness {
                            value: format!("{}: {}", g.name(), w.value),
                            ..w
                        }));
                    }
                }
                Ok(None)
            });
            report.run(format!("{base}/inverse map"), || {
                inverse_map_check(built.as_ref().map_err(Clone::clone)?).map(|_| None)
            });
            if eps == Epsilon::Plus {
                for h0 in numeric_samples() {
                    report.run(format!("{base}/symmetric basis oracle h={h0}"), || {
                        to_symmetric_basis(built.as_ref().map_err(Clone::clone)?, h0).map(|_| None)
                    });
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Casimir,
    Equivalence,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "casimir" => Ok(Suite::Casimir),
            "equivalence" => Ok(Suite::Equivalence),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Casimir => "casimir",
            Suite::Equivalence => "equivalence",
            Suite::All => "all",
        })
    }
}

pub fn run_suite(suite: Suite, j_max: HalfInt) -> VerificationReport {
    match suite {
        Suite::Relations => run_relation_suite(j_max),
        Suite::Casimir => run_casimir_suite(j_max),
        Suite::Equivalence => run_equivalence_suite(j_max.twice()),
        Suite::All => {
            let mut all = VerificationReport::new("all");
            all.merge(run_relation_suite(j_max));
            all.merge(run_casimir_suite(j_max));
            all.merge(run_equivalence_suite(j_max.twice()));
            all
        }
    }
}

/// One single-entry perturbation of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub generator: &'static str,
    pub row: usize,
    pub col: usize,
}

/// For each `T`-form relation, the mutations (adding `1` to one entry of
/// `H`, `T`, `T⁻¹` or `Y`) that make it fail. A relation with no detecting
/// mutation would be vacuous.
pub fn mutation_sensitivity(r: &Irrep) -> Result<BTreeMap<&'static str, Vec<Mutation>>> {
    let mut detected: BTreeMap<&'static str, Vec<Mutation>> = t_form_relations(r)
        .into_iter()
        .map(|(name, _)| (name, Vec::new()))
        .collect();
    let n = r.dim();
    for g in [Generator::H, Generator::T, Generator::TInv, Generator::Y] {
        for row in 0..n {
            for col in 0..n {
                let value = r.generator(g).get(row, col) + &HPoly::one();
                let mutant = r.with_entry(g, row, col, value);
                for (name, outcome) in t_form_relations(&mutant) {
                    if !matches!(outcome, Ok(None)) {
                        detected.get_mut(name).expect("same relation set").push(Mutation {
                            generator: g.name(),
                            row,
                            col,
                        });
                    }
                }
            }
        }
    }
    Ok(detected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spin(t: u32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn casimir_values() {
        let c = casimir(&build_irrep(spin(2), Epsilon::Plus).unwrap()).unwrap();
        assert_eq!(c, scalar(3, Rational::from_integer(2)));
        let c = casimir(&build_irrep(spin(1), Epsilon::Minus).unwrap()).unwrap();
        assert_eq!(c, scalar(2, Rational::new(3, 4)));
        let c = casimir(&build_irrep(spin(0), Epsilon::Plus).unwrap()).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn relation_suite_small() {
        let r = run_relation_suite(spin(3));
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert!(run_relation_suite(spin(0)).passed);
    }

    #[test]
    fn corrupted_y_fails_with_witness() {
        let r = build_irrep(spin(2), Epsilon::Plus).unwrap();
        let bad = r.with_entry(Generator::Y, 1, 0, -r.y().get(1, 0));
        let mut report = VerificationReport::new("relations");
        relation_checks(&mut report, &bad);
        assert!(!report.passed);
        let first = report.failures().next().unwrap();
        assert!(first.witness.is_some(), "{first:?}");
    }

    #[test]
    fn every_relation_is_sensitive() {
        for eps in Epsilon::BOTH {
            let r = build_irrep(spin(2), eps).unwrap();
            for (name, hits) in mutation_sensitivity(&r).unwrap() {
                assert!(!hits.is_empty(), "{name} never fails");
            }
        }
    }

    #[test]
    fn casimir_and_equivalence_small() {
        let c = run_casimir_suite(spin(2));
        assert!(c.passed, "{:?}", c.failures().collect::<Vec<_>>());
        let e = run_equivalence_suite(3);
        assert!(e.passed, "{:?}", e.failures().collect::<Vec<_>>());
        assert!(e.checks.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn report_json_is_deterministic() {
        let a = run_relation_suite(spin(1)).to_json(false);
        let b = run_relation_suite(spin(1)).to_json(false);
        assert_eq!(a, b);
        assert!(!a.contains("timings"));
        assert!(run_relation_suite(spin(1)).to_json(true).contains("timings_ms"));
    }
}
