mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use uhsl2_core::fcoeff::{f_sequence, ode_residual, FMethod};
use uhsl2_core::numeric::CMatrix;
use uhsl2_core::represent::{Basis, Generator};
use uhsl2_core::ring::set_degree_limit;
use uhsl2_core::rmatrix::{check_ybe, parse_triple, r_matrix, specialize};
use uhsl2_core::symmetric::to_symmetric_basis;
use uhsl2_core::verify::{run_suite, Suite};
use uhsl2_core::verma::{build_verma, find_singular, quotient_irrep};
use uhsl2_core::{build_irrep, Epsilon, Error, HPoly, HalfInt, PolyMatrix};

use render::{json, named_matrices, AnyMatrix, Format};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "uhsl2",
    version,
    about = "Exact representations and R-matrices of the Jordanian algebra U_h(sl(2))"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Maximum polynomial degree before aborting with exit code 3
    #[arg(long, env = "UHSL2_DEGREE_LIMIT", global = true)]
    degree_limit: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of the spin-j irrep
    Irrep {
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps: Epsilon,
        /// verma (exact) or symmetric (numeric, needs --h)
        #[arg(long, default_value = "verma")]
        basis: Basis,
        /// Evaluate at this value of h, e.g. 0.3 or 0.3+0.2i
        #[arg(long, allow_hyphen_values = true)]
        h: Option<Complex64>,
        /// Comma-separated subset of H,T,Tinv,Y,Xreg,Jplus,Jminus,J3
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
    /// First singular vector of the Verma module with highest weight lambda
    Singular {
        #[arg(long)]
        lambda: u32,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps: Epsilon,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Irreducible quotient of the Verma module
    Quotient {
        #[arg(long)]
        lambda: u32,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps: Epsilon,
        /// Keep the Verma basis instead of diagonalizing H
        #[arg(long)]
        raw: bool,
    },
    /// R-matrix on a pair of irreps
    Rmatrix {
        #[arg(long, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps1: Epsilon,
        #[arg(long, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps2: Epsilon,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<Complex64>,
    },
    /// Exact Yang-Baxter check, e.g. --triple "1/2:+1,1:+1,3/2:-1"
    Ybe {
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
    },
    /// Table of the coefficients f_k
    Fk {
        #[arg(long)]
        max: usize,
        #[arg(long, default_value = "both")]
        method: MethodArg,
        /// Also check the generating-function ODE through order 2*max
        #[arg(long)]
        check_ode: bool,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value = "7/2")]
        jmax: HalfInt,
        /// Emit the full JSON report
        #[arg(long)]
        json: bool,
        /// Include per-check timings in the JSON report metadata
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum MethodArg {
    Recurrence,
    Closed,
    Both,
}

/// Text to emit plus the process exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegreeLimit { .. } => EXIT_RESOURCE,
        Error::InvalidHalfInt(_)
        | Error::InvalidSign(_)
        | Error::Parse(_)
        | Error::WrongBranch
        | Error::Truncation { .. }
        | Error::WeightOutOfRange { .. } => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(limit) = cli.common.degree_limit {
        set_degree_limit(limit);
    }
    let format = cli.common.format;
    let result = match cli.command {
        Command::Irrep {
            j,
            eps,
            basis,
            h,
            generators,
        } => irrep(format, j, eps, basis, h, &generators),
        Command::Singular { lambda, eps, depth } => singular(format, lambda, eps, depth),
        Command::Quotient { lambda, eps, raw } => quotient(format, lambda, eps, raw),
        Command::Rmatrix { j1, eps1, j2, eps2, h } => rmatrix(format, j1, eps1, j2, eps2, h),
        Command::Ybe { triple } => ybe(&triple),
        Command::Fk { max, method, check_ode } => fk(format, max, method, check_ode),
        Command::Verify {
            suite,
            jmax,
            json,
            timings,
        } => verify(suite, jmax, json, timings),
    };
    match result {
        Ok(outcome) => {
            if let Some(path) = &cli.common.output {
                if let Err(e) = fs::write(path, &outcome.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_FAIL);
                }
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn selected(names: &[String]) -> Result<Vec<Generator>, Error> {
    if names.is_empty() {
        return Ok(Generator::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| {
            Generator::ALL
                .iter()
                .copied()
                .find(|g| g.name() == n)
                .ok_or_else(|| Error::Parse(format!("unknown generator {n:?}")))
        })
        .collect()
}

#[derive(Serialize)]
struct NumericIrrepJson {
    j: HalfInt,
    epsilon: Epsilon,
    basis: Basis,
    h: [f64; 2],
    generators: Vec<NamedNumeric>,
}

#[derive(Serialize)]
struct NamedNumeric {
    name: String,
    matrix: CMatrix,
}

fn irrep(
    format: Format,
    j: HalfInt,
    eps: Epsilon,
    basis: Basis,
    h: Option<Complex64>,
    names: &[String],
) -> Result<Outcome, Error> {
    let gens = selected(names)?;
    let r = build_irrep(j, eps)?;
    let numeric: Option<Vec<(Generator, CMatrix)>> = match (basis, h) {
        (Basis::VermaDiagonal, None) => None,
        (Basis::VermaDiagonal, Some(h0)) => Some(gens.iter().map(|&g| (g, r.generator(g).eval(h0))).collect()),
        (Basis::SymmetricNumeric, Some(h0)) => {
            let n = to_symmetric_basis(&r, h0)?;
            Some(gens.iter().map(|&g| (g, n.get(g).clone())).collect())
        }
        (Basis::SymmetricNumeric, None) => {
            return Err(Error::Parse("the symmetric basis is numeric and needs --h".into()));
        }
    };
    let text = match (format, numeric) {
        (Format::Json, None) if names.is_empty() => json(&r.to_json()),
        (Format::Json, None) => {
            let items: Vec<(&str, &PolyMatrix)> = gens.iter().map(|&g| (g.name(), r.generator(g))).collect();
            json(&items.into_iter().collect::<std::collections::BTreeMap<_, _>>())
        }
        (Format::Json, Some(ms)) => json(&NumericIrrepJson {
            j,
            epsilon: eps,
            basis,
            h: [h.unwrap_or_default().re, h.unwrap_or_default().im],
            generators: ms
                .into_iter()
                .map(|(g, m)| NamedNumeric {
                    name: g.name().to_string(),
                    matrix: m,
                })
                .collect(),
        }),
        (_, None) => named_matrices(
            format,
            &gens
                .iter()
                .map(|&g| (g.name(), AnyMatrix::Exact(r.generator(g))))
                .collect::<Vec<_>>(),
        ),
        (_, Some(ms)) => named_matrices(
            format,
            &ms.into_iter()
                .map(|(g, m)| (g.name(), AnyMatrix::Numeric(m)))
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct SingularJson {
    lambda: u32,
    epsilon: Epsilon,
    level: usize,
    /// Coefficients of w_1 .. w_level.
    coefficients: Vec<HPoly>,
    expression: String,
}

fn singular_expression(coefficients: &[HPoly]) -> String {
    let terms: Vec<String> = coefficients
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let w = format!("w_{}", k + 1);
            if c.is_one() {
                w
            } else if c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1 {
                format!("{c} {w}")
            } else {
                format!("({c}) {w}")
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn singular(format: Format, lambda: u32, eps: Epsilon, depth: Option<usize>) -> Result<Outcome, Error> {
    let vm = build_verma(lambda, eps, depth.unwrap_or(lambda as usize + 2))?;
    let sv = find_singular(&vm)?;
    let expression = singular_expression(&sv.coefficients);
    let text = match format {
        Format::Json => json(&SingularJson {
            lambda,
            epsilon: eps,
            level: sv.level,
            coefficients: sv.coefficients,
            expression,
        }),
        Format::Latex => {
            let terms: Vec<String> = sv
                .coefficients
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let coef = if c.is_one() {
                        String::new()
                    } else {
                        uhsl2_core::matrix::format::latex_poly(c)
                    };
                    format!("{coef}w_{{{}}}", k + 1)
                })
                .collect();
            format!("{}\n", terms.join(" + ").replace("+ -", "- "))
        }
        Format::Pretty => format!("{expression}\n"),
        Format::Csv => {
            let rows: Vec<String> = sv
                .coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{},\"{c}\"", k + 1))
                .collect();
            format!("k,coefficient\n{}\n", rows.join("\n"))
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct RawQuotientJson<'a> {
    lambda: u32,
    epsilon: Epsilon,
    basis: &'static str,
    dimension: usize,
    generators: RawGenerators<'a>,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct RawGenerators<'a> {
    H: &'a PolyMatrix,
    T: &'a PolyMatrix,
    Tinv: &'a PolyMatrix,
    Y: &'a PolyMatrix,
    Xreg: &'a PolyMatrix,
}

fn quotient(format: Format, lambda: u32, eps: Epsilon, raw: bool) -> Result<Outcome, Error> {
    let vm = build_verma(lambda, eps, lambda as usize + 2)?;
    let sv = find_singular(&vm)?;
    let q = quotient_irrep(&vm, &sv)?;
    if !raw {
        let r = q.diagonalized()?;
        let text = match format {
            Format::Json => json(&r.to_json()),
            _ => named_matrices(
                format,
                &[Generator::H, Generator::XReg, Generator::Y]
                    .iter()
                    .map(|&g| (g.name(), AnyMatrix::Exact(r.generator(g))))
                    .collect::<Vec<_>>(),
            ),
        };
        return Ok(Outcome::ok(text));
    }
    let x = q.x_reg()?;
    let text = match format {
        Format::Json => json(&RawQuotientJson {
            lambda,
            epsilon: eps,
            basis: "verma_module",
            dimension: lambda as usize + 1,
            generators: RawGenerators {
                H: &q.h,
                T: &q.t,
                Tinv: &q.t_inv,
                Y: &q.y,
                Xreg: &x,
            },
        }),
        _ => named_matrices(
            format,
            &[
                ("H", AnyMatrix::Exact(&q.h)),
                ("Xreg", AnyMatrix::Exact(&x)),
                ("Y", AnyMatrix::Exact(&q.y)),
            ],
        ),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct NumericRJson {
    j1: HalfInt,
    eps1: Epsilon,
    j2: HalfInt,
    eps2: Epsilon,
    h: [f64; 2],
    matrix: CMatrix,
}

fn rmatrix(
    format: Format,
    j1: HalfInt,
    eps1: Epsilon,
    j2: HalfInt,
    eps2: Epsilon,
    h: Option<Complex64>,
) -> Result<Outcome, Error> {
    let r = r_matrix(j1, eps1, j2, eps2)?;
    let text = match (format, h) {
        (Format::Json, None) => json(&r.to_json()),
        (Format::Json, Some(h0)) => json(&NumericRJson {
            j1,
            eps1,
            j2,
            eps2,
            h: [h0.re, h0.im],
            matrix: specialize(&r, h0),
        }),
        (_, None) => named_matrices(format, &[("R", AnyMatrix::Exact(&r.matrix))]),
        (_, Some(h0)) => named_matrices(format, &[("R", AnyMatrix::Numeric(specialize(&r, h0)))]),
    };
    Ok(Outcome::ok(text))
}

fn ybe(triple: &str) -> Result<Outcome, Error> {
    let report = check_ybe(parse_triple(triple)?)?;
    Ok(Outcome {
        code: if report.passed { 0 } else { EXIT_FAIL },
        text: json(&report),
    })
}

#[derive(Serialize)]
struct FkJson {
    method: &'static str,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    methods_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ode_residual_zero: Option<bool>,
}

fn fk(format: Format, max: usize, method: MethodArg, check_ode: bool) -> Result<Outcome, Error> {
    let (name, values, agree) = match method {
        MethodArg::Recurrence => ("recurrence", f_sequence(max, FMethod::Recurrence), None),
        MethodArg::Closed => ("closed", f_sequence(max, FMethod::Closed), None),
        MethodArg::Both => {
            let rec = f_sequence(max, FMethod::Recurrence);
            let agree = rec == f_sequence(max, FMethod::Closed);
            ("both", rec, Some(agree))
        }
    };
    let ode = check_ode.then(|| ode_residual(max).iter().all(|c| c.is_zero()));
    let ok = agree.unwrap_or(true) && ode.unwrap_or(true);
    let values: Vec<String> = values.values().iter().map(ToString::to_string).collect();
    let text = match format {
        Format::Json => json(&FkJson {
            method: name,
            values,
            methods_agree: agree,
            ode_residual_zero: ode,
        }),
        Format::Csv => {
            let rows: Vec<String> = values.iter().enumerate().map(|(k, v)| format!("{k},{v}")).collect();
            format!("k,f_k\n{}\n", rows.join("\n"))
        }
        Format::Latex => {
            let rows: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let body = match v.split_once('/') {
                        Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
                        None => v.clone(),
                    };
                    format!("f_{{{k}}} &= {body}")
                })
                .collect();
            format!("\\begin{{aligned}}\n{}\n\\end{{aligned}}\n", rows.join(" \\\\\n"))
        }
        Format::Pretty => {
            let mut out: String = values
                .iter()
                .enumerate()
                .map(|(k, v)| format!("f_{k:<3} = {v}\n"))
                .collect();
            if let Some(a) = agree {
                out.push_str(&format!("recurrence = closed form: {a}\n"));
            }
            if let Some(o) = ode {
                out.push_str(&format!("ODE residual zero: {o}\n"));
            }
            out
        }
    };
    Ok(Outcome {
        text,
        code: if ok { 0 } else { EXIT_FAIL },
    })
}

fn verify(suite: Suite, jmax: HalfInt, as_json: bool, timings: bool) -> Result<Outcome, Error> {
    let report = run_suite(suite, jmax);
    let text = if as_json || timings {
        let mut s = report.to_json(timings);
        s.push('\n');
        s
    } else {
        let mut out = String::new();
        for check in report.failures() {
            out.push_str(&format!("FAIL {}", check.id));
            if let Some(w) = &check.witness {
                out.push_str(&format!(" at ({}, {}): {}", w.row, w.col, w.value));
            }
            if let Some(m) = &check.message {
                out.push_str(&format!(": {m}"));
            }
            out.push('\n');
        }
        let failed = report.failures().count();
        out.push_str(&format!(
            "{suite}: {} checks, {failed} failed, {} skipped\n",
            report.checks.len(),
            report
                .checks
                .iter()
                .filter(|c| c.status == uhsl2_core::verify::Status::Skipped)
                .count()
        ));
        out
    };
    Ok(Outcome {
        text,
        code: if report.passed { 0 } else { EXIT_FAIL },
    })
}
