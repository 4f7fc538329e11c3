use std::fmt::Write as _;

use clap::ValueEnum;
use uhsl2_core::matrix::format::{csv, csv_numeric, latex, latex_numeric, pretty, pretty_numeric};
use uhsl2_core::numeric::CMatrix;
use uhsl2_core::PolyMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Pretty,
    Csv,
}

/// Exact or numerically specialized matrix.
pub enum AnyMatrix<'a> {
    Exact(&'a PolyMatrix),
    Numeric(CMatrix),
}

/// Renders named matrices in one of the text formats. JSON is handled by
/// the callers, which know their payload schema.
pub fn named_matrices(format: Format, items: &[(&str, AnyMatrix<'_>)]) -> String {
    let mut out = String::new();
    for (i, (name, m)) in items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match format {
            Format::Latex => {
                let body = match m {
                    AnyMatrix::Exact(m) => latex(m),
                    AnyMatrix::Numeric(m) => latex_numeric(m),
                };
                let _ = writeln!(out, "{} = {body}", latex_name(name));
            }
            Format::Pretty => {
                let body = match m {
                    AnyMatrix::Exact(m) => pretty(m),
                    AnyMatrix::Numeric(m) => pretty_numeric(m),
                };
                let _ = writeln!(out, "{name} =\n{body}");
            }
            Format::Csv | Format::Json => {
                let body = match m {
                    AnyMatrix::Exact(m) => csv(m),
                    AnyMatrix::Numeric(m) => csv_numeric(m),
                };
                let _ = writeln!(out, "# {name}\n{body}");
            }
        }
    }
    out
}

fn latex_name(name: &str) -> String {
    match name {
        "Tinv" => "T^{-1}".to_string(),
        "Xreg" => "X_{\\mathrm{reg}}".to_string(),
        "Jplus" => "J_{+}".to_string(),
        "Jminus" => "J_{-}".to_string(),
        "J3" => "J_{3}".to_string(),
        other => other.to_string(),
    }
}

pub fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payload serializes");
    s.push('\n');
    s
}
