//! Text renderings of polynomial matrices: LaTeX `pmatrix`, aligned plain
//! text and CSV.

use crate::matrix::PolyMatrix;
use crate::numeric::CMatrix;
use crate::ring::{HPoly, Rational};

fn latex_monomial(c: &Rational, k: usize, first: bool) -> String {
    let neg = c.is_negative();
    let mag = c.abs();
    let sign = match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    let var = match k {
        0 => String::new(),
        1 => "h".to_string(),
        _ => format!("h^{{{k}}}"),
    };
    let body = if mag.is_integer() {
        if k > 0 && mag.is_one() {
            var
        } else {
            format!("{mag}{var}")
        }
    } else {
        let num = mag.numer().to_string();
        let num = if k > 0 && num == "1" {
            var
        } else {
            format!("{num}{var}")
        };
        format!("\\frac{{{num}}}{{{}}}", mag.denom())
    };
    format!("{sign}{body}")
}

pub fn latex_poly(p: &HPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&latex_monomial(c, k, out.is_empty()));
        }
    }
    out
}

/// `\begin{pmatrix} ... \end{pmatrix}`, one matrix row per line.
pub fn latex(m: &PolyMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(latex_poly).collect();
        out.push_str("  ");
        out.push_str(&row.join(" & "));
        out.push_str(if i + 1 < m.rows() { " \\\\\n" } else { "\n" });
    }
    out.push_str("\\end{pmatrix}");
    out
}

/// Column-aligned plain text.
pub fn pretty(m: &PolyMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    align(&cells)
}

fn complex_cell(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn numeric_cells(m: &CMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| complex_cell(m.get(i, j))).collect())
        .collect()
}

pub fn pretty_numeric(m: &CMatrix) -> String {
    align(&numeric_cells(m))
}

pub fn csv_numeric(m: &CMatrix) -> String {
    numeric_cells(m)
        .iter()
        .map(|row| row.join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn latex_numeric(m: &CMatrix) -> String {
    let rows: Vec<String> = numeric_cells(m)
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c.strip_suffix('i') {
                    Some(re_im) => format!("{re_im}\\,\\mathrm{{i}}"),
                    None => c.clone(),
                })
                .collect();
            format!("  {}", cells.join(" & "))
        })
        .collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

fn align(cells: &[Vec<String>]) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            format!("[ {} ]", padded.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// One matrix row per line, entries in their plain-text form.
pub fn csv(m: &PolyMatrix) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|p| {
                    let s = p.to_string();
                    if s.contains(' ') {
                        format!("\"{s}\"")
                    } else {
                        s
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_entries() {
        let p = HPoly::from_coeffs(vec![Rational::zero(), Rational::zero(), Rational::new(-1, 2)]);
        assert_eq!(latex_poly(&p), "-\\frac{h^{2}}{2}");
        let q = HPoly::from_coeffs(vec![
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::new(9, 4),
        ]);
        assert_eq!(latex_poly(&q), "\\frac{9h^{4}}{4}");
        let r = HPoly::from_coeffs(vec![Rational::one(), Rational::from_integer(-2)]);
        assert_eq!(latex_poly(&r), "1 - 2h");
    }

    #[test]
    fn latex_layout() {
        let m = PolyMatrix::identity(2);
        assert_eq!(latex(&m), "\\begin{pmatrix}\n  1 & 0 \\\\\n  0 & 1\n\\end{pmatrix}");
    }
}
