#![allow(dead_code)]

use proptest::prelude::*;
use uhsl2_core::{HPoly, PolyMatrix, Rational};

/// Parses one monomial cell such as `0`, `-h`, `2h^2`, `-1/2h^2`, `9/4h^4`.
pub fn cell(s: &str) -> HPoly {
    let s = s.trim();
    let (coef, power) = match s.find('h') {
        None => (s, 0),
        Some(p) => {
            let power = match s[p + 1..].strip_prefix('^') {
                Some(k) => k.parse().unwrap(),
                None => 1,
            };
            (&s[..p], power)
        }
    };
    let coef = match coef {
        "" | "+" => Rational::one(),
        "-" => Rational::from_integer(-1),
        c => c.parse().unwrap(),
    };
    HPoly::monomial(coef, power)
}

/// Rows separated by `;`, cells by `,`.
pub fn mat(s: &str) -> PolyMatrix {
    let rows = s.split(';').map(|r| r.split(',').map(cell).collect()).collect();
    PolyMatrix::from_rows(rows).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = HPoly> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(HPoly::from_coeffs)
}

pub fn matrix(rows: usize, cols: usize, max_degree: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(max_degree), rows * cols).prop_map(move |entries| {
        let mut it = entries.into_iter();
        PolyMatrix::from_fn(rows, cols, |_, _| it.next().unwrap())
    })
}

/// Random strictly upper-triangular matrix of size `1..=max_dim`.
pub fn nilpotent(max_dim: usize, max_degree: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        matrix(n, n, max_degree).prop_map(move |m| {
            PolyMatrix::from_fn(n, n, |i, j| if j > i { m.get(i, j).clone() } else { HPoly::zero() })
        })
    })
}
