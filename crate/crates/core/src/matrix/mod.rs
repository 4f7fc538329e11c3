//! Dense matrices over `Q[h]`.
//!
//! Entries are stored row-major. Kronecker products use the composite index
//! `i1 * d2 + i2` (first factor major); the R-matrix code relies on the same
//! convention.

pub mod analytic;
pub mod format;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::CMatrix;
use crate::ring::{HPoly, Rational};

/// A matrix position and the polynomial found there, reported when an
/// identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![HPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::scalar(n, &HPoly::one())
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &HPoly) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> HPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<HPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                op: "from_rows",
                left: (r, c),
                right: (1, bad.len()),
            });
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Diagonal matrix from rational entries.
    pub fn diagonal_of(values: &[Rational]) -> Self {
        let n = values.len();
        PolyMatrix::from_fn(n, n, |i, j| {
            if i == j {
                HPoly::constant(values[i].clone())
            } else {
                HPoly::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &HPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: HPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut HPoly {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[HPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[HPoly] {
        &self.entries
    }

    fn same_shape(&self, other: &PolyMatrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_shape(other, "add")?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_shape(other, "sub")?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|a| -a)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j].add_product(a, b)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `a*b - b*a`
    pub fn commutator(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `a*b + b*a`
    pub fn anticommutator(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn scale(&self, c: &HPoly) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.checked_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> PolyMatrix {
        self.map(|a| a.scale(c))
    }

    pub fn map(&self, f: impl Fn(&HPoly) -> HPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&HPoly) -> Result<HPoly>) -> Result<PolyMatrix> {
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Exact entrywise division by `h`.
    pub fn div_h(&self) -> Result<PolyMatrix> {
        self.try_map(HPoly::div_h)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `(a ⊗ b)[(i1,i2),(k1,k2)] = a[i1,k1] * b[i2,k2]`, composite index
    /// `i1 * b.rows + i2`.
    pub fn kron(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let (r2, c2) = other.shape();
        let mut out = PolyMatrix::zeros(self.rows * r2, self.cols * c2);
        for i1 in 0..self.rows {
            for k1 in 0..self.cols {
                let a = self.get(i1, k1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for k2 in 0..c2 {
                        let b = other.get(i2, k2);
                        if !b.is_zero() {
                            out.set(i1 * r2 + i2, k1 * c2 + k2, a.checked_mul(b)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut acc = PolyMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i + 1)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<HPoly> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Smallest `k` with `self^k = 0`, or `None` if `self^n != 0` for
    /// `n = dim`.
    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut p = PolyMatrix::identity(n);
        for k in 0..=n {
            if p.is_zero() {
                return Ok(Some(k));
            }
            if k < n {
                p = p.mul(self)?;
            }
        }
        Ok(None)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &HPoly)> {
        self.entries
            .iter()
            .position(|e| !e.is_zero())
            .map(|p| (p / self.cols, p % self.cols, &self.entries[p]))
    }

    /// First nonzero entry as a serializable witness.
    pub fn witness(&self) -> Option<Witness> {
        self.first_nonzero().map(|(row, col, v)| Witness {
            row,
            col,
            value: v.to_string(),
        })
    }

    /// Largest polynomial degree among the entries.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(HPoly::degree).max()
    }

    /// Entrywise numeric evaluation at `h = h0`.
    pub fn eval(&self, h0: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(h0))
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> PolyMatrix {
        PolyMatrix::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<HPoly>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        let m = PolyMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)?;
        if m.rows != raw.rows || (raw.rows > 0 && m.cols != raw.cols) {
            return Err(serde::de::Error::custom(format!(
                "declared shape {}x{} does not match entries {}x{}",
                raw.rows, raw.cols, m.rows, m.cols
            )));
        }
        Ok(PolyMatrix {
            rows: raw.rows,
            cols: raw.cols,
            entries: m.entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn int_matrix(rows: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| HPoly::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn fundamental_commutator_is_h() {
        let x = int_matrix(&[&[0, 1], &[0, 0]]);
        let y = int_matrix(&[&[0, 0], &[1, 0]]);
        assert_eq!(x.commutator(&y).unwrap(), int_matrix(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn self_commutator_vanishes() {
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert!(m.commutator(&m).unwrap().is_zero());
    }

    #[test]
    fn shape_mismatch() {
        let a = PolyMatrix::zeros(2, 3);
        let b = PolyMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&b), Err(Error::ShapeMismatch { .. })));
        assert!(a.add(&PolyMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn identity_kron() {
        let k = PolyMatrix::identity(2).kron(&PolyMatrix::identity(3)).unwrap();
        assert_eq!(k, PolyMatrix::identity(6));
    }

    #[test]
    fn kron_index_convention() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b).unwrap();
        // (i1, i2) = (1, 0), (k1, k2) = (0, 1) -> a[1,0] * b[0,1]
        assert_eq!(k.get(2, 1), &HPoly::from_int(15));
        assert_eq!(k.get(1, 3), &HPoly::from_int(14));
    }

    #[test]
    fn nilpotency() {
        let n = int_matrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(n.nilpotency_index().unwrap(), Some(3));
        assert_eq!(PolyMatrix::zeros(2, 2).nilpotency_index().unwrap(), Some(1));
        assert_eq!(PolyMatrix::identity(2).nilpotency_index().unwrap(), None);
    }

    #[test]
    fn json_shape() {
        let m = int_matrix(&[&[1, 0], &[0, -1]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[[["1"],[]],[[],["-1"]]]}"#);
        let back: PolyMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<PolyMatrix>(r#"{"rows":3,"cols":2,"entries":[[[],[]]]}"#).is_err());
    }
}
