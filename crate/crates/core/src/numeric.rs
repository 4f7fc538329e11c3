//! Small dense complex matrices for numeric spot checks.

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        CMatrix::from_fn(n, n, |i, j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - o.get(i, j))
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, o.rows);
        CMatrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * o.get(k, j)).sum()
        })
    }

    pub fn commutator(&self, o: &CMatrix) -> CMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-abs distance.
    pub fn distance(&self, o: &CMatrix) -> f64 {
        self.sub(o).max_abs()
    }

    /// Matrix exponential by scaling and squaring with a truncated Taylor
    /// series. Adequate for the small, well-conditioned arguments used in
    /// the numeric relation checks.
    pub fn expm(&self) -> CMatrix {
        assert_eq!(self.rows, self.cols);
        let norm = self.max_abs() * self.rows as f64;
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let a = self.scale(Complex64::new(0.5f64.powi(squarings as i32), 0.0));
        let mut sum = CMatrix::identity(self.rows);
        let mut term = CMatrix::identity(self.rows);
        for k in 1..=24 {
            term = term.mul(&a).scale(Complex64::new(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

impl Serialize for CMatrix {
    /// Real parts when every entry is real, otherwise `[re, im]` pairs.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let real = self.data.iter().all(|z| z.im == 0.0);
        let mut st = s.serialize_struct("CMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        if real {
            let rows: Vec<Vec<f64>> = (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j).re).collect())
                .collect();
            st.serialize_field("entries", &rows)?;
        } else {
            let rows: Vec<Vec<[f64; 2]>> = (0..self.rows)
                .map(|i| (0..self.cols).map(|j| [self.get(i, j).re, self.get(i, j).im]).collect())
                .collect();
            st.serialize_field("entries", &rows)?;
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm_of_rotation_generator() {
        let t = 1.3;
        let a = CMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => Complex64::new(-t, 0.0),
            (1, 0) => Complex64::new(t, 0.0),
            _ => Complex64::new(0.0, 0.0),
        });
        let e = a.expm();
        assert!((e.get(0, 0).re - t.cos()).abs() < 1e-13);
        assert!((e.get(1, 0).re - t.sin()).abs() < 1e-13);
    }

    #[test]
    fn expm_of_i_pi_is_minus_one() {
        let a = CMatrix::from_fn(1, 1, |_, _| Complex64::new(0.0, std::f64::consts::PI));
        assert!((a.expm().get(0, 0) - Complex64::new(-1.0, 0.0)).norm() < 1e-13);
    }
}
