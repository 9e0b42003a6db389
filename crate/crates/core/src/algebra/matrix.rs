//! Dense matrices over an exact ring with fraction-free elimination.

use std::fmt;

use num::{One, Zero};

use super::{Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix of rational numbers.
pub type ExactMatrix = Matrix<Rational>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must equal rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("rows have different lengths".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: rows.len(), cols: self.cols, data }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn mul_matrix(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.get(i, 0).zero_like();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.vanishes() && !b.vanishes() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    /// Bareiss determinant of a nonempty square matrix.
    pub fn bareiss_det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        assert!(n > 0, "bareiss_det needs a nonempty matrix");
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = a.get(0, 0).one_like();
        for k in 0..n - 1 {
            if a.get(k, k).vanishes() {
                match (k + 1..n).find(|&i| !a.get(i, k).vanishes()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(prev.zero_like()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let lhs = a.get(i, j).mul(&pivot);
                    let v = if aik.vanishes() { lhs } else { lhs.sub(&aik.mul(a.get(k, j))) };
                    let v = v.div_exact(&prev)?;
                    a.set(i, j, v);
                }
                a.set(i, k, aik.zero_like());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Rank by fraction-free row echelon reduction.
    pub fn bareiss_rank(&self) -> Result<usize> {
        let mut a = self.clone();
        let mut r = 0;
        let Some(first) = self.data.first() else { return Ok(0) };
        let mut prev = first.one_like();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).vanishes()) else { continue };
            a.swap_rows(p, r);
            let pivot = a.get(r, c).clone();
            for i in r + 1..self.rows {
                let aic = a.get(i, c).clone();
                for j in c + 1..self.cols {
                    let lhs = a.get(i, j).mul(&pivot);
                    let v = if aic.vanishes() { lhs } else { lhs.sub(&aic.mul(a.get(r, j))) };
                    a.set(i, j, v.div_exact(&prev)?);
                }
                a.set(i, c, aic.zero_like());
            }
            prev = pivot;
            r += 1;
        }
        Ok(r)
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let v: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| super::rat(x)).collect()).collect();
        Self::from_rows(v).expect("rows of equal length")
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows == 0 && self.cols == 0 {
            return Ok(Rational::one());
        }
        self.bareiss_det()
    }

    pub fn rank(&self) -> usize {
        self.bareiss_rank().expect("division in a field is exact")
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
            a.swap_rows(p, r);
            let inv = a.get(r, c).recip();
            for j in c..self.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..self.cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right kernel, one row per free column of the reduced
    /// echelon form. The free coordinate is 1 and pivot coordinates are the
    /// negated echelon entries, so `(1 1)` yields `(-1, 1)`.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = ExactMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(k, p, -r.get(row, f).clone());
            }
        }
        out
    }

    /// Basis of the left kernel `{y : y M = 0}`.
    pub fn left_kernel_basis(&self) -> ExactMatrix {
        self.transpose().kernel_basis()
    }

    /// A maximal linearly independent subset of rows, chosen greedily in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..self.rows {
            let mut trial = chosen.clone();
            trial.push(i);
            if self.select_rows(&trial).rank() == trial.len() {
                chosen = trial;
            }
        }
        chosen
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::RankDeficient { rank: self.rank(), rows: n });
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_columns(&cols))
    }

    /// Solves `M x = b` for square invertible `M`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        Ok(self.inverse()?.mul_vec(b))
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| super::to_f64(self.get(i, j)))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Poly};

    fn fan() -> ExactMatrix {
        ExactMatrix::from_i64_rows(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 2], &[0, 0, 1, 1, 3]])
    }

    #[test]
    fn ranks() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        assert_eq!(fan().rank(), 3);
        assert_eq!(ExactMatrix::zeros(2, 4).rank(), 0);
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let k = ExactMatrix::from_i64_rows(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, ExactMatrix::from_i64_rows(&[&[-1, 1]]));
        assert_eq!(ExactMatrix::identity(3).kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = fan();
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert!(a.mul_vec(k.row(i)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_with_row_swap() {
        let m = ExactMatrix::from_i64_rows(&[&[0, 2, 1], &[1, 1, 1], &[3, 0, 2]]);
        // 0*(2-0) - 2*(2-3) + 1*(0-3) = -1
        assert_eq!(m.det().unwrap(), rat(-1));
        assert_eq!(ExactMatrix::zeros(0, 0).det().unwrap(), rat(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ExactMatrix::from_i64_rows(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_matrix(&inv).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn polynomial_determinant() {
        let t = Poly::var(1, 0);
        let one = Poly::one(1);
        let m = Matrix::from_rows(vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]]).unwrap();
        let expected = &(&t * &t) - &one;
        assert_eq!(m.bareiss_det().unwrap(), expected);
    }
}
