//! Dense matrices over exact rings: integers (`BigInt`) and rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type QMatrix = Matrix<Q>;

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors, with `rows` rows.
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Self {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
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

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => T::zero(),
            }
        })
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s * x)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }
}

impl<'a, T> Mul<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone + Zero,
    for<'b> &'b T: Mul<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].clone() + a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a, T: Clone + Zero> Add<&'a Matrix<T>> for &'a Matrix<T>
where
    for<'b> &'b T: Add<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, T: Clone + Zero> Sub<&'a Matrix<T>> for &'a Matrix<T>
where
    for<'b> &'b T: Sub<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Clone> Neg for &Matrix<T>
where
    for<'b> &'b T: Neg<Output = T>,
{
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn to_q(&self) -> QMatrix {
        self.map(|x| Q::from_integer(x.clone()))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.data.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    /// Characteristic polynomial `det(tI - A)` by Faddeev-LeVerrier; every
    /// division is exact over the integers.
    pub fn charpoly(&self) -> IntPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n, n);
        let id = IntMatrix::identity(n);
        for k in 1..=n {
            let am = self * &m;
            m = &am + &id.scale(&coeffs[n - k + 1]);
            let tr = (self * &m).trace();
            let (quot, rem) = tr.div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero());
            coeffs[n - k] = -quot;
        }
        IntPoly::new(coeffs)
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let inv = self.to_q().inverse()?;
        if inv.data.iter().any(|x| !x.is_integer()) {
            return Err(Error::NotUnimodular);
        }
        Ok(inv.map(|x| x.to_integer()))
    }

    /// Diagonal of the Smith normal form, nonnegative and with each entry
    /// dividing the next. Its length is `min(rows, cols)`.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let (r, c) = (m.rows, m.cols);
        let n = r.min(c);
        for t in 0..n {
            loop {
                // Pivot: smallest nonzero entry in the trailing block.
                let mut best: Option<(usize, usize)> = None;
                for i in t..r {
                    for j in t..c {
                        let v = m.get(i, j);
                        if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    return finish_diag(&m, n);
                };
                for j in 0..c {
                    m.data.swap(t * c + j, pi * c + j);
                }
                for i in 0..r {
                    m.data.swap(i * c + t, i * c + pj);
                }
                let piv = m.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..r {
                    let f = m.get(i, t).div_floor(&piv);
                    if !f.is_zero() {
                        for j in t..c {
                            let v = m.get(i, j) - &f * m.get(t, j);
                            m.set(i, j, v);
                        }
                    }
                    clean &= m.get(i, t).is_zero();
                }
                for j in t + 1..c {
                    let f = m.get(t, j).div_floor(&piv);
                    if !f.is_zero() {
                        for i in t..r {
                            let v = m.get(i, j) - &f * m.get(i, t);
                            m.set(i, j, v);
                        }
                    }
                    clean &= m.get(t, j).is_zero();
                }
                if !clean {
                    continue;
                }
                // Enforce divisibility of the trailing block by the pivot.
                let bad = (t + 1..r)
                    .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                    .find(|&(i, j)| !(m.get(i, j) % &piv).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..c {
                            let v = m.get(t, j) + m.get(i, j);
                            m.set(t, j, v);
                        }
                    }
                    None => break,
                }
            }
        }
        finish_diag(&m, n)
    }
}

fn finish_diag(m: &IntMatrix, n: usize) -> Vec<BigInt> {
    (0..n).map(|i| m.get(i, i).abs()).collect()
}

/// Result of row reduction: reduced row echelon form and pivot columns.
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64(rows).to_q()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.map(|x| x.to_integer()))
    }

    /// Reduced row echelon form. Row operations only touch the nonzero
    /// entries of the pivot row, which keeps sparse systems cheap.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (r, c) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let Some(p) = (row..r).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..c {
                    m.data.swap(p * c + j, row * c + j);
                }
            }
            let inv = m.get(row, col).recip();
            let nz: Vec<usize> = (col..c).filter(|&j| !m.get(row, j).is_zero()).collect();
            for &j in &nz {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..r {
                if i == row {
                    continue;
                }
                let f = m.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &nz {
                    let v = m.get(i, j) - &f * m.get(row, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let Rref { matrix, pivots } = self.rref();
        let c = self.cols;
        let mut is_pivot = vec![false; c];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..c).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Q::zero(); c];
            v[free] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel as a matrix whose columns form a basis.
    pub fn kernel_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.cols, &self.nullspace())
    }

    /// Indices of a maximal linearly independent set of columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns forming a basis of the column space.
    pub fn column_basis(&self) -> QMatrix {
        let idx = self.independent_columns();
        self.select_cols(&idx)
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&QMatrix::identity(n));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(QMatrix::from_fn(n, n, |i, j| matrix.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m.get(i, k).is_zero()) else {
                return Q::zero();
            };
            if p != k {
                for j in 0..n {
                    m.data.swap(p * n + j, k * n + j);
                }
                det = -det;
            }
            let piv = m.get(k, k).clone();
            det *= &piv;
            for i in k + 1..n {
                let f = m.get(i, k) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = m.get(i, j) - &f * m.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some `X` with `A X = B`, if one exists.
    pub fn solve(&self, b: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMatrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, matrix.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// A left inverse of a matrix with independent columns.
    pub fn left_inverse(&self) -> Result<QMatrix> {
        let t = self.transpose();
        let g = &t * self;
        Ok(&g.inverse()? * &t)
    }

    /// Characteristic polynomial `det(tI - A)` over the rationals.
    pub fn charpoly(&self) -> crate::poly::QPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = QMatrix::zeros(n, n);
        let id = QMatrix::identity(n);
        for k in 1..=n {
            let am = self * &m;
            m = &am + &id.scale(&coeffs[n - k + 1]);
            let tr = (self * &m).trace();
            coeffs[n - k] = -tr / q(k as i64);
        }
        crate::poly::QPoly::new(coeffs)
    }
}

/// Extends the columns of `w` (independent) to a basis of `Q^n`; returns the
/// added standard basis vectors' indices.
pub fn complement_indices(w: &QMatrix) -> Vec<usize> {
    let n = w.rows();
    let aug = w.hstack(&QMatrix::identity(n));
    aug.rref()
        .pivots
        .into_iter()
        .filter(|&p| p >= w.cols())
        .map(|p| p - w.cols())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_rational_det() {
        let a = IntMatrix::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.det(), BigInt::from(4));
        assert_eq!(a.to_q().det(), q(4));
        let s = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.det(), BigInt::from(-1));
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of t^3 - 2t + 5
        let c = IntMatrix::from_i64(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(c.charpoly().coeffs_i64(), vec![5, -2, 0, 1]);
        assert_eq!(c.to_q().charpoly().coeffs()[0], q(5));
    }

    #[test]
    fn smith_of_relation_matrix() {
        let m = IntMatrix::from_i64(&[&[2, -3, 0], &[2, 0, -6]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let m = IntMatrix::from_i64(&[&[4, 6], &[6, 9]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn nullspace_and_solve() {
        let a = QMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let b = QMatrix::from_i64(&[&[6], &[12]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        assert!(a.solve(&QMatrix::from_i64(&[&[1], &[1]])).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = QMatrix::from_i64(&[&[1, 1], &[1, 2]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
