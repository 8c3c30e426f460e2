use std::fmt;

use num_rational::BigRational;

use crate::element::RingElement;
use crate::error::RingError;
use crate::spec::Ring;

/// Dense matrix over a [`RingElement`] ring, stored row-major.
#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![RingElement::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = RingElement::one(ring);
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(RingError::InvalidSpec("ragged matrix".into()));
            }
            for e in row {
                if e.spec() != &**ring {
                    return Err(RingError::SpecMismatch);
                }
                data.push(e);
            }
        }
        Ok(Matrix { ring: ring.clone(), rows: r, cols: c, data })
    }

    pub fn from_int_rows(ring: &Ring, rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| RingElement::from_int(ring, x)).collect()).collect();
        Self::from_rows(ring, rows).expect("rectangular integer matrix")
    }

    pub fn diagonal(ring: &Ring, diag: Vec<RingElement>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(ring, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Embed a rational matrix into `ring`.
    pub fn from_rational(ring: &Ring, rows: usize, cols: usize, entries: &[BigRational]) -> Result<Self, RingError> {
        let data = entries.iter().map(|c| RingElement::from_rational(ring, c)).collect::<Result<_, _>>()?;
        Ok(Matrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        assert_eq!(self.rows, self.cols, "square matrix expected");
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<F: FnMut(&RingElement) -> Result<RingElement, RingError>>(
        &self,
        target: &Ring,
        mut f: F,
    ) -> Result<Matrix, RingError> {
        let data = self.data.iter().map(&mut f).collect::<Result<_, _>>()?;
        Ok(Matrix { ring: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, RingError> {
        if self.cols != other.rows {
            return Err(RingError::InvalidSpec("dimension mismatch".into()));
        }
        if !std::sync::Arc::ptr_eq(&self.ring, &other.ring) && *self.ring != *other.ring {
            return Err(RingError::SpecMismatch);
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let one = a.is_one();
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = if one { b.clone() } else { a * b };
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = &*slot + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, RingError> {
        self.zip(other, |a, b| a.try_add(b))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix, RingError> {
        self.zip(other, |a, b| a.try_sub(b))
    }

    fn zip<F: Fn(&RingElement, &RingElement) -> Result<RingElement, RingError>>(
        &self,
        other: &Matrix,
        f: F,
    ) -> Result<Matrix, RingError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(RingError::InvalidSpec("dimension mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &RingElement) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut base = self.clone();
        let mut r = Matrix::identity(&self.ring, self.dim());
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn trace(&self) -> RingElement {
        let mut acc = RingElement::zero(&self.ring);
        for i in 0..self.dim() {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Positions and values of nonzero entries.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &RingElement)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Determinant by cofactor expansion along rows (small sizes) or Gaussian
    /// elimination when the ring is a field.
    pub fn det(&self) -> Result<RingElement, RingError> {
        let n = self.dim();
        if self.ring.is_field() {
            let mut m = self.clone();
            let mut det = RingElement::one(&self.ring);
            for c in 0..n {
                let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                    return Ok(RingElement::zero(&self.ring));
                };
                if p != c {
                    for j in 0..n {
                        m.data.swap(p * n + j, c * n + j);
                    }
                    det = -det;
                }
                let piv = m.get(c, c).clone();
                det = &det * &piv;
                let inv = piv.invert()?;
                for r in c + 1..n {
                    let f = m.get(r, c) * &inv;
                    if f.is_zero() {
                        continue;
                    }
                    for j in c..n {
                        let v = m.get(r, j) - &(&f * m.get(c, j));
                        m.set(r, j, v);
                    }
                }
            }
            return Ok(det);
        }
        Ok(self.cofactor_det(&(0..n).collect::<Vec<_>>(), 0))
    }

    fn cofactor_det(&self, cols: &[usize], row: usize) -> RingElement {
        if cols.is_empty() {
            return RingElement::one(&self.ring);
        }
        let mut acc = RingElement::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.cofactor_det(&rest, row + 1);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Inverse over a field by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, RingError> {
        if !self.ring.is_field() {
            return Err(RingError::Unsupported(format!("matrix inversion over {}", self.ring)));
        }
        let n = self.dim();
        let mut a = self.clone();
        let mut inv = Matrix::identity(&self.ring, n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a.get(r, c).is_zero())
                .ok_or_else(|| RingError::NotAUnit("singular matrix".into()))?;
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
                inv.data.swap(p * n + j, c * n + j);
            }
            let pinv = a.get(c, c).invert()?;
            for j in 0..n {
                let v = a.get(c, j) * &pinv;
                a.set(c, j, v);
                let v = inv.get(c, j) * &pinv;
                inv.set(c, j, v);
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j) - &(&f * a.get(c, j));
                    a.set(r, j, v);
                    let v = inv.get(r, j) - &(&f * inv.get(c, j));
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    /// Rows of rendered entries.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.render()).collect()).collect()
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl std::ops::Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    /// Panics on ring or dimension mismatch.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl std::ops::Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl std::ops::Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.render_rows().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
