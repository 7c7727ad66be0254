use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    /// Diagonal `rows x cols` matrix with the given leading diagonal entries.
    pub fn diagonal(ring: &R, rows: usize, cols: usize, diag: &[R::Elem]) -> Self {
        let mut m = Self::zeros(ring, rows, cols);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds from rows; every entry is reduced to canonical form.
    pub fn from_rows(ring: &R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        let data = rows.into_iter().flatten().map(|x| ring.reduce(&x)).collect();
        Ok(Matrix { ring: ring.clone(), rows: r, cols: c, data })
    }

    /// Builds with explicit shape, allowing zero rows or columns.
    pub fn from_vec(ring: &R, rows: usize, cols: usize, data: Vec<R::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.iter().map(|x| ring.reduce(x)).collect();
        Ok(Matrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn from_i64(ring: &R, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| ring.from_i64(v))).collect();
        Self::from_vec(ring, r, c, data).expect("consistent shape")
    }

    pub fn from_columns(ring: &R, rows: usize, columns: &[Vec<R::Elem>]) -> Self {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
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

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entrywise canonical representatives.
    pub fn reduced(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| self.ring.reduce(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let r = &self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !r.is_zero(a) && !r.is_zero(b) {
                        acc = r.add(&acc, &r.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.sub(a, b)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let data = self.data.iter().map(|a| self.ring.mul(a, c)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; row index `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if r.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, r.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(ring: &R, rows: usize, blocks: &[&Self]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row count");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn vstack(ring: &R, cols: usize, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column count");
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diag(ring: &R, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                let v = self.ring.add(self.get(r0 + i, c0 + j), b.get(i, j));
                self.set(r0 + i, c0 + j, v);
            }
        }
    }

    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Self {
        let mut out = Self::zeros(&self.ring, nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.ring, idx.len(), self.cols);
        for (a, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(a, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.ring, self.rows, idx.len());
        for i in 0..self.rows {
            for (b, &j) in idx.iter().enumerate() {
                out.set(i, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += q * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, src: usize, q: &R::Elem) {
        if self.ring.is_zero(q) {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if self.ring.is_zero(s) {
                continue;
            }
            let v = self.ring.add(self.get(target, j), &self.ring.mul(q, s));
            self.set(target, j, v);
        }
    }

    /// `col[target] += q * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, target: usize, src: usize, q: &R::Elem) {
        if self.ring.is_zero(q) {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if self.ring.is_zero(s) {
                continue;
            }
            let v = self.ring.add(self.get(i, target), &self.ring.mul(q, s));
            self.set(i, target, v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// Same matrix over another ring, mapping entries through `f`.
    pub fn map_ring<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| ring.reduce(&f(x))).collect(),
        }
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| self.ring.format_elem(x)).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        if self.rows == 0 && self.cols > 0 {
            write!(f, "0x{}", self.cols)?;
        }
        write!(f, "]")
    }
}
