//! Dense matrices over GF(2^e): rank, kernel, linear solve, inverse.
//!
//! Over GF(2) every elimination runs on bit-packed rows ([`BitMatrix`]);
//! the other fields use a plain row-major grid.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        if F::DEGREE == 1 {
            return BitMatrix::from_matrix(self).rank();
        }
        dense_rref(self.clone()).1.len()
    }

    /// A basis of the right kernel {x : m·x = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        if F::DEGREE == 1 {
            return BitMatrix::from_matrix(self)
                .kernel_basis()
                .into_iter()
                .map(|bits| bits_to_vec(&bits, self.cols))
                .collect();
        }
        let (r, pivots) = dense_rref(self.clone());
        kernel_from_rref(&r, &pivots)
    }

    /// Some x with m·x = rhs, or `None` when rhs is outside the column span.
    pub fn solve(&self, rhs: &[F]) -> Result<Option<Vec<F>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} against {} rows",
                rhs.len(),
                self.rows
            )));
        }
        if F::DEGREE == 1 {
            let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
            for i in 0..self.rows {
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() {
                        aug.set(i, j);
                    }
                }
                if !rhs[i].is_zero() {
                    aug.set(i, self.cols);
                }
            }
            return Ok(aug
                .solve_augmented()
                .map(|bits| bits_to_vec(&bits, self.cols)));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, rhs[i]);
        }
        let (r, pivots) = dense_rref(aug);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, F::one());
        }
        let (r, pivots) = dense_rref(aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| F::random(rng)).collect(),
        }
    }

    /// Uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        loop {
            let m = Self::random(rng, n, n);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// Permutation matrix sending e_i to e_{perm[i]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, F::one());
        }
        m
    }
}

fn bits_to_vec<F: Field>(bits: &[u64], len: usize) -> Vec<F> {
    (0..len)
        .map(|j| {
            if (bits[j / 64] >> (j % 64)) & 1 == 1 {
                F::one()
            } else {
                F::zero()
            }
        })
        .collect()
}

fn dense_rref<F: Field>(mut m: Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = m.get(r, c).inv().expect("pivot is nonzero");
        for j in c..m.cols {
            let x = m.get(r, j);
            m.set(r, j, x * inv);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c);
            if f.is_zero() {
                continue;
            }
            for j in c..m.cols {
                let x = m.get(i, j) - f * m.get(r, j);
                m.set(i, j, x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; r.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..r.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![F::zero(); r.cols];
            x[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(i, f);
            }
            x
        })
        .collect()
}

/// Bit-packed matrix over GF(2), one `u64` word per 64 columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_matrix<F: Field>(m: &Matrix<F>) -> Self {
        let mut b = Self::zeros(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                if !m.get(i, j).is_zero() {
                    b.set(i, j);
                }
            }
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    fn xor_row(&mut self, dst: usize, src: usize, from_word: usize) {
        let w = self.words;
        for k in from_word..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
            }
            let wc = c / 64;
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(i, r, wc);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
            }
            let wc = c / 64;
            for i in r + 1..m.rows {
                if m.get(i, c) {
                    m.xor_row(i, r, wc);
                }
            }
            r += 1;
        }
        r
    }

    /// Kernel basis vectors as packed bit rows of length `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; m.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let words = m.cols.div_ceil(64).max(1);
        (0..m.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![0u64; words];
                x[f / 64] |= 1 << (f % 64);
                for (i, &p) in pivots.iter().enumerate() {
                    if m.get(i, f) {
                        x[p / 64] |= 1 << (p % 64);
                    }
                }
                x
            })
            .collect()
    }

    /// Treats the last column as the right-hand side.
    fn solve_augmented(mut self) -> Option<Vec<u64>> {
        let n = self.cols - 1;
        let pivots = self.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![0u64; n.div_ceil(64).max(1)];
        for (i, &p) in pivots.iter().enumerate() {
            if self.get(i, n) {
                x[p / 64] |= 1 << (p % 64);
            }
        }
        Some(x)
    }
}

/// Incrementally maintained echelon basis of a subspace of F^n.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    dim: usize,
    /// Each basis vector is normalized so its pivot entry is 1.
    basis: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Subspace<F> {
    pub fn new(dim: usize) -> Self {
        Subspace {
            dim,
            basis: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, b) in &self.basis {
            let f = v[*p];
            if !f.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x -= f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns the reduced vector if it enlarged the space.
    pub fn insert(&mut self, v: &[F]) -> Option<Vec<F>> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x *= inv;
        }
        self.basis.push((p, r.clone()));
        Some(r)
    }

    pub fn basis(&self) -> Vec<Vec<F>> {
        self.basis.iter().map(|(_, b)| b.clone()).collect()
    }
}
