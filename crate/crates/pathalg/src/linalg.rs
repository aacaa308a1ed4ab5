//! Dense exact linear algebra over a [`Scalar`] field.
//!
//! Vectors are `Vec<F>`; a subspace is a list of basis vectors kept in
//! reduced row echelon form.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
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
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, rs: &[Vec<F>]) -> Self {
        assert_eq!(rs.len(), rows);
        let mut m = Self::zeros(rows, cols);
        for (i, r) in rs.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, x) in r.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_cols(rows: usize, cs: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cs.len());
        for (j, c) in cs.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| F::from_i64(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        s = s + self[(i, j)].clone() * x.clone();
                    }
                }
                s
            })
            .collect()
    }

    /// Stacks `self` on top of `o`.
    pub fn vstack(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let d = f.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(out)
    }

    /// Basis of the column space, in echelon form.
    pub fn image(&self) -> Vec<Vec<F>> {
        span((0..self.cols).map(|j| self.col(j)).collect(), self.rows)
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  {}", r.join(" "))?;
        }
        Ok(())
    }
}

/// Echelon basis of the span of `vs` inside `F^n`.
pub fn span<F: Scalar>(vs: Vec<Vec<F>>, n: usize) -> Vec<Vec<F>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vs.len(), n, &vs);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

pub fn dim_span<F: Scalar>(vs: &[Vec<F>], n: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_rows(vs.len(), n, vs).rank()
}

pub fn sum<F: Scalar>(u: &[Vec<F>], w: &[Vec<F>], n: usize) -> Vec<Vec<F>> {
    span(u.iter().chain(w).cloned().collect(), n)
}

pub fn intersect<F: Scalar>(u: &[Vec<F>], w: &[Vec<F>], n: usize) -> Vec<Vec<F>> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    // Solve Σ x_i u_i = Σ y_j w_j.
    let mut cols: Vec<Vec<F>> = u.to_vec();
    cols.extend(w.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let k = Matrix::from_cols(n, &cols).kernel();
    let vs = k
        .iter()
        .map(|x| {
            let mut v = vec![F::zero(); n];
            for (i, ui) in u.iter().enumerate() {
                for (t, e) in ui.iter().enumerate() {
                    v[t] = v[t].clone() + x[i].clone() * e.clone();
                }
            }
            v
        })
        .collect();
    span(vs, n)
}

pub fn contains<F: Scalar>(u: &[Vec<F>], v: &[F], n: usize) -> bool {
    let mut all = u.to_vec();
    all.push(v.to_vec());
    dim_span(&all, n) == dim_span(u, n)
}

pub fn same_space<F: Scalar>(u: &[Vec<F>], w: &[Vec<F>], n: usize) -> bool {
    let d = dim_span(u, n);
    d == dim_span(w, n) && d == dim_span(&sum(u, w, n), n)
}

pub fn is_subspace<F: Scalar>(u: &[Vec<F>], w: &[Vec<F>], n: usize) -> bool {
    dim_span(&sum(u, w, n), n) == dim_span(w, n)
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// A subspace `S ⊆ F^n` together with a complement spanned by unit
/// vectors, giving coordinates on `S` and on `F^n / S`.
#[derive(Clone, Debug)]
pub struct Splitting<F> {
    pub n: usize,
    pub sub: Vec<Vec<F>>,
    /// Unit-vector indices spanning the complement.
    pub complement: Vec<usize>,
    /// Inverse of `[sub | complement]`.
    inv: Matrix<F>,
}

impl<F: Scalar> Splitting<F> {
    pub fn new(sub: &[Vec<F>], n: usize) -> Self {
        let sub = span(sub.to_vec(), n);
        let mut cols = sub.clone();
        let mut complement = Vec::new();
        for i in 0..n {
            if cols.len() == n {
                break;
            }
            let mut trial = cols.clone();
            trial.push(unit(n, i));
            if dim_span(&trial, n) == trial.len() {
                cols = trial;
                complement.push(i);
            }
        }
        let inv = if n == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_cols(n, &cols)
                .inverse()
                .expect("basis is invertible")
        };
        Splitting {
            n,
            sub,
            complement,
            inv,
        }
    }

    pub fn sub_dim(&self) -> usize {
        self.sub.len()
    }

    pub fn quot_dim(&self) -> usize {
        self.n - self.sub.len()
    }

    /// Coordinates of `v` in the basis `sub ∪ complement`.
    fn coords(&self, v: &[F]) -> Vec<F> {
        self.inv.apply(v)
    }

    /// Coordinates on `sub` of a vector that lies in `sub`.
    pub fn sub_coords(&self, v: &[F]) -> Vec<F> {
        let c = self.coords(v);
        debug_assert!(c[self.sub.len()..].iter().all(Scalar::is_zero));
        c[..self.sub.len()].to_vec()
    }

    pub fn quot_coords(&self, v: &[F]) -> Vec<F> {
        self.coords(v)[self.sub.len()..].to_vec()
    }

    /// Projection `F^n → F^n / S` as a matrix.
    pub fn projection(&self) -> Matrix<F> {
        let k = self.sub.len();
        let mut p = Matrix::zeros(self.n - k, self.n);
        for i in k..self.n {
            for j in 0..self.n {
                p[(i - k, j)] = self.inv[(i, j)].clone();
            }
        }
        p
    }

    /// Inclusion `S → F^n` as a matrix.
    pub fn inclusion(&self) -> Matrix<F> {
        Matrix::from_cols(self.n, &self.sub)
    }

    /// The section `F^n / S → F^n` through the unit-vector complement.
    pub fn section(&self) -> Matrix<F> {
        let cs: Vec<Vec<F>> = self.complement.iter().map(|&i| unit(self.n, i)).collect();
        Matrix::from_cols(self.n, &cs)
    }
}
