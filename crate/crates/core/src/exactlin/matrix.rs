//! Dense matrices over an exact field.

use std::fmt;

use rand::Rng;

use super::field::Field;
use super::poly::Poly;

/// A `rows x cols` matrix over `F`, row-major. Empty shapes are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub reduced: FieldMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for FieldMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<F: Field> FieldMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Self { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { field, rows, cols, data }
    }

    /// Build from integer rows; every row must have length `cols`.
    pub fn from_i64_rows(field: F, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Self {
        assert_eq!(entries.len(), rows, "row count");
        Self::from_fn(field.clone(), rows, cols, |i, j| {
            assert_eq!(entries[i].len(), cols, "row {i} length");
            field.from_i64(entries[i][j])
        })
    }

    pub fn from_elems(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { field, rows, cols, data }
    }

    /// A column vector.
    pub fn column_vector(field: F, v: Vec<F::Elem>) -> Self {
        let n = v.len();
        Self::from_elems(field, n, 1, v)
    }

    pub fn random<R: Rng + ?Sized>(field: F, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field.clone(), rows, cols, |_, _| field.random(rng))
    }

    /// A uniformly-ish random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(field: F, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field.clone(), n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
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

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        Self::from_fn(f.clone(), self.rows * other.rows, self.cols * other.cols, |i, j| {
            f.mul(self.get(i / other.rows, j / other.cols), other.get(i % other.rows, j % other.cols))
        })
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`,
    /// adding to what is there.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let v = self.field.add(self.get(r0 + i, c0 + j), block.get(i, j));
                self.set(r0 + i, c0 + j, v);
            }
        }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack_all(field: F, rows: usize, blocks: &[Self]) -> Self {
        blocks.iter().fold(Self::zeros(field, rows, 0), |acc, b| acc.hstack(b))
    }

    pub fn vstack_all(field: F, cols: usize, blocks: &[Self]) -> Self {
        blocks.iter().fold(Self::zeros(field, 0, cols), |acc, b| acc.vstack(b))
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(
            self.field.clone(),
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => self.field.zero(),
            },
        )
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.field.clone(), self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(self.field.clone(), rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Rows `start..end`.
    pub fn row_range(&self, start: usize, end: usize) -> Self {
        let idx: Vec<usize> = (start..end).collect();
        self.select_rows(&idx)
    }

    /// Columns `start..end`.
    pub fn column_range(&self, start: usize, end: usize) -> Self {
        let idx: Vec<usize> = (start..end).collect();
        self.select_columns(&idx)
    }

    pub fn echelon(&self) -> Echelon<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f.clone(), self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, t, f.neg(reduced.get(r, fc)));
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let rhs = Self::column_vector(self.field.clone(), b.to_vec());
        self.solve_matrix(&rhs).map(|x| x.column(0))
    }

    /// Some `X` with `self * X = rhs`, or `None` if any column is unreachable.
    pub fn solve_matrix(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(rhs.rows, self.rows, "right-hand side rows");
        let f = &self.field;
        let aug = self.hstack(rhs);
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f.clone(), self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, reduced.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        self.solve_matrix(&Self::identity(self.field.clone(), self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Columns form a basis of the column space, chosen among the columns
    /// of `self` (greedy, left to right).
    pub fn column_space(&self) -> Self {
        let pivots = self.echelon().pivots;
        self.select_columns(&pivots)
    }

    /// Extend the column basis `self` of a subspace of `F^n` to a basis of
    /// `span(self) + span(ambient)`, greedily adding columns of `ambient`.
    /// Returns only the added columns.
    pub fn extend_basis(&self, ambient: &Self) -> Self {
        assert_eq!(self.rows, ambient.rows);
        let mut current = self.column_space();
        let mut added = Self::zeros(self.field.clone(), self.rows, 0);
        let mut rank = current.cols;
        for j in 0..ambient.cols {
            let col = ambient.select_columns(&[j]);
            let trial = current.hstack(&col);
            let r = trial.rank();
            if r > rank {
                current = trial;
                rank = r;
                added = added.hstack(&col);
            }
        }
        added
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluate a polynomial at a square matrix (Horner).
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let id = Self::identity(self.field.clone(), n);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zeros(self.field.clone(), n, n), |acc, c| acc.mul(self).add(&id.scale(c)))
    }

    /// The monic minimal polynomial, via the first linear dependency among
    /// `I, A, A^2, ...`.
    pub fn minimal_polynomial(&self) -> Poly<F> {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Poly::constant(f.clone(), f.one());
        }
        let vec_of = |m: &Self| Self::column_vector(f.clone(), m.data.clone());
        let mut powers = vec_of(&Self::identity(f.clone(), n));
        let mut cur = Self::identity(f.clone(), n);
        for k in 1..=n {
            cur = cur.mul(self);
            let target = vec_of(&cur);
            if let Some(x) = powers.solve_matrix(&target) {
                // A^k = sum x_i A^i
                let mut coeffs: Vec<F::Elem> = x.column(0).iter().map(|c| f.neg(c)).collect();
                coeffs.push(f.one());
                return Poly::new(f.clone(), coeffs);
            }
            powers = powers.hstack(&target);
            debug_assert!(k < n || powers.cols() <= n * n);
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|a| self.field.format_elem(a)).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}
