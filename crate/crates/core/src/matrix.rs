//! Dense exact matrices over ℚ(i) and row-reduced spans of them.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational as Q;

/// Row-major dense matrix. `data.len() == rows * cols` always.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Q::one() } else { Q::zero() })
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { Q::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries; convenient for fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Q::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// `E_{ij}` of the given shape.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = Q::one();
        m
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

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Q> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, p) = (self.rows, other.cols);
        let mut out = Self::zeros(n, p);
        for i in 0..n {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * p..(i + 1) * p];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "subtract")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * other`, shapes assumed equal.
    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        debug_assert_eq!(self.shape(), other.shape());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// `J⁻¹ xᵗ J` with `J = [[0, I],[−I, 0]]`.
    pub fn symplectic_transpose(&self) -> Result<Self> {
        if !self.is_square() || self.rows % 2 != 0 {
            return Err(Error::Shape(format!(
                "symplectic transpose needs even square order, got {}x{}",
                self.rows, self.cols
            )));
        }
        let h = self.rows / 2;
        // With x = [[A,B],[C,D]] the result is [[Dᵗ, −Bᵗ],[−Cᵗ, Aᵗ]].
        Ok(Self::from_fn(self.rows, self.rows, |i, j| {
            let (bi, ii) = (i / h, i % h);
            let (bj, jj) = (j / h, j % h);
            match (bi, bj) {
                (0, 0) => self[(h + jj, h + ii)].clone(),
                (0, 1) => -&self[(jj, h + ii)],
                (1, 0) => -&self[(h + jj, ii)],
                _ => self[(jj, ii)].clone(),
            }
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.rows).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (i + 1..self.rows).all(|j| self[(i, j)] == -&self[(j, i)])
            })
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Overwrite the block starting at `(r0, c0)`. Panics if it does not fit.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `[[a, b],[c, d]]` from four blocks of matching sizes.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Shape("incompatible 2x2 block layout".into()));
        }
        let mut out = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        out.set_block(0, 0, a);
        out.set_block(0, a.cols, b);
        out.set_block(a.rows, 0, c);
        out.set_block(a.rows, a.cols, d);
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                Q::zero()
            } else {
                a * &other[(i % other.rows, j % other.cols)]
            }
        })
    }

    /// The form `J = [[0, I_h],[−I_h, 0]]` of order `2h`.
    pub fn symplectic_form(h: usize) -> Self {
        let mut j = Self::zeros(2 * h, 2 * h);
        for k in 0..h {
            j[(k, h + k)] = Q::one();
            j[(h + k, k)] = Q::from_int(-1);
        }
        j
    }

    /// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Q>> = (0..self.rows).map(|i| clear_denominators(self.row(i))).collect();
        let mut prev = Q::one();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            for row in tail.iter_mut() {
                let f = row[c].clone();
                for j in c + 1..self.cols {
                    let v = &(&pivot_row[c] * &row[j]) - &(&f * &pivot_row[j]);
                    row[j] = &v / &prev;
                }
                row[c] = Q::zero();
            }
            prev = a[r][c].clone();
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }

    /// Inverse by fraction-free Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let mut prev = Q::one();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(k, p);
            let pivot_row = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let f = row[k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let v = &(&pivot_row[k] * &row[j]) - &(&f * &pivot_row[j]);
                    row[j] = &v / &prev;
                }
                row[k] = Q::zero();
            }
            prev = pivot_row[k].clone();
        }
        let mut out = Self::zeros(n, n);
        for (i, row) in a.iter().enumerate() {
            let d = row[i].inv()?;
            for j in 0..n {
                out[(i, j)] = &row[n + j] * &d;
            }
        }
        Ok(out)
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Scale a row so every entry is a Gaussian integer.
fn clear_denominators(row: &[Q]) -> Vec<Q> {
    use malachite_base::num::arithmetic::traits::Lcm;
    use malachite_q::Rational;
    let mut l = malachite_nz::natural::Natural::from(1u32);
    for v in row {
        for part in [v.re(), v.im()] {
            let d = part.to_denominator();
            if d != 1u32 {
                l = l.lcm(d);
            }
        }
    }
    if l == 1u32 {
        return row.to_vec();
    }
    let s = Q::from(Rational::from(l));
    row.iter().map(|v| v * &s).collect()
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; fallible callers use the `try_*`/`mat_mul` methods.
impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.mat_mul(rhs).expect("matrix shapes")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix shapes")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix shapes")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&Q::from_int(-1))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Q>>::deserialize(d)?;
        ExactMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    a.mat_mul(b)
}

pub fn mat_rank(a: &ExactMatrix) -> usize {
    a.rank()
}

pub fn symplectic_transpose(x: &ExactMatrix) -> Result<ExactMatrix> {
    x.symplectic_transpose()
}

type SparseRow = Vec<(usize, Q)>;

fn to_sparse(v: &[Q]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

fn sparse_get(row: &SparseRow, k: usize) -> Option<&Q> {
    row.binary_search_by_key(&k, |(j, _)| *j).ok().map(|p| &row[p].1)
}

/// `dst -= c * src` on dense storage.
fn axpy_dense(dst: &mut [Q], c: &Q, src: &SparseRow) {
    for (j, v) in src {
        dst[*j] -= &(c * v);
    }
}

/// A span of same-shape matrices kept in fully reduced row echelon form,
/// entries flattened row-major. Pivot entries are 1 and pivot columns are
/// zero in every other basis row, so equal spans have equal bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    rows: usize,
    cols: usize,
    basis: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_generators<'a>(
        rows: usize,
        cols: usize,
        gens: impl IntoIterator<Item = &'a ExactMatrix>,
    ) -> Result<Self> {
        let mut s = Self::new(rows, cols);
        for g in gens {
            s.insert(g)?;
        }
        Ok(s)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows * self.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, m: &ExactMatrix) -> Result<()> {
        if m.shape() != (self.rows, self.cols) {
            return Err(Error::Shape(format!(
                "{}x{} matrix in a span of {}x{} matrices",
                m.rows, m.cols, self.rows, self.cols
            )));
        }
        Ok(())
    }

    fn reduce_dense(&self, v: &mut [Q]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                axpy_dense(v, &c, row);
            }
        }
    }

    /// Residual of `m` after subtracting its projection along the basis.
    pub fn reduce(&self, m: &ExactMatrix) -> Result<ExactMatrix> {
        self.check(m)?;
        let mut v = m.data.clone();
        self.reduce_dense(&mut v);
        ExactMatrix::from_flat(self.rows, self.cols, v)
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool> {
        Ok(self.reduce(m)?.is_zero())
    }

    /// Coefficients of `m` in [`Self::basis`], or `None` if `m` is outside the span.
    pub fn coordinates(&self, m: &ExactMatrix) -> Result<Option<Vec<Q>>> {
        if !self.contains(m)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| m.data[p].clone()).collect()))
    }

    /// Adds `m` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, m: &ExactMatrix) -> Result<bool> {
        self.check(m)?;
        let mut v = m.data.clone();
        Ok(self.insert_dense(&mut v).is_some())
    }

    /// Reduces `v` in place; if independent, adds it and returns the residual's pivot.
    fn insert_dense(&mut self, v: &mut [Q]) -> Option<usize> {
        self.reduce_dense(v);
        let lead = v.iter().position(|x| !x.is_zero())?;
        let inv = v[lead].inv().expect("nonzero lead");
        let row: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x * &inv))
            .collect();
        for other in &mut self.basis {
            if let Some(c) = sparse_get(other, lead).cloned() {
                *other = sparse_axpy(other, &c, &row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.basis.insert(at, row);
        Some(lead)
    }

    /// Adds `m` and, if it was independent, returns its residual (a new
    /// spanning direction). Used by closure loops as the next frontier element.
    pub fn insert_residual(&mut self, m: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        self.check(m)?;
        let mut v = m.data.clone();
        match self.insert_dense(&mut v) {
            Some(_) => Ok(Some(ExactMatrix::from_flat(self.rows, self.cols, v)?)),
            None => Ok(None),
        }
    }

    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.basis
            .iter()
            .map(|row| {
                let mut m = ExactMatrix::zeros(self.rows, self.cols);
                for (k, v) in row {
                    m.data[*k] = v.clone();
                }
                m
            })
            .collect()
    }

    /// `Σ c_k b_k` over the echelon basis.
    pub fn combine(&self, coeffs: &[Q]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for (row, c) in self.basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (k, v) in row {
                m.data[*k] += &(c * v);
            }
        }
        m
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for b in other.basis() {
            if !self.contains(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `a - c * b` for sparse rows.
fn sparse_axpy(a: &SparseRow, c: &Q, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |x| x.0);
        let kb = b.get(j).map_or(usize::MAX, |x| x.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace({}x{}, dim {}, pivots {:?})",
            self.rows,
            self.cols,
            self.dim(),
            self.pivots
        )
    }
}

/// Reduced echelon span of `generators`; an empty list gives the zero span of 0x0 matrices.
pub fn subspace_from(generators: &[ExactMatrix]) -> Result<Subspace> {
    match generators.first() {
        None => Ok(Subspace::new(0, 0)),
        Some(g) => Subspace::from_generators(g.rows, g.cols, generators),
    }
}

/// Incremental elimination over flat vectors that remembers how each echelon
/// row was formed from the pushed vectors, so linear relations and
/// coordinates come out directly.
#[derive(Debug, Clone)]
pub struct RelationFinder {
    len: usize,
    pushed: usize,
    // (echelon row, pivot, combination of pushed vectors giving it)
    rows: Vec<(SparseRow, usize, SparseRow)>,
}

impl RelationFinder {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            pushed: 0,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn eliminate(&self, v: &mut [Q], combo: &mut Vec<Q>) {
        for (row, p, c) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                axpy_dense(v, &f, row);
                axpy_dense(combo, &f, c);
            }
        }
    }

    /// Pushes vector number `self.pushed`. If it depends on earlier ones,
    /// returns coefficients `c` (length = vectors pushed so far, including
    /// this one, whose coefficient is 1) with `Σ c_k v_k = 0`.
    pub fn push(&mut self, v: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(v.len(), self.len, "vector length");
        let idx = self.pushed;
        self.pushed += 1;
        let mut w = v.to_vec();
        let mut combo = vec![Q::zero(); self.pushed];
        combo[idx] = Q::one();
        self.eliminate(&mut w, &mut combo);
        match w.iter().position(|x| !x.is_zero()) {
            None => Some(combo),
            Some(lead) => {
                let inv = w[lead].inv().expect("nonzero lead");
                let row = to_sparse(&w).into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                let c = to_sparse(&combo).into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                let at = self.rows.partition_point(|r| r.1 < lead);
                self.rows.insert(at, (row, lead, c));
                None
            }
        }
    }

    /// Coefficients `c` with `Σ c_k v_k = target`, if the target is in the span.
    pub fn express(&self, target: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(target.len(), self.len, "vector length");
        let mut w = target.to_vec();
        let mut combo = vec![Q::zero(); self.pushed];
        self.eliminate(&mut w, &mut combo);
        if w.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(combo.into_iter().map(|x| -x).collect())
    }
}
