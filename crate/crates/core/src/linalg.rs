//! Dense exact linear algebra: reduced row echelon form, rank, kernels and
//! linear solves over a [`FieldSpec`].
//!
//! Over `QQ` elimination runs on integer rows. Each row is cleared of
//! denominators up front, rows are combined fraction-free, and every updated
//! row is divided by the gcd of its entries. The pivot rows are turned into
//! rationals only at the end. Over `GF(p)` it is plain Gauss-Jordan on `u64`
//! residues. Pivots are always the first nonzero entry, so output is
//! deterministic.
//!
//! [`EchelonSpan`] is the sparse incremental counterpart used for span and
//! rank questions on large, very sparse vector families (products of ideal
//! generators by monomials).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{add_mod, mul_mod, pow_mod, FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solution(Vec<Scalar>),
    Inconsistent,
}

impl Matrix {
    /// Row-major entries; all must belong to `field`.
    pub fn new(rows: usize, cols: usize, field: FieldSpec, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r);
        }
        Self::new(nrows, cols, field, entries)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols, field);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                m.entries[i * cols + j] = x.clone();
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

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn rref(&self) -> Rref {
        match self.field {
            FieldSpec::Rationals => self.rref_rational(),
            FieldSpec::PrimeField(p) => self.rref_modular(p),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn rref_rational(&self) -> Rref {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row: Vec<&BigRational> =
                    self.row(i).iter().map(|s| s.as_rational().expect("rational matrix")).collect();
                let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                let mut ints: Vec<BigInt> =
                    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
                remove_content(&mut ints);
                ints
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(prow, found);
            let (head, tail) = rows.split_at_mut(prow);
            let (pivot_row, tail) = tail.split_first_mut().unwrap();
            let pv = pivot_row[col].clone();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                if row[col].is_zero() {
                    continue;
                }
                let a = row[col].clone();
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = &*x * &pv - &a * y;
                }
                remove_content(row);
            }
            pivots.push(col);
            prow += 1;
        }
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            let lead = pivots.get(i).map(|&c| row[c].clone()).unwrap_or_else(BigInt::one);
            entries.extend(
                row.into_iter().map(|x| Scalar::Rational(BigRational::new(x, lead.clone()))),
            );
        }
        let reduced = Matrix { rows: self.rows, cols: self.cols, field: self.field, entries };
        Rref { reduced, rank: pivots.len(), pivot_columns: pivots }
    }

    fn rref_modular(&self, p: u64) -> Rref {
        let residue = |s: &Scalar| match s {
            Scalar::Modular { value, .. } => *value,
            Scalar::Rational(_) => unreachable!("modular matrix"),
        };
        let mut rows: Vec<Vec<u64>> =
            (0..self.rows).map(|i| self.row(i).iter().map(residue).collect()).collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(prow, found);
            let inv = pow_mod(rows[prow][col], p - 2, p);
            for x in rows[prow].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            let (head, tail) = rows.split_at_mut(prow);
            let (pivot_row, tail) = tail.split_first_mut().unwrap();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                let a = row[col];
                if a == 0 {
                    continue;
                }
                let neg = p - a;
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    if *y != 0 {
                        *x = add_mod(*x, mul_mod(neg, *y, p), p);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        let entries = rows.into_iter().flatten().map(|v| Scalar::Modular { value: v, modulus: p }).collect();
        let reduced = Matrix { rows: self.rows, cols: self.cols, field: self.field, entries };
        Rref { reduced, rank: pivots.len(), pivot_columns: pivots }
    }

    /// Basis of `{v : M v = 0}`, one vector per free column `f`, with
    /// `v[f] = 1`, zeros at the other free columns, and pivot coordinates
    /// read off the reduced matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivot_columns, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &c) in pivot_columns.iter().enumerate() {
                    v[c] = -reduced.get(r, f);
                }
                v
            })
            .collect()
    }

    /// One solution of `M v = b` (free variables set to zero), or
    /// `Inconsistent`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        if let Some(bad) = b.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        let cols = self.cols + 1;
        let mut aug = Self::zeros(self.rows, cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let Rref { reduced, pivot_columns, .. } = aug.rref();
        if pivot_columns.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (r, &c) in pivot_columns.iter().enumerate() {
            v[c] = reduced.get(r, self.cols).clone();
        }
        Ok(Solution::Solution(v))
    }
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| if x.is_zero() { g } else { g.gcd(x) });
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

/// A sparse vector: `(coordinate, nonzero value)` pairs sorted by coordinate.
pub type SparseVector = Vec<(usize, Scalar)>;

/// Incrementally maintained row echelon basis of a subspace of `K^dim`.
///
/// Rows are stored sparsely and keyed by their leading coordinate, with the
/// leading entry scaled to 1. Inserting a vector reduces it against the
/// stored rows and keeps the remainder when it is nonzero.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    field: FieldSpec,
    dim: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl EchelonSpan {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        EchelonSpan { field, dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the current basis; zero remainder means `v` is in
    /// the span.
    pub fn reduce(&self, mut v: SparseVector) -> SparseVector {
        let mut start = 0;
        while start < v.len() {
            let (lead, coef) = (v[start].0, v[start].1.clone());
            match self.rows.get(&lead) {
                Some(row) => {
                    v = axpy(&v, &-coef, row);
                }
                None => start += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVector) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        debug_assert!(v.iter().all(|(i, s)| *i < self.dim && !s.is_zero() && s.field() == self.field));
        if self.is_full() {
            return false;
        }
        let r = self.reduce(v);
        let Some((lead, coef)) = r.first().cloned() else {
            return false;
        };
        let inv = coef.inv().expect("leading entry is nonzero");
        let row = r.into_iter().map(|(i, s)| (i, &s * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }
}

/// `v + c * w` for sparse vectors, dropping cancellations.
fn axpy(v: &SparseVector, c: &Scalar, w: &SparseVector) -> SparseVector {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j == w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i == v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, c * &w[j].1));
            j += 1;
        } else {
            let s = &v[i].1 + &(c * &w[j].1);
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sparse form of a dense vector.
pub fn sparsify(v: &[Scalar]) -> SparseVector {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect()
}
