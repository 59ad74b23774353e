//! Exact matrices with dense or sparse row storage.
//!
//! Small matrices are stored densely, larger ones as sparse rows; the
//! cutover is the `dense_limit` knob (total entries, default 256·256).
//! Elimination pivots deterministically: leftmost nonzero column, then the
//! smallest row index, so every result is reproducible bit for bit.

use crate::field::{Field, Scalar};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

pub const DEFAULT_DENSE_LIMIT: usize = 256 * 256;

#[derive(Clone, Debug, PartialEq)]
enum Storage {
    Dense(Vec<Scalar>),
    Sparse(Vec<SVec>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    field: Field,
    nrows: usize,
    ncols: usize,
    data: Storage,
}

/// Result of an affine solve `m·x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    /// One particular solution plus the homogeneous kernel.
    Solution { particular: Vec<Scalar>, kernel: Subspace },
    /// Infeasible, with the rank certificate `rank(m) < rank(m|b)`.
    Infeasible { rank: usize, augmented_rank: usize },
}

impl Matrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        Self::zeros_with_limit(field, nrows, ncols, DEFAULT_DENSE_LIMIT)
    }

    pub fn zeros_with_limit(field: Field, nrows: usize, ncols: usize, dense_limit: usize) -> Self {
        let data = if nrows.saturating_mul(ncols) <= dense_limit {
            Storage::Dense(vec![field.zero(); nrows * ncols])
        } else {
            Storage::Sparse(vec![Vec::new(); nrows])
        };
        Matrix { field, nrows, ncols, data }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, ncols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let mut m = Self::zeros(field, rows.len(), ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged row");
            for (j, c) in row.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    pub fn from_sparse_rows(field: Field, ncols: usize, rows: Vec<SVec>) -> Self {
        let nrows = rows.len();
        let mut m = Self::zeros(field, nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, c) in row {
                m.set(i, j, c);
            }
        }
        m
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            ncols,
            rows.iter()
                .map(|r| r.iter().map(|n| field.from_i64(*n)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.data {
            Storage::Dense(d) => d[i * self.ncols + j].clone(),
            Storage::Sparse(rows) => svec::get(&rows[i], j)
                .cloned()
                .unwrap_or_else(|| self.field.zero()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        match &mut self.data {
            Storage::Dense(d) => d[i * self.ncols + j] = c,
            Storage::Sparse(rows) => {
                let row = &mut rows[i];
                match row.binary_search_by_key(&j, |(k, _)| *k) {
                    Ok(pos) => {
                        if self.field.is_zero(&c) {
                            row.remove(pos);
                        } else {
                            row[pos].1 = c;
                        }
                    }
                    Err(pos) => {
                        if !self.field.is_zero(&c) {
                            row.insert(pos, (j, c));
                        }
                    }
                }
            }
        }
    }

    pub fn row(&self, i: usize) -> SVec {
        match &self.data {
            Storage::Dense(d) => {
                svec::from_dense(&self.field, &d[i * self.ncols..(i + 1) * self.ncols])
            }
            Storage::Sparse(rows) => rows[i].clone(),
        }
    }

    pub fn sparse_rows(&self) -> Vec<SVec> {
        (0..self.nrows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for (j, c) in self.row(i) {
                t.set(j, i, c);
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch");
        let mut out = Self::zeros(self.field, self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            let mut acc: SVec = Vec::new();
            for (k, c) in self.row(i) {
                acc = svec::add_scaled(&self.field, &acc, &c, &rhs.row(k));
            }
            for (j, c) in acc {
                out.set(i, j, c);
            }
        }
        out
    }

    /// `m · v` for a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols, "shape mismatch");
        let sv = svec::from_dense(&self.field, v);
        svec::to_dense(&self.field, &self.apply_sparse(&sv), self.nrows)
    }

    /// `m · v` for a sparse vector.
    pub fn apply_sparse(&self, v: &SVec) -> SVec {
        let mut out: SVec = Vec::new();
        for i in 0..self.nrows {
            let row = self.row(i);
            let mut acc = self.field.zero();
            let mut any = false;
            let (mut a, mut b) = (0, 0);
            while a < row.len() && b < v.len() {
                if row[a].0 < v[b].0 {
                    a += 1;
                } else if v[b].0 < row[a].0 {
                    b += 1;
                } else {
                    acc = self.field.add(&acc, &self.field.mul(&row[a].1, &v[b].1));
                    any = true;
                    a += 1;
                    b += 1;
                }
            }
            if any && !self.field.is_zero(&acc) {
                out.push((i, acc));
            }
        }
        out
    }

    /// Rank by forward elimination only; no kernel is materialized.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut pivots: Vec<usize> = Vec::new();
        let mut echelon: Vec<SVec> = Vec::new();
        for r in 0..self.nrows {
            let mut cur = self.row(r);
            while let Some((lead, c)) = cur.first().map(|(i, c)| (*i, c.clone())) {
                match pivots.binary_search(&lead) {
                    Ok(k) => {
                        let ratio = f.neg(&f.div(&c, &echelon[k].first().unwrap().1));
                        cur = svec::add_scaled(f, &cur, &ratio, &echelon[k]);
                    }
                    Err(k) => {
                        pivots.insert(k, lead);
                        echelon.insert(k, cur);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// Rank and a canonical (reduced echelon) kernel basis.
    ///
    /// `rank + kernel.dim() == ncols` and `m·v = 0` exactly for every basis
    /// vector of the kernel.
    pub fn rank_and_kernel(&self) -> (usize, Subspace) {
        let (pivots, rref) = match &self.data {
            Storage::Dense(_) => self.rref_dense(),
            Storage::Sparse(_) => self.rref_sparse(),
        };
        let rank = pivots.len();
        let mut kernel = Subspace::zero(self.field, self.ncols);
        let pivot_set: Vec<usize> = pivots.clone();
        for fc in 0..self.ncols {
            if pivot_set.binary_search(&fc).is_ok() {
                continue;
            }
            let mut v: SVec = vec![(fc, self.field.one())];
            for (r, &pc) in pivot_set.iter().enumerate() {
                if let Some(c) = svec::get(&rref[r], fc) {
                    v.push((pc, self.field.neg(c)));
                }
            }
            kernel.insert(svec::canon(&self.field, v));
        }
        (rank, kernel)
    }

    /// Solve `m·x = b` exactly.
    pub fn solve_affine(&self, b: &[Scalar]) -> SolveOutcome {
        assert_eq!(b.len(), self.nrows, "rhs length mismatch");
        // eliminate on the augmented matrix [m | b]
        let mut rows: Vec<SVec> = self.sparse_rows();
        for (i, c) in svec::from_dense(&self.field, b) {
            rows[i].push((self.ncols, c));
        }
        let (pivots, rref) = rref_rows(&self.field, rows, self.ncols + 1);
        let augmented_rank = pivots.len();
        let rank = pivots.iter().filter(|p| **p < self.ncols).count();
        if rank < augmented_rank {
            return SolveOutcome::Infeasible { rank, augmented_rank };
        }
        let mut particular = vec![self.field.zero(); self.ncols];
        for (r, &pc) in pivots.iter().enumerate() {
            if let Some(c) = svec::get(&rref[r], self.ncols) {
                particular[pc] = c.clone();
            }
        }
        let (_, kernel) = self.rank_and_kernel();
        SolveOutcome::Solution { particular, kernel }
    }

    fn rref_dense(&self) -> (Vec<usize>, Vec<SVec>) {
        let Storage::Dense(d) = &self.data else { unreachable!() };
        let f = &self.field;
        let mut a = d.clone();
        let (nr, nc) = (self.nrows, self.ncols);
        let at = |a: &Vec<Scalar>, i: usize, j: usize| a[i * nc + j].clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut prow = 0usize;
        for col in 0..nc {
            if prow >= nr {
                break;
            }
            let Some(r) = (prow..nr).find(|r| !f.is_zero(&a[r * nc + col])) else {
                continue;
            };
            for j in 0..nc {
                a.swap(prow * nc + j, r * nc + j);
            }
            let inv = f.inv(&at(&a, prow, col)).unwrap();
            for j in col..nc {
                a[prow * nc + j] = f.mul(&a[prow * nc + j], &inv);
            }
            for r2 in 0..nr {
                if r2 == prow || f.is_zero(&a[r2 * nc + col]) {
                    continue;
                }
                let factor = at(&a, r2, col);
                for j in col..nc {
                    let s = f.mul(&factor, &a[prow * nc + j]);
                    a[r2 * nc + j] = f.sub(&a[r2 * nc + j], &s);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        let rows = (0..pivots.len())
            .map(|r| svec::from_dense(f, &a[r * nc..(r + 1) * nc]))
            .collect();
        (pivots, rows)
    }

    fn rref_sparse(&self) -> (Vec<usize>, Vec<SVec>) {
        rref_rows(&self.field, self.sparse_rows(), self.ncols)
    }
}

/// Reduced row echelon form of a list of sparse rows.
///
/// Rows are absorbed one at a time with full reduction on both sides; the
/// RREF is unique, so the output does not depend on the absorption order.
pub(crate) fn rref_rows(field: &Field, rows: Vec<SVec>, ncols: usize) -> (Vec<usize>, Vec<SVec>) {
    let space = Subspace::span(*field, ncols, rows);
    (space.pivots().to_vec(), space.rows().to_vec())
}
