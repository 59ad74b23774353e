//! Column-major sparse matrices for module actions.

use crate::field::{Field, Scalar};
use crate::svec::{self, SVec};

#[derive(Clone, Debug, PartialEq)]
pub struct ColMat {
    pub nrows: usize,
    pub cols: Vec<SVec>,
}

impl ColMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        ColMat { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        ColMat { nrows: n, cols: (0..n).map(|i| svec::unit(field, i)).collect() }
    }

    pub fn from_cols(nrows: usize, cols: Vec<SVec>) -> Self {
        ColMat { nrows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn apply(&self, field: &Field, v: &SVec) -> SVec {
        let mut out: SVec = Vec::new();
        for (j, c) in v {
            out = svec::add_scaled(field, &out, c, &self.cols[*j]);
        }
        out
    }

    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, field: &Field, rhs: &ColMat) -> ColMat {
        let cols = rhs
            .cols
            .iter()
            .map(|c| self.apply(field, c))
            .collect();
        ColMat { nrows: self.nrows, cols }
    }

    pub fn scaled_sum(field: &Field, terms: &[(Scalar, &ColMat)], nrows: usize, ncols: usize) -> ColMat {
        let mut cols = vec![Vec::new(); ncols];
        for (j, slot) in cols.iter_mut().enumerate() {
            let mut acc: SVec = Vec::new();
            for (c, m) in terms {
                acc = svec::add_scaled(field, &acc, c, &m.cols[j]);
            }
            *slot = acc;
        }
        ColMat { nrows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}
