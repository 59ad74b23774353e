//! Canonical subspaces of `k^n` kept in reduced row echelon form.
//!
//! The echelon basis is unique for a given subspace, so equality of
//! subspaces is equality of the stored rows. All mutation goes through
//! [`Subspace::insert`], which maintains full reduction.

use crate::field::{Field, Scalar};
use crate::svec::{self, SVec};

#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// Rows in reduced echelon form, sorted by strictly increasing pivot.
    rows: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            s.insert(svec::unit(&field, i));
        }
        s
    }

    pub fn span<I: IntoIterator<Item = SVec>>(field: Field, ambient: usize, vecs: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` modulo the subspace; the residual has no pivot coordinates.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut cur = v.clone();
        loop {
            let hit = cur.iter().find_map(|(i, c)| {
                self.pivots
                    .binary_search(i)
                    .ok()
                    .map(|r| (r, c.clone()))
            });
            match hit {
                Some((r, c)) => {
                    let nc = self.field.neg(&c);
                    cur = svec::add_scaled(&self.field, &cur, &nc, &self.rows[r]);
                }
                None => return cur,
            }
        }
    }

    /// Reduce `v`, also returning the row coefficients used, so that
    /// `v = residual + Σ coeff[r]·row[r]`.
    pub fn reduce_tracked(&self, v: &SVec) -> (SVec, Vec<(usize, Scalar)>) {
        let mut cur = v.clone();
        let mut used: Vec<(usize, Scalar)> = Vec::new();
        loop {
            let hit = cur.iter().find_map(|(i, c)| {
                self.pivots
                    .binary_search(i)
                    .ok()
                    .map(|r| (r, c.clone()))
            });
            match hit {
                Some((r, c)) => {
                    let nc = self.field.neg(&c);
                    cur = svec::add_scaled(&self.field, &cur, &nc, &self.rows[r]);
                    used.push((r, c));
                }
                None => {
                    used.sort_by_key(|(r, _)| *r);
                    return (cur, used);
                }
            }
        }
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Insert a vector, returning `true` if the dimension grew.
    pub fn insert(&mut self, v: SVec) -> bool {
        let mut red = self.reduce(&v);
        let Some((pivot, lead)) = red.first().map(|(i, c)| (*i, c.clone())) else {
            return false;
        };
        debug_assert!(pivot < self.ambient, "vector outside ambient space");
        let inv = self.field.inv(&lead).expect("nonzero lead");
        red = svec::scale(&self.field, &red, &inv);
        // clear the new pivot column from existing rows
        for r in 0..self.rows.len() {
            if let Some(c) = svec::get(&self.rows[r], pivot).cloned() {
                let nc = self.field.neg(&c);
                self.rows[r] = svec::add_scaled(&self.field, &self.rows[r], &nc, &red);
            }
        }
        let at = self.pivots.partition_point(|p| *p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, red);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Exact intersection, via the kernel of `[self^T | -other^T]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let f = self.field;
        let (u, v) = (self.dim(), other.dim());
        if u == 0 || v == 0 {
            return Subspace::zero(f, self.ambient);
        }
        let mut cols: Vec<SVec> = vec![Vec::new(); self.ambient];
        for (j, row) in self.rows.iter().enumerate() {
            for (i, c) in row {
                cols[*i].push((j, c.clone()));
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for (i, c) in row {
                cols[*i].push((u + j, f.neg(c)));
            }
        }
        let m = crate::matrix::Matrix::from_sparse_rows(f, u + v, cols);
        let (_, ker) = m.rank_and_kernel();
        let mut out = Subspace::zero(f, self.ambient);
        for kv in ker.rows() {
            let mut w: SVec = Vec::new();
            for (idx, a) in kv {
                if *idx < u {
                    w = svec::add_scaled(&f, &w, a, &self.rows[*idx]);
                }
            }
            out.insert(w);
        }
        out
    }

    /// Coordinates not hit by any pivot, ascending. The corresponding unit
    /// vectors complete the subspace to the full ambient space.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.rows.len());
        let mut it = self.pivots.iter().peekable();
        for i in 0..self.ambient {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::Rational
    }

    fn v(field: &Field, entries: &[(usize, i64)]) -> SVec {
        svec::canon(
            field,
            entries.iter().map(|(i, c)| (*i, field.from_i64(*c))).collect(),
        )
    }

    #[test]
    fn line_intersection_is_zero() {
        let a = Subspace::span(f(), 2, [v(&f(), &[(0, 1)])]);
        let b = Subspace::span(f(), 2, [v(&f(), &[(1, 1)])]);
        assert_eq!(a.intersect(&b).dim(), 0);
        assert_eq!(a.sum(&b).dim(), 2);
    }

    #[test]
    fn membership_of_scalar_multiple() {
        let a = Subspace::span(f(), 3, [v(&f(), &[(0, 1), (1, 2), (2, 3)])]);
        assert!(a.contains(&v(&f(), &[(0, 2), (1, 4), (2, 6)])));
        assert!(!a.contains(&v(&f(), &[(0, 2), (1, 4), (2, 7)])));
    }

    #[test]
    fn canonical_under_spanning_set_choice() {
        let s1 = Subspace::span(
            f(),
            3,
            [v(&f(), &[(0, 1), (1, 1)]), v(&f(), &[(1, 1), (2, 1)])],
        );
        let s2 = Subspace::span(
            f(),
            3,
            [v(&f(), &[(0, 2), (1, 3), (2, 1)]), v(&f(), &[(0, 1), (1, 1)]), v(&f(), &[(0, 3), (1, 4), (2, 1)])],
        );
        assert_eq!(s1, s2);
    }

    #[test]
    fn complement_coords_complete_basis() {
        let s = Subspace::span(f(), 4, [v(&f(), &[(1, 1), (3, 5)])]);
        assert_eq!(s.complement_coords(), vec![0, 2, 3]);
    }
}
