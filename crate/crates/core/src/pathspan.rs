//! Path enumeration and exact ideal slices inside a path algebra.
//!
//! Everything here works in coordinates indexed by enumerated paths. The
//! elimination order sorts paths by (new-arrow count, length, traversal
//! word, source) descending, so reduction rewrites a path into strictly
//! smaller ones: fewer new arrows first, then shorter, and never reaches
//! back up. Non-pivot paths of the slice are the normal-form basis of the
//! quotient algebra.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::quiver::{enumerate_paths, Path, PathLinComb, Quiver};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

pub(crate) type PathId = usize;

/// A relation generator prepared for product enumeration:
/// (terms, source, target, min component length, max component length).
pub(crate) type GenTerms = (Vec<(PathId, Scalar)>, usize, usize, usize, usize);

const PATH_BUDGET: usize = 200_000;

pub(crate) struct PathArena {
    pub quiver: Quiver,
    pub paths: Vec<Path>,
    pub id_of: HashMap<Path, PathId>,
    pub flen: Vec<usize>,
    pub by_len: Vec<Vec<PathId>>,
    pub by_src: Vec<Vec<PathId>>,
    pub by_tgt: Vec<Vec<PathId>>,
    /// Elimination column of each path and its inverse.
    pub col_of: Vec<usize>,
    pub path_at_col: Vec<PathId>,
}

impl PathArena {
    pub fn build(quiver: Quiver, new_from: usize, cap: usize) -> Result<PathArena> {
        let groups = enumerate_paths(&quiver, cap);
        let total: usize = groups.iter().map(|g| g.len()).sum();
        if total > PATH_BUDGET {
            return Err(Error::CapExceeded(format!(
                "{total} paths up to length {cap} (budget {PATH_BUDGET})"
            )));
        }
        let mut paths: Vec<Path> = Vec::with_capacity(total);
        let mut by_len: Vec<Vec<PathId>> = Vec::with_capacity(groups.len());
        for g in groups {
            let mut ids = Vec::with_capacity(g.len());
            for p in g {
                ids.push(paths.len());
                paths.push(p);
            }
            by_len.push(ids);
        }
        let id_of: HashMap<Path, PathId> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let flen: Vec<usize> = paths
            .iter()
            .map(|p| p.arrows_in_order().iter().filter(|a| **a >= new_from).count())
            .collect();
        let nv = quiver.vertex_count();
        let mut by_src = vec![Vec::new(); nv];
        let mut by_tgt = vec![Vec::new(); nv];
        for (i, p) in paths.iter().enumerate() {
            by_src[p.src()].push(i);
            by_tgt[p.tgt()].push(i);
        }
        let mut order: Vec<PathId> = (0..paths.len()).collect();
        let key = |i: PathId| {
            (
                flen[i],
                paths[i].len(),
                paths[i].arrows_in_order().to_vec(),
                paths[i].src(),
            )
        };
        order.sort_by_key(|i| std::cmp::Reverse(key(*i)));
        let mut col_of = vec![0usize; paths.len()];
        for (col, id) in order.iter().enumerate() {
            col_of[*id] = col;
        }
        Ok(PathArena {
            quiver,
            paths,
            id_of,
            flen,
            by_len,
            by_src,
            by_tgt,
            col_of,
            path_at_col: order,
        })
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    /// Ascending display order: fewest new arrows, shortest, then word.
    pub fn display_cmp(&self, a: PathId, b: PathId) -> std::cmp::Ordering {
        self.col_of[b].cmp(&self.col_of[a])
    }
}

/// An exact linear slice of an ideal, in elimination coordinates.
pub(crate) struct Slice {
    pub field: Field,
    pub space: Subspace,
}

impl Slice {
    pub fn new(field: Field, arena: &PathArena) -> Self {
        Slice { field, space: Subspace::zero(field, arena.path_count()) }
    }

    fn to_cols(&self, arena: &PathArena, combo: &[(PathId, Scalar)]) -> SVec {
        svec::canon(
            &self.field,
            combo.iter().map(|(p, c)| (arena.col_of[*p], c.clone())).collect(),
        )
    }

    fn to_paths(&self, arena: &PathArena, v: &SVec) -> Vec<(PathId, Scalar)> {
        v.iter().map(|(col, c)| (arena.path_at_col[*col], c.clone())).collect()
    }

    pub fn insert(&mut self, arena: &PathArena, combo: &[(PathId, Scalar)]) -> bool {
        let v = self.to_cols(arena, combo);
        self.space.insert(v)
    }

    pub fn reduce(&self, arena: &PathArena, combo: &[(PathId, Scalar)]) -> Vec<(PathId, Scalar)> {
        let r = self.space.reduce(&self.to_cols(arena, combo));
        self.to_paths(arena, &r)
    }

    pub fn contains(&self, arena: &PathArena, combo: &[(PathId, Scalar)]) -> bool {
        self.space.contains(&self.to_cols(arena, combo))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Rows pivoted at a path with no new arrows; these span the old-arrow
    /// part of the slice because such columns come last in the order.
    pub fn old_arrow_rows(&self, arena: &PathArena) -> Vec<Vec<(PathId, Scalar)>> {
        self.space
            .rows()
            .iter()
            .filter(|row| {
                row.first()
                    .map(|(col, _)| arena.flen[arena.path_at_col[*col]] == 0)
                    .unwrap_or(false)
            })
            .map(|row| self.to_paths(arena, row))
            .collect()
    }

    pub fn non_pivot_paths(&self, arena: &PathArena) -> Vec<PathId> {
        let mut out: Vec<PathId> = self
            .space
            .complement_coords()
            .into_iter()
            .map(|col| arena.path_at_col[col])
            .collect();
        out.sort_by(|a, b| arena.display_cmp(*a, *b));
        out
    }
}

/// How finite-dimensionality of a quotient was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    /// Every path of this length is in the ideal, so longer ones are too,
    /// and the slice below it is exact.
    Vanishing(usize),
    /// No vanishing length exists up to the cap, but every path longer than
    /// the basis rewrites to shorter ones inside the capped product span.
    Saturated(usize),
}

pub(crate) struct QuotientBuild {
    pub arena: PathArena,
    pub slice: Slice,
    /// Normal-form basis paths in ascending display order.
    pub basis: Vec<PathId>,
    pub basis_index: HashMap<PathId, usize>,
    pub fin: Finiteness,
}

pub(crate) struct QuotientRequest {
    pub field: Field,
    pub quiver: Quiver,
    pub new_from: usize,
    pub gens: Vec<PathLinComb>,
    pub cap: usize,
    /// Bound quiver mode: generators must sit in degrees >= 2, the
    /// vanishing length is the certified admissibility degree, and there is
    /// no saturation fallback.
    pub admissible: bool,
}

pub(crate) fn build_quotient(req: QuotientRequest) -> Result<QuotientBuild> {
    let QuotientRequest { field, quiver, new_from, gens, cap, admissible } = req;
    for g in &gens {
        if admissible && g.min_len() < 2 {
            return Err(Error::GeneratorDegree(g.display(&quiver, &field)));
        }
        if g.max_len() > cap {
            return Err(Error::CapExceeded(format!(
                "generator of length {} exceeds path length bound {cap}",
                g.max_len()
            )));
        }
    }
    let arena = PathArena::build(quiver, new_from, cap)?;
    let gen_ids: Vec<GenTerms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let ids: Vec<(PathId, Scalar)> = g
                .terms
                .iter()
                .map(|(p, c)| (arena.id_of[p], c.clone()))
                .collect();
            (ids, g.src().unwrap(), g.tgt().unwrap(), g.min_len(), g.max_len())
        })
        .collect();

    // Capped span of honest ideal elements: every component fits the cap.
    let mut capped = Slice::new(field, &arena);
    product_span(&arena, &gen_ids, cap, None, &mut capped);

    let vanish = (if admissible { 2 } else { 1 }..=cap).find(|n| {
        arena.by_len[*n]
            .iter()
            .all(|p| capped.contains(&arena, &[(*p, field.one())]))
    });

    match vanish {
        Some(n) => {
            // exact slice below n
            let mut slice = Slice::new(field, &arena);
            product_span(&arena, &gen_ids, cap, Some(n), &mut slice);
            let basis: Vec<PathId> = slice
                .non_pivot_paths(&arena)
                .into_iter()
                .filter(|p| arena.paths[*p].len() < n)
                .collect();
            let basis_index = basis.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            Ok(QuotientBuild { arena, slice, basis, basis_index, fin: Finiteness::Vanishing(n) })
        }
        None if admissible => Err(Error::NotAdmissibleWithinBound { bound: cap }),
        None => {
            let basis = capped.non_pivot_paths(&arena);
            let max_len = basis.iter().map(|p| arena.paths[*p].len()).max().unwrap_or(0);
            if 2 * max_len > cap {
                return Err(Error::NotFiniteWithinBound { bound: cap });
            }
            let basis_index = basis.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            Ok(QuotientBuild {
                arena,
                slice: capped,
                basis,
                basis_index,
                fin: Finiteness::Saturated(cap),
            })
        }
    }
}

/// Insert products p·g·q into `slice`.
///
/// With `truncate_below = None` a product is used when its longest
/// component fits the cap. With `Some(n)` a product is used when its
/// shortest component has length < n and components of length >= n are
/// dropped, which is exact once all paths of length n lie in the ideal.
fn product_span(
    arena: &PathArena,
    gens: &[GenTerms],
    cap: usize,
    truncate_below: Option<usize>,
    slice: &mut Slice,
) {
    for (terms, src, tgt, min_len, max_len) in gens {
        for &p in &arena.by_src[*tgt] {
            let plen = arena.paths[p].len();
            let p_path = &arena.paths[p];
            for &q in &arena.by_tgt[*src] {
                let qlen = arena.paths[q].len();
                let admit = match truncate_below {
                    None => plen + max_len + qlen <= cap,
                    Some(n) => plen + min_len + qlen < n,
                };
                if !admit {
                    continue;
                }
                let q_path = &arena.paths[q];
                let mut combo: Vec<(PathId, Scalar)> = Vec::with_capacity(terms.len());
                for (gp, c) in terms {
                    let full = p_path
                        .compose(&arena.paths[*gp])
                        .and_then(|w| w.compose(q_path))
                        .expect("generator terms are homogeneous");
                    if let Some(n) = truncate_below {
                        if full.len() >= n {
                            continue;
                        }
                    }
                    combo.push((arena.id_of[&full], c.clone()));
                }
                if !combo.is_empty() {
                    slice.insert(arena, &combo);
                }
            }
        }
    }
}

impl QuotientBuild {
    pub fn field(&self) -> Field {
        self.slice.field
    }

    /// Normal form of a path as coordinates in the quotient basis.
    /// Handles paths beyond the enumeration cap by peeling the last arrow.
    pub fn reduce_path(&self, p: &Path) -> SVec {
        if let Finiteness::Vanishing(n) = self.fin {
            if p.len() >= n {
                return Vec::new();
            }
        }
        if let Some(id) = self.arena.id_of.get(p) {
            return self.residual_to_basis(self.slice.reduce(&self.arena, &[(*id, self.field().one())]));
        }
        // too long to be enumerated: reduce the prefix, then extend
        let arrows = p.arrows_in_order();
        let (last, prefix) = arrows.split_last().expect("long path has arrows");
        let prefix_path = Path::from_traversal(&self.arena.quiver, prefix).expect("valid path");
        let field = self.field();
        let mut out: SVec = Vec::new();
        for (i, c) in self.reduce_path(&prefix_path) {
            let u = &self.arena.paths[self.basis[i]];
            if let Some(ext) = u.then(&self.arena.quiver, *last) {
                let red = self.reduce_path(&ext);
                out = svec::add_scaled(&field, &out, &c, &red);
            }
        }
        out
    }

    pub fn reduce_comb(&self, comb: &PathLinComb) -> SVec {
        let field = self.field();
        let mut out: SVec = Vec::new();
        for (p, c) in &comb.terms {
            let red = self.reduce_path(p);
            out = svec::add_scaled(&field, &out, c, &red);
        }
        out
    }

    fn residual_to_basis(&self, residual: Vec<(PathId, Scalar)>) -> SVec {
        svec::canon(
            &self.field(),
            residual
                .into_iter()
                .map(|(p, c)| {
                    let i = *self
                        .basis_index
                        .get(&p)
                        .expect("residual supported on basis paths");
                    (i, c)
                })
                .collect(),
        )
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.arena.paths[self.basis[i]]
    }

    pub fn basis_flen(&self, i: usize) -> usize {
        self.arena.flen[self.basis[i]]
    }
}
