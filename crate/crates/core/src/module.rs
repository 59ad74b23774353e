//! Finite-dimensional modules and bimodules given by action matrices.
//!
//! A module stores one sparse action matrix per algebra basis element, on
//! the side(s) it carries. Left actions are homomorphisms on structure
//! constants, right actions anti-homomorphisms, and for bimodules the two
//! commute; `validate` checks all of it.

use std::sync::Arc;

use crate::algebra::FdAlgebra;
use crate::colmat::ColMat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// One-sided action of an algebra: a matrix per basis element.
#[derive(Clone, Debug)]
pub struct ActionSet {
    pub alg: Arc<FdAlgebra>,
    pub mats: Vec<ColMat>,
}

impl ActionSet {
    pub fn act_basis(&self, b: usize, v: &SVec) -> SVec {
        self.mats[b].apply(&self.alg.field(), v)
    }

    pub fn act_elem(&self, x: &SVec, v: &SVec) -> SVec {
        let f = self.alg.field();
        let mut out: SVec = Vec::new();
        for (b, c) in x {
            let w = self.act_basis(*b, v);
            out = svec::add_scaled(&f, &out, c, &w);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct FdModule {
    dim: usize,
    left: Option<ActionSet>,
    right: Option<ActionSet>,
}

impl FdModule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> Option<&ActionSet> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&ActionSet> {
        self.right.as_ref()
    }

    pub fn action(&self, side: Side) -> Option<&ActionSet> {
        match side {
            Side::Left => self.left(),
            Side::Right => self.right(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn from_left(alg: Arc<FdAlgebra>, dim: usize, mats: Vec<ColMat>) -> Self {
        FdModule { dim, left: Some(ActionSet { alg, mats }), right: None }
    }

    pub fn from_right(alg: Arc<FdAlgebra>, dim: usize, mats: Vec<ColMat>) -> Self {
        FdModule { dim, left: None, right: Some(ActionSet { alg, mats }) }
    }

    pub fn from_bi(
        left_alg: Arc<FdAlgebra>,
        right_alg: Arc<FdAlgebra>,
        dim: usize,
        left: Vec<ColMat>,
        right: Vec<ColMat>,
    ) -> Self {
        FdModule {
            dim,
            left: Some(ActionSet { alg: left_alg, mats: left }),
            right: Some(ActionSet { alg: right_alg, mats: right }),
        }
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(alg: &Arc<FdAlgebra>) -> Self {
        let d = alg.dim();
        let left = (0..d)
            .map(|b| ColMat::from_cols(d, (0..d).map(|j| alg.mul_basis(b, j)).collect()))
            .collect();
        let right = (0..d)
            .map(|b| ColMat::from_cols(d, (0..d).map(|j| alg.mul_basis(j, b)).collect()))
            .collect();
        Self::from_bi(alg.clone(), alg.clone(), d, left, right)
    }

    /// The simple left module at a vertex (requires a basic algebra).
    pub fn simple_left(alg: &Arc<FdAlgebra>, vertex: usize) -> Self {
        let f = alg.field();
        let mats = (0..alg.dim())
            .map(|b| {
                if b == alg.idempotent(vertex) {
                    ColMat::identity(&f, 1)
                } else {
                    ColMat::zero(1, 1)
                }
            })
            .collect();
        Self::from_left(alg.clone(), 1, mats)
    }

    /// Restrict the actions along an algebra embedding (both sides that
    /// are present).
    pub fn restrict(&self, emb: &Embedding) -> FdModule {
        let conv = |set: &ActionSet| {
            let f = set.alg.field();
            let mats = emb
                .cols
                .iter()
                .map(|img| {
                    let terms: Vec<_> = img
                        .iter()
                        .map(|(b, c)| (c.clone(), &set.mats[*b]))
                        .collect();
                    ColMat::scaled_sum(&f, &terms, self.dim, self.dim)
                })
                .collect();
            ActionSet { alg: emb.from.clone(), mats }
        };
        FdModule {
            dim: self.dim,
            left: self.left.as_ref().map(conv),
            right: self.right.as_ref().map(conv),
        }
    }

    /// Quotient by an action-invariant subspace. Returns the module and the
    /// projection data (quotient coordinates are ambient unit coordinates).
    pub fn quotient(&self, sub: &Subspace) -> (FdModule, QuotientMap) {
        let field = self.field();
        let qmap = QuotientMap::new(sub.clone());
        let dim = qmap.coords.len();
        let conv = |set: &ActionSet| {
            let mats = set
                .mats
                .iter()
                .map(|m| {
                    let cols = qmap
                        .coords
                        .iter()
                        .map(|amb| qmap.project(&field, &m.apply(&field, &svec::unit(&field, *amb))))
                        .collect();
                    ColMat::from_cols(dim, cols)
                })
                .collect();
            ActionSet { alg: set.alg.clone(), mats }
        };
        let m = FdModule {
            dim,
            left: self.left.as_ref().map(conv),
            right: self.right.as_ref().map(conv),
        };
        (m, qmap)
    }

    /// View a bimodule as a left module over the enveloping algebra of its
    /// base: `(p ⊗ q)·x = p x q`.
    pub fn as_env_left(&self, env: &Arc<FdAlgebra>) -> FdModule {
        let (l, r) = (
            self.left.as_ref().expect("bimodule"),
            self.right.as_ref().expect("bimodule"),
        );
        let f = l.alg.field();
        let d = l.alg.dim();
        assert_eq!(env.dim(), d * d, "enveloping algebra mismatch");
        let mats = (0..env.dim())
            .map(|i| {
                let (p, q) = (i / d, i % d);
                l.mats[p].compose(&f, &r.mats[q])
            })
            .collect();
        FdModule::from_left(env.clone(), self.dim, mats)
    }

    pub fn field(&self) -> Field {
        self.left
            .as_ref()
            .or(self.right.as_ref())
            .expect("module has at least one action")
            .alg
            .field()
    }

    /// Check the action laws: unit acts as identity, structure constants
    /// are respected, and for bimodules the sides commute.
    pub fn validate(&self) -> Result<()> {
        if let Some(set) = &self.left {
            check_action(set, self.dim, false)?;
        }
        if let Some(set) = &self.right {
            check_action(set, self.dim, true)?;
        }
        if let (Some(l), Some(r)) = (&self.left, &self.right) {
            let f = l.alg.field();
            for lb in 0..l.alg.dim() {
                for rb in 0..r.alg.dim() {
                    let a = l.mats[lb].compose(&f, &r.mats[rb]);
                    let b = r.mats[rb].compose(&f, &l.mats[lb]);
                    if a != b {
                        return Err(Error::Other(format!(
                            "bimodule actions do not commute at ({lb}, {rb})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_action(set: &ActionSet, dim: usize, anti: bool) -> Result<()> {
    let f = set.alg.field();
    let alg = &set.alg;
    // unit acts as identity
    let unit_terms: Vec<_> = alg.unit().into_iter().map(|(e, c)| (c, &set.mats[e])).collect();
    let unit_refs: Vec<_> = unit_terms.iter().map(|(c, m)| (c.clone(), *m)).collect();
    if ColMat::scaled_sum(&f, &unit_refs, dim, dim) != ColMat::identity(&f, dim) {
        return Err(Error::Other("unit does not act as identity".into()));
    }
    // structure constants
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            if alg.src(i) != alg.tgt(j) {
                continue;
            }
            let prod = alg.mul_basis(i, j);
            let terms: Vec<_> = prod.iter().map(|(k, c)| (c.clone(), &set.mats[*k])).collect();
            let lhs = ColMat::scaled_sum(&f, &terms, dim, dim);
            let rhs = if anti {
                set.mats[j].compose(&f, &set.mats[i])
            } else {
                set.mats[i].compose(&f, &set.mats[j])
            };
            if lhs != rhs {
                return Err(Error::Other(format!(
                    "action violates structure constants at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Projection data for a quotient by a subspace.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub sub: Subspace,
    /// Ambient unit coordinates forming the quotient basis.
    pub coords: Vec<usize>,
}

impl QuotientMap {
    pub fn new(sub: Subspace) -> Self {
        let coords = sub.complement_coords();
        QuotientMap { sub, coords }
    }

    /// Class of an ambient vector in quotient coordinates.
    pub fn project(&self, field: &Field, v: &SVec) -> SVec {
        let r = self.sub.reduce(v);
        svec::canon(
            field,
            r.into_iter()
                .map(|(amb, c)| {
                    let i = self
                        .coords
                        .binary_search(&amb)
                        .expect("residual supported on complement coords");
                    (i, c)
                })
                .collect(),
        )
    }

    /// Canonical ambient representative of a quotient basis vector.
    pub fn lift(&self, field: &Field, i: usize) -> SVec {
        svec::unit(field, self.coords[i])
    }
}

/// A tensor product over a middle algebra, with its ambient presentation
/// kept around so pure tensors can be projected into it.
pub struct TensorProduct {
    pub module: FdModule,
    pub qmap: QuotientMap,
    pub m_dim: usize,
    pub n_dim: usize,
}

impl TensorProduct {
    /// Coordinate of the pure tensor `e_i ⊗ e_j` in the ambient space.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.n_dim + j
    }

    pub fn project_pair(&self, field: &Field, i: usize, j: usize) -> SVec {
        self.qmap.project(field, &svec::unit(field, self.pair(i, j)))
    }
}

/// `m ⊗_B n` where `m` carries a right `B`-action and `n` a left one.
///
/// The result is `(m ⊗ n) / span{ x·b ⊗ y − x ⊗ b·y }` and inherits the
/// outer actions present on `m` (left) and `n` (right).
pub fn tensor_over(m: &FdModule, n: &FdModule) -> Result<TensorProduct> {
    let rm = m.right().ok_or_else(|| Error::Other("tensor: left factor has no right action".into()))?;
    let ln = n.left().ok_or_else(|| Error::Other("tensor: right factor has no left action".into()))?;
    if !Arc::ptr_eq(&rm.alg, &ln.alg) && rm.alg.dim() != ln.alg.dim() {
        return Err(Error::Other("tensor: middle algebras differ".into()));
    }
    let f = rm.alg.field();
    let (md, nd) = (m.dim(), n.dim());
    let ambient = md * nd;
    let mut rel = Subspace::zero(f, ambient);
    for b in 0..rm.alg.dim() {
        let rb = &rm.mats[b];
        let lb = &ln.mats[b];
        for i in 0..md {
            let xb = rb.col(i);
            for j in 0..nd {
                let by = lb.col(j);
                // x·b ⊗ y − x ⊗ b·y
                let mut v: SVec = xb.iter().map(|(i2, c)| (i2 * nd + j, c.clone())).collect();
                for (j2, c) in by {
                    v.push((i * nd + j2, f.neg(c)));
                }
                rel.insert(svec::canon(&f, v));
            }
        }
    }
    let qmap = QuotientMap::new(rel);
    let dim = qmap.coords.len();
    let outer_left = m.left().map(|set| {
        let mats = (0..set.alg.dim())
            .map(|b| {
                let cols = qmap
                    .coords
                    .iter()
                    .map(|amb| {
                        let (i, j) = (amb / nd, amb % nd);
                        let ci = set.mats[b].col(i);
                        let v: SVec = ci.iter().map(|(i2, c)| (i2 * nd + j, c.clone())).collect();
                        qmap.project(&f, &svec::canon(&f, v))
                    })
                    .collect();
                ColMat::from_cols(dim, cols)
            })
            .collect();
        ActionSet { alg: set.alg.clone(), mats }
    });
    let outer_right = n.right().map(|set| {
        let mats = (0..set.alg.dim())
            .map(|b| {
                let cols = qmap
                    .coords
                    .iter()
                    .map(|amb| {
                        let (i, j) = (amb / nd, amb % nd);
                        let cj = set.mats[b].col(j);
                        let v: SVec = cj.iter().map(|(j2, c)| (i * nd + j2, c.clone())).collect();
                        qmap.project(&f, &svec::canon(&f, v))
                    })
                    .collect();
                ColMat::from_cols(dim, cols)
            })
            .collect();
        ActionSet { alg: set.alg.clone(), mats }
    });
    let module = FdModule { dim, left: outer_left, right: outer_right };
    Ok(TensorProduct { module, qmap, m_dim: md, n_dim: nd })
}

/// Outcome of the tensor-nilpotency search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Smallest n with the n-th tensor power zero.
    Nilpotent(usize),
    /// All powers up to the bound are nonzero; their dimensions are kept.
    NotUpTo { bound: usize, dims: Vec<usize> },
}

/// Iterate `m^{⊗_B k}` until it vanishes or the bound is reached.
pub fn tensor_power_nilpotency(m: &FdModule, bound: usize) -> Result<Nilpotency> {
    assert!(bound >= 1);
    if m.dim() == 0 {
        return Ok(Nilpotency::Nilpotent(1));
    }
    let mut dims = vec![m.dim()];
    let mut cur = m.clone();
    for k in 2..=bound {
        cur = tensor_over(&cur, m)?.module;
        dims.push(cur.dim());
        if cur.dim() == 0 {
            return Ok(Nilpotency::Nilpotent(k));
        }
    }
    Ok(Nilpotency::NotUpTo { bound, dims })
}

/// An algebra embedding given by the images of basis elements.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub from: Arc<FdAlgebra>,
    pub to: Arc<FdAlgebra>,
    pub cols: Vec<SVec>,
}

impl Embedding {
    /// Verify multiplicativity, unit and injectivity.
    pub fn validate(&self) -> Result<()> {
        let f = self.from.field();
        let mut span = Subspace::zero(f, self.to.dim());
        for c in &self.cols {
            span.insert(c.clone());
        }
        if span.dim() != self.from.dim() {
            return Err(Error::Other("embedding is not injective".into()));
        }
        for i in 0..self.from.dim() {
            for j in 0..self.from.dim() {
                let prod = self.from.mul_basis(i, j);
                let mut img: SVec = Vec::new();
                for (k, c) in &prod {
                    img = svec::add_scaled(&f, &img, c, &self.cols[*k]);
                }
                let direct = self.to.mul(&self.cols[i], &self.cols[j]);
                if img != direct {
                    return Err(Error::Other(format!(
                        "embedding not multiplicative at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let f = self.from.field();
        let mut out: SVec = Vec::new();
        for (i, c) in v {
            out = svec::add_scaled(&f, &out, c, &self.cols[*i]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_extension;
    use crate::fixtures::fixture_spec;

    #[test]
    fn regular_bimodule_is_valid() {
        let e = build_extension(fixture_spec("rea").unwrap()).unwrap();
        FdModule::regular(e.base_algebra()).validate().unwrap();
        FdModule::regular(e.algebra()).validate().unwrap();
    }

    #[test]
    fn tensor_unit_laws() {
        // B ⊗_B M ≅ M and M ⊗_B B ≅ M at the dimension level
        let e = build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
        let b = FdModule::regular(e.base_algebra());
        let (m, _) = e.quotient_bimodule();
        assert_eq!(tensor_over(&b, &m).unwrap().module.dim(), m.dim());
        assert_eq!(tensor_over(&m, &b).unwrap().module.dim(), m.dim());
    }

    #[test]
    fn tensor_dimension_associativity() {
        let e = build_extension(fixture_spec("rea").unwrap()).unwrap();
        let (m, _) = e.quotient_bimodule();
        let left = tensor_over(&tensor_over(&m, &m).unwrap().module, &m).unwrap();
        let right = tensor_over(&m, &tensor_over(&m, &m).unwrap().module).unwrap();
        assert_eq!(left.module.dim(), right.module.dim());
    }

    #[test]
    fn enveloping_view_dimensions() {
        let e = build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
        let env = e.base_algebra().enveloping().unwrap();
        assert_eq!(env.dim(), 400);
        let (quotient, _) = e.quotient_bimodule();
        let as_env = quotient.as_env_left(&env);
        assert_eq!(as_env.dim(), 27);
        // bimodule actions commute, so the env action is well defined
        quotient.validate().unwrap();
    }

    #[test]
    fn nilpotency_monotone() {
        let e = build_extension(fixture_spec("nocycle4").unwrap()).unwrap();
        let (m, _) = e.quotient_bimodule();
        if let Nilpotency::Nilpotent(n) = tensor_power_nilpotency(&m, 10).unwrap() {
            // powers at and beyond the index stay zero
            let mut cur = m.clone();
            for _ in 2..=n + 2 {
                cur = tensor_over(&cur, &m).unwrap().module;
            }
            assert_eq!(cur.dim(), 0);
        } else {
            panic!("expected nilpotent");
        }
    }
}
