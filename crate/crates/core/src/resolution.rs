//! Projective covers, syzygies, projective dimension and minimal
//! resolutions, for left or right modules over a basic algebra.
//!
//! Resolutions keep their differentials as matrices with entries in the
//! algebra, so that tensoring with a bimodule only ever touches the small
//! idempotent slices of the coefficients. That is what makes Tor over an
//! enveloping algebra affordable.

use std::sync::Arc;

use crate::algebra::FdAlgebra;
use crate::colmat::ColMat;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::{ActionSet, FdModule, Side};
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

trait LeftOps {
    fn alg(&self) -> &Arc<FdAlgebra>;
    fn dim(&self) -> usize;
    fn act_basis(&self, b: usize, v: &SVec) -> SVec;

    fn act_elem(&self, x: &SVec, v: &SVec) -> SVec {
        let f = self.alg().field();
        let mut out: SVec = Vec::new();
        for (b, c) in x {
            out = svec::add_scaled(&f, &out, c, &self.act_basis(*b, v));
        }
        out
    }
}

struct SetOps<'a> {
    set: &'a ActionSet,
    dim: usize,
}

impl LeftOps for SetOps<'_> {
    fn alg(&self) -> &Arc<FdAlgebra> {
        &self.set.alg
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn act_basis(&self, b: usize, v: &SVec) -> SVec {
        self.set.act_basis(b, v)
    }
}

/// A finite direct sum of indecomposable projectives `C·e_v`.
pub(crate) struct FreeMod {
    alg: Arc<FdAlgebra>,
    slots: Vec<usize>,
    offsets: Vec<usize>,
    dim: usize,
    basis_by_src: Vec<Vec<usize>>,
    pos_in_src: Vec<usize>,
}

impl FreeMod {
    fn new(alg: Arc<FdAlgebra>, slots: Vec<usize>) -> Self {
        let mut basis_by_src: Vec<Vec<usize>> = vec![Vec::new(); alg.vertex_count()];
        let mut pos_in_src = vec![0usize; alg.dim()];
        for b in 0..alg.dim() {
            pos_in_src[b] = basis_by_src[alg.src(b)].len();
            basis_by_src[alg.src(b)].push(b);
        }
        let mut offsets = Vec::with_capacity(slots.len());
        let mut dim = 0;
        for &v in &slots {
            offsets.push(dim);
            dim += basis_by_src[v].len();
        }
        FreeMod { alg, slots, offsets, dim, basis_by_src, pos_in_src }
    }

    fn slot_of(&self, coord: usize) -> usize {
        match self.offsets.binary_search(&coord) {
            Ok(s) => s,
            Err(s) => s - 1,
        }
    }

    fn basis_at(&self, slot: usize) -> &[usize] {
        &self.basis_by_src[self.slots[slot]]
    }

    /// Decompose a coordinate into (slot, algebra basis element).
    fn decode(&self, coord: usize) -> (usize, usize) {
        let s = self.slot_of(coord);
        (s, self.basis_at(s)[coord - self.offsets[s]])
    }
}

impl LeftOps for FreeMod {
    fn alg(&self) -> &Arc<FdAlgebra> {
        &self.alg
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn act_basis(&self, c: usize, v: &SVec) -> SVec {
        let f = self.alg.field();
        let mut out: SVec = Vec::new();
        for (coord, val) in v {
            let (s, b) = self.decode(*coord);
            for (b2, x) in self.alg.mul_basis(c, b) {
                out.push((self.offsets[s] + self.pos_in_src[b2], f.mul(val, &x)));
            }
        }
        svec::canon(&f, out)
    }
}

/// A submodule of a free module, in echelon coordinates.
struct SubOps<'a> {
    free: &'a FreeMod,
    space: &'a Subspace,
}

impl LeftOps for SubOps<'_> {
    fn alg(&self) -> &Arc<FdAlgebra> {
        &self.free.alg
    }
    fn dim(&self) -> usize {
        self.space.dim()
    }
    fn act_basis(&self, b: usize, v: &SVec) -> SVec {
        let f = self.free.alg.field();
        let mut lifted: SVec = Vec::new();
        for (r, c) in v {
            lifted = svec::add_scaled(&f, &lifted, c, &self.space.rows()[*r]);
        }
        let image = self.free.act_basis(b, &lifted);
        let (residual, coords) = self.space.reduce_tracked(&image);
        debug_assert!(residual.is_empty(), "submodule not action-invariant");
        coords
    }
}

struct CoverStep {
    slots: Vec<usize>,
    gens: Vec<SVec>,
    free: FreeMod,
    /// Cover matrix: module coordinates × free coordinates.
    map: Matrix,
    kernel: Subspace,
}

fn cover_step<M: LeftOps>(m: &M) -> CoverStep {
    let alg = m.alg().clone();
    let f = alg.field();
    let mut radm = Subspace::zero(f, m.dim());
    for r in alg.radical_spanning() {
        for i in 0..m.dim() {
            radm.insert(m.act_elem(&r, &svec::unit(&f, i)));
        }
    }
    let mut chosen = radm;
    let mut slots = Vec::new();
    let mut gens: Vec<SVec> = Vec::new();
    for v in 0..alg.vertex_count() {
        let e = alg.idempotent(v);
        for i in 0..m.dim() {
            let w = m.act_basis(e, &svec::unit(&f, i));
            if !w.is_empty() && chosen.insert(w.clone()) {
                slots.push(v);
                gens.push(w);
            }
        }
    }
    let free = FreeMod::new(alg, slots.clone());
    let mut map = Matrix::zeros(f, m.dim(), free.dim());
    for (s, g) in gens.iter().enumerate() {
        for (t, &b) in free.basis_at(s).iter().enumerate() {
            let col = m.act_basis(b, g);
            for (r, c) in col {
                map.set(r, free.offsets[s] + t, c);
            }
        }
    }
    debug_assert_eq!(map.rank(), m.dim(), "cover must be surjective");
    let (_, kernel) = map.rank_and_kernel();
    CoverStep { slots, gens, free, map, kernel }
}

/// A projective cover with its syzygy, materialized as modules.
pub struct Cover {
    pub projective: FdModule,
    /// Multiplicity of each vertex projective in the cover.
    pub multiplicity: Vec<usize>,
    /// The cover map as a matrix (module coords × projective coords).
    pub map: Matrix,
    pub syzygy: FdModule,
}

fn left_action_view(m: &FdModule, side: Side) -> Result<(Arc<FdAlgebra>, ActionSet)> {
    let set = m
        .action(side)
        .ok_or_else(|| Error::Other(format!("module has no {} action", side.name())))?;
    match side {
        Side::Left => Ok((set.alg.clone(), set.clone())),
        Side::Right => {
            let op = set.alg.opposite();
            Ok((op.clone(), ActionSet { alg: op, mats: set.mats.clone() }))
        }
    }
}

fn materialize<M: LeftOps>(m: &M) -> Vec<ColMat> {
    let f = m.alg().field();
    (0..m.alg().dim())
        .map(|b| {
            let cols = (0..m.dim())
                .map(|i| m.act_basis(b, &svec::unit(&f, i)))
                .collect();
            ColMat::from_cols(m.dim(), cols)
        })
        .collect()
}

fn rewrap(original: &Arc<FdAlgebra>, side: Side, dim: usize, mats: Vec<ColMat>) -> FdModule {
    match side {
        Side::Left => FdModule::from_left(original.clone(), dim, mats),
        Side::Right => FdModule::from_right(original.clone(), dim, mats),
    }
}

/// Minimal projective cover of a one-sided module over a basic algebra:
/// `P = ⊕ (C e_v)^{m_v}` with `m_v` the multiplicity of the vertex simple
/// in `top(m)`, the surjection, and the syzygy (its kernel).
pub fn projective_cover(m: &FdModule, side: Side) -> Result<Cover> {
    let set = m
        .action(side)
        .ok_or_else(|| Error::Other(format!("module has no {} action", side.name())))?;
    set.alg.certify_basic()?;
    let (alg, view_set) = left_action_view(m, side)?;
    let view = SetOps { set: &view_set, dim: m.dim() };
    let step = cover_step(&view);
    let mut multiplicity = vec![0usize; alg.vertex_count()];
    for v in &step.slots {
        multiplicity[*v] += 1;
    }
    let projective = rewrap(&set.alg, side, step.free.dim, materialize(&step.free));
    let sub = SubOps { free: &step.free, space: &step.kernel };
    let syzygy = rewrap(&set.alg, side, sub.dim(), materialize(&sub));
    Ok(Cover { projective, multiplicity, map: step.map, syzygy })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdOutcome {
    Finite(usize),
    ExceedsBound(usize),
}

impl PdOutcome {
    pub fn finite(&self) -> Option<usize> {
        match self {
            PdOutcome::Finite(n) => Some(*n),
            PdOutcome::ExceedsBound(_) => None,
        }
    }
}

pub fn is_projective(m: &FdModule, side: Side) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(true);
    }
    let set = m
        .action(side)
        .ok_or_else(|| Error::Other(format!("module has no {} action", side.name())))?;
    set.alg.certify_basic()?;
    let (_, view_set) = left_action_view(m, side)?;
    let view = SetOps { set: &view_set, dim: m.dim() };
    Ok(cover_step(&view).kernel.dim() == 0)
}

/// Projective dimension by iterated syzygies, up to a search bound.
pub fn projective_dimension(m: &FdModule, side: Side, bound: usize) -> Result<PdOutcome> {
    if m.dim() == 0 {
        return Ok(PdOutcome::Finite(0));
    }
    let set = m
        .action(side)
        .ok_or_else(|| Error::Other(format!("module has no {} action", side.name())))?;
    set.alg.certify_basic()?;
    let (_, view_set) = left_action_view(m, side)?;
    let view = SetOps { set: &view_set, dim: m.dim() };
    let step = cover_step(&view);
    if step.kernel.dim() == 0 {
        return Ok(PdOutcome::Finite(0));
    }
    let mut free = step.free;
    let mut kernel = step.kernel;
    for k in 1..=bound {
        let sub = SubOps { free: &free, space: &kernel };
        let step = cover_step(&sub);
        if step.kernel.dim() == 0 {
            return Ok(PdOutcome::Finite(k));
        }
        free = step.free;
        kernel = step.kernel;
    }
    Ok(PdOutcome::ExceedsBound(bound))
}

/// Max of the projective dimensions of the vertex simples.
pub fn global_dimension(alg: &Arc<FdAlgebra>, side: Side, bound: usize) -> Result<PdOutcome> {
    alg.certify_basic()?;
    let base = match side {
        Side::Left => alg.clone(),
        Side::Right => alg.opposite(),
    };
    let mut max = 0usize;
    for v in 0..base.vertex_count() {
        let s = FdModule::simple_left(&base, v);
        match projective_dimension(&s, Side::Left, bound)? {
            PdOutcome::Finite(n) => max = max.max(n),
            PdOutcome::ExceedsBound(b) => return Ok(PdOutcome::ExceedsBound(b)),
        }
    }
    Ok(PdOutcome::Finite(max))
}

/// A projective resolution with differentials written over the algebra.
///
/// `slots[m]` lists the idempotent of each summand of `P_m`, and
/// `diffs[m][j][i]` is the algebra element carrying generator `i` of
/// `P_{m+1}` into the summand `j` of `P_m`.
pub struct ProjResolution {
    pub alg: Arc<FdAlgebra>,
    pub slots: Vec<Vec<usize>>,
    pub diffs: Vec<Vec<Vec<SVec>>>,
    pub exhausted: bool,
}

/// Resolve a left module by iterated covers, through degree `max_deg`.
/// Covers are minimal exactly when the algebra is basic; the resolution
/// computes Tor either way.
pub fn resolve_left(m: &FdModule, max_deg: usize) -> Result<ProjResolution> {
    let set = m
        .left()
        .ok_or_else(|| Error::Other("resolution needs a left module".into()))?;
    let alg = set.alg.clone();
    let view = SetOps { set, dim: m.dim() };
    let step = cover_step(&view);
    let mut slots = vec![step.slots.clone()];
    let mut diffs: Vec<Vec<Vec<SVec>>> = Vec::new();
    let mut free = step.free;
    let mut kernel = step.kernel;
    let mut exhausted = kernel.dim() == 0;
    for _ in 1..=max_deg {
        if exhausted {
            slots.push(Vec::new());
            diffs.push(Vec::new());
            continue;
        }
        let (next, diff) = {
            let sub = SubOps { free: &free, space: &kernel };
            let step = cover_step(&sub);
            // translate generator images (in kernel coords) into algebra
            // entries against P_m's slot structure
            let f = alg.field();
            let mut diff: Vec<Vec<SVec>> =
                vec![vec![Vec::new(); step.slots.len()]; free.slots.len()];
            for (i, g) in step.gens.iter().enumerate() {
                let mut lifted: SVec = Vec::new();
                for (r, c) in g {
                    lifted = svec::add_scaled(&f, &lifted, c, &kernel.rows()[*r]);
                }
                for (coord, val) in lifted {
                    let (s, b) = free.decode(coord);
                    diff[s][i] = svec::add_scaled(&f, &diff[s][i], &val, &svec::unit(&f, b));
                }
            }
            (step, diff)
        };
        slots.push(next.slots.clone());
        diffs.push(diff);
        exhausted = next.kernel.dim() == 0;
        free = next.free;
        kernel = next.kernel;
    }
    Ok(ProjResolution { alg, slots, diffs, exhausted })
}

/// Dimensions of `Tor_*^{C}(X, M)` for a resolution of `M` over `C = A^e`
/// and a bimodule `X` over `A`, reading `X` as a right `C`-module.
pub fn tor_dims_over_env(x: &FdModule, res: &ProjResolution, max_deg: usize) -> (Vec<usize>, bool) {
    let (lx, rx) = (x.left().expect("bimodule"), x.right().expect("bimodule"));
    let base = &lx.alg;
    let f = base.field();
    let nv = base.vertex_count();
    // X·(e_x ⊗ e_y) = e_y X e_x: image of the idempotent slice projector
    let slice_of = |pair: usize| -> Subspace {
        let (vx, vy) = (pair / nv, pair % nv);
        let mut s = Subspace::zero(f, x.dim());
        for i in 0..x.dim() {
            let w = lx.act_basis(
                base.idempotent(vy),
                &rx.act_basis(base.idempotent(vx), &svec::unit(&f, i)),
            );
            s.insert(w);
        }
        s
    };
    let degrees = (max_deg + 2).min(res.slots.len());
    let spaces: Vec<Vec<Subspace>> = (0..degrees)
        .map(|m| res.slots[m].iter().map(|pair| slice_of(*pair)).collect())
        .collect();
    let dims: Vec<usize> = spaces
        .iter()
        .map(|sp| sp.iter().map(|s| s.dim()).sum())
        .collect();
    // right action of an algebra entry (p ⊗ q): w ↦ q·w·p
    let act_entry = |entry: &SVec, w: &SVec| -> SVec {
        let d = base.dim();
        let mut out: SVec = Vec::new();
        for (pq, c) in entry {
            let (p, q) = (pq / d, pq % d);
            let v = lx.act_basis(q, &rx.act_basis(p, w));
            out = svec::add_scaled(&f, &out, c, &v);
        }
        out
    };
    let mut ranks = vec![0usize; degrees + 1];
    for m in 1..degrees {
        let diff = &res.diffs[m - 1];
        let rows_dim: usize = spaces[m - 1].iter().map(|s| s.dim()).sum();
        let cols_dim: usize = spaces[m].iter().map(|s| s.dim()).sum();
        if rows_dim == 0 || cols_dim == 0 {
            continue;
        }
        let offsets_row: Vec<usize> = spaces[m - 1]
            .iter()
            .scan(0usize, |acc, s| {
                let o = *acc;
                *acc += s.dim();
                Some(o)
            })
            .collect();
        let mut mat = Matrix::zeros(f, rows_dim, cols_dim);
        let mut col = 0usize;
        for (i, si) in spaces[m].iter().enumerate() {
            for w in si.rows() {
                for (j, sj) in spaces[m - 1].iter().enumerate() {
                    let entry = &diff[j][i];
                    if entry.is_empty() {
                        continue;
                    }
                    let img = act_entry(entry, w);
                    let (residual, coords) = sj.reduce_tracked(&img);
                    debug_assert!(residual.is_empty(), "image escapes idempotent slice");
                    for (r, c) in coords {
                        mat.set(offsets_row[j] + r, col, c);
                    }
                }
                col += 1;
            }
        }
        ranks[m] = mat.rank();
    }
    let table: Vec<usize> = (0..=max_deg)
        .map(|m| {
            if m < degrees {
                dims[m] - ranks[m] - ranks[m + 1]
            } else {
                0
            }
        })
        .collect();
    (table, res.exhausted)
}
