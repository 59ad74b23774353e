//! The tensor algebra `T = T_B(N)` in low F-degrees, as a word space.
//!
//! A word is an alternating sequence `β_k a_k … β_1 a_1 β_0` of base
//! normal-form paths and new arrows; these words are a basis of `T` up to
//! any F-degree. The one-sided projectivity criterion lives here: it asks
//! whether the positive-degree projection of the relation ideal is
//! generated, as a B-bimodule, by relations hanging off a single new arrow.

use std::collections::HashMap;

use crate::error::Result;
use crate::extension::Extension;
use crate::field::Scalar;
use crate::module::Side;
use crate::quiver::Path;
use crate::subspace::Subspace;
use crate::svec::{self, SVec};

/// `β_k a_k … β_1 a_1 β_0`: `betas[i]` is the base-basis index of `β_i`,
/// `arrows[i]` the extended-quiver index of `a_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct TWord {
    betas: Vec<usize>,
    arrows: Vec<usize>,
}

impl TWord {
    fn flen(&self) -> usize {
        self.arrows.len()
    }
}

struct TSpace<'a> {
    ext: &'a Extension,
    words: Vec<TWord>,
    id: HashMap<TWord, usize>,
}

impl<'a> TSpace<'a> {
    /// All words of F-length <= `max_flen`.
    fn build(ext: &'a Extension, max_flen: usize) -> Self {
        let b = ext.base_algebra();
        let qf = ext.extended_quiver();
        let mut words: Vec<TWord> = (0..b.dim())
            .map(|i| TWord { betas: vec![i], arrows: Vec::new() })
            .collect();
        let mut frontier: Vec<usize> = (0..words.len()).collect();
        let mut id: HashMap<TWord, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        for _ in 0..max_flen {
            let mut next = Vec::new();
            for &wi in &frontier {
                let w = words[wi].clone();
                let top = *w.betas.last().unwrap();
                for a in ext.spec.new_arrow_range() {
                    if qf.arrows()[a].src != b.tgt(top) {
                        continue;
                    }
                    for beta in 0..b.dim() {
                        if b.src(beta) != qf.arrows()[a].tgt {
                            continue;
                        }
                        let mut nw = w.clone();
                        nw.arrows.push(a);
                        nw.betas.push(beta);
                        let idx = words.len();
                        id.insert(nw.clone(), idx);
                        words.push(nw);
                        next.push(idx);
                    }
                }
            }
            frontier = next;
        }
        TSpace { ext, words, id }
    }

    fn dim(&self) -> usize {
        self.words.len()
    }

    fn src(&self, w: &TWord) -> usize {
        self.ext.base_algebra().src(w.betas[0])
    }

    fn tgt(&self, w: &TWord) -> usize {
        self.ext.base_algebra().tgt(*w.betas.last().unwrap())
    }

    /// `u · v` (first `v`, then `u`): merge the bottom β of `u` with the
    /// top β of `v` inside B.
    fn mul_words(&self, u: &TWord, v: &TWord) -> Vec<(TWord, Scalar)> {
        let b = self.ext.base_algebra();
        let merged = b.mul_basis(u.betas[0], *v.betas.last().unwrap());
        merged
            .into_iter()
            .map(|(t, c)| {
                let mut betas = v.betas[..v.betas.len() - 1].to_vec();
                betas.push(t);
                betas.extend_from_slice(&u.betas[1..]);
                let mut arrows = v.arrows.clone();
                arrows.extend_from_slice(&u.arrows);
                (TWord { betas, arrows }, c)
            })
            .collect()
    }

    fn word_unit(&self, beta: usize) -> TWord {
        TWord { betas: vec![beta], arrows: Vec::new() }
    }

    /// Value of a word in A coordinates: concatenate its segments into a
    /// path of the extended quiver and reduce.
    fn eval_in_ambient(&self, i: usize) -> SVec {
        let w = &self.words[i];
        let b = &self.ext.base;
        let qf = self.ext.extended_quiver();
        let mut arrows: Vec<usize> = Vec::new();
        for (k, beta) in w.betas.iter().enumerate() {
            arrows.extend_from_slice(b.basis_path(*beta).arrows_in_order());
            if k < w.arrows.len() {
                arrows.push(w.arrows[k]);
            }
        }
        if arrows.is_empty() {
            self.ext.eval_path(&Path::trivial(self.src(w)))
        } else {
            let p = Path::from_traversal(qf, &arrows).expect("word is a path");
            self.ext.eval_path(&p)
        }
    }

    /// Word label as a path word over the extended quiver.
    fn label(&self, i: usize) -> String {
        let w = &self.words[i];
        let b = &self.ext.base;
        let qf = self.ext.extended_quiver();
        let mut arrows: Vec<usize> = Vec::new();
        for (k, beta) in w.betas.iter().enumerate() {
            arrows.extend_from_slice(b.basis_path(*beta).arrows_in_order());
            if k < w.arrows.len() {
                arrows.push(w.arrows[k]);
            }
        }
        if arrows.is_empty() {
            qf.vertices()[self.src(w)].clone()
        } else {
            Path::from_traversal(qf, &arrows).expect("word is a path").display(qf)
        }
    }
}

/// Per-arrow factor of the quotient bimodule, when the criterion holds:
/// for the left side, `A/B ≅ ⊕ (B e_{t(a)})^{dim}`.
#[derive(Clone, Debug)]
pub struct ArrowFactor {
    pub arrow: String,
    pub vertex: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ProjectivityCriterion {
    pub side: Side,
    pub holds: bool,
    pub length_index: usize,
    /// Dimension of the positive-degree projection of J below the index.
    pub j_dim: usize,
    /// Dimension of the B-bimodule generated by the single-arrow parts.
    pub generated_dim: usize,
    pub factors: Vec<ArrowFactor>,
    /// Σ dim(projective) · factor dim; equals dim A/B when the criterion
    /// holds.
    pub predicted_quotient_dim: usize,
}

/// Decide whether `J_{]0,n[}` is generated as a B-bimodule by relations of
/// the form `a·(Σ λ_γ γ)` (left side; mirrored for the right side).
pub fn one_sided_projectivity_criterion(
    ext: &Extension,
    side: Side,
) -> Result<ProjectivityCriterion> {
    let n = ext.length_index();
    let f = ext.field();
    let b = ext.base_algebra();
    let space = TSpace::build(ext, n.saturating_sub(1));
    // J_{]0,n[} realized as the kernel of the evaluation of positive words
    // in A/B; this is the part of the relation ideal concentrated in
    // F-degrees (0, n), which presents A/B as T^{]0,n[}/J_{]0,n[}
    let positive_words: Vec<usize> = (0..space.dim())
        .filter(|i| space.words[*i].flen() >= 1)
        .collect();
    let dim_b = ext.dim_base();
    let mut eval = crate::matrix::Matrix::zeros(f, ext.dim_ext() - dim_b, positive_words.len());
    for (col, &wi) in positive_words.iter().enumerate() {
        let value = space.eval_in_ambient(wi);
        for (k, c) in value {
            if k >= dim_b {
                eval.set(k - dim_b, col, c);
            }
        }
    }
    let (_, local_kernel) = eval.rank_and_kernel();
    let mut j_space = Subspace::zero(f, space.dim());
    for row in local_kernel.rows() {
        let global: SVec = row
            .iter()
            .map(|(loc, c)| (positive_words[*loc], c.clone()))
            .collect();
        j_space.insert(svec::canon(&f, global));
    }
    // W = Σ_a (J-slice ∩ words hanging off arrow a)
    let qf = ext.extended_quiver();
    let hangs_off = |w: &TWord, a: usize| -> bool {
        if w.flen() == 0 {
            return false;
        }
        match side {
            Side::Left => {
                *w.arrows.last().unwrap() == a
                    && *w.betas.last().unwrap() == b.idempotent(qf.arrows()[a].tgt)
            }
            Side::Right => w.arrows[0] == a && w.betas[0] == b.idempotent(qf.arrows()[a].src),
        }
    };
    let mut w_space = Subspace::zero(f, space.dim());
    let mut stripped_by_arrow: Vec<Vec<SVec>> = Vec::new();
    for a in ext.spec.new_arrow_range() {
        let coord_span = Subspace::span(
            f,
            space.dim(),
            (0..space.dim())
                .filter(|i| hangs_off(&space.words[*i], a))
                .map(|i| svec::unit(&f, i)),
        );
        let wa = j_space.intersect(&coord_span);
        let mut stripped: Vec<SVec> = Vec::new();
        for row in wa.rows() {
            let srow: SVec = row
                .iter()
                .map(|(i, c)| {
                    let w = &space.words[*i];
                    let inner = match side {
                        Side::Left => TWord {
                            betas: w.betas[..w.betas.len() - 1].to_vec(),
                            arrows: w.arrows[..w.arrows.len() - 1].to_vec(),
                        },
                        Side::Right => TWord {
                            betas: w.betas[1..].to_vec(),
                            arrows: w.arrows[1..].to_vec(),
                        },
                    };
                    (space.id[&inner], c.clone())
                })
                .collect();
            stripped.push(svec::canon(&f, srow));
            w_space.insert(row.clone());
        }
        stripped_by_arrow.push(stripped);
    }
    // B-bimodule closure of W inside the slice
    let generated = bimodule_closure(&space, w_space.rows().to_vec(), true, true);
    let holds = generated.dim() == j_space.dim() && generated.contains_space(&j_space);
    // per-arrow factors: ambient words of F-length < n−1 on the matching
    // side of the arrow, modulo the one-sided closure of the stripped rows
    let mut factors = Vec::new();
    let mut predicted = 0usize;
    for (k, a) in ext.spec.new_arrow_range().enumerate() {
        let arrow = &qf.arrows()[a];
        let ambient: Vec<usize> = (0..space.dim())
            .filter(|i| {
                let w = &space.words[*i];
                w.flen() + 1 < n
                    && match side {
                        Side::Left => space.tgt(w) == arrow.src,
                        Side::Right => space.src(w) == arrow.tgt,
                    }
            })
            .collect();
        let y_a = bimodule_closure(
            &space,
            stripped_by_arrow[k].clone(),
            side == Side::Right,
            side == Side::Left,
        );
        // restrict to the ambient coordinate set
        let lookup: HashMap<usize, usize> =
            ambient.iter().enumerate().map(|(loc, g)| (*g, loc)).collect();
        let mut local = Subspace::zero(f, ambient.len());
        for row in y_a.rows() {
            let v: SVec = row.iter().map(|(i, c)| (lookup[i], c.clone())).collect();
            local.insert(svec::canon(&f, v));
        }
        let basis: Vec<String> = local
            .complement_coords()
            .into_iter()
            .map(|loc| space.label(ambient[loc]))
            .collect();
        let (vertex, projective_dim) = match side {
            Side::Left => {
                let v = arrow.tgt;
                (v, (0..b.dim()).filter(|i| b.src(*i) == v).count())
            }
            Side::Right => {
                let v = arrow.src;
                (v, (0..b.dim()).filter(|i| b.tgt(*i) == v).count())
            }
        };
        predicted += projective_dim * basis.len();
        factors.push(ArrowFactor {
            arrow: arrow.name.clone(),
            vertex: qf.vertices()[vertex].clone(),
            dim: basis.len(),
            basis,
        });
    }
    Ok(ProjectivityCriterion {
        side,
        holds,
        length_index: n,
        j_dim: j_space.dim(),
        generated_dim: generated.dim(),
        factors,
        predicted_quotient_dim: predicted,
    })
}

/// Closure of a set of T-vectors under left and/or right multiplication by
/// B basis elements.
fn bimodule_closure(space: &TSpace, seed: Vec<SVec>, left: bool, right: bool) -> Subspace {
    let f = space.ext.field();
    let b = space.ext.base_algebra();
    let mut sub = Subspace::zero(f, space.dim());
    let mut queue: Vec<SVec> = Vec::new();
    for v in seed {
        if sub.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for beta in 0..b.dim() {
            let bw = space.word_unit(beta);
            for (dir, on) in [(true, left), (false, right)] {
                if !on {
                    continue;
                }
                let mut img: SVec = Vec::new();
                for (i, c) in &v {
                    let w = &space.words[*i];
                    let prods = if dir {
                        space.mul_words(&bw, w)
                    } else {
                        space.mul_words(w, &bw)
                    };
                    for (nw, x) in prods {
                        if let Some(idx) = space.id.get(&nw) {
                            let coeff = f.mul(c, &x);
                            img = svec::add_scaled(&f, &img, &coeff, &svec::unit(&f, *idx));
                        }
                    }
                }
                if !img.is_empty() && sub.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
    }
    sub
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::build_extension;
    use crate::fixtures::fixture_spec;

    #[test]
    fn five_vertex_left_criterion_holds() {
        let e = build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
        let r = one_sided_projectivity_criterion(&e, Side::Left).unwrap();
        assert!(r.holds);
        assert_eq!(r.length_index, 2);
        assert_eq!(r.factors.len(), 1);
        let f0 = &r.factors[0];
        assert_eq!(f0.arrow, "a");
        assert_eq!(f0.vertex, "1");
        assert_eq!(f0.dim, 3);
        let mut basis = f0.basis.clone();
        basis.sort_unstable();
        assert_eq!(basis, vec!["2", "b", "b*c"]);
        // predicted decomposition (Be1)^3 matches the quotient dimension
        assert_eq!(r.predicted_quotient_dim, 27);
        // and the right-hand version does not hold
        let r = one_sided_projectivity_criterion(&e, Side::Right).unwrap();
        assert!(!r.holds);
    }

    #[test]
    fn square_fixture_right_criterion_holds() {
        let e = build_extension(fixture_spec("ex6_2").unwrap()).unwrap();
        let r = one_sided_projectivity_criterion(&e, Side::Right).unwrap();
        assert!(r.holds);
        assert_eq!(r.predicted_quotient_dim, 2);
        let l = one_sided_projectivity_criterion(&e, Side::Left).unwrap();
        assert!(!l.holds);
    }

    #[test]
    fn no_relations_is_vacuously_projective() {
        // a semisimple base with free new arrows: J = 0
        let mut spec = fixture_spec("split_semisimple").unwrap();
        spec.j_gens.clear();
        let e = build_extension(spec).unwrap();
        for side in [Side::Left, Side::Right] {
            let r = one_sided_projectivity_criterion(&e, side).unwrap();
            assert!(r.holds, "vacuous case must hold");
            assert_eq!(r.j_dim, 0);
            assert_eq!(r.predicted_quotient_dim, e.dim_ext() - e.dim_base());
        }
    }

    #[test]
    fn criterion_agrees_with_module_projectivity() {
        for name in ["ex6_1", "ex6_2", "rea", "nocycle4", "split_semisimple"] {
            let e = build_extension(fixture_spec(name).unwrap()).unwrap();
            let (quotient, _) = e.quotient_bimodule();
            for side in [Side::Left, Side::Right] {
                let r = one_sided_projectivity_criterion(&e, side).unwrap();
                if r.holds {
                    assert!(
                        crate::resolution::is_projective(&quotient, side).unwrap(),
                        "{name}: criterion held on {} but module is not projective",
                        side.name()
                    );
                    assert_eq!(r.predicted_quotient_dim, quotient.dim(), "{name}");
                }
            }
        }
    }
}
