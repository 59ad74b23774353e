//! Property tests for the exact linear algebra substrate and the
//! structural algebra invariants.

use proptest::prelude::*;
use quext_core::matrix::{Matrix, SolveOutcome};
use quext_core::subspace::Subspace;
use quext_core::svec;
use quext_core::{Field, Scalar};

fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-4i64..5, r * c).prop_map(move |entries| {
            let rows: Vec<Vec<Scalar>> = entries
                .chunks(c)
                .map(|row| row.iter().map(|n| field.from_i64(*n)).collect())
                .collect();
            Matrix::from_rows(field, c, rows)
        })
    })
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in small_matrix(Field::Rational)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in small_matrix(Field::Rational)) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.dim(), m.ncols());
        for v in kernel.rows() {
            prop_assert!(m.apply_sparse(v).is_empty());
        }
    }

    #[test]
    fn solve_substitutes_exactly(
        m in small_matrix(Field::Rational),
        bvals in proptest::collection::vec(-4i64..5, 1..6)
    ) {
        let f = Field::Rational;
        // use m·b as the right-hand side so the system is feasible
        let mut b = vec![f.zero(); m.ncols()];
        for (i, n) in bvals.iter().enumerate() {
            if i < b.len() {
                b[i] = f.from_i64(*n);
            }
        }
        let rhs = m.apply(&b);
        match m.solve_affine(&rhs) {
            SolveOutcome::Solution { particular, .. } => {
                prop_assert_eq!(m.apply(&particular), rhs);
            }
            SolveOutcome::Infeasible { .. } => prop_assert!(false, "feasible by construction"),
        }
    }

    #[test]
    fn echelon_is_canonical(
        vecs in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..5),
        perm_seed in 0usize..24
    ) {
        let f = Field::Rational;
        let to_svec = |v: &Vec<i64>| -> Vec<(usize, Scalar)> {
            svec::canon(&f, v.iter().enumerate().map(|(i, n)| (i, f.from_i64(*n))).collect())
        };
        let s1 = Subspace::span(f, 4, vecs.iter().map(to_svec));
        // a different spanning set of the same space: permuted inputs plus
        // a couple of linear combinations
        let mut shuffled: Vec<_> = vecs.iter().map(to_svec).collect();
        let len = shuffled.len().max(1);
        shuffled.rotate_left(perm_seed % len);
        if shuffled.len() >= 2 {
            let sum = svec::add_scaled(&f, &shuffled[0], &f.from_i64(3), &shuffled[1]);
            shuffled.push(sum);
        }
        let s2 = Subspace::span(f, 4, shuffled);
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn prime_field_ranks_match_rationals_on_small_entries(
        m in small_matrix(Field::Rational)
    ) {
        // entries in -4..5 cannot collapse mod 10007
        let f = Field::prime(10007).unwrap();
        let mut mp = Matrix::zeros(f, m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let q = Field::Rational.scalar_string(&m.get(i, j));
                let n: i64 = q.parse().unwrap();
                mp.set(i, j, f.from_i64(n));
            }
        }
        prop_assert_eq!(m.rank(), mp.rank());
    }

    #[test]
    fn subspace_lattice_laws(
        v1 in proptest::collection::vec(-3i64..4, 4),
        v2 in proptest::collection::vec(-3i64..4, 4),
        v3 in proptest::collection::vec(-3i64..4, 4)
    ) {
        let f = Field::Rational;
        let to_svec = |v: &Vec<i64>| -> Vec<(usize, Scalar)> {
            svec::canon(&f, v.iter().enumerate().map(|(i, n)| (i, f.from_i64(*n))).collect())
        };
        let a = Subspace::span(f, 4, [to_svec(&v1), to_svec(&v2)]);
        let b = Subspace::span(f, 4, [to_svec(&v2), to_svec(&v3)]);
        let meet = a.intersect(&b);
        let join = a.sum(&b);
        prop_assert!(a.contains_space(&meet));
        prop_assert!(b.contains_space(&meet));
        prop_assert!(join.contains_space(&a));
        prop_assert!(join.contains_space(&b));
        // modular dimension law
        prop_assert_eq!(a.dim() + b.dim(), meet.dim() + join.dim());
    }
}

#[test]
fn associativity_of_every_fixture_algebra() {
    use quext_core::fixtures::{fixture_names, fixture_spec};
    for name in fixture_names() {
        let e = quext_core::build_extension(fixture_spec(name).unwrap()).unwrap();
        e.base_algebra().check_associativity().unwrap();
        e.algebra().check_associativity().unwrap();
        // unit and Peirce identities
        for alg in [e.base_algebra(), e.algebra()] {
            let f = alg.field();
            let unit = alg.unit();
            for i in 0..alg.dim() {
                let ei = svec::unit(&f, i);
                assert_eq!(alg.mul(&unit, &ei), ei);
                assert_eq!(alg.mul(&ei, &unit), ei);
            }
        }
    }
}

#[test]
fn tensor_unit_and_associativity_dimensions() {
    use quext_core::fixtures::fixture_spec;
    use quext_core::module::{tensor_over, FdModule};
    for name in ["rea", "ex6_2", "split_semisimple_cyclic"] {
        let e = quext_core::build_extension(fixture_spec(name).unwrap()).unwrap();
        let b = FdModule::regular(e.base_algebra());
        let (m, _) = e.quotient_bimodule();
        assert_eq!(tensor_over(&b, &m).unwrap().module.dim(), m.dim(), "{name}: unit law");
        assert_eq!(tensor_over(&m, &b).unwrap().module.dim(), m.dim(), "{name}: unit law");
        let mm = tensor_over(&m, &m).unwrap().module;
        let l = tensor_over(&mm, &m).unwrap().module.dim();
        let r = tensor_over(&m, &mm).unwrap().module.dim();
        assert_eq!(l, r, "{name}: associativity at dimension level");
    }
}

#[test]
fn cover_minimality_syzygy_inside_radical_times_projective() {
    use quext_core::fixtures::fixture_spec;
    use quext_core::module::{FdModule, Side};
    use quext_core::resolution::projective_cover;
    let e = quext_core::build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
    let b = e.base_algebra();
    let f = b.field();
    let s5 = FdModule::simple_left(b, 4);
    let cover = projective_cover(&s5, Side::Left).unwrap();
    // rad·P as a subspace of the projective
    let p = &cover.projective;
    let set = p.left().unwrap();
    let mut rad_p = Subspace::zero(f, p.dim());
    for r in b.radical_spanning() {
        for i in 0..p.dim() {
            rad_p.insert(set.act_elem(&r, &svec::unit(&f, i)));
        }
    }
    // embed the syzygy through the cover presentation: its basis vectors
    // are kernel vectors of the cover map, i.e. vectors in P coordinates
    let (_, kernel) = cover.map.rank_and_kernel();
    assert_eq!(kernel.dim(), cover.syzygy.dim());
    for v in kernel.rows() {
        assert!(rad_p.contains(v), "syzygy escapes rad·P");
    }
}

#[test]
fn length_index_reduces_long_relative_words() {
    use quext_core::fixtures::fixture_spec;
    // every relative word of F-length >= the index evaluates to a
    // combination of basis elements of strictly smaller F-length
    for name in ["ex6_1", "rea", "ex6_2"] {
        let e = quext_core::build_extension(fixture_spec(name).unwrap()).unwrap();
        let n = e.length_index();
        let qf = e.extended_quiver();
        // scan paths of the enlarged quiver with many new arrows
        for group in quext_core::enumerate_paths(qf, 8) {
            for p in group {
                let new_from = e.spec.quiver.arrows().len();
                let flen = p.arrows_in_order().iter().filter(|a| **a >= new_from).count();
                if flen < n {
                    continue;
                }
                let value = e.eval_path(&p);
                for (i, _) in &value {
                    assert!(
                        e.basis_flen(*i) < n,
                        "{name}: normal form keeps F-length >= index"
                    );
                }
            }
        }
    }
}

#[test]
fn bar_oracle_respects_its_cap() {
    use quext_core::fixtures::fixture_spec;
    use quext_core::module::FdModule;
    let e = quext_core::build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
    let b = e.base_algebra();
    // dim 20: degree-3 bar space needs 20·19^4 cells, far past the cap
    let x = FdModule::regular(b);
    match quext_core::truncated_bar_oracle(b, &x, 3) {
        Err(quext_core::Error::CapExceeded(_)) => {}
        other => panic!("expected CapExceeded, got {other:?}"),
    }
}

#[test]
fn exhausted_resolutions_have_zero_euler_characteristic() {
    use quext_core::fixtures::fixture_spec;
    use quext_core::module::{FdModule, Side};
    use quext_core::resolution::projective_cover;
    // iterated covers of the simple at vertex 5 terminate; alternating sum
    // of the projectives equals the module dimension
    let e = quext_core::build_extension(fixture_spec("ex6_1").unwrap()).unwrap();
    let b = e.base_algebra();
    let mut m = FdModule::simple_left(b, 4);
    let mut alternating: i64 = -(m.dim() as i64);
    let mut sign = 1i64;
    for _ in 0..12 {
        let cover = projective_cover(&m, Side::Left).unwrap();
        alternating += sign * cover.projective.dim() as i64;
        if cover.syzygy.dim() == 0 {
            assert_eq!(alternating, 0, "exact resolution must balance");
            return;
        }
        sign = -sign;
        m = cover.syzygy;
    }
    panic!("resolution did not terminate");
}

#[test]
fn shared_values_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<quext_core::FdAlgebra>();
    check::<quext_core::module::FdModule>();
    check::<quext_core::Extension>();
    check::<quext_core::Matrix>();
    check::<quext_core::Subspace>();
    check::<quext_core::Report>();
}

#[test]
fn monomial_quotients_match_the_subword_oracle() {
    // random small quivers with monomial relations: the normal-form basis
    // must be exactly the paths avoiding every generator as a contiguous
    // subword, and the product table must be associative
    use quext_core::{build_bound_quiver_algebra, enumerate_paths, Path, PathLinComb, Quiver};
    let f = Field::Rational;
    let mut state: u64 = 0xC0FFEE;
    let mut next = |m: usize| -> usize {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as usize) % m
    };
    let mut built = 0;
    for _ in 0..36 {
        let nv = 2 + next(2);
        let mut q = Quiver::new((0..nv).map(|v| format!("v{v}")).collect());
        let na = 3 + next(3);
        for a in 0..na {
            q.add_arrow(&format!("a{a}"), next(nv), next(nv));
        }
        // candidate generators: random length-2/3 paths
        let pool: Vec<Path> = enumerate_paths(&q, 3)
            .into_iter()
            .skip(2)
            .flatten()
            .collect();
        if pool.is_empty() {
            continue;
        }
        let gens: Vec<Path> = (0..1 + next(3)).map(|_| pool[next(pool.len())].clone()).collect();
        let combs: Vec<PathLinComb> = gens
            .iter()
            .map(|p| PathLinComb::new(&f, vec![(p.clone(), f.one())]).unwrap())
            .collect();
        let Ok(alg) = build_bound_quiver_algebra(f, q.clone(), combs, 6) else {
            continue; // not admissible within the bound; nothing to check
        };
        built += 1;
        let avoid = |p: &Path| -> bool {
            let w = p.arrows_in_order();
            !gens.iter().any(|g| {
                let gw = g.arrows_in_order();
                w.windows(gw.len()).any(|s| s == gw)
            })
        };
        let expected: usize = enumerate_paths(&q, 6).iter().flatten().filter(|p| avoid(p)).count();
        assert_eq!(alg.algebra().dim(), expected, "dim mismatch for a monomial quotient");
        alg.algebra().check_associativity().unwrap();
        for p in alg.basis_paths() {
            assert!(avoid(&p), "basis path contains a forbidden subword");
        }
    }
    println!("admissible monomial samples checked: {built}");
    assert!(built >= 3, "too few admissible samples ({built})");
}
