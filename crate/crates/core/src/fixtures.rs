//! The worked examples shipped with the tool, embedded as spec files.

use std::sync::Arc;

use crate::algebra::{build_bound_quiver_algebra, FdAlgebra, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::extension::ExtensionSpec;
use crate::field::Field;
use crate::module::Embedding;
use crate::quiver::Quiver;
use crate::specfile::parse_spec;
use crate::svec;

pub const FIXTURES: &[(&str, &str)] = &[
    ("ex6_1", include_str!("../fixtures/ex6_1.qext")),
    ("rea", include_str!("../fixtures/rea.qext")),
    ("ex6_2", include_str!("../fixtures/ex6_2.qext")),
    ("nocycle4", include_str!("../fixtures/nocycle4.qext")),
    ("split_semisimple", include_str!("../fixtures/split_semisimple.qext")),
    ("split_semisimple_cyclic", include_str!("../fixtures/split_semisimple_cyclic.qext")),
    ("matrix2", include_str!("../fixtures/matrix2.qext")),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn fixture_text(name: &str) -> Result<&'static str> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn fixture_spec(name: &str) -> Result<ExtensionSpec> {
    parse_spec(fixture_text(name)?)
}

pub fn fixture_spec_over(name: &str, field: Field) -> Result<ExtensionSpec> {
    crate::specfile::parse_spec_with(fixture_text(name)?, Some(field))
}

/// The full 2×2 matrix algebra with its diagonal subalgebra, for the
/// presentation-extraction round trip. Returned as (A, B, inclusion).
pub fn matrix2_ambient(field: Field) -> Result<(Arc<FdAlgebra>, QuotientAlgebra, Embedding)> {
    // basis e11, e12, e21, e22 of A; vertex idempotents e11, e22
    let one = field.one();
    let labels: Vec<String> = ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect();
    // Peirce data: e_ij = e_ii · e_ij · e_jj, so src = j, tgt = i
    let src = vec![0, 1, 0, 1];
    let tgt = vec![0, 0, 1, 1];
    let mul = |i: usize, j: usize| -> Vec<(usize, crate::field::Scalar)> {
        // e_{ab} e_{cd} = δ_{bc} e_{ad}
        let (a, b) = (i / 2, i % 2);
        let (c, d) = (j / 2, j % 2);
        if b == c {
            vec![(a * 2 + d, one.clone())]
        } else {
            Vec::new()
        }
    };
    let table: Vec<Vec<_>> = (0..4).map(|i| (0..4).map(|j| mul(i, j)).collect()).collect();
    let algebra = FdAlgebra::from_table(
        field,
        labels,
        vec!["1".into(), "2".into()],
        src,
        tgt,
        vec![0, 3],
        table,
    )?;
    let base_quiver = Quiver::new(vec!["1".into(), "2".into()]);
    let base = build_bound_quiver_algebra(field, base_quiver, Vec::new(), 4)?;
    let embedding = Embedding {
        from: base.algebra().clone(),
        to: algebra.clone(),
        cols: vec![svec::unit(&field, 0), svec::unit(&field, 3)],
    };
    embedding.validate()?;
    Ok((algebra, base, embedding))
}
