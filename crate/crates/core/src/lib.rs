//! Exact computational homological algebra for bound quiver algebras and
//! their extensions by new arrows and relations.
//!
//! The crate builds finite-dimensional algebras `B = kQ/I` from a quiver
//! with admissible relations, extends them by new arrows and relations to
//! `A = T/J`, decides tensor nilpotency, one-sided projectivity and
//! splitness of the extension, and computes Hochschild and relative
//! Hochschild homology together with global dimension bounds. All
//! arithmetic is exact, over Q or a prime field chosen per session.

pub mod algebra;
pub mod colmat;
pub mod complex;
pub mod error;
pub mod extension;
pub mod field;
pub mod fixtures;
pub mod homology;
pub mod matrix;
pub mod module;
mod pathspan;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod resolution;
pub mod specfile;
pub mod splitness;
pub mod subspace;
pub mod svec;
pub mod tspace;
pub mod verdict;

pub use algebra::{build_bound_quiver_algebra, ideal_span_up_to, FdAlgebra, QuotientAlgebra, Radical};
pub use complex::{ChainComplex, HomologyTable};
pub use error::{Error, Result};
pub use extension::{
    build_extension, boundedness_report, enumerate_relative_cycles, has_j_interrupter,
    nilpotency_criterion, pigeonhole_bound, CriterionOutcome, Extension, ExtensionSpec, Limits,
    RelativeCycle,
};
pub use field::{Field, Scalar};
pub use homology::{
    gldim_bound_checks, hochschild_homology, jz_dimension_report, relative_bar_complex,
    relative_hochschild_homology, truncated_bar_oracle, Section,
};
pub use matrix::{Matrix, SolveOutcome};
pub use module::{
    tensor_over, tensor_power_nilpotency, Embedding, FdModule, Nilpotency, Side, TensorProduct,
};
pub use presentation::{extract_presentation, verify_round_trip, PresentationInput};
pub use report::{run, Command, Report};
pub use quiver::{enumerate_paths, Arrow, Path, PathLinComb, Quiver};
pub use resolution::{global_dimension, is_projective, projective_cover, projective_dimension, PdOutcome};
pub use specfile::{parse_spec, serialize_spec};
pub use splitness::{complement_search, splitness_report, ComplementOutcome, SplitnessReport};
pub use subspace::Subspace;
pub use tspace::one_sided_projectivity_criterion;
pub use verdict::Verdict;
