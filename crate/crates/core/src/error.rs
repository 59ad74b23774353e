//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown field `{0}` (expected Q, F or F<prime>)")]
    BadField(String),

    #[error("not a valid scalar: {0}")]
    BadScalar(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("relation generator is not (source, target)-homogeneous: {0}")]
    GeneratorInhomogeneous(String),

    #[error("relation generator has a component of length < 2: {0}")]
    GeneratorDegree(String),

    #[error("ideal is not admissible within path length bound {bound}")]
    NotAdmissibleWithinBound { bound: usize },

    #[error("extension not certified finite-dimensional within length bound {bound}")]
    NotFiniteWithinBound { bound: usize },

    #[error("relation ideal meets the base algebra; witness: {witness}")]
    JMeetsB { witness: String },

    #[error("generators do not generate: span stabilized at dimension {reached} < {expected}")]
    NotGenerating { reached: usize, expected: usize },

    #[error("algebra is not certified basic (dim radical {rad} != dim {dim} - {vertices} vertices)")]
    NotBasic { dim: usize, rad: usize, vertices: usize },

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid section: composition with the projection is not the identity")]
    InvalidSection,

    #[error("spec file, line {line}: {msg}")]
    Spec { line: usize, msg: String },

    #[error("unknown name `{name}` at line {line}")]
    UnknownName { line: usize, name: String },

    #[error("relation at line {line} mixes sources or targets")]
    InhomogeneousRelation { line: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("{0}")]
    Other(String),
}
