//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by graph construction, parsing, labeling, and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("vertex index {value} out of range [0, {n}) on line {line}")]
    VertexOutOfRange { line: usize, value: usize, n: usize },

    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: usize, b: usize },

    #[error("graph is not {expected}-regular: vertex {vertex} has degree {degree}")]
    NotRegular {
        vertex: String,
        degree: usize,
        expected: usize,
    },

    #[error(
        "degree k = {k} is below the minimum of 2 (K2 components admit no antimagic labeling)"
    )]
    DegreeTooSmall { k: usize },

    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },

    #[error("simple {k}-regular bipartite graph requires k <= n, got k = {k}, n = {n}")]
    DegreeExceedsPartSize { k: usize, n: usize },

    #[error("random graph generation failed after {attempts} resample attempts")]
    GenerationFailed { attempts: usize },

    #[error("invalid parameter {n} for family {family}: {reason}")]
    InvalidFamilyParameter {
        family: String,
        n: usize,
        reason: String,
    },

    #[error("invalid integer on line {line}: {text}")]
    InvalidInteger { line: usize, text: String },

    #[error("edge {edge} already carries a label")]
    EdgeAlreadyLabeled { edge: usize },

    #[error("label {label} already used")]
    DuplicateLabel { label: u64 },

    #[error("labeling is partial; a complete labeling is required")]
    PartialLabeling,

    #[error("labeling is not a bijection onto 1..=|E|: {0}")]
    NotBijective(String),

    #[error("duplicate factor index {0}")]
    DuplicateFactorIndex(usize),

    #[error("factor index {index} out of range for {count} factors")]
    FactorIndexOutOfRange { index: usize, count: usize },

    #[error("subgraph is not 2-regular")]
    NotTwoRegular,

    #[error("components are not ordered by non-decreasing degree")]
    UnsortedComponents,

    #[error("construction stage `{stage}` could not satisfy its invariant: {details}")]
    ConstructionFailed { stage: String, details: String },

    #[error("repair budget exhausted with {conflicts} conflicting vertex pairs remaining")]
    RepairBudgetExhausted { conflicts: usize },

    #[error("oracle budget exhausted after exploring {explored} assignments")]
    OracleBudgetExhausted { explored: u64 },

    #[error("instance with {edges} edges exceeds the oracle limit of {max}")]
    InstanceTooLarge { edges: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
