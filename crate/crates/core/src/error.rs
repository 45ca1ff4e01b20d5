use thiserror::Error;

/// Crate-wide error type. Variants map onto the failure classes the public
/// operations document: shape/index problems in the tensor engine, rendering
/// and taxonomy problems in the instruction bank, and configuration or
/// bookkeeping problems in the training/evaluation layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {context}: {left:?} vs {right:?}")]
    ShapeMismatch {
        context: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("index out of range: {context}: id {id} >= {bound}")]
    IndexOutOfRange {
        context: &'static str,
        id: usize,
        bound: usize,
    },

    #[error("cross-entropy mask selects no positions")]
    EmptyMask,

    #[error("distribution not normalized: sums are {p_sum} and {q_sum}")]
    NotNormalized { p_sum: f64, q_sum: f64 },

    #[error("sequence too long: {have} positions exceed max_seq_len {max}")]
    SequenceTooLong { have: usize, max: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("render error: missing value for slot {{{slot}}}")]
    MissingSlot { slot: String },

    #[error("render error: {0}")]
    Render(String),

    #[error("negation error: {0}")]
    Negation(String),

    #[error("paraphrase capacity: rule set yields {available} distinct variants, {requested} requested")]
    ParaphraseCapacity { available: usize, requested: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error for template {id}: {message}")]
    Validation { id: String, message: String },

    #[error("batch error: {0}")]
    Batch(String),

    #[error("aggregation error: group {group} has no {side} records")]
    EmptyGroupSide { group: String, side: &'static str },

    #[error("category study error: no records for category {0}")]
    MissingCategory(String),

    #[error("sampling error: requested {requested} of {available} available points")]
    Sampling { requested: usize, available: usize },

    #[error("analysis error: {0}")]
    Analysis(String),

    #[error("degenerate projection: data rank below 2")]
    DegenerateProjection,

    #[error("degenerate fit: x values are constant")]
    DegenerateFit,

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
