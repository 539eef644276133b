use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {ty}{rank}: {reason}")]
    InvalidCartanType {
        ty: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<i64>),
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("length {length} exceeds the interval budget {budget}")]
    BudgetExceeded { length: usize, budget: usize },
    #[error("element is not an involution")]
    NotInvolution,
    #[error("coweight {0} is not in the coroot lattice")]
    NotInCorootLattice(String),
    #[error("coweight {0} is not integral")]
    NotIntegral(String),
    #[error("no unique dominance-maximal Newton point among {0} candidates")]
    NoUniqueMaximum(usize),
    #[error("elements belong to different systems or lattices")]
    Incompatible,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Why a hypothesis-gated operation declined to evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Refusal {
    #[error("below threshold: depth {depth} does not exceed the required {threshold}")]
    BelowThreshold { depth: String, threshold: i64 },
    #[error("coweight is not dominant")]
    NotDominant,
    #[error("μ not regular")]
    NotRegular,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}
