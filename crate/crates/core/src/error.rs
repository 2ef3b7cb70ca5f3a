use thiserror::Error;

/// Errors raised by the algebraic operations of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley-Dickson level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },
    #[error("invalid Cayley-Dickson coefficient count {0} (expected 1, 2, 4 or 8)")]
    InvalidLevel(usize),
    #[error("algebra tag mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("case mismatch: {0} vs {1}")]
    CaseMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("rank violation: expected rank {expected}, found {found}")]
    RankViolation { expected: String, found: u8 },
    #[error("map is not in the zero level of the H-momentum map")]
    NotZeroLevel,
    #[error("Jordan rank {rank} exceeds s = {s}")]
    RankTooLarge { rank: u8, s: usize },
    #[error("infeasible target rank {target} (must satisfy 1 <= target <= {max})")]
    InfeasibleRank { target: usize, max: usize },
    #[error("no exact lift over the base field: {0}")]
    NoExactLift(String),
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
