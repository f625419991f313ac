use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse affine type `{0}` (expected e.g. `A4~2`, `C2~1`, `A_4^(2)`)")]
    ParseType(String),

    #[error("unsupported affine type {0}: {1}")]
    UnsupportedType(String, String),

    #[error("invalid weight literal `{0}` (expected comma-separated integers, e.g. `1,0`)")]
    ParseWeight(String),

    #[error("weight ({0}) is not dominant")]
    NotDominant(String),

    #[error("weight ({0}) lies outside P_k at level {1}")]
    NotInLevel(String, i64),

    #[error("simple-reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group of order {order} exceeds enumeration cap {cap}")]
    WeylCapExceeded { order: u64, cap: u64 },

    #[error("torus group of order {order} exceeds enumeration cap {cap}")]
    GroupCapExceeded { order: i64, cap: i64 },

    #[error("fusion coefficient at indices ({0},{1},{2}) fails integrality: raw {3}, residual {4:.3e}")]
    IntegralityViolation(usize, usize, usize, String, f64),

    #[error("alcove-fold projection for ({0}) is ambiguous: {1}")]
    FoldAmbiguous(String, String),

    #[error("operation requires a dual-twisted type, got {0}")]
    WrongTypeClass(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
