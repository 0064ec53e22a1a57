//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of two operands do not line up (vector length vs matrix columns, ...).
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A parameter violates its documented domain (integrality, ranges, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact-enumeration request exceeds the hard size caps.
    #[error("size cap exceeded for {what}: limit {limit}, requested {requested}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    /// Divergence requested for P not absolutely continuous w.r.t. Q.
    #[error("absolute continuity violated: P({atom}) > 0 but Q({atom}) = 0")]
    NotAbsolutelyContinuous { atom: u64 },

    /// An operation requires a full-row-rank matrix.
    #[error("matrix is rank deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    /// The supplied pair of parity-check matrices does not define nested codes.
    #[error("codes are not nested: ker H_E is not contained in ker H_B")]
    NotNested,
}
