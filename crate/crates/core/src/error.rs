use thiserror::Error;

use crate::classical::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("sequence is not weakly decreasing and nonnegative: {0:?}")]
    NotPartition(Vec<i64>),

    #[error("multiplicity index must be at least 1")]
    ZeroIndex,

    #[error("symbol row has repeated entries: {0:?}")]
    RepeatedEntry(Vec<u32>),

    #[error("{partition} is not a {kind} partition")]
    WrongClass { partition: String, kind: Kind },

    #[error("{partition} is not special for {kind}")]
    NotSpecial { partition: String, kind: Kind },

    #[error("symbol defect {0} is not supported (only 0 and 1)")]
    UnsupportedDefect(u32),

    #[error("sign vector keys {got:?} do not match {expected:?}")]
    KeyMismatch { expected: Vec<u32>, got: Vec<u32> },

    #[error("hypothesis on k fails: k = {k}, required {required}")]
    KHypothesis { k: u32, required: u32 },

    #[error("no maximal element below the target {0}")]
    NoMaximum(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
