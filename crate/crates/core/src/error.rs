use thiserror::Error;

use crate::algebra::MultiDegree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LcsError {
    #[error("generator set needs at least one generator (got m = {even}, n = {odd})")]
    NoGenerators { even: usize, odd: usize },

    #[error("element is not parity-homogeneous")]
    ParityInhomogeneous,

    #[error("element is not homogeneous in multidegree")]
    DegreeInhomogeneous,

    #[error("multidegree {got:?} has {} entries, expected {expected}", got.len())]
    DegreeLength { got: Vec<usize>, expected: usize },

    #[error("iterated bracket of an empty list")]
    EmptyBracket,

    #[error("elements belong to different generator sets")]
    GeneratorMismatch,

    #[error("component {degree} of A has dimension {dim}, above the budget {budget}")]
    BudgetExceeded {
        degree: MultiDegree,
        dim: usize,
        budget: usize,
    },

    #[error("L_{k} is not available at total degree {total} (family depth {depth})")]
    DepthExceeded {
        k: usize,
        total: usize,
        depth: usize,
    },

    #[error("invalid partition {0:?}: parts must be weakly decreasing and positive")]
    InvalidPartition(Vec<usize>),

    #[error("partition {parts:?} has more than {rows} rows")]
    TooManyRows { parts: Vec<usize>, rows: usize },

    #[error("series has no invertible constant term")]
    NotInvertible,

    #[error("series variable layout mismatch")]
    SeriesMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, LcsError>;
