use thiserror::Error;

/// Errors raised by domain operations.  Construction-time validation failures
/// (bad partitions, out-of-range node indices, mismatched strand counts) are
/// all reported through this type rather than panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown basis tag `{0}`")]
    UnknownBasis(String),
    #[error("partition parts must be weakly decreasing and positive: {0:?}")]
    BadPartition(Vec<u32>),
    #[error("partition has {got} parts but at most {max} are allowed")]
    TooManyParts { got: usize, max: usize },
    #[error("binomial index out of range: k={k}, n={n}")]
    BinomialRange { n: u32, k: u32 },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {idx} out of range for n={n}")]
    IndexRange { idx: usize, n: usize },
    #[error("weight length {got} does not match rank {rank}")]
    WeightLength { got: usize, rank: usize },
    #[error("node {node} out of range for rank {rank}")]
    NodeRange { node: usize, rank: usize },
    #[error("scalar choice violates t_ij^2 = t_ji^2 = t_ij^{{-1}}t_ji = 1")]
    ScalarGate,
    #[error("scalars t_ij must be nonzero with t_ii = 1")]
    BadScalars,
    #[error("weight mismatch: {0:?} vs {1:?}")]
    WeightMismatch(Vec<i64>, Vec<i64>),
    #[error("box mismatch: ({0},{1}) vs ({2},{3})")]
    BoxMismatch(usize, usize, usize, usize),
    #[error("partition does not fit in the {k}x{cols} box: {parts:?}")]
    OutsideBox { k: usize, cols: usize, parts: Vec<u32> },
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
