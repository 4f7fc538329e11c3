use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("argument of {0} is not nilpotent")]
    NotNilpotent(&'static str),

    #[error("matrix is not upper-triangular")]
    NotUpperTriangular,

    #[error("diagonal entry {index} is not a constant polynomial")]
    NonConstantDiagonal { index: usize },

    #[error("diagonal entry {index} is not an integer: {value}")]
    NonIntegerDiagonal { index: usize, value: String },

    #[error("diagonal entry {index} is zero, matrix is singular")]
    SingularDiagonal { index: usize },

    #[error("repeated diagonal entries at {first} and {second}")]
    RepeatedDiagonal { first: usize, second: usize },

    #[error("polynomial {0} is not divisible by {1}")]
    NotDivisible(String, String),

    #[error("polynomial degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },

    #[error("invalid half-integer {0:?}")]
    InvalidHalfInt(String),

    #[error("invalid sign {0:?}, expected +1 or -1")]
    InvalidSign(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weight m = {twice_m}/2 outside [-j, j] for 2j = {twice_j}")]
    WeightOutOfRange { twice_j: u32, twice_m: i64 },

    #[error("operation requires the epsilon = +1 branch")]
    WrongBranch,

    #[error("inverse map mismatch: {0}")]
    InverseMapMismatch(String),

    #[error("verma module depth {depth} too small for lambda = {lambda}")]
    Truncation { lambda: u32, depth: usize },

    #[error("no singular vector at level {0}")]
    NoSingularVector(usize),

    #[error("representation must be given in the verma_diagonal basis, got {0}")]
    BasisMismatch(String),

    #[error("{0}")]
    Invariant(String),

    #[error("numeric oracle mismatch: {0}")]
    OracleMismatch(String),
}
