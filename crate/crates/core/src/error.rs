use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field size {p}^{k} exceeds the cap {cap}")]
    FieldTooLarge { p: u64, k: u32, cap: u64 },
    #[error("element code {code} is not in a field of size {q}")]
    ElementOutOfRange { code: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroNotInvertible,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("group closure exceeded the cap of {cap} elements ({reached} generated so far)")]
    OrderCapExceeded { cap: usize, reached: usize },
    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid group file: {0}")]
    InvalidGroupFile(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
