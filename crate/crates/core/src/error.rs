use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("unsupported field size: {0}")]
    UnsupportedField(String),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("cannot parse ring spec {0:?} (expected Z, Q, GF(p) or GF(p,k))")]
    BadRingSpec(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("operation requires a field, got {0}")]
    NotAField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("entry {value} is not representable in {ring}")]
    NotRepresentable { value: String, ring: String },
    #[error("gram[{t}][{j}][{i}] is not the negative of gram[{t}][{i}][{j}]")]
    Antisymmetry { t: usize, i: usize, j: usize },
    #[error("gram[{t}][{i}][{i}] must vanish outside characteristic 2")]
    NonzeroDiagonal { t: usize, i: usize },
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error("cannot change scalars from {from} to {to}")]
    IllegalExtension { from: String, to: String },
    #[error("enumeration requires a finite field, got {0}")]
    InfiniteRing(String),
    #[error("enumeration dimension {dim} exceeds the limit {max}")]
    DimensionLimit { dim: usize, max: usize },
    #[error("enumeration budget {budget} exceeded (needs at least {required})")]
    BudgetExceeded { budget: u64, required: u64 },
    #[error("rank set unavailable: {0}")]
    RankSetUnavailable(String),
    #[error("invalid rank set: {0}")]
    InvalidRankSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{atom} is not supported over {ring}")]
    UnsupportedAtom { atom: String, ring: String },
    #[error("conn-sum dimension mismatch ({left} vs {right})")]
    ConnSumDimension { left: usize, right: usize },
    #[error("connected sum needs summands of dimension >= 2, got {0}")]
    ConnSumLowDimension(usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("inadmissible pair (h, b) = ({h}, {b}): {reason}")]
    Inadmissible { h: u64, b: u64, reason: String },
    #[error("schema error at {field}: {reason}")]
    Schema { field: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
