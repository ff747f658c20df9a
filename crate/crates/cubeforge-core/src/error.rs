use thiserror::Error;

/// Errors raised by constructions, completions and file handling.
///
/// Verification failures are not errors: the checkers return a
/// [`crate::VerificationReport`] listing violations instead.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
    #[error("order {0} out of supported range 1..=1024")]
    OrderOutOfRange(usize),
    #[error("partition mismatch: {0}")]
    PartitionMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("placement out of range: {0}")]
    PlacementOutOfRange(String),
    #[error("cell out of range: {0}")]
    CellOutOfRange(String),
    #[error("permutation length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient {coefficient} shares a factor with modulus {modulus}")]
    NonCoprimeCoefficient { modulus: usize, coefficient: i64 },
    #[error("no latin square of order {n} has a subsquare of order {m}")]
    SubsquareTooLarge { n: usize, m: usize },
    #[error("no latin cube of order {total} has a subcube of order {c}")]
    SubcubeTooLarge { total: usize, c: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("order {0} too small for a strength-3 array on 5 constraints")]
    OrderTooSmall(usize),
    #[error("no OA(3,5,{order}) available: prime-power factor {factor} is below 4")]
    UnsupportedOrder { order: usize, factor: usize },
    #[error("extension amount {c} out of range 0..={t}")]
    BadC { t: usize, c: usize },
    #[error("no maximum matching saturates the forced vertices")]
    ForcedUnsaturable,
    #[error("Ryser condition violated: symbol {symbol} occurs {count} times, needs {needed}")]
    RyserViolated {
        symbol: u16,
        count: usize,
        needed: usize,
    },
    #[error("completion hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("graph is not {degree}-regular at vertex {vertex}")]
    NotRegular { degree: usize, vertex: usize },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("catalog entry `{name}` failed verification: {detail}")]
    CatalogCorrupt { name: String, detail: String },
    #[error("layer data does not match expansion rule: {0}")]
    ShapeMismatch(String),
    #[error("paired pack invalid: {0}")]
    PackInvalid(String),
    #[error("extension pair invalid: {0}")]
    ExtensionInvalid(String),
    #[error("({a},{b}) outside the constructive theorem range: {detail}")]
    OutOfTheoremRange { a: usize, b: usize, detail: String },
    #[error("order {0} is not 1 or 5 mod 6")]
    BadResidue(usize),
    #[error("extension rule conflict: cell ({0},{1},{2}) assigned twice")]
    RuleConflict(usize, usize, usize),
    #[error("shifted partner needs b >= a/2, got a={a}, b={b}")]
    BRangeTooSmall { a: usize, b: usize },
    #[error("tiling chain broken: {0}")]
    TilingChainBroken(String),
    #[error("completion disagrees with the extension at cell ({0},{1},{2})")]
    AgreementViolated(usize, usize, usize),
    #[error("assembly overlap: cell ({0},{1},{2}) written twice")]
    AssemblyOverlap(usize, usize, usize),
    #[error("no realization of {0} exists: {1}")]
    ProvablyNonexistent(String, String),
    #[error("construction of {partition} unsupported: {reason}")]
    Unsupported { partition: String, reason: String },
    #[error("existence of {0} is an open question")]
    UnknownExistence(String),
    #[error("search budget of {0} node expansions exceeded")]
    BudgetExceeded(u64),
    #[error("construction produced an invalid object: {0}")]
    ConstructionFailed(String),
    #[error("data format error: {0}")]
    DataFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
