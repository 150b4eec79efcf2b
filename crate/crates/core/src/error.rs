use thiserror::Error;

/// Failure while reading a polynomial expression. `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed exponent: {0}")]
    MalformedExponent(String),
    #[error("division is only allowed inside a rational literal")]
    Division,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed number `{0}`")]
    MalformedNumber(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    Unexpected { found: String, expected: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("standard basis aborted after {0} reduction steps")]
    StepLimit(u64),
    #[error("ICIS violation: {0}")]
    IcisViolation(IcisViolation),
    #[error("infinite colength: {0}")]
    InfiniteColength(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no generic linear form found after {0} attempts")]
    GenericityExhausted(usize),
    #[error("containment violated: generator {0} of the submodule is not in the ambient module")]
    NotContained(usize),
    #[error("k = {k} exceeds the number of variables n = {n}")]
    MinorSize { k: usize, n: usize },
}

/// Why a generator list fails to present an ICIS.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IcisViolation {
    #[error("dimension {found}, expected {expected}")]
    Dimension { found: usize, expected: usize },
    #[error("singular locus is not isolated (infinite colength of ideal plus {k}x{k} minors)")]
    NonIsolated { k: usize },
    #[error("generator {0} does not vanish at the origin")]
    NotVanishing(usize),
    #[error("truncation to the first {0} generators is not an ICIS: {1}")]
    Truncation(usize, Box<IcisViolation>),
    #[error("empty generator list")]
    Empty,
}
