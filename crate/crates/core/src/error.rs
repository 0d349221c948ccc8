use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor mismatch: {left} vs {right} (embed explicitly first)")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{k} is not a unit modulo {n}")]
    NotAUnit { k: i64, n: u64 },

    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u64, to: u64 },

    #[error("element is not real")]
    NotReal,

    #[error("sign could not be certified within {bits} bits")]
    PrecisionExhausted { bits: u32 },

    #[error("malformed modular data: {0}")]
    Malformed(String),

    #[error("not modular data: {0}")]
    NotModular(String),

    #[error("invalid modular data: {0}")]
    InvalidData(String),

    #[error("rank {rank} exceeds the configured bound {bound}")]
    RankBound { rank: usize, bound: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate quadratic form: {0}")]
    DegenerateForm(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
