use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unregistered parameter `{0}`")]
    UnknownParameter(String),
    #[error("negative exponent for non-Laurent parameter `{0}`")]
    NegativeExponent(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("arguments belong to different Lie algebras")]
    MixedAlgebra,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("odd dimension {0}: Pfaffian undefined")]
    OddDimension(usize),
    #[error("singular form for functional `{0}`")]
    SingularForm(String),
    #[error("inadmissible epsilon triple {0:?}")]
    InvalidEpsilon([i8; 3]),
    #[error("no sign completion makes the map an automorphism; first failing pair ({0}, {1})")]
    NoAutomorphismCompletion(String, String),
    #[error("map is not a {kind}: fails on ({x}, {y})")]
    KindViolation { kind: &'static str, x: String, y: String },
    #[error("ad({grader}) does not act diagonally")]
    NotSemisimple { grader: String },
    #[error("degenerate Killing form")]
    DegenerateKilling,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
