use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("undeclared object `{0}`")]
    UndeclaredObject(String),
    #[error("source/target mismatch: {0}")]
    Mismatch(String),
    #[error("presentation is not complemented: pair ({0}, {1})")]
    NotComplemented(String, String),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("no equality backend applies: {0}")]
    BackendInapplicable(String),
    #[error("no equality oracle available: {0}")]
    OracleUnavailable(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("reversing diverged after {0} steps")]
    Diverged(usize),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("not unique: {0}")]
    NotUnique(String),
    #[error("no head: {0}")]
    NoHead(String),
    #[error("not Noetherian-certified: {0}")]
    NotNoetherian(String),
    #[error("not bounded: {0}")]
    NotBounded(String),
    #[error("not expressible: {0}")]
    NotExpressible(String),
    #[error("first entries are not left-disjoint")]
    NotLeftDisjoint,
    #[error("RC-quasigroup is not bijective")]
    NotBijective,
    #[error("no common left-multiple")]
    NoCommonLeftMultiple,
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
