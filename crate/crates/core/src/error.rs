use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("algebra is possibly infinite dimensional: irreducible path {0} reaches the length bound")]
    NotFiniteDimensional(String),
    #[error("ill-formed relation: {0}")]
    IllFormedRelation(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("input is decomposable: {0}")]
    DecomposableInput(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("residue algebra does not split over the base field: {0}")]
    NotSplit(String),
    #[error("zero module has no projective cover")]
    ZeroModule,
    #[error("resolution truncated before degree {0}")]
    TruncationTooShallow(usize),
    #[error("algebra has infinite (or undetermined) global dimension: {0}")]
    InfiniteGlobalDimension(String),
    #[error("not an exceptional pair: {0}")]
    NotExceptionalPair(String),
    #[error("not an exceptional sequence: {0}")]
    NotExceptionalSequence(String),
    #[error("sequence is not standarizable: {0}")]
    NotStandarizable(String),
    #[error("highest weight criterion not certified: {0}")]
    CriterionNotCertified(String),
    #[error("standard object is not a module: {0}")]
    NonModuleStandard(String),
    #[error("report incomplete: {0}")]
    ReportIncomplete(String),
    #[error("recursion did not terminate within bound {0}")]
    NonTerminating(usize),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
