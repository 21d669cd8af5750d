use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("not a tournament: {0}")]
    NotATournament(String),

    #[error("tournament has no alternatives")]
    EmptyTournament,

    #[error("alternative {alternative} out of range for order {order}")]
    AlternativeOutOfRange { alternative: usize, order: usize },

    #[error("expected {expected} parts, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("set must be non-empty")]
    EmptySet,

    #[error("relation universe is empty")]
    EmptyUniverse,

    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("{solver}: order {order} exceeds the exact-search cap of {cap}")]
    OrderTooLargeForExact {
        solver: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("electorate of {0} voters is even; majority ties are possible")]
    EvenElectorate(usize),

    #[error("voter {voter} does not rank a permutation of the alternatives")]
    InconsistentAlternativeSets { voter: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("linear system is infeasible")]
    Infeasible,

    #[error("tournament is not regular")]
    NotRegular,

    #[error("tournament is not a product under the given decomposition")]
    NotAProduct,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
