use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {letter}{rank}: {reason}")]
    InvalidType {
        letter: String,
        rank: usize,
        reason: String,
    },

    #[error("invalid weight {weight:?}: {reason}")]
    InvalidWeight { weight: Vec<i64>, reason: String },

    #[error("invalid subset {subset:?} for rank {rank}")]
    InvalidSubset { subset: Vec<usize>, rank: usize },

    #[error("semisimple part is not generic: root {root:?} vanishes on s")]
    DegenerateSemisimple { root: Vec<i64> },

    #[error("matrix is not nilpotent; the exponential series does not terminate")]
    NotNilpotent,

    #[error("representation dimension exceeds the cap of {cap}")]
    DimensionCap { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("central characters differ: {left} vs {right}")]
    CharacterMismatch { left: String, right: String },

    #[error("counterexample: {0}")]
    CounterExample(String),

    #[error("group word has non-constant coefficients")]
    SymbolicWord,

    #[error("no general translate found within {budget} attempts")]
    NoGeneralTranslate { budget: usize },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
