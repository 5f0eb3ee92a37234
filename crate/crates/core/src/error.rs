use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("relation {0:?} is not a composable path")]
    NonComposableRelation(Vec<String>),
    #[error("relation {0:?} must have length at least 2")]
    ShortRelation(Vec<String>),
    #[error("path basis is infinite: the allowed paths contain a cycle not cut by any relation")]
    InfiniteDimensional,
    #[error("vertex `{0}` is not a source")]
    NotASource(String),
    #[error("relabeling is not a bijection: {0}")]
    NonBijectiveRelabel(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("operation needs a nonzero module")]
    ZeroModule,
    #[error("summand with dimension vector {0:?} matches no catalog entry")]
    CatalogIncomplete(Vec<usize>),
    #[error("summand with dimension vector {0:?} has dim End/rad = {1} (algebra out of scope)")]
    NonLocalSummand(Vec<usize>, usize),
    #[error("not representation-directed at this cap ({0} iterations)")]
    CatalogCap(usize),

    #[error("tau-tilting infinite at this cap ({0} tau-rigid modules)")]
    CliqueCap(usize),
    #[error("exchange graph is not regular: {0}")]
    Regularity(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("invalid dag: {0}")]
    InvalidDag(String),
    #[error("vertex subset is not contained in the quiver: index {0}")]
    NotASubset(usize),
    #[error("inconsistent extension context: {0}")]
    ContextMismatch(String),

    #[error("non-exact division in surd arithmetic: {0}")]
    NonExactDivision(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
