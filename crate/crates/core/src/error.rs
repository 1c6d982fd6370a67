use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("ideals live in different rings")]
    AmbientMismatch,
    #[error("monomial has {found} exponents, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{0} ideal has no associated primes or decomposition")]
    DegenerateIdeal(&'static str),
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("no constraints (t exceeds all degrees): the partial cover ideal is the unit ideal")]
    UnitCoverIdeal,
    #[error("closed form proven only for trees")]
    TreesOnly,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(
        "maximal ideal not associated at this power: need s(t-1) >= n-1, got s={s}, t={t}, n={n}"
    )]
    CriterionUnmet { n: usize, t: usize, s: usize },
    #[error("hypergraph is not simple: {0}")]
    NonSimpleHypergraph(String),
    #[error("hypergraph edge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Vec<String>),
    #[error("cap exceeded (override with --force): {0}")]
    CapExceeded(String),
    #[error("integrity violation: {0}")]
    Integrity(String),
}
