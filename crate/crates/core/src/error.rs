use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: u32, n: u32 },
    #[error("simplex {0:?} repeats a vertex")]
    DegenerateSimplex(Vec<u32>),
    #[error("face {face:?} has boundary edge ({}, {}) missing from the edge list", .edge.0, .edge.1)]
    MissingBoundaryEdge { face: [u32; 3], edge: (u32, u32) },
    #[error("edge ({}, {}) is not in the complex", .0.0, .0.1)]
    MissingEdge((u32, u32)),
    #[error("face {0:?} is not in the complex")]
    UnknownFace([u32; 3]),
    #[error("vertices must be distinct (got {0} twice)")]
    EqualVertices(u32),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("probability {0} is not in [0, 1]")]
    BadProbability(String),
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: u32, min: u32 },
    #[error("{0} is not a prime field size")]
    BadField(u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("matrix size {size} exceeds the configured cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("complex has no faces")]
    NoFaces,
    #[error("anchor vertices 1..={0} are not all present")]
    AnchorMissing(u32),
    #[error("anchor width {0} is unsupported (use 0 or 3)")]
    UnsupportedAnchor(u32),
    #[error("search too large: {0}")]
    TooLarge(String),
    #[error("edges {{1,2}}, {{2,3}}, {{1,3}} must all be present")]
    MissingAnchorEdges,
    #[error("area budget {budget} exceeds cap {cap}")]
    BudgetCapExceeded { budget: usize, cap: usize },
    #[error("invalid loop: {0}")]
    InvalidLoop(String),
    #[error("complex is not admissible (e(X) = {0})")]
    NotAdmissible(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("denominator 2e_w - 1 = {0} is not positive")]
    DenominatorNonpositive(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("missing column {0}")]
    MissingColumn(String),
    #[error("empty input")]
    EmptyInput,
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
