use thiserror::Error;

/// Malformed text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("not a number: {0:?}")]
    Number(String),
    #[error("unknown quiver type {0:?} (expected e.g. A3, D5, E6, ~D5)")]
    Type(String),
    #[error("not an arrow: {0:?} (expected a<k> or ~a<k>)")]
    Arrow(String),
    #[error("bad path element {0:?}: {1}")]
    Element(String, String),
    #[error("bad vertex list {0:?}")]
    Vertices(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("vertex {vertex} out of range for {ty}")]
    VertexOutOfRange { ty: String, vertex: usize },
    #[error("weight has {got} entries, {ty} needs {want}")]
    WeightLength { ty: String, want: usize, got: usize },
    #[error("weight is not quasi-dominant: entry {vertex} is {value} (use quasi_dominantize first)")]
    NotQuasiDominant { vertex: usize, value: String },
    #[error("search exhausted after {0} steps")]
    SearchExhausted(usize),
    #[error("component on vertices {0:?} is not a Dynkin tree")]
    Unclassifiable(Vec<usize>),
    #[error("path does not compose: {0}")]
    Composition(String),
    #[error("element mixes endpoints {0:?} and {1:?}")]
    MixedEndpoints((usize, usize), (usize, usize)),
    #[error("degree cap {cap} is below the element degree {degree}")]
    CapTooSmall { cap: usize, degree: usize },
    #[error("matrix shapes do not compose: {0}")]
    Shape(String),
    #[error("knitting input invalid: {0}")]
    KnitInput(String),
    #[error("knitting did not terminate within {0} columns")]
    KnitGuard(usize),
    #[error("no path through nonzero uncircled entries reaches the box from column {col}, vertex {vertex}")]
    NoPatternPath { col: usize, vertex: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
