//! Error types for every module in the crate.

use thiserror::Error;

/// Errors constructing a [`crate::Graph`] from raw data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) out of range for a graph on {order} vertices")]
    EdgeOutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
}

/// Errors parsing the plain-text edge-list format.
///
/// Line numbers are 1-based and refer to the raw input, comments included.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing order line: expected a vertex count before any edges")]
    MissingOrder,
    #[error("line {line}: cannot parse {token:?} as a vertex count")]
    BadOrder { line: usize, token: String },
    #[error("line {line}: cannot parse {token:?} as a vertex index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected two vertex indices, found {found} tokens")]
    WrongArity { line: usize, found: usize },
    #[error("line {line}: vertex {index} out of range for a graph on {order} vertices")]
    VertexOutOfRange { line: usize, index: usize, order: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

/// Errors encoding or decoding the graph6 format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 order {order} exceeds the supported maximum of 62")]
    OrderTooLarge { order: usize },
    #[error("extended (multi-byte order) graph6 encodings are not supported")]
    UnsupportedExtended,
    #[error("invalid graph6 byte {byte:#x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 string: expected {expected} payload bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 payload: expected {expected} bytes total, found {found}")]
    TrailingData { expected: usize, found: usize },
}

/// Errors from the exact enumeration engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph on {order} vertices exceeds the enumeration cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("enumeration cap {cap} exceeds the bitmask limit of 64 vertices")]
    CapAboveMaskLimit { cap: usize },
    #[error("{what} requires order >= {min}, got {order}")]
    OrderTooSmall {
        what: &'static str,
        order: usize,
        min: usize,
    },
}

/// Errors constructing family members.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("family {family} does not take parameter {param}")]
    UnexpectedParam { family: &'static str, param: &'static str },
    #[error("family {family} requires parameter {param}")]
    MissingParam { family: &'static str, param: &'static str },
    #[error("family {family} does not accept {param}={value}: {why}")]
    BadParam {
        family: &'static str,
        param: &'static str,
        value: u64,
        why: &'static str,
    },
    #[error("family {family} has no member with index {index}; the first member is at index {min}")]
    IndexBelowMinimum {
        family: &'static str,
        index: u64,
        min: u64,
    },
    #[error("member index {index} of {family} would have {vertices} vertices, above the construction limit {limit}")]
    TooManyVertices {
        family: &'static str,
        index: u64,
        vertices: u64,
        limit: u64,
    },
}

/// Errors building a catalog recurrence for a family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("family {0} has no catalog recurrence")]
    NoRecurrence(String),
    #[error("family {family}: base member {index} cannot be enumerated: {source}")]
    BaseEnumeration {
        family: String,
        index: u64,
        source: EngineError,
    },
    #[error("family {family}: {source}")]
    BaseConstruction {
        family: String,
        source: FamilyError,
    },
}

/// Violations of the dominant-root hypotheses behind the limit formula.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypothesisError {
    #[error("dominant root is not unique: relative modulus gap {gap:.3e} below 1e-9")]
    NonUniqueDominantRoot { gap: f64 },
    #[error("dominant root is complex: imaginary part {imag:.3e} above 1e-9")]
    ComplexDominantRoot { imag: f64 },
    #[error("base condition P(1/r, 1) = {value:.3e} vanishes; the dominant term is not excited")]
    BaseConditionZero { value: f64 },
    #[error("characteristic polynomial is constant; recurrence has no roots")]
    NoRoots,
}

/// Errors while extending profiles with a recurrence.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtendError {
    #[error("recurrence produced the non-integer count {value} at index n={n}, size k={k}")]
    NonIntegerCount { n: usize, k: usize, value: String },
    #[error("recurrence produced the negative count {value} at index n={n}, size k={k}")]
    NegativeCount { n: usize, k: usize, value: String },
}

/// Any failure of the asymptotic/convergence/verification pipeline, split by
/// stage so callers can distinguish bad input, hypothesis violations, and
/// enumeration caps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error(transparent)]
    Extend(#[from] ExtendError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Errors from the small-order exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("brute-force isomorphism handling is limited to order <= {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}
