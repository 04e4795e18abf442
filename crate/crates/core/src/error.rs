use thiserror::Error;

/// Errors raised by the library. Point indices are 0-based; `Display`
/// renders them as 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("coordinate ({x}, {y}) of point {label} exceeds the magnitude bound 2^60", label = .index + 1)]
    CoordinateOutOfRange { index: usize, x: i128, y: i128 },

    #[error("points {} and {} coincide", .0 + 1, .1 + 1)]
    DuplicatePoint(usize, usize),

    #[error("points {} {} {} are collinear", .0 .0 + 1, .0 .1 + 1, .0 .2 + 1)]
    Collinear((usize, usize, usize)),

    #[error("point index {0} out of range for a set of {1} points")]
    IndexOutOfRange(usize, usize),

    #[error("{0} is not a valid parameter: {1}")]
    OutOfRange(&'static str, String),

    #[error("point {} is not extreme", .0 + 1)]
    NotExtreme(usize),

    #[error("extreme points {} and {} are consecutive on the hull", .0 + 1, .1 + 1)]
    ConsecutiveExtremes(usize, usize),

    #[error("point {} is not strictly inside the triangle", .0 + 1)]
    NotInsideTriangle(usize),

    #[error("degenerate triangle")]
    DegenerateTriangle,

    #[error("two mutations share the parameter t = {0}")]
    SimultaneousEvents(String),

    #[error("inconsistent (<=k)-edge vector: {0}")]
    InconsistentEdgeVector(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("no pair of extreme points shrinks a hull of size {0}")]
    NoProgress(usize),

    #[error("malformed point-set input at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("generator failed after {0} attempts")]
    GeneratorExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
