use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero label vector")]
    ZeroLabel,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a face of the polyhedron")]
    NotAFace,
    #[error("positive-dimensional kernel at face")]
    PositiveDimensionalKernel,
    #[error("empty polyhedron")]
    EmptyPolyhedron,
    #[error("empty shift")]
    EmptyShift,
    #[error("unbounded polyhedron")]
    Unbounded,
    #[error("fit failure")]
    FitFailure,
    #[error("polyhedron is not simple")]
    NotSimple,
    #[error("orbifold vertex at {0}")]
    OrbifoldVertex(String),
    #[error("non-generic evaluation point")]
    NonGenericPoint,
    #[error("non-generic direction: {0}")]
    NonGenericDirection(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("unsupported root system type {0}")]
    UnsupportedType(String),
    #[error("no piece to blow up: excess is already constant")]
    AlreadyConstantExcess,
    #[error("piece is not a closed piece of maximal depth")]
    NotMaximalDepth,
    #[error("summed label vector is zero")]
    ZeroSummedVector,
    #[error("enumeration bound exceeded: {0}")]
    TooLarge(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
