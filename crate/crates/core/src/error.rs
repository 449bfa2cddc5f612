use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper (non-unit) ideal")]
    UnitIdeal,
    #[error("operation requires an Artinian ideal")]
    NotArtinian,
    #[error("ideal is not integrally closed; run `certify` for the failing component")]
    NotIntegrallyClosed,
    #[error("{count} generators exceed the Taylor complex cap of {cap}")]
    GeneratorCap { count: usize, cap: usize },
    #[error("degree {degree} outside 1..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("complex vertices do not match the ideal's minimal generators")]
    VertexMismatch,
    #[error("complex is not a cellular resolution of the ideal")]
    NotAResolution,
    #[error("residue has no candidate-nonzero component")]
    EmptySupport,
    #[error("dimension {0} is not supported here (expected 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("fan refinement exceeded the iteration cap of {0}")]
    IterationCap(usize),
    #[error("lattice enumeration of {0} points is too large")]
    EnumerationTooLarge(String),
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) => 3,
            _ => 2,
        }
    }
}
