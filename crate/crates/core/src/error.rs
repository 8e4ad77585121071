use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("matrix has zero rows or columns")]
    EmptyMatrix,

    #[error("non-finite entry at position {0}")]
    NonFiniteEntry(usize),

    #[error("matrix is not square: {0} x {1}")]
    NonSquare(usize, usize),

    #[error("symmetry defect {defect:e} exceeds tolerance {tol:e}")]
    AsymmetryExceedsTolerance { defect: f64, tol: f64 },

    #[error("iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("all columns are numerically zero")]
    ZeroRank,

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("subspace dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),

    #[error("subspace is the whole space; its complement is empty")]
    FullSpace,

    #[error("spectrum has zero spread (operator is a multiple of the identity)")]
    ZeroSpread,

    #[error("spectrum [{min}, {max}] is outside the unit interval")]
    SpectrumOutOfUnitInterval { min: f64, max: f64 },

    #[error("graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("invalid edge ({0}, {1}) for a graph on {2} vertices")]
    InvalidEdge(usize, usize, usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),

    #[error("edge counts differ: {0} vs {1}")]
    EdgeCountMismatch(usize, usize),

    #[error("bad dimensions: {0}")]
    BadDims(String),

    #[error("bad range: lo={lo} must be below hi={hi}")]
    BadRange { lo: f64, hi: f64 },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::NonFiniteEntry(_) => "NonFiniteEntry",
            Error::NonSquare(..) => "NonSquare",
            Error::AsymmetryExceedsTolerance { .. } => "AsymmetryExceedsTolerance",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ZeroRank => "ZeroRank",
            Error::NotPsd(_) => "NotPsd",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::AmbientMismatch(..) => "AmbientMismatch",
            Error::DimMismatch(..) => "DimMismatch",
            Error::FullSpace => "FullSpace",
            Error::ZeroSpread => "ZeroSpread",
            Error::SpectrumOutOfUnitInterval { .. } => "SpectrumOutOfUnitInterval",
            Error::TooSmall(_) => "TooSmall",
            Error::NoEdges => "NoEdges",
            Error::InvalidEdge(..) => "InvalidEdge",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::VertexCountMismatch(..) => "VertexCountMismatch",
            Error::EdgeCountMismatch(..) => "EdgeCountMismatch",
            Error::BadDims(_) => "BadDims",
            Error::BadRange { .. } => "BadRange",
            Error::UnknownTheorem(_) => "UnknownTheorem",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
