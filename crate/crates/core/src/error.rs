use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by the command line to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or arguments.
    Usage,
    /// The input is well formed but outside the mathematical domain of the operation.
    Domain,
    /// A floating point iteration failed to converge.
    Numeric,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("column {} is zero", .0 + 1)]
    ZeroColumn(usize),
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("matrix is basic (its columns span exactly d distinct lines); the entropic discriminant is not a hypersurface")]
    BasicMatrix,
    #[error("column {} is an isthmus", .0 + 1)]
    IsthmusElement(usize),
    #[error("column set {:?} (1-based) is not a flat", crate::reciprocal::one_based(.0))]
    NotAFlat(Vec<usize>),
    #[error("point is not on the reciprocal plane stratum of its support")]
    NotOnStratum,
    #[error("linear form {} vanishes at the evaluation point", .0 + 1)]
    OnArrangement(usize),

    #[error("columns {} and {} are parallel", .0 + 1, .1 + 1)]
    ParallelColumns(usize, usize),
    #[error("leading coefficient vanishes identically")]
    DegreeDrop,
    #[error("no closed form for n = {0}")]
    UnsupportedN(usize),
    #[error("kernel vector has a zero in coordinate {}; contract that column and work with the smaller matrix", .0 + 1)]
    KernelZeroCoordinate(usize),
    #[error("matrix is not d x (d+1) of full rank")]
    NotCorankOne,
    #[error("matrix fits neither exact regime (d = 2 or n = d + 1)")]
    NoExactRegime,
    #[error("right hand side lies on the entropic discriminant")]
    OnDiscriminant,

    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,

    #[error("right hand side is degenerate; vanishing coordinate sets (1-based) {:?}", subsets.iter().map(|s| crate::reciprocal::one_based(s)).collect::<Vec<_>>())]
    DegenerateRhs { subsets: Vec<Vec<usize>> },
    #[error("problem size {needed} exceeds the budget of {budget}")]
    TooLarge { needed: u64, budget: u64 },
    #[error("Newton iteration did not converge in chamber {chamber}")]
    NewtonDivergence { chamber: String },

    #[error("edge {} is a self-loop", .0 + 1)]
    SelfLoop(usize),
    #[error("edge {} duplicates an earlier edge", .0 + 1)]
    DuplicateEdge(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::DimensionMismatch(_) => ErrorKind::Usage,
            Error::NewtonDivergence { .. } => ErrorKind::Numeric,
            _ => ErrorKind::Domain,
        }
    }
}
