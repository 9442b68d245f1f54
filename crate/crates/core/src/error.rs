use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("MALFORMED_PD: {0}")]
    MalformedPd(String),
    #[error("BAD_ARC_MULTIPLICITY: {0}")]
    BadArcMultiplicity(String),
    #[error("NONPLANAR_SUSPECT: {0}")]
    NonplanarSuspect(String),
    #[error("STATE_LENGTH_MISMATCH: expected {expected}, got {got}")]
    StateLengthMismatch { expected: usize, got: usize },
    #[error("ARC_NOT_FOUND: label {0}")]
    ArcNotFound(i64),
    #[error("MALFORMED_POLY: {0}")]
    MalformedPoly(String),
    #[error("INADMISSIBLE_TRIPLE: ({0}, {1}, {2})")]
    InadmissibleTriple(i64, i64, i64),
    #[error("INEXACT_DIVISION: {0}")]
    InexactDivision(String),
    #[error("STRAND_MISMATCH: {0} vs {1} strands")]
    StrandMismatch(usize, usize),
    #[error("TOO_MANY_CROSSINGS: {0} crossings exceed the state-sum cap of {1}")]
    TooManyCrossings(usize, usize),
    #[error("WIDTH_EXCEEDED: sweep width {width} allows up to {states} matchings, budget is {budget}")]
    WidthExceeded { width: usize, states: u64, budget: u64 },
    #[error("SLICING_FAILED: {0}")]
    SlicingFailed(String),
    #[error("MALFORMED_PROGRAM: {0}")]
    MalformedProgram(String),
    #[error("NOT_A_TWIST_REGION: {0}")]
    NotATwistRegion(String),
    #[error("ZERO_TWIST: twist count must be nonzero")]
    ZeroTwist,
    #[error("NOT_A_KNOT: diagram has {0} components")]
    NotAKnot(usize),
    #[error("NOT_ADEQUATE: {0}")]
    NotAdequate(String),
    #[error("HYPOTHESES_VIOLATED: {0}")]
    HypothesesViolated(String),
    #[error("FIT_INCONSISTENT: {0}")]
    FitInconsistent(String),
    #[error("INCONSISTENT_INPUT: {0}")]
    InconsistentInput(String),
    #[error("INVALID_ARGUMENT: {0}")]
    InvalidArgument(String),
    #[error("FIXTURE_ERROR: {0}")]
    Fixture(String),
    #[error("IO_ERROR: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code, also used as the JSON `error` field.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedPd(..) => "MALFORMED_PD",
            Error::BadArcMultiplicity(..) => "BAD_ARC_MULTIPLICITY",
            Error::NonplanarSuspect(..) => "NONPLANAR_SUSPECT",
            Error::StateLengthMismatch { .. } => "STATE_LENGTH_MISMATCH",
            Error::ArcNotFound(..) => "ARC_NOT_FOUND",
            Error::MalformedPoly(..) => "MALFORMED_POLY",
            Error::InadmissibleTriple(..) => "INADMISSIBLE_TRIPLE",
            Error::InexactDivision(..) => "INEXACT_DIVISION",
            Error::StrandMismatch(..) => "STRAND_MISMATCH",
            Error::TooManyCrossings(..) => "TOO_MANY_CROSSINGS",
            Error::WidthExceeded { .. } => "WIDTH_EXCEEDED",
            Error::SlicingFailed(..) => "SLICING_FAILED",
            Error::MalformedProgram(..) => "MALFORMED_PROGRAM",
            Error::NotATwistRegion(..) => "NOT_A_TWIST_REGION",
            Error::ZeroTwist => "ZERO_TWIST",
            Error::NotAKnot(..) => "NOT_A_KNOT",
            Error::NotAdequate(..) => "NOT_ADEQUATE",
            Error::HypothesesViolated(..) => "HYPOTHESES_VIOLATED",
            Error::FitInconsistent(..) => "FIT_INCONSISTENT",
            Error::InconsistentInput(..) => "INCONSISTENT_INPUT",
            Error::InvalidArgument(..) => "INVALID_ARGUMENT",
            Error::Fixture(..) => "FIXTURE_ERROR",
            Error::Io(..) => "IO_ERROR",
        }
    }

    /// Exit code class for the command line: 3 for resource budgets, 2 otherwise.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::WidthExceeded { .. } | Error::TooManyCrossings(..))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
