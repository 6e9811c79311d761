use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The state's norm is further than the normalization gate from one.
    NotNormalized { norm: f64 },
    /// `max |h[j,k] - conj(h[k,j])|` exceeded the Hermiticity tolerance.
    NotHermitian { deviation: f64 },
    ShapeError { expected: usize, found: usize },
    NonFinite,
    /// Not a probability vector: negative entry or a sum away from one.
    InvalidSimplex { sum: f64 },
    /// The three-level fast path needs strictly ordered, strictly positive triples.
    FastPathInapplicable,
    /// Overlap at an endpoint: |psi> is orthogonal to, or identical with, |0>.
    DegenerateOverlap { alpha: f64 },
    AlphaOutOfRange { alpha: f64 },
    /// The cloner was handed a state with no blank qubit to consume.
    MachineInputMissing,
    /// The deleter was handed a branch whose last two symbols differ.
    MachineDomainViolation { term: usize },
    RangeError(&'static str),
    /// The verdict scan did not find exactly one change.
    NonMonotoneBoundary { changes: usize },
    /// The closed-form and numerically expanded verdicts disagree.
    InternalInconsistency { alpha: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotNormalized { norm } => write!(f, "state not normalized (norm {norm})"),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix not Hermitian (max deviation {deviation:e})")
            }
            Error::ShapeError { expected, found } => {
                write!(f, "shape mismatch: expected {expected}, found {found}")
            }
            Error::NonFinite => f.write_str("non-finite value in input"),
            Error::InvalidSimplex { sum } => {
                write!(f, "not a probability vector (sum {sum}, or a negative entry)")
            }
            Error::FastPathInapplicable => {
                f.write_str("three-level fast path needs strictly decreasing positive triples")
            }
            Error::DegenerateOverlap { alpha } => {
                write!(f, "degenerate overlap alpha = {alpha}; need 0 < alpha < 1")
            }
            Error::AlphaOutOfRange { alpha } => write!(f, "alpha = {alpha} outside [0, 1]"),
            Error::MachineInputMissing => f.write_str("cloner input has no blank qubit"),
            Error::MachineDomainViolation { term } => {
                write!(f, "deleter input term {term} does not end in a doubled symbol")
            }
            Error::RangeError(msg) => write!(f, "bad range: {msg}"),
            Error::NonMonotoneBoundary { changes } => {
                write!(f, "expected exactly one verdict change on the scan, found {changes}")
            }
            Error::InternalInconsistency { alpha } => write!(
                f,
                "closed-form and numeric verdicts disagree at alpha = {alpha}"
            ),
        }
    }
}

impl core::error::Error for Error {}
