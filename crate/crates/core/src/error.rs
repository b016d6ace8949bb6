//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("operation undefined on the zero form")]
    ZeroForm,

    #[error("gcd of two zero forms is undefined")]
    BothZero,

    #[error("empty coefficient vector")]
    EmptyCoefficients,

    #[error("invalid projective point: all coordinates are zero")]
    ZeroPoint,

    #[error("cannot parse rational number {0:?}")]
    BadRational(String),

    #[error("denominator is zero in {0:?}")]
    ZeroDenominator(String),

    #[error("exponents {exps:?} do not sum to the stated degree {degree}")]
    BadExponents { exps: Vec<usize>, degree: usize },

    #[error("degenerate model: discriminant is identically zero")]
    DegenerateModel,

    #[error("non-minimal model: orders (ord A, ord B) = ({ord_a}, {ord_b}) on stratum {stratum}")]
    NonMinimal {
        stratum: String,
        ord_a: String,
        ord_b: String,
    },

    #[error("vanishing orders (A, B, Δ) = ({ord_a}, {ord_b}, {ord_delta}) match no Kodaira class")]
    InconsistentOrders {
        ord_a: String,
        ord_b: String,
        ord_delta: u32,
    },

    #[error("unsupported fiber configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("branch value ({0} : 1) lies on a singular fiber of the rational surface")]
    BranchOnSingularFiber(String),

    #[error("parameter p2 must be nonzero")]
    ZeroP2,

    #[error("invariants (r, a) = ({r}, {a}) violate parity: r - a must be even")]
    ParityViolation { r: i64, a: i64 },

    #[error("inadmissible invariants: {0}")]
    InadmissibleInvariants(String),

    #[error("Hodge number {name} = {value} is not an integer")]
    NonIntegralHodge { name: &'static str, value: String },

    #[error("linear system datum out of range: need -1 <= h <= g, got g = {g}, h = {h}")]
    BadLinearSystemDatum { g: i64, h: i64 },

    #[error("point {0} does not lie on the sextic")]
    NodeNotOnCurve(String),

    #[error("point {0} is a smooth point of the sextic, not a singular point")]
    NodeNotSingular(String),

    #[error("point {0} is a degenerate singularity (Hessian rank < 2), not an ordinary node")]
    NodeNotOrdinary(String),

    #[error("duplicate node {0}")]
    DuplicateNode(String),

    #[error("auxiliary form has wrong degree: expected {expected}, got {got}")]
    AuxiliaryDegree { expected: usize, got: usize },

    #[error("linear solve: expected {expected} weights for the solution space, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that signal a bug in the library rather than bad
    /// input. The CLI maps these to a distinct exit code.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InconsistentOrders { .. } | Error::InvariantViolation(_)
        )
    }
}
