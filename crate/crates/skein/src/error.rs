//! Error types shared across the toolkit.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes after substitution")]
    VanishingDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not trivalent (at {1})")]
    NotTrivalent(u32, String),
    #[error("non-loop edges contain a cycle: not a lollipop tree (at {0})")]
    NotLollipopTree(String),
    #[error("missing or invalid ribbon order (at {0})")]
    MissingRibbonOrder(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("graph input error: {0} (at {1})")]
    Input(String, String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("inadmissible vertex triple ({0}, {1}, {2})")]
    InadmissibleVertex(i64, i64, i64),
    #[error("inadmissible arc: {0}")]
    InadmissibleArc(String),
    #[error("oracle budget exceeded: total color {0} > cap {1}")]
    OracleBudget(i64, i64),
    #[error("boundary fallback failed at coloring {0:?}")]
    BoundaryFallbackFailed(Vec<i64>),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ShiftError {
    #[error("composition hypothesis violated: {0}")]
    HypothesisViolated(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StrataError {
    #[error("subspace is not simple: {0}")]
    NotSimple(String),
    #[error("independence check failed: {0}")]
    IndependenceCheckFailed(String),
    #[error("basis check failed: {0}")]
    BasisCheckFailed(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("budget exceeded at n = {n}; working dimension {dim}")]
    BudgetExceeded { n: u32, dim: usize },
    #[error(transparent)]
    Op(#[from] OpError),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("all dominant coefficients vanish identically: degenerate expansion")]
    DegenerateExpansion,
    #[error("coefficient is identically zero on the sublattice")]
    IdenticallyZeroOnV,
    #[error("region has empty interior")]
    EmptyInterior,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DriverError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("certificate verification failed at step {step}: {reason}")]
    VerifyFailed { step: String, reason: String },
    #[error("unsupported manifold: {0}")]
    Unsupported(String),
}
