//! Crate-wide error type.
//!
//! Variants are grouped by the stage that raises them; `ErrorClass`
//! drives the CLI exit-code scheme (input errors vs. resource caps vs.
//! detected invariant violations).

use std::fmt;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // scalar arithmetic
    DivisionByZero,
    TowerMismatch,
    TowerDepthExceeded { cap: usize },
    NotIrreducible { poly: String },
    /// An inversion discovered a zero divisor behind an assumed-irreducible
    /// extension; the recorded assumption was wrong.
    TowerNotAField { level: usize },

    // polynomials
    NotDivisible,
    VariableMismatch { expected: String, got: String },
    NotHomogeneous,
    LineInsideHypersurface,
    ProbeExhausted { tries: u32 },
    DegenerateAnchors,

    // branch expansion
    PointNotOnCurve,
    NonSquarefreeAtPoint,
    TruncationCapExceeded { cap: usize },
    ComponentUnknown,
    TruncationTooShort { needed: usize, have: usize },

    // intersection machinery
    CommonComponent,
    NonRationalPoint,
    InfiniteIntersection,
    FamilyDegenerate,
    NotAFamily { detail: String },

    // characters and systems
    DegenerateBranch,
    HyperplaneContainsBranch,
    ProjectionCollapsesBranch,
    SystemVanishesOnBranch,
    MemberContainsCurve,
    DependentBasis,
    LedgerExceedsFixedContribution { point: String },
    OrderTooSmall,
    DirectionDegenerate,
    FiltrationLevelOutOfRange { level: usize, max: usize },

    // reports
    InvariantViolation { detail: String },

    // input handling
    Parse { detail: String },
    Input { detail: String },
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Detected violation of a checked identity (exit 1).
    Invariant,
    /// Bad input or a domain precondition failure (exit 2).
    Input,
    /// A configured resource cap was hit (exit 3).
    Cap,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            TowerDepthExceeded { .. }
            | ProbeExhausted { .. }
            | TruncationCapExceeded { .. }
            | DirectionDegenerate => ErrorClass::Cap,
            InvariantViolation { .. } | TowerNotAField { .. } => ErrorClass::Invariant,
            _ => ErrorClass::Input,
        }
    }

    pub fn invariant(detail: impl Into<String>) -> Self {
        Error::InvariantViolation { detail: detail.into() }
    }

    pub fn parse(detail: impl Into<String>) -> Self {
        Error::Parse { detail: detail.into() }
    }

    pub fn input(detail: impl Into<String>) -> Self {
        Error::Input { detail: detail.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            DivisionByZero => write!(f, "division by zero"),
            TowerMismatch => write!(f, "operands belong to incompatible extension towers"),
            TowerDepthExceeded { cap } => write!(f, "extension tower depth cap ({cap}) exceeded"),
            NotIrreducible { poly } => write!(f, "polynomial is reducible: {poly}"),
            TowerNotAField { level } => {
                write!(f, "zero divisor at tower level {level}: an assumed-irreducible minimal polynomial is reducible")
            }
            NotDivisible => write!(f, "exact division failed"),
            VariableMismatch { expected, got } => {
                write!(f, "variable mismatch: expected [{expected}], got [{got}]")
            }
            NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            LineInsideHypersurface => write!(f, "line lies inside the hypersurface"),
            ProbeExhausted { tries } => write!(f, "no probe line succeeded in {tries} tries"),
            DegenerateAnchors => write!(f, "anchor points are projectively equal"),
            PointNotOnCurve => write!(f, "point does not lie on the curve"),
            NonSquarefreeAtPoint => write!(f, "curve has a repeated component through the point"),
            TruncationCapExceeded { cap } => write!(f, "series truncation cap ({cap}) exceeded"),
            ComponentUnknown => {
                write!(f, "cannot decide vanishing: component through the branch is unknown")
            }
            TruncationTooShort { needed, have } => {
                write!(f, "series truncation too short: need {needed}, have {have}")
            }
            CommonComponent => write!(f, "curves share a component through the point"),
            NonRationalPoint => write!(f, "oracle requires a rational point"),
            InfiniteIntersection => write!(f, "curves share a component; intersection is infinite"),
            FamilyDegenerate => write!(f, "family contains the curve identically"),
            NotAFamily { detail } => write!(f, "not a one-parameter family: {detail}"),
            DegenerateBranch => write!(f, "branch lies in a hyperplane below the truncation cap"),
            HyperplaneContainsBranch => {
                write!(f, "hyperplane contact order exceeds the truncation cap")
            }
            ProjectionCollapsesBranch => write!(f, "projection collapses the branch to a point"),
            SystemVanishesOnBranch => write!(f, "a system member vanishes identically on the branch"),
            MemberContainsCurve => write!(f, "a system member contains the curve"),
            DependentBasis => write!(f, "basis forms are linearly dependent"),
            LedgerExceedsFixedContribution { point } => {
                write!(f, "ledger removes more than the fixed contribution at {point}")
            }
            OrderTooSmall => write!(f, "curve order must be at least 2"),
            DirectionDegenerate => write!(f, "perturbation direction degenerate after retries"),
            FiltrationLevelOutOfRange { level, max } => {
                write!(f, "filtration level {level} out of range (max {max})")
            }
            InvariantViolation { detail } => write!(f, "invariant violation: {detail}"),
            Parse { detail } => write!(f, "parse error: {detail}"),
            Input { detail } => write!(f, "input error: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
