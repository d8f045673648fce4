//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Inputs that must be a unit orthonormal pair are not, beyond tolerance.
    #[error("vectors are not orthonormal: {0}")]
    NotOrthonormal(String),

    /// Two great circles whose planes meet in more than the origin.
    #[error("great circles are not transverse (|det| = {det:.3e})")]
    NotTransverse { det: f64 },

    /// Round circles that intersect or fail to link ±1 pairwise.
    #[error("round circles do not pairwise link once: {0}")]
    BadLinking(String),

    /// Projected circles meeting at fewer than two transverse points.
    #[error("projected circles are tangent or nearly tangent")]
    TangentCircles,

    /// A triple whose third plane is not a graph over the standard factor.
    #[error("degenerate triple: third plane is not a graph (block det {det:.3e})")]
    DegenerateTriple { det: f64 },

    /// Links with more components than the classification covers.
    #[error("classification supports 1..=5 components, got {0}")]
    UnsupportedSize(usize),

    /// No choice of triple produced a decidable projected configuration.
    #[error("indeterminate configuration: {0}")]
    IndeterminateConfiguration(String),

    /// Invalid D_{p/q} parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Parameter outside the range a construction is defined for.
    #[error("parameter out of range: {0}")]
    RangeError(String),

    /// A wedge-census premise failed; signals an implementation bug.
    #[error("wedge census premise failed: {0}")]
    PremiseFailure(String),

    /// Filling slope with odd numerator cannot lift to the dihedral cover.
    #[error("slope numerator is odd; only even-numerator fillings lift")]
    OddNumerator,

    /// Invalid fraction or slope.
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),

    /// Malformed input data (JSON, flags, etc).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
