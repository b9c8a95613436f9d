use thiserror::Error;

use crate::geometry::{Point, ValidationReport};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("non-rectilinear edge in {ring} between vertices {from} and {to}")]
    NonRectilinear {
        ring: String,
        from: usize,
        to: usize,
    },

    #[error("coordinate overflow: |{0}| exceeds the supported range")]
    CoordinateOverflow(i64),

    #[error("invalid domain:\n{0}")]
    Invalid(ValidationReport),

    #[error("point {0} lies outside the domain")]
    OutsideDomain(Point),

    #[error("point {0} lies on a grid cut line")]
    OnCutLine(Point),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("domain too large: {0} rectangles (distance matrix holds at most 65534)")]
    TooLarge(usize),

    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
}
