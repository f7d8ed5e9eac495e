use alloc::boxed::Box;
use alloc::string::String;

use crate::hypothesis::HypothesisReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("hypotheses of {} violated: {}", .0.formula, .0.violated_labels())]
    HypothesisViolated(Box<HypothesisReport>),
    /// The truncated series did not assemble into a Drazin inverse.
    #[error("{formula}: assembled series fails the Drazin axioms")]
    SeriesNotValidated { formula: &'static str },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(&'static str),
    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),
    #[error("{formula} is not applicable to this kind of input")]
    WrongInputKind { formula: &'static str },
    #[error("no instance for case {case} after {attempts} attempts")]
    GenerationExhausted { case: &'static str, attempts: u32 },
}
