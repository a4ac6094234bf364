use thiserror::Error;

/// Errors surfaced by kernel operations.
///
/// Structural misuse (mixing ambient dimensions or degrees inside library
/// code) panics instead; these variants cover conditions that legitimate
/// inputs can trigger.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    #[error("coefficient of {0} is not a polynomial")]
    NonPolynomialCoefficient(String),

    #[error("form is not closed")]
    NotClosed,

    #[error("homotopy operator is defined on forms of degree >= 1")]
    HomotopyDegree,

    #[error("cannot contract a {vector}-vector with a {form}-form")]
    ContractionDegree { vector: usize, form: usize },

    #[error("witness degrees add up to {found}, target form has degree {expected}")]
    DegreeBookkeeping { expected: usize, found: usize },

    #[error("witness degrees must be weakly decreasing")]
    WitnessOrder,

    #[error("operation requires ambient dimension 3, got {0}")]
    AmbientNotThree(usize),

    #[error("flow is not divergence-free: div = {0}")]
    NotDivergenceFree(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
