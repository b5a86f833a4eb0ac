use thiserror::Error;

use crate::poly::Ring;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mismatch: expected {expected:?}, found {found:?}")]
    RingMismatch { expected: Ring, found: Ring },

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("nilpotency cap {cap} exceeded")]
    CapExceeded { cap: u32 },

    #[error("not a monomial unit: {0}")]
    NotAMonomialUnit(String),

    #[error("invertible symbol {0} assigned zero")]
    ZeroDenominator(&'static str),

    #[error("no value assigned to symbol {0}")]
    MissingAssignment(&'static str),

    #[error("scaling map needs an invertible parameter")]
    NonInvertibleScale,

    #[error("claimed type {claimed:?} contradicts the matrix: {reason}")]
    TypeMismatch { claimed: [u8; 3], reason: String },

    #[error("cannot decide whether pivot {0} is nonzero")]
    UndecidableNonzero(String),

    #[error("case constraint violated: {0}")]
    CaseConstraintViolated(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("term budget {budget} exceeded ({needed} terms)")]
    BudgetExceeded { budget: usize, needed: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
