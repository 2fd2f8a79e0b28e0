use thiserror::Error;

use crate::ring::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring axiom `{kind}` fails at {witness:?}")]
    AxiomViolation { kind: String, witness: Vec<Elem> },

    #[error("order {order} exceeds the validation cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("ring order would exceed the order cap {cap}")]
    OrderOverflow { cap: usize },

    #[error("subset is not a two-sided ideal: violated at {pair:?}")]
    NotAnIdeal { pair: (Elem, Elem) },

    #[error("element {0} is not idempotent")]
    NotIdempotent(Elem),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("implication `{premise}` => `{conclusion}` fails on {ring}")]
    ImplicationViolation {
        premise: String,
        conclusion: String,
        ring: String,
    },

    #[error("6·1 is not zero in {ring}")]
    CharacteristicError { ring: String },

    #[error("{ring} is not SDT")]
    PreconditionNotSdt { ring: String },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("workhorse hypothesis fails at entry ({row}, {col})")]
    HypothesisViolation { row: usize, col: usize },

    #[error("2 is not a unit of the base ring")]
    TwoNotUnit,

    #[error("diagonal entries {i} and {j} differ but l_a - r_b is not surjective")]
    CompatibilityViolation { i: usize, j: usize },

    #[error("no solution for entry ({row}, {col}) of the lifted tripotent")]
    LiftFailed { row: usize, col: usize },
}
