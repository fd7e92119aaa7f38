use thiserror::Error;

use crate::report::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table, map or index is out of range or has the wrong shape.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("not a Hilbert algebra: {0}")]
    NotHilbert(Violation),

    #[error("fails the {class} axioms: {violation}")]
    AxiomFailure { class: String, violation: Violation },

    #[error("operator is not frontal: {0}")]
    NotFrontal(Violation),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("{what}: search space {size} exceeds the configured limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("subset {0:?} is not an implicative filter")]
    NotAFilter(Vec<usize>),

    #[error("subset {0:?} is not an order-ideal")]
    NotAnOrderIdeal(Vec<usize>),

    #[error("subset {0:?} is not an upset")]
    NotAnUpset(Vec<usize>),

    #[error("filter and ideal intersect at {0:?}")]
    NotDisjoint(Vec<usize>),

    #[error("algebra has no declared bottom element")]
    NotBounded,

    #[error("missing structure: {0}")]
    MissingStructure(String),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("operator fails its classification: {0}")]
    Classification(String),

    /// A computed object contradicts a theorem the construction relies on.
    #[error("internal soundness failure: {0}")]
    Soundness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
