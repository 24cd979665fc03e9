use thiserror::Error;

use crate::rootdatum::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not divisible")]
    NotDivisible,

    #[error("coordinate index {index} out of range for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },

    #[error("invalid root datum: {}", join_violations(.0))]
    InvalidDatum(Vec<Violation>),

    #[error("coweight {0} is not dominant")]
    NotDominant(String),

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("(ω) violated: value at δ is {got}, expected q = {expected}")]
    OmegaViolated { got: String, expected: String },

    #[error("parameter value at basis index {0} is zero")]
    ZeroValue(usize),

    #[error("residue cardinality q = {0} must exceed 1")]
    BadResidueCardinality(String),

    #[error("{0} is not a square root of q")]
    NotSquareRoot(String),

    #[error("weight multiset is not stable under the Weyl group")]
    NotWeylStable,

    #[error("pole of the local factor at {place}")]
    Pole { place: String },

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
