use thiserror::Error;

use crate::structure::SystemClass;

/// Coarse classification used by the command-line front end for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input data is structurally invalid.
    Malformed,
    /// The input is well formed but violates a precondition of the request.
    Precondition,
    /// Two independently computed sides of an equivalence disagree.
    Inconsistency,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truth table has {actual} entries, expected 2^{n} = {expected}")]
    TableLength {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("table is not monotone: state {lower:#b} maps to 1 but its superset {upper:#b} maps to 0")]
    NotMonotone { lower: usize, upper: usize },
    #[error("path list is empty")]
    NoPaths,
    #[error("path {index} is empty")]
    EmptyPath { index: usize },
    #[error("component {component} is outside 1..={n}")]
    ComponentOutOfRange { component: usize, n: usize },
    #[error("state vector has length {actual}, expected {expected}")]
    StateLength { expected: usize, actual: usize },
    #[error("{n} components is below the minimum of {min}")]
    TooFewComponents { n: usize, min: usize },
    #[error("{n} components exceeds the supported maximum of {max}")]
    TooManyComponents { n: usize, max: usize },
    #[error("order {k} is outside 1..={n}")]
    OrderOutOfRange { k: usize, n: usize },
    #[error("level {k} is outside 0..={n}")]
    LevelOutOfRange { k: usize, n: usize },
    #[error("{class:?} systems require at least {min} components, got {n}")]
    ClassArity {
        class: SystemClass,
        n: usize,
        min: usize,
    },
    #[error("exhaustive enumeration is limited to n <= {max}, got {n}")]
    EnumerationBound { n: usize, max: usize },
    #[error("functions have differing component counts ({first} and {other})")]
    MixedArity { first: usize, other: usize },
    #[error("structure function is not semicoherent (needs phi(0)=0 and phi(1)=1)")]
    NotSemicoherent,
    #[error("distribution has no atoms")]
    EmptyDistribution,
    #[error("atom {atom} has {actual} lifetimes, expected {expected}")]
    AtomArity {
        atom: usize,
        expected: usize,
        actual: usize,
    },
    #[error("atom {atom} has a non-positive lifetime for component {component}")]
    NonPositiveLifetime { atom: usize, component: usize },
    #[error("atom {atom} has probability outside (0, 1]")]
    ProbabilityOutOfRange { atom: usize },
    #[error("probabilities sum to 1 minus {deficit}")]
    ProbabilitySum { deficit: String },
    #[error("distribution has ties (some atom has two equal lifetimes)")]
    Ties,
    #[error("time must be strictly positive")]
    NonPositiveTime,
    #[error("weight function is over {actual} components, expected {expected}")]
    WeightArity { expected: usize, actual: usize },
    #[error("quality function violates {detail}")]
    InvalidQuality { detail: String },
    #[error("{0}")]
    Parse(String),
    #[error("{theorem}: independently evaluated sides disagree ({detail})")]
    Inconsistency {
        theorem: &'static str,
        detail: String,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::TableLength { .. }
            | Error::NotMonotone { .. }
            | Error::NoPaths
            | Error::EmptyPath { .. }
            | Error::ComponentOutOfRange { .. }
            | Error::EmptyDistribution
            | Error::AtomArity { .. }
            | Error::NonPositiveLifetime { .. }
            | Error::ProbabilityOutOfRange { .. }
            | Error::ProbabilitySum { .. }
            | Error::InvalidQuality { .. }
            | Error::Parse(_) => ErrorKind::Malformed,
            Error::Inconsistency { .. } => ErrorKind::Inconsistency,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
