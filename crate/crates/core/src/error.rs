use thiserror::Error;

use crate::element_set::ElementSet;

/// Which matroid axiom an input violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Minimality,
    Elimination,
    Exchange,
    /// A circuit was empty or an index was out of range.
    Range,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Minimality => "minimality",
            Axiom::Elimination => "elimination",
            Axiom::Exchange => "exchange",
            Axiom::Range => "range",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("axiom violation ({axiom}): {detail}")]
    AxiomViolation { axiom: Axiom, detail: String },
    #[error("empty basis family")]
    EmptyFamily,
    #[error("ground set of {0} elements exceeds the supported maximum of {max}", max = crate::matroid::MAX_GROUND)]
    GroundSetTooLarge(usize),
    #[error("{0} is not a circuit-hyperplane")]
    NotCircuitHyperplane(ElementSet),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

impl MatroidError {
    pub(crate) fn axiom(axiom: Axiom, detail: impl Into<String>) -> Self {
        MatroidError::AxiomViolation {
            axiom,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("homomorphism is not well defined: relation {relation} does not map to zero")]
    IllDefined { relation: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TutteError {
    #[error("invalid bracket configuration: {0}")]
    InvalidConfiguration(String),
    #[error("verification failed: {first} ({total} failing instance(s))")]
    VerificationFailure {
        first: String,
        total: usize,
        /// `(relation family, failing instance count)` in first-seen order.
        by_family: Vec<(String, usize)>,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("unknown catalog matroid {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
