use thiserror::Error;

use crate::backend::{Backend, ObjectRef};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch {
        expected: ObjectRef,
        found: ObjectRef,
    },

    #[error("backend mismatch: {left} vs {right}")]
    BackendMismatch { left: Backend, right: Backend },

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid tolerance {0}: must be finite and non-negative")]
    InvalidTolerance(f64),

    #[error("axiom `{axiom}`: {source}")]
    Axiom {
        axiom: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("point does not live on the algebra carrier: {0}")]
    AlgebraMismatch(String),

    #[error("`{0}` is not a projection")]
    NotAProjection(String),

    #[error("duplicate element `{0}` in projection family")]
    DuplicateElement(String),

    #[error("{0}")]
    LawViolation(String),

    #[error("groupoid violates {} law(s): {}", .0.len(), summarize(.0))]
    InvalidGroupoid(Vec<LawViolation>),

    #[error("projection order violates {} law(s): {}", .0.len(), summarize(.0))]
    InvalidPoset(Vec<LawViolation>),

    #[error("`{0}` is not a group (expected exactly one object)")]
    NotAGroup(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element-set mismatch: {0}")]
    ElementMismatch(String),
}

/// A named law together with the elements that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<String>,
}

impl LawViolation {
    pub fn new(law: &'static str, witness: impl IntoIterator<Item = impl Into<String>>) -> Self {
        LawViolation {
            law,
            witness: witness.into_iter().map(Into::into).collect(),
        }
    }
}

impl std::fmt::Display for LawViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.law, self.witness.join(", "))
    }
}

fn summarize(items: &[LawViolation]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub(crate) fn in_axiom(self, axiom: &'static str) -> Error {
        Error::Axiom {
            axiom,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
