//! The dagger symmetric monoidal interface shared by both concrete backends.
//!
//! Conventions used everywhere:
//! - `f.compose(&g)` is `f ∘ g`, i.e. first `g`, then `f`.
//! - Tensor products flatten index pairs row-major: `(i, j) ↦ i·dim(B) + j`.
//!   Associators and unitors are therefore identities on flattened indices and
//!   are never materialized; [`Morphism::retype`] re-tags a morphism instead.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod dynamic;
mod fhilb;
mod rel;

pub use dynamic::AnyMorphism;
pub use fhilb::{LinearMap, C64};
pub use rel::Relation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    FHilb,
    Rel,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::FHilb => "fhilb",
            Backend::Rel => "rel",
        })
    }
}

/// An object of one of the two categories: a Hilbert space `ℂ^size` or a
/// finite set with `size` elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectRef {
    backend: Backend,
    size: usize,
    labels: Option<Arc<[String]>>,
}

impl ObjectRef {
    pub fn fhilb(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidObject(
                "FHilb dimension must be at least 1".into(),
            ));
        }
        Ok(ObjectRef {
            backend: Backend::FHilb,
            size: dim,
            labels: None,
        })
    }

    pub fn rel(size: usize) -> Self {
        ObjectRef {
            backend: Backend::Rel,
            size,
            labels: None,
        }
    }

    pub fn rel_labeled(labels: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::InvalidObject(format!("duplicate label `{dup}`")));
        }
        Ok(ObjectRef {
            backend: Backend::Rel,
            size: labels.len(),
            labels: Some(labels.into()),
        })
    }

    pub fn new(backend: Backend, size: usize, labels: Option<Vec<String>>) -> Result<Self> {
        match (backend, labels) {
            (Backend::FHilb, Some(_)) => Err(Error::InvalidObject(
                "labels are only allowed on Rel objects".into(),
            )),
            (Backend::FHilb, None) => ObjectRef::fhilb(size),
            (Backend::Rel, None) => Ok(ObjectRef::rel(size)),
            (Backend::Rel, Some(labels)) => {
                if labels.len() != size {
                    return Err(Error::InvalidObject(format!(
                        "{} labels for a carrier of size {size}",
                        labels.len()
                    )));
                }
                ObjectRef::rel_labeled(labels)
            }
        }
    }

    /// The monoidal unit `I`.
    pub fn unit(backend: Backend) -> Self {
        ObjectRef {
            backend,
            size: 1,
            labels: None,
        }
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn without_labels(&self) -> ObjectRef {
        ObjectRef {
            labels: None,
            ..self.clone()
        }
    }

    /// Composability check. Labels are informational and ignored.
    pub fn matches(&self, other: &ObjectRef) -> bool {
        self.backend == other.backend && self.size == other.size
    }

    pub(crate) fn expect(&self, found: &ObjectRef) -> Result<()> {
        if self.backend != found.backend {
            return Err(Error::BackendMismatch {
                left: self.backend,
                right: found.backend,
            });
        }
        if self.size != found.size {
            return Err(Error::TypeMismatch {
                expected: self.clone(),
                found: found.clone(),
            });
        }
        Ok(())
    }

    /// `self ⊗ other`. Labels are not carried over.
    pub fn tensor(&self, other: &ObjectRef) -> ObjectRef {
        ObjectRef {
            backend: self.backend,
            size: self.size * other.size,
            labels: None,
        }
    }
}

impl fmt::Display for ObjectRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.backend, self.size)
    }
}

/// Numerical tolerance for FHilb comparisons; Rel comparisons are exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    epsilon: f64,
}

impl Tolerance {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(Error::InvalidTolerance(epsilon));
        }
        Ok(Tolerance { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

/// A morphism in a dagger symmetric monoidal category.
///
/// Values are immutable; every operation returns a fresh morphism.
pub trait Morphism: Clone + fmt::Debug + Send + Sync + Sized {
    const BACKEND: Backend;

    fn dom(&self) -> &ObjectRef;
    fn cod(&self) -> &ObjectRef;

    /// Builds an object of this backend with the given size.
    fn object(size: usize) -> Result<ObjectRef>;

    fn unit_object() -> ObjectRef {
        ObjectRef::unit(Self::BACKEND)
    }

    fn identity(obj: &ObjectRef) -> Self;

    /// The zero morphism (zero matrix / empty relation).
    fn zero(dom: &ObjectRef, cod: &ObjectRef) -> Self;

    /// `self ∘ g`.
    fn compose(&self, g: &Self) -> Result<Self>;

    fn tensor(&self, g: &Self) -> Self;

    fn dagger(&self) -> Self;

    /// The symmetry `σ: A⊗B → B⊗A`.
    fn swap(a: &ObjectRef, b: &ObjectRef) -> Self;

    /// Max absolute entry difference (FHilb) or number of differing pairs (Rel).
    fn residual(&self, other: &Self) -> Result<f64>;

    fn equal(&self, other: &Self, tol: Tolerance) -> Result<bool>;

    /// Re-tags the domain and codomain with objects of the same sizes.
    fn retype(&self, dom: &ObjectRef, cod: &ObjectRef) -> Result<Self>;

    fn check_same_type(&self, other: &Self) -> Result<()> {
        self.dom().expect(other.dom())?;
        self.cod().expect(other.cod())
    }
}
