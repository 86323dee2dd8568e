use super::{Backend, LinearMap, Morphism, ObjectRef, Relation, Tolerance};
use crate::error::{Error, Result};

/// A morphism whose backend is only known at runtime, e.g. one read from a
/// document. Mixing backends is an error rather than a type error.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMorphism {
    FHilb(LinearMap),
    Rel(Relation),
}

impl From<LinearMap> for AnyMorphism {
    fn from(m: LinearMap) -> Self {
        AnyMorphism::FHilb(m)
    }
}

impl From<Relation> for AnyMorphism {
    fn from(r: Relation) -> Self {
        AnyMorphism::Rel(r)
    }
}

impl AnyMorphism {
    pub fn backend(&self) -> Backend {
        match self {
            AnyMorphism::FHilb(_) => Backend::FHilb,
            AnyMorphism::Rel(_) => Backend::Rel,
        }
    }

    pub fn dom(&self) -> &ObjectRef {
        match self {
            AnyMorphism::FHilb(m) => m.dom(),
            AnyMorphism::Rel(r) => r.dom(),
        }
    }

    pub fn cod(&self) -> &ObjectRef {
        match self {
            AnyMorphism::FHilb(m) => m.cod(),
            AnyMorphism::Rel(r) => r.cod(),
        }
    }

    fn mismatch(&self, other: &AnyMorphism) -> Error {
        Error::BackendMismatch {
            left: self.backend(),
            right: other.backend(),
        }
    }

    pub fn compose(&self, g: &AnyMorphism) -> Result<AnyMorphism> {
        match (self, g) {
            (AnyMorphism::FHilb(f), AnyMorphism::FHilb(g)) => Ok(f.compose(g)?.into()),
            (AnyMorphism::Rel(f), AnyMorphism::Rel(g)) => Ok(f.compose(g)?.into()),
            _ => Err(self.mismatch(g)),
        }
    }

    pub fn tensor(&self, g: &AnyMorphism) -> Result<AnyMorphism> {
        match (self, g) {
            (AnyMorphism::FHilb(f), AnyMorphism::FHilb(g)) => Ok(f.tensor(g).into()),
            (AnyMorphism::Rel(f), AnyMorphism::Rel(g)) => Ok(f.tensor(g).into()),
            _ => Err(self.mismatch(g)),
        }
    }

    pub fn dagger(&self) -> AnyMorphism {
        match self {
            AnyMorphism::FHilb(f) => f.dagger().into(),
            AnyMorphism::Rel(f) => f.dagger().into(),
        }
    }

    pub fn equal(&self, g: &AnyMorphism, tol: Tolerance) -> Result<bool> {
        match (self, g) {
            (AnyMorphism::FHilb(f), AnyMorphism::FHilb(g)) => f.equal(g, tol),
            (AnyMorphism::Rel(f), AnyMorphism::Rel(g)) => f.equal(g, tol),
            _ => Err(self.mismatch(g)),
        }
    }

    pub fn identity(obj: &ObjectRef) -> AnyMorphism {
        match obj.backend() {
            Backend::FHilb => LinearMap::identity(obj).into(),
            Backend::Rel => Relation::identity(obj).into(),
        }
    }

    pub fn swap(a: &ObjectRef, b: &ObjectRef) -> Result<AnyMorphism> {
        match (a.backend(), b.backend()) {
            (Backend::FHilb, Backend::FHilb) => Ok(LinearMap::swap(a, b).into()),
            (Backend::Rel, Backend::Rel) => Ok(Relation::swap(a, b).into()),
            (l, r) => Err(Error::BackendMismatch { left: l, right: r }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_backends_is_rejected() {
        let f: AnyMorphism = LinearMap::identity(&ObjectRef::fhilb(1).unwrap()).into();
        let g: AnyMorphism = Relation::identity(&ObjectRef::rel(1)).into();
        assert!(matches!(f.compose(&g), Err(Error::BackendMismatch { .. })));
        assert!(matches!(f.tensor(&g), Err(Error::BackendMismatch { .. })));
        assert!(matches!(
            f.equal(&g, Tolerance::default()),
            Err(Error::BackendMismatch { .. })
        ));
        assert!(AnyMorphism::swap(f.dom(), g.dom()).is_err());
    }

    #[test]
    fn dispatches_per_backend() {
        let id = AnyMorphism::identity(&ObjectRef::rel(2));
        assert_eq!(id.compose(&id).unwrap(), id);
        assert_eq!(id.dagger(), id);
        let s = AnyMorphism::swap(&ObjectRef::fhilb(2).unwrap(), &ObjectRef::fhilb(2).unwrap())
            .unwrap();
        assert!(s
            .compose(&s)
            .unwrap()
            .equal(&AnyMorphism::identity(s.dom()), Tolerance::default())
            .unwrap());
    }
}
