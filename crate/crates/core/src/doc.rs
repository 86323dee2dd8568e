//! Serializable documents for morphisms, algebras and matrix elements.
//!
//! ```json
//! {"backend": "fhilb", "dom": {"size": 1}, "cod": {"size": 2},
//!  "payload": [[[1.0, 0.0]], [[0.0, -1.0]]]}
//! {"backend": "rel", "dom": {"size": 2, "labels": ["a", "b"]}, "cod": {"size": 1},
//!  "payload": [[0, 0], [1, 0]]}
//! ```
//!
//! FHilb payloads are `cod × dom` grids of `[re, im]`; Rel payloads list the
//! related `[i, j]` index pairs.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::backend::{AnyMorphism, Backend, LinearMap, Morphism, ObjectRef, Relation, C64};
use crate::cstar::MatrixElement;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ObjectDoc {
    fn from_object(obj: &ObjectRef) -> Self {
        ObjectDoc {
            size: obj.size(),
            labels: obj.labels().map(<[String]>::to_vec),
        }
    }

    fn to_object(&self, backend: Backend) -> Result<ObjectRef> {
        ObjectRef::new(backend, self.size, self.labels.clone())
    }
}

pub type ComplexGrid = Vec<Vec<[f64; 2]>>;

fn grid_from(m: &DMatrix<C64>) -> ComplexGrid {
    m.row_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn matrix_from(rows: usize, cols: usize, grid: &ComplexGrid) -> Result<DMatrix<C64>> {
    if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidMorphism(format!(
            "payload is not a {rows}x{cols} grid"
        )));
    }
    Ok(DMatrix::from_fn(rows, cols, |r, c| {
        C64::new(grid[r][c][0], grid[r][c][1])
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase", deny_unknown_fields)]
pub enum MorphismDoc {
    Fhilb {
        dom: ObjectDoc,
        cod: ObjectDoc,
        payload: ComplexGrid,
    },
    Rel {
        dom: ObjectDoc,
        cod: ObjectDoc,
        payload: Vec<[usize; 2]>,
    },
}

impl MorphismDoc {
    pub fn backend(&self) -> Backend {
        match self {
            MorphismDoc::Fhilb { .. } => Backend::FHilb,
            MorphismDoc::Rel { .. } => Backend::Rel,
        }
    }

    pub fn to_morphism(&self) -> Result<AnyMorphism> {
        match self {
            MorphismDoc::Fhilb { dom, cod, payload } => {
                let (dom, cod) = (
                    dom.to_object(Backend::FHilb)?,
                    cod.to_object(Backend::FHilb)?,
                );
                let matrix = matrix_from(cod.size(), dom.size(), payload)?;
                Ok(LinearMap::new(dom, cod, matrix)?.into())
            }
            MorphismDoc::Rel { dom, cod, payload } => {
                let (dom, cod) = (dom.to_object(Backend::Rel)?, cod.to_object(Backend::Rel)?);
                Ok(Relation::new(dom, cod, payload.iter().map(|&[i, j]| (i, j)))?.into())
            }
        }
    }
}

impl From<&LinearMap> for MorphismDoc {
    fn from(m: &LinearMap) -> Self {
        MorphismDoc::Fhilb {
            dom: ObjectDoc::from_object(m.dom()),
            cod: ObjectDoc::from_object(m.cod()),
            payload: grid_from(m.matrix()),
        }
    }
}

impl From<&Relation> for MorphismDoc {
    fn from(r: &Relation) -> Self {
        MorphismDoc::Rel {
            dom: ObjectDoc::from_object(r.dom()),
            cod: ObjectDoc::from_object(r.cod()),
            payload: r.pairs().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl From<&AnyMorphism> for MorphismDoc {
    fn from(m: &AnyMorphism) -> Self {
        match m {
            AnyMorphism::FHilb(m) => m.into(),
            AnyMorphism::Rel(r) => r.into(),
        }
    }
}

/// An algebra whose backend is only known at runtime.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    FHilb(FrobeniusAlgebra<LinearMap>),
    Rel(FrobeniusAlgebra<Relation>),
}

impl AnyAlgebra {
    pub fn backend(&self) -> Backend {
        match self {
            AnyAlgebra::FHilb(_) => Backend::FHilb,
            AnyAlgebra::Rel(_) => Backend::Rel,
        }
    }

    pub fn carrier(&self) -> &ObjectRef {
        match self {
            AnyAlgebra::FHilb(a) => a.carrier(),
            AnyAlgebra::Rel(a) => a.carrier(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub backend: Backend,
    pub carrier: ObjectDoc,
    pub mult: MorphismDoc,
    pub unit: MorphismDoc,
}

impl<M: Morphism> From<&FrobeniusAlgebra<M>> for AlgebraDoc
where
    for<'a> &'a M: Into<MorphismDoc>,
{
    fn from(alg: &FrobeniusAlgebra<M>) -> Self {
        AlgebraDoc {
            backend: M::BACKEND,
            carrier: ObjectDoc::from_object(alg.carrier()),
            mult: alg.mult().into(),
            unit: alg.unit().into(),
        }
    }
}

impl From<&AnyAlgebra> for AlgebraDoc {
    fn from(alg: &AnyAlgebra) -> Self {
        match alg {
            AnyAlgebra::FHilb(a) => a.into(),
            AnyAlgebra::Rel(a) => a.into(),
        }
    }
}

impl AlgebraDoc {
    /// Type-checks the two morphisms against the declared carrier and builds
    /// the algebra; the carrier's labels are kept.
    pub fn build(&self) -> Result<AnyAlgebra> {
        for (what, m) in [("mult", &self.mult), ("unit", &self.unit)] {
            if m.backend() != self.backend {
                return Err(Error::InvalidMorphism(format!(
                    "{what} is a {} morphism in a {} algebra",
                    m.backend(),
                    self.backend
                )));
            }
        }
        let carrier = self.carrier.to_object(self.backend)?;
        let pair = carrier.tensor(&carrier);
        let unit_obj = ObjectRef::unit(self.backend);
        match (self.mult.to_morphism()?, self.unit.to_morphism()?) {
            (AnyMorphism::FHilb(m), AnyMorphism::FHilb(u)) => {
                Ok(AnyAlgebra::FHilb(FrobeniusAlgebra::new(
                    m.retype(&pair, &carrier)
                        .map_err(|e| e.in_axiom("multiplication type"))?,
                    u.retype(&unit_obj, &carrier)
                        .map_err(|e| e.in_axiom("unit type"))?,
                )?))
            }
            (AnyMorphism::Rel(m), AnyMorphism::Rel(u)) => {
                Ok(AnyAlgebra::Rel(FrobeniusAlgebra::new(
                    m.retype(&pair, &carrier)
                        .map_err(|e| e.in_axiom("multiplication type"))?,
                    u.retype(&unit_obj, &carrier)
                        .map_err(|e| e.in_axiom("unit type"))?,
                )?))
            }
            _ => unreachable!("backends checked above"),
        }
    }
}

/// An `n×n` complex matrix, `entries[row][col] = [re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub n: usize,
    pub entries: ComplexGrid,
}

impl From<&MatrixElement> for MatrixDoc {
    fn from(m: &MatrixElement) -> Self {
        MatrixDoc {
            n: m.nrows(),
            entries: grid_from(m),
        }
    }
}

impl MatrixDoc {
    pub fn to_matrix(&self) -> Result<MatrixElement> {
        let m = matrix_from(self.n, self.n, &self.entries)?;
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidMorphism(
                "matrix entries must be finite".into(),
            ));
        }
        Ok(m)
    }
}
