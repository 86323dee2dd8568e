use super::{Backend, Morphism, ObjectRef, Tolerance};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A relation `dom ⇸ cod`. Row `x` holds the set of `y` with `x R y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    dom: ObjectRef,
    cod: ObjectRef,
    rows: Vec<BitSet>,
}

impl Relation {
    pub fn new(
        dom: ObjectRef,
        cod: ObjectRef,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        for obj in [&dom, &cod] {
            if obj.backend() != Backend::Rel {
                return Err(Error::BackendMismatch {
                    left: Backend::Rel,
                    right: obj.backend(),
                });
            }
        }
        let mut rows = vec![BitSet::new(cod.size()); dom.size()];
        for (i, j) in pairs {
            if i >= dom.size() || j >= cod.size() {
                return Err(Error::InvalidMorphism(format!(
                    "pair ({i}, {j}) out of range for {dom} -> {cod}"
                )));
            }
            rows[i].insert(j);
        }
        Ok(Relation { dom, cod, rows })
    }

    /// Point `I → A` picking out the given subset of `A`.
    pub fn subset(carrier: &ObjectRef, set: &BitSet) -> Result<Self> {
        if set.len() != carrier.size() {
            return Err(Error::InvalidMorphism(format!(
                "subset over {} elements for carrier {carrier}",
                set.len()
            )));
        }
        Relation::new(
            ObjectRef::unit(Backend::Rel),
            carrier.clone(),
            set.iter().map(|j| (0, j)),
        )
    }

    /// The relation as sorted `(dom, cod)` index pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows.get(i).is_some_and(|r| r.contains(j))
    }

    pub fn image(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    /// For a point `I → A`, the subset of `A` it selects.
    pub fn as_subset(&self) -> Option<&BitSet> {
        (self.dom.size() == 1).then(|| &self.rows[0])
    }
}

impl Morphism for Relation {
    const BACKEND: Backend = Backend::Rel;

    fn dom(&self) -> &ObjectRef {
        &self.dom
    }

    fn cod(&self) -> &ObjectRef {
        &self.cod
    }

    fn object(size: usize) -> Result<ObjectRef> {
        Ok(ObjectRef::rel(size))
    }

    fn identity(obj: &ObjectRef) -> Self {
        assert_eq!(obj.backend(), Backend::Rel);
        let n = obj.size();
        Relation {
            dom: obj.clone(),
            cod: obj.clone(),
            rows: (0..n).map(|i| BitSet::from_indices(n, [i])).collect(),
        }
    }

    fn zero(dom: &ObjectRef, cod: &ObjectRef) -> Self {
        assert!(dom.backend() == Backend::Rel && cod.backend() == Backend::Rel);
        Relation {
            dom: dom.clone(),
            cod: cod.clone(),
            rows: vec![BitSet::new(cod.size()); dom.size()],
        }
    }

    fn compose(&self, g: &Self) -> Result<Self> {
        self.dom.expect(&g.cod)?;
        let rows = g
            .rows
            .iter()
            .map(|mid| {
                let mut out = BitSet::new(self.cod.size());
                for y in mid.iter() {
                    out.union_with(&self.rows[y]);
                }
                out
            })
            .collect();
        Ok(Relation {
            dom: g.dom.clone(),
            cod: self.cod.clone(),
            rows,
        })
    }

    fn tensor(&self, g: &Self) -> Self {
        let cod = self.cod.tensor(&g.cod);
        let gc = g.cod.size();
        let mut rows = Vec::with_capacity(self.rows.len() * g.rows.len());
        for fr in &self.rows {
            for gr in &g.rows {
                let mut row = BitSet::new(cod.size());
                for k in fr.iter() {
                    for l in gr.iter() {
                        row.insert(k * gc + l);
                    }
                }
                rows.push(row);
            }
        }
        Relation {
            dom: self.dom.tensor(&g.dom),
            cod,
            rows,
        }
    }

    fn dagger(&self) -> Self {
        let mut rows = vec![BitSet::new(self.dom.size()); self.cod.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter() {
                rows[j].insert(i);
            }
        }
        Relation {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            rows,
        }
    }

    fn swap(a: &ObjectRef, b: &ObjectRef) -> Self {
        let (m, n) = (a.size(), b.size());
        let mut rows = vec![BitSet::new(m * n); m * n];
        for i in 0..m {
            for j in 0..n {
                rows[i * n + j].insert(j * m + i);
            }
        }
        Relation {
            dom: a.tensor(b),
            cod: b.tensor(a),
            rows,
        }
    }

    fn residual(&self, other: &Self) -> Result<f64> {
        self.check_same_type(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.distance(b))
            .sum::<usize>() as f64)
    }

    fn equal(&self, other: &Self, _tol: Tolerance) -> Result<bool> {
        self.check_same_type(other)?;
        Ok(self.rows == other.rows)
    }

    fn retype(&self, dom: &ObjectRef, cod: &ObjectRef) -> Result<Self> {
        self.dom.expect(dom)?;
        self.cod.expect(cod)?;
        Ok(Relation {
            dom: dom.clone(),
            cod: cod.clone(),
            rows: self.rows.clone(),
        })
    }
}
