use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Backend, Morphism, ObjectRef, Tolerance};
use crate::error::{Error, Result};

pub type C64 = Complex64;

/// A linear map `ℂ^dom → ℂ^cod`, stored as a dense `cod × dom` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    dom: ObjectRef,
    cod: ObjectRef,
    matrix: DMatrix<C64>,
}

impl LinearMap {
    pub fn new(dom: ObjectRef, cod: ObjectRef, matrix: DMatrix<C64>) -> Result<Self> {
        for obj in [&dom, &cod] {
            if obj.backend() != Backend::FHilb {
                return Err(Error::BackendMismatch {
                    left: Backend::FHilb,
                    right: obj.backend(),
                });
            }
        }
        if matrix.nrows() != cod.size() || matrix.ncols() != dom.size() {
            return Err(Error::InvalidMorphism(format!(
                "matrix is {}x{} but {dom} -> {cod} needs {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                cod.size(),
                dom.size()
            )));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidMorphism(
                "matrix has a non-finite entry".into(),
            ));
        }
        Ok(LinearMap { dom, cod, matrix })
    }

    /// Builds a map from a square or rectangular matrix, inferring the objects.
    pub fn from_matrix(matrix: DMatrix<C64>) -> Result<Self> {
        let dom = ObjectRef::fhilb(matrix.ncols())?;
        let cod = ObjectRef::fhilb(matrix.nrows())?;
        LinearMap::new(dom, cod, matrix)
    }

    /// Real-valued convenience constructor from rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidMorphism("ragged rows".into()));
        }
        LinearMap::from_matrix(DMatrix::from_fn(nrows, ncols, |i, j| {
            C64::new(rows[i][j], 0.0)
        }))
    }

    /// A point `I → ℂ^n` with the given coordinates.
    pub fn column(entries: &[C64]) -> Result<Self> {
        LinearMap::from_matrix(DMatrix::from_column_slice(entries.len(), 1, entries))
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    fn max_magnitude(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Morphism for LinearMap {
    const BACKEND: Backend = Backend::FHilb;

    fn dom(&self) -> &ObjectRef {
        &self.dom
    }

    fn cod(&self) -> &ObjectRef {
        &self.cod
    }

    fn object(size: usize) -> Result<ObjectRef> {
        ObjectRef::fhilb(size)
    }

    fn identity(obj: &ObjectRef) -> Self {
        assert_eq!(obj.backend(), Backend::FHilb);
        LinearMap {
            dom: obj.clone(),
            cod: obj.clone(),
            matrix: DMatrix::identity(obj.size(), obj.size()),
        }
    }

    fn zero(dom: &ObjectRef, cod: &ObjectRef) -> Self {
        assert!(dom.backend() == Backend::FHilb && cod.backend() == Backend::FHilb);
        LinearMap {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: DMatrix::zeros(cod.size(), dom.size()),
        }
    }

    fn compose(&self, g: &Self) -> Result<Self> {
        self.dom.expect(&g.cod)?;
        Ok(LinearMap {
            dom: g.dom.clone(),
            cod: self.cod.clone(),
            matrix: &self.matrix * &g.matrix,
        })
    }

    fn tensor(&self, g: &Self) -> Self {
        LinearMap {
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            matrix: self.matrix.kronecker(&g.matrix),
        }
    }

    fn dagger(&self) -> Self {
        LinearMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    fn swap(a: &ObjectRef, b: &ObjectRef) -> Self {
        let (m, n) = (a.size(), b.size());
        let mut matrix = DMatrix::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                matrix[(j * m + i, i * n + j)] = C64::new(1.0, 0.0);
            }
        }
        LinearMap {
            dom: a.tensor(b),
            cod: b.tensor(a),
            matrix,
        }
    }

    fn residual(&self, other: &Self) -> Result<f64> {
        self.check_same_type(other)?;
        Ok(self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn equal(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        let diff = self.residual(other)?;
        let scale = self.max_magnitude().max(other.max_magnitude()).max(1.0);
        Ok(diff <= tol.epsilon() * scale)
    }

    fn retype(&self, dom: &ObjectRef, cod: &ObjectRef) -> Result<Self> {
        self.dom.expect(dom)?;
        self.cod.expect(cod)?;
        Ok(LinearMap {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: self.matrix.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn pauli_x_is_an_involution() {
        let x = LinearMap::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let id = LinearMap::identity(x.dom());
        assert!(x
            .compose(&x)
            .unwrap()
            .equal(&id, Tolerance::default())
            .unwrap());
    }

    #[test]
    fn scalar_tensor_and_dagger() {
        let two = LinearMap::from_real_rows(&[&[2.0]]).unwrap();
        let three = LinearMap::from_real_rows(&[&[3.0]]).unwrap();
        assert_eq!(two.tensor(&three).entry(0, 0), c(6.0, 0.0));
        let i = LinearMap::from_matrix(DMatrix::from_element(1, 1, c(0.0, 1.0))).unwrap();
        assert_eq!(i.dagger().entry(0, 0), c(0.0, -1.0));
    }

    #[test]
    fn swap_permutation_table() {
        // (i, j) at i·3 + j goes to (j, i) at j·2 + i, enumerated by hand.
        let expected = [(0, 0), (1, 2), (2, 4), (3, 1), (4, 3), (5, 5)];
        let s = LinearMap::swap(&ObjectRef::fhilb(2).unwrap(), &ObjectRef::fhilb(3).unwrap());
        for (src, dst) in expected {
            for row in 0..6 {
                let want = if row == dst { 1.0 } else { 0.0 };
                assert_eq!(s.entry(row, src), c(want, 0.0), "column {src}");
            }
        }
    }

    #[test]
    fn tolerance_is_relative_to_magnitude() {
        let a = LinearMap::from_real_rows(&[&[1.0, 0.0]]).unwrap();
        let b = LinearMap::from_real_rows(&[&[1.0 + 1e-12, 0.0]]).unwrap();
        assert!(a.equal(&b, Tolerance::default()).unwrap());
        let big = LinearMap::from_real_rows(&[&[1e6, 0.0]]).unwrap();
        let big2 = LinearMap::from_real_rows(&[&[1e6 + 1e-4, 0.0]]).unwrap();
        assert!(big.equal(&big2, Tolerance::default()).unwrap());
        let far = LinearMap::from_real_rows(&[&[1.0, 1e-6]]).unwrap();
        assert!(!a.equal(&far, Tolerance::default()).unwrap());
    }

    #[test]
    fn rejects_bad_shapes_and_values() {
        let dom = ObjectRef::fhilb(2).unwrap();
        let cod = ObjectRef::fhilb(3).unwrap();
        assert!(LinearMap::new(dom.clone(), cod, DMatrix::zeros(2, 2)).is_err());
        let nan = DMatrix::from_element(2, 2, c(f64::NAN, 0.0));
        assert!(LinearMap::new(dom.clone(), dom.clone(), nan).is_err());
        let f = LinearMap::identity(&dom);
        let g = LinearMap::identity(&ObjectRef::fhilb(3).unwrap());
        assert!(matches!(f.compose(&g), Err(Error::TypeMismatch { .. })));
    }
}
