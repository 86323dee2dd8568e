//! Finite-dimensional C*-algebras as Frobenius algebras in FHilb, and the
//! subspace lattice of `L(ℂⁿ)`.
//!
//! The dual space `(ℂⁿ)*` is identified with `ℂⁿ` through the standard basis,
//! so the matrix algebra `M_n` lives on `ℂ^{n²}` with `|a,b⟩` at index `a·n+b`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::backend::{LinearMap, Morphism, ObjectRef, Tolerance, C64};
use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusAlgebra, Point};

/// An element `ρ: ℂⁿ → ℂⁿ` of the matrix algebra.
pub type MatrixElement = DMatrix<C64>;

/// Block sizes `[n₁, …, n_k]` of `M_{n₁} ⊕ … ⊕ M_{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CStarSpec(Vec<usize>);

impl CStarSpec {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidObject(
                "a C*-algebra needs at least one block".into(),
            ));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidObject(
                "block dimensions must be at least 1".into(),
            ));
        }
        Ok(CStarSpec(blocks))
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    pub fn carrier_dim(&self) -> usize {
        self.0.iter().map(|n| n * n).sum()
    }
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidObject("dimension must be at least 1".into()));
    }
    Ok(())
}

/// `End(ℂⁿ)` with multiplication `1 ⊗ η ⊗ 1` and unit `ε = Σᵢ |i,i⟩`.
pub fn pants_algebra(n: usize) -> Result<FrobeniusAlgebra<LinearMap>> {
    check_dim(n)?;
    let h = ObjectRef::fhilb(n)?;
    let id = LinearMap::identity(&h);
    let eta_matrix = DMatrix::from_fn(1, n * n, |_, k| {
        if k / n == k % n {
            one()
        } else {
            C64::default()
        }
    });
    let eta = LinearMap::new(h.tensor(&h), ObjectRef::fhilb(1)?, eta_matrix)?;
    let mult = id.tensor(&eta).tensor(&id);
    let unit = eta.dagger();
    let carrier = ObjectRef::fhilb(n * n)?;
    FrobeniusAlgebra::new(
        mult.retype(&carrier.tensor(&carrier), &carrier)?,
        unit.retype(&ObjectRef::fhilb(1)?, &carrier)?,
    )
}

/// The copy algebra of the standard basis: `|i⟩⊗|j⟩ ↦ δᵢⱼ|i⟩`, unit `Σᵢ|i⟩`.
pub fn basis_algebra(n: usize) -> Result<FrobeniusAlgebra<LinearMap>> {
    check_dim(n)?;
    let mult = DMatrix::from_fn(n, n * n, |i, k| {
        if k == i * n + i {
            one()
        } else {
            C64::default()
        }
    });
    let unit = DMatrix::from_element(n, 1, one());
    FrobeniusAlgebra::new(LinearMap::from_matrix(mult)?, LinearMap::from_matrix(unit)?)
}

/// Block-diagonal algebra `⊕ M_{nᵢ}` on `ℂ^{Σnᵢ²}`, blocks laid out in spec
/// order. Products of elements from different blocks vanish.
pub fn direct_sum(spec: &CStarSpec) -> Result<FrobeniusAlgebra<LinearMap>> {
    let dim = spec.carrier_dim();
    let mut mult = DMatrix::zeros(dim, dim * dim);
    let mut unit = DMatrix::zeros(dim, 1);
    let mut offset = 0;
    for &n in spec.blocks() {
        let at = |a: usize, b: usize| offset + a * n + b;
        for a in 0..n {
            unit[(at(a, a), 0)] = one();
            for b in 0..n {
                for d in 0..n {
                    mult[(at(a, d), at(a, b) * dim + at(b, d))] = one();
                }
            }
        }
        offset += n * n;
    }
    FrobeniusAlgebra::new(LinearMap::from_matrix(mult)?, LinearMap::from_matrix(unit)?)
}

fn matrix_side(alg: &FrobeniusAlgebra<LinearMap>) -> Result<usize> {
    let dim = alg.carrier().size();
    let n = (dim as f64).sqrt().round() as usize;
    if n * n != dim {
        return Err(Error::DimensionMismatch(format!(
            "carrier of dimension {dim} is not a matrix algebra"
        )));
    }
    Ok(n)
}

/// `p_ρ`: the point with coordinate `ρ[a][b]` at `|a,b⟩`.
pub fn point_from_matrix(
    alg: &FrobeniusAlgebra<LinearMap>,
    rho: &MatrixElement,
) -> Result<Point<LinearMap>> {
    let n = matrix_side(alg)?;
    if rho.nrows() != n || rho.ncols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for an algebra of {n}x{n} matrices",
            rho.nrows(),
            rho.ncols()
        )));
    }
    let column: Vec<C64> = (0..n * n).map(|k| rho[(k / n, k % n)]).collect();
    alg.point(LinearMap::column(&column)?)
}

pub fn matrix_from_point(
    alg: &FrobeniusAlgebra<LinearMap>,
    p: &Point<LinearMap>,
) -> Result<MatrixElement> {
    let n = matrix_side(alg)?;
    let m = p.morphism();
    if m.cod().size() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "point of dimension {} for {n}x{n} matrices",
            m.cod().size()
        )));
    }
    Ok(DMatrix::from_fn(n, n, |a, b| m.entry(a * n + b, 0)))
}

/// Entrywise comparison with the same relative rule as [`Morphism::equal`].
pub fn matrices_close(a: &MatrixElement, b: &MatrixElement, tol: Tolerance) -> bool {
    match (
        LinearMap::from_matrix(a.clone()),
        LinearMap::from_matrix(b.clone()),
    ) {
        (Ok(a), Ok(b)) => a.equal(&b, tol).unwrap_or(false),
        _ => false,
    }
}

/// `ρ² = ρ = ρ†` within tolerance.
pub fn is_orthogonal_projection(rho: &MatrixElement, tol: Tolerance) -> bool {
    rho.is_square()
        && matrices_close(&(rho * rho), rho, tol)
        && matrices_close(&rho.adjoint(), rho, tol)
}

fn hermitian_part(m: DMatrix<C64>) -> DMatrix<C64> {
    (&m + m.adjoint()) * C64::new(0.5, 0.0)
}

fn rank_threshold(tol: Tolerance, n: usize, singular_values: &[f64]) -> f64 {
    let largest = singular_values.iter().copied().fold(0.0, f64::max);
    tol.epsilon() * (n as f64).sqrt() * largest
}

fn check_projection_pair(p: &MatrixElement, q: &MatrixElement, tol: Tolerance) -> Result<usize> {
    if p.shape() != q.shape() {
        return Err(Error::DimensionMismatch(format!(
            "{:?} vs {:?}",
            p.shape(),
            q.shape()
        )));
    }
    for (name, m) in [("first argument", p), ("second argument", q)] {
        if !is_orthogonal_projection(m, tol) {
            return Err(Error::NotAProjection(name.into()));
        }
    }
    Ok(p.nrows())
}

/// Orthogonal projection onto `im(p) ∩ im(q)`, i.e. onto the kernel of the
/// stacked matrix `[1−p; 1−q]`.
pub fn subspace_meet(
    p: &MatrixElement,
    q: &MatrixElement,
    tol: Tolerance,
) -> Result<MatrixElement> {
    let n = check_projection_pair(p, q, tol)?;
    let id = DMatrix::<C64>::identity(n, n);
    let mut stacked = DMatrix::zeros(2 * n, n);
    stacked.rows_mut(0, n).copy_from(&(&id - p));
    stacked.rows_mut(n, n).copy_from(&(&id - q));
    let svd = stacked.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let threshold = rank_threshold(tol, n, &sv);
    let mut out = DMatrix::zeros(n, n);
    for (r, &s) in sv.iter().enumerate() {
        if s <= threshold {
            let row = v_t.row(r);
            out += row.adjoint() * row;
        }
    }
    Ok(hermitian_part(out))
}

/// Orthogonal projection onto `im(p) + im(q)`, from an orthonormal basis of
/// the column span of `[p q]`.
pub fn subspace_join(
    p: &MatrixElement,
    q: &MatrixElement,
    tol: Tolerance,
) -> Result<MatrixElement> {
    let n = check_projection_pair(p, q, tol)?;
    let mut side = DMatrix::zeros(n, 2 * n);
    side.columns_mut(0, n).copy_from(p);
    side.columns_mut(n, n).copy_from(q);
    let svd = side.svd(true, false);
    let u = svd.u.expect("requested U");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let threshold = rank_threshold(tol, n, &sv);
    let mut out = DMatrix::zeros(n, n);
    for (c, &s) in sv.iter().enumerate() {
        if s > threshold {
            let col = u.column(c);
            out += col * col.adjoint();
        }
    }
    Ok(hermitian_part(out))
}

/// A Hermitian idempotent of the given rank, determined by `(n, rank, seed)`
/// alone: orthonormalized pseudo-random complex columns `Q`, then `Q Q†`.
pub fn random_projection(n: usize, rank: usize, seed: u64) -> Result<MatrixElement> {
    check_dim(n)?;
    if rank > n {
        return Err(Error::DimensionMismatch(format!(
            "rank {rank} out of range for dimension {n}"
        )));
    }
    if rank == 0 {
        return Ok(DMatrix::zeros(n, n));
    }
    if rank == n {
        return Ok(DMatrix::identity(n, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let columns = DMatrix::from_fn(n, rank, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let q = columns.qr().q();
    Ok(hermitian_part(&q * q.adjoint()))
}

/// A pseudo-random `n×n` matrix with entries in the unit square.
pub fn random_matrix(n: usize, rng: &mut impl Rng) -> MatrixElement {
    DMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// `count` seeded `n×n` matrices cycling through four kinds: orthogonal
/// projections of random rank, oblique idempotents `S P S⁻¹`, strictly upper
/// triangular nilpotents and unstructured matrices.
pub fn correspondence_samples(n: usize, count: usize, seed: u64) -> Result<Vec<MatrixElement>> {
    check_dim(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let m = match k % 4 {
            0 => random_projection(n, rng.gen_range(0..=n), rng.gen())?,
            1 => loop {
                let p = random_projection(n, rng.gen_range(1..n.max(2)).min(n), rng.gen())?;
                let s = random_matrix(n, &mut rng);
                if let Some(inv) = s.clone().try_inverse() {
                    break &s * p * inv;
                }
            },
            2 => {
                let mut m = random_matrix(n, &mut rng);
                m.fill_lower_triangle(C64::default(), 0);
                m
            }
            _ => random_matrix(n, &mut rng),
        };
        out.push(m);
    }
    Ok(out)
}

/// Every point whose coordinates are all 0 or 1, named by its coordinate
/// string (coordinate 0 first).
pub fn zero_one_points(
    alg: &FrobeniusAlgebra<LinearMap>,
) -> Result<Vec<(String, Point<LinearMap>)>> {
    let dim = alg.carrier().size();
    if dim > crate::groupoid::BRUTE_FORCE_MAX {
        return Err(Error::ResourceLimit(format!("2^{dim} coordinate points")));
    }
    (0..1u64 << dim)
        .map(|mask| {
            let coords: Vec<C64> = (0..dim)
                .map(|i| C64::new((mask >> i & 1) as f64, 0.0))
                .collect();
            let name: String = (0..dim)
                .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
                .collect();
            Ok((name, alg.point(LinearMap::column(&coords)?)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn real(rows: &[&[f64]]) -> MatrixElement {
        let n = rows.len();
        DMatrix::from_fn(n, rows[0].len(), |i, j| C64::new(rows[i][j], 0.0))
    }

    #[test]
    fn pants_one_is_the_scalars() {
        let alg = pants_algebra(1).unwrap();
        assert_eq!(alg.unit().entry(0, 0), one());
        assert!(alg.is_commutative(tol()).unwrap());
        assert!(alg
            .mult()
            .equal(basis_algebra(1).unwrap().mult(), tol())
            .unwrap());
    }

    #[test]
    fn pants_two_is_noncommutative_and_lawful() {
        let alg = pants_algebra(2).unwrap();
        assert_eq!(alg.carrier().size(), 4);
        let report = alg.check_axioms(tol()).unwrap();
        assert!(
            report.passed() && report.max_residual() < 1e-9,
            "{report:?}"
        );
        assert!(!alg.is_commutative(tol()).unwrap());
    }

    #[test]
    fn direct_sum_matches_single_block_and_basis() {
        let single = direct_sum(&CStarSpec::new(vec![2]).unwrap()).unwrap();
        let pants = pants_algebra(2).unwrap();
        assert!(single.mult().equal(pants.mult(), tol()).unwrap());
        assert!(single.unit().equal(pants.unit(), tol()).unwrap());
        let diag = direct_sum(&CStarSpec::new(vec![1, 1]).unwrap()).unwrap();
        let basis = basis_algebra(2).unwrap();
        assert!(diag.mult().equal(basis.mult(), tol()).unwrap());
        assert!(diag.unit().equal(basis.unit(), tol()).unwrap());
        let mixed = direct_sum(&CStarSpec::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(mixed.carrier().size(), 5);
        assert!(mixed.check_axioms(tol()).unwrap().passed());
        assert!(CStarSpec::new(vec![]).is_err());
        assert!(CStarSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn zero_dimension_is_rejected() {
        assert!(pants_algebra(0).is_err());
        assert!(basis_algebra(0).is_err());
    }

    #[test]
    fn point_matrix_roundtrip() {
        let alg = pants_algebra(2).unwrap();
        let rho = DMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(1.0, 2.0),
                C64::new(3.0, 0.0),
                C64::new(0.0, -1.0),
                C64::new(4.0, 0.5),
            ],
        );
        let p = point_from_matrix(&alg, &rho).unwrap();
        assert_eq!(matrix_from_point(&alg, &p).unwrap(), rho);
        let identity_point = point_from_matrix(&alg, &DMatrix::identity(2, 2)).unwrap();
        assert!(identity_point.equal(&alg.unit_point(), tol()).unwrap());
        assert!(point_from_matrix(&alg, &DMatrix::identity(3, 3)).is_err());
        assert!(matrix_from_point(
            &basis_algebra(3).unwrap(),
            &basis_algebra(3).unwrap().unit_point()
        )
        .is_err());
    }

    #[test]
    fn projection_points() {
        let alg = pants_algebra(2).unwrap();
        let diag = point_from_matrix(&alg, &real(&[&[1.0, 0.0], &[0.0, 0.0]])).unwrap();
        let nil = point_from_matrix(&alg, &real(&[&[0.0, 1.0], &[0.0, 0.0]])).unwrap();
        assert!(alg.is_projection(&diag, tol()).unwrap());
        assert!(!alg.is_projection(&nil, tol()).unwrap());
        assert!(alg
            .mult_points(&diag, &diag)
            .unwrap()
            .equal(&diag, tol())
            .unwrap());
    }

    #[test]
    fn conjugation_is_the_adjoint() {
        let alg = pants_algebra(2).unwrap();
        let nil = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let conj = alg
            .conjugate_point(&point_from_matrix(&alg, &nil).unwrap())
            .unwrap();
        assert_eq!(matrix_from_point(&alg, &conj).unwrap(), nil.adjoint());
    }

    #[test]
    fn non_scalar_diagonal_is_not_central() {
        let alg = pants_algebra(2).unwrap();
        let p = point_from_matrix(&alg, &real(&[&[1.0, 0.0], &[0.0, 2.0]])).unwrap();
        assert!(!alg.is_central(&p, tol()).unwrap());
        let scalar = point_from_matrix(&alg, &real(&[&[3.0, 0.0], &[0.0, 3.0]])).unwrap();
        assert!(alg.is_central(&scalar, tol()).unwrap());
    }

    #[test]
    fn meet_and_join_of_complements() {
        let a = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let b = real(&[&[0.0, 0.0], &[0.0, 1.0]]);
        assert!(matrices_close(
            &subspace_meet(&a, &b, tol()).unwrap(),
            &DMatrix::zeros(2, 2),
            tol()
        ));
        assert!(matrices_close(
            &subspace_join(&a, &b, tol()).unwrap(),
            &DMatrix::identity(2, 2),
            tol()
        ));
        assert!(matrices_close(
            &subspace_meet(&a, &a, tol()).unwrap(),
            &a,
            tol()
        ));
        assert!(matrices_close(
            &subspace_join(&a, &a, tol()).unwrap(),
            &a,
            tol()
        ));
        let nil = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            subspace_meet(&a, &nil, tol()),
            Err(Error::NotAProjection(_))
        ));
    }

    #[test]
    fn random_projection_contract() {
        assert_eq!(random_projection(3, 0, 1).unwrap(), DMatrix::zeros(3, 3));
        assert_eq!(random_projection(3, 3, 1).unwrap(), DMatrix::identity(3, 3));
        let p = random_projection(3, 1, 7).unwrap();
        assert_eq!(p, random_projection(3, 1, 7).unwrap());
        assert!(is_orthogonal_projection(&p, tol()));
        assert!((p.trace().re - 1.0).abs() < 1e-12);
        assert!(random_projection(2, 3, 0).is_err());
    }

    #[test]
    fn basis_three_has_eight_zero_one_projections() {
        let alg = basis_algebra(3).unwrap();
        let hits = zero_one_points(&alg)
            .unwrap()
            .into_iter()
            .filter(|(_, p)| alg.is_projection(p, tol()).unwrap())
            .count();
        assert_eq!(hits, 8);
    }
}
