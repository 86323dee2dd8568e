//! Composite systems: the tensor of two algebras, tensors of projections and
//! the bi-order check, plus zero scalars.

use serde::{Deserialize, Serialize};

use crate::backend::{Morphism, ObjectRef, Tolerance};
use crate::error::{Error, Result};
use crate::frobenius::{AxiomReport, FrobeniusAlgebra, Point};
use crate::groupoid::Groupoid;
use crate::projorder::{LawCheck, ProjectionPoset};

/// The permutation `(A⊗B)⊗(A⊗B) → (A⊗A)⊗(B⊗B)`, i.e. `1_A ⊗ σ_{B,A} ⊗ 1_B`.
///
/// On flattened indices it sends `((a·|B| + b)·|A| + a′)·|B| + b′` to
/// `((a·|A| + a′)·|B| + b)·|B| + b′`.
pub fn middle_swap<M: Morphism>(a: &ObjectRef, b: &ObjectRef) -> M {
    M::identity(a)
        .tensor(&M::swap(b, a))
        .tensor(&M::identity(b))
}

#[derive(Debug, Clone)]
pub struct TensorAlgebra<M> {
    pub left: FrobeniusAlgebra<M>,
    pub right: FrobeniusAlgebra<M>,
    pub algebra: FrobeniusAlgebra<M>,
    pub axioms: AxiomReport,
}

/// `(A, m_A, u_A) ⊗ (B, m_B, u_B) = (A⊗B, (m_A⊗m_B)∘(1⊗σ⊗1), u_A⊗u_B)`.
///
/// Both components must pass their own axioms; the composite's axiom report
/// is attached to the result.
pub fn tensor_algebras<M: Morphism>(
    left: &FrobeniusAlgebra<M>,
    right: &FrobeniusAlgebra<M>,
    tol: Tolerance,
) -> Result<TensorAlgebra<M>> {
    for (side, alg) in [("left", left), ("right", right)] {
        let report = alg.check_axioms(tol)?;
        let failed = report.failures().next().map(|f| f.axiom);
        if let Some(axiom) = failed {
            return Err(Error::LawViolation(format!(
                "{side} component fails {axiom}"
            )));
        }
    }
    let (a, b) = (left.carrier(), right.carrier());
    let carrier = M::object(a.size() * b.size())?;
    let mult = left
        .mult()
        .tensor(right.mult())
        .compose(&middle_swap::<M>(a, b))?;
    let unit = left.unit().tensor(right.unit());
    let algebra = FrobeniusAlgebra::new(
        mult.retype(&carrier.tensor(&carrier), &carrier)?,
        unit.retype(&M::unit_object(), &carrier)?,
    )?;
    let axioms = algebra.check_axioms(tol)?;
    Ok(TensorAlgebra {
        left: left.clone(),
        right: right.clone(),
        algebra,
        axioms,
    })
}

impl<M: Morphism> TensorAlgebra<M> {
    /// `p ⊗ q` as a point of the composite.
    pub fn tensor_points(&self, p: &Point<M>, q: &Point<M>) -> Result<Point<M>> {
        let p = self.left.point(p.morphism().clone())?;
        let q = self.right.point(q.morphism().clone())?;
        self.algebra.point(p.morphism().tensor(q.morphism()))
    }
}

/// The scalar `0_I`: the empty relation on the singleton, or `[0]`.
pub fn zero_scalar<M: Morphism>() -> M {
    M::zero(&M::unit_object(), &M::unit_object())
}

/// `(0_I ⊗ 1_A) ∘ u`, the zero point generated by the zero scalar.
pub fn derived_zero_point<M: Morphism>(alg: &FrobeniusAlgebra<M>) -> Result<Point<M>> {
    let scaled = zero_scalar::<M>().tensor(&M::identity(alg.carrier()));
    let scaled = scaled.retype(alg.carrier(), alg.carrier())?;
    alg.point(scaled.compose(alg.unit())?)
}

/// `0_I ⊗ f` is the zero morphism of the type of `f`, so it agrees with
/// `0_I ⊗ g` whenever `f` and `g` share a type.
pub fn zero_scalar_absorbs<M: Morphism>(samples: &[M], tol: Tolerance) -> Result<bool> {
    let zero = zero_scalar::<M>();
    for f in samples {
        let scaled = zero.tensor(f).retype(f.dom(), f.cod())?;
        if !scaled.equal(&M::zero(f.dom(), f.cod()), tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiOrderReport {
    pub instances: usize,
    pub checks: Vec<LawCheck>,
}

impl BiOrderReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Exhaustive check over the two families that `(p, q) ↦ p⊗q` is monotone
/// and preserves orthogonality in each argument, that tensoring with a zero
/// gives the zero of the composite, and the interchange law
/// `(p⊗q)·(p′⊗q′) = (p·p′)⊗(q·q′)`.
pub fn bi_order_check<M: Morphism>(
    ta: &TensorAlgebra<M>,
    fam_a: &ProjectionPoset<M>,
    fam_b: &ProjectionPoset<M>,
    tol: Tolerance,
) -> Result<BiOrderReport> {
    let (na, nb) = (fam_a.len(), fam_b.len());
    let (pa, pb) = (fam_a.poset(), fam_b.poset());
    let alg = &ta.algebra;
    let zero = derived_zero_point(alg)?;
    if !zero.equal(&alg.zero_point(), tol)? {
        return Err(Error::LawViolation(
            "derived zero differs from the zero point".into(),
        ));
    }

    // tensored[i * nb + j] = p_i ⊗ q_j
    let tensored = crate::exec::map(na * nb, |k| {
        ta.tensor_points(&fam_a.points()[k / nb], &fam_b.points()[k % nb])
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let t = |i: usize, j: usize| &tensored[i * nb + j];
    let pair = |i: usize, j: usize| format!("{}⊗{}", pa.names[i], pb.names[j]);
    let le = |x: &Point<M>, y: &Point<M>| -> Result<bool> { alg.mult_points(x, y)?.equal(x, tol) };
    let perp =
        |x: &Point<M>, y: &Point<M>| -> Result<bool> { alg.mult_points(x, y)?.equal(&zero, tol) };

    let quads = na * na * nb * nb;
    let interchange = crate::exec::find_first(quads, |k| {
        let (i, i2, j, j2) = (k / (na * nb * nb), k / (nb * nb) % na, k / nb % nb, k % nb);
        let lhs = alg.mult_points(t(i, j), t(i2, j2));
        let rhs = ta.tensor_points(fam_a.product(i, i2), fam_b.product(j, j2));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l.equal(&r, tol).unwrap_or(false) => None,
            _ => Some(vec![pair(i, j), pair(i2, j2)]),
        }
    });

    let mut left_order = None;
    let mut left_orth = None;
    for i in 0..na {
        for i2 in 0..na {
            for j in 0..nb {
                let w = || {
                    vec![
                        pa.names[i].clone(),
                        pa.names[i2].clone(),
                        pb.names[j].clone(),
                    ]
                };
                if left_order.is_none() && pa.le(i, i2) && !le(t(i, j), t(i2, j))? {
                    left_order = Some(w());
                }
                if left_orth.is_none()
                    && pa.orthogonal(i, i2) == Some(true)
                    && !perp(t(i, j), t(i2, j))?
                {
                    left_orth = Some(w());
                }
            }
        }
    }
    let mut right_order = None;
    let mut right_orth = None;
    for i in 0..na {
        for j in 0..nb {
            for j2 in 0..nb {
                let w = || {
                    vec![
                        pa.names[i].clone(),
                        pb.names[j].clone(),
                        pb.names[j2].clone(),
                    ]
                };
                if right_order.is_none() && pb.le(j, j2) && !le(t(i, j), t(i, j2))? {
                    right_order = Some(w());
                }
                if right_orth.is_none()
                    && pb.orthogonal(j, j2) == Some(true)
                    && !perp(t(i, j), t(i, j2))?
                {
                    right_orth = Some(w());
                }
            }
        }
    }
    let mut zero_absorbs = None;
    if let (Some(za), Some(zb)) = (pa.zero, pb.zero) {
        for i in 0..na {
            if !t(i, zb).equal(&zero, tol)? {
                zero_absorbs = Some(vec![pair(i, zb)]);
                break;
            }
        }
        if zero_absorbs.is_none() {
            for j in 0..nb {
                if !t(za, j).equal(&zero, tol)? {
                    zero_absorbs = Some(vec![pair(za, j)]);
                    break;
                }
            }
        }
    }

    Ok(BiOrderReport {
        instances: quads,
        checks: vec![
            LawCheck::from_witness("interchange", interchange),
            LawCheck::from_witness("monotone in the left factor", left_order),
            LawCheck::from_witness("monotone in the right factor", right_order),
            LawCheck::from_witness("orthogonality preserved in the left factor", left_orth),
            LawCheck::from_witness("orthogonality preserved in the right factor", right_orth),
            LawCheck::from_witness("zero absorbs", zero_absorbs),
        ],
    })
}

/// `to_algebra(G × H)` against `to_algebra(G) ⊗ to_algebra(H)`. Both carriers
/// index the pair `(f, g)` as `f·|H| + g`, so the comparison is entrywise.
pub fn groupoid_coherence(g: &Groupoid, h: &Groupoid) -> Result<bool> {
    let tol = Tolerance::default();
    let composite = tensor_algebras(&g.to_algebra(), &h.to_algebra(), tol)?;
    let direct = g.product(h).to_algebra();
    Ok(composite.algebra.mult().equal(direct.mult(), tol)?
        && composite.algebra.unit().equal(direct.unit(), tol)?)
}
