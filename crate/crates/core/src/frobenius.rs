//! Symmetric dagger Frobenius algebras over any [`Morphism`] backend.
//!
//! An algebra stores only its multiplication `A⊗A → A` and unit `I → A`.
//! The comultiplication and counit are always the daggers of those (derived
//! once when the algebra is built), so the dagger condition holds by
//! construction and is never checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::backend::{Morphism, ObjectRef, Tolerance};
use crate::error::{Error, Result};
use crate::exec;

#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusAlgebra<M> {
    carrier: ObjectRef,
    mult: M,
    unit: M,
    derived: Derived<M>,
}

#[derive(Debug, Clone, PartialEq)]
struct Derived<M> {
    comult: M,
    counit: M,
    cup: M,
}

/// A point `I → A` of an algebra's carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<M>(M);

impl<M: Morphism> Point<M> {
    pub fn new(morphism: M) -> Result<Self> {
        if morphism.dom().size() != 1 || morphism.dom().backend() != M::BACKEND {
            return Err(Error::InvalidMorphism(format!(
                "a point must have the unit object as domain, found {}",
                morphism.dom()
            )));
        }
        let unit = M::unit_object();
        let cod = morphism.cod().clone();
        Ok(Point(morphism.retype(&unit, &cod)?))
    }

    pub fn morphism(&self) -> &M {
        &self.0
    }

    pub fn into_morphism(self) -> M {
        self.0
    }

    pub fn equal(&self, other: &Point<M>, tol: Tolerance) -> Result<bool> {
        self.0.equal(&other.0, tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Coassociativity,
    LeftUnitality,
    RightUnitality,
    LeftCounitality,
    RightCounitality,
    FrobeniusLeft,
    FrobeniusRight,
    Symmetry,
    YankingLeft,
    YankingRight,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Associativity,
        Axiom::Coassociativity,
        Axiom::LeftUnitality,
        Axiom::RightUnitality,
        Axiom::LeftCounitality,
        Axiom::RightCounitality,
        Axiom::FrobeniusLeft,
        Axiom::FrobeniusRight,
        Axiom::Symmetry,
        Axiom::YankingLeft,
        Axiom::YankingRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftUnitality => "left-unitality",
            Axiom::RightUnitality => "right-unitality",
            Axiom::LeftCounitality => "left-counitality",
            Axiom::RightCounitality => "right-counitality",
            Axiom::FrobeniusLeft => "frobenius-left",
            Axiom::FrobeniusRight => "frobenius-right",
            Axiom::Symmetry => "symmetry",
            Axiom::YankingLeft => "yanking-left",
            Axiom::YankingRight => "yanking-right",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub holds: bool,
    /// Max entry defect (FHilb) or number of violating pairs (Rel).
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("report covers every axiom")
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.get(axiom).holds
    }

    pub fn max_residual(&self) -> f64 {
        self.results.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.holds)
    }
}

impl<M: Morphism> FrobeniusAlgebra<M> {
    pub fn new(mult: M, unit: M) -> Result<Self> {
        let carrier = unit.cod().clone();
        M::unit_object()
            .expect(unit.dom())
            .map_err(|e| e.in_axiom("unit type"))?;
        carrier
            .tensor(&carrier)
            .expect(mult.dom())
            .map_err(|e| e.in_axiom("multiplication domain"))?;
        carrier
            .expect(mult.cod())
            .map_err(|e| e.in_axiom("multiplication codomain"))?;
        let comult = mult.dagger();
        let counit = unit.dagger();
        let cup = comult.compose(&unit)?;
        Ok(FrobeniusAlgebra {
            carrier,
            mult,
            unit,
            derived: Derived {
                comult,
                counit,
                cup,
            },
        })
    }

    pub fn carrier(&self) -> &ObjectRef {
        &self.carrier
    }

    pub fn mult(&self) -> &M {
        &self.mult
    }

    pub fn unit(&self) -> &M {
        &self.unit
    }

    pub fn comult(&self) -> &M {
        &self.derived.comult
    }

    pub fn counit(&self) -> &M {
        &self.derived.counit
    }

    fn id(&self) -> M {
        M::identity(&self.carrier)
    }

    /// `cup = comult ∘ unit : I → A⊗A`.
    pub fn induced_cup(&self) -> &M {
        &self.derived.cup
    }

    /// `cap = counit ∘ mult : A⊗A → I`.
    pub fn induced_cap(&self) -> M {
        self.derived
            .counit
            .compose(&self.mult)
            .expect("algebra is well typed")
    }

    fn axiom_sides(&self, axiom: Axiom) -> Result<(M, M)> {
        let id = self.id();
        let (mult, unit) = (&self.mult, &self.unit);
        let (comult, counit) = (&self.derived.comult, &self.derived.counit);
        Ok(match axiom {
            Axiom::Associativity => (
                mult.compose(&mult.tensor(&id))?,
                mult.compose(&id.tensor(mult))?,
            ),
            Axiom::Coassociativity => (
                comult.tensor(&id).compose(comult)?,
                id.tensor(comult).compose(comult)?,
            ),
            Axiom::LeftUnitality => (mult.compose(&unit.tensor(&id))?, id),
            Axiom::RightUnitality => (mult.compose(&id.tensor(unit))?, id),
            Axiom::LeftCounitality => (counit.tensor(&id).compose(comult)?, id),
            Axiom::RightCounitality => (id.tensor(counit).compose(comult)?, id),
            Axiom::FrobeniusLeft => (
                id.tensor(mult).compose(&comult.tensor(&id))?,
                comult.compose(mult)?,
            ),
            Axiom::FrobeniusRight => (
                mult.tensor(&id).compose(&id.tensor(comult))?,
                comult.compose(mult)?,
            ),
            Axiom::Symmetry => {
                let cap = counit.compose(mult)?;
                (cap.compose(&M::swap(&self.carrier, &self.carrier))?, cap)
            }
            Axiom::YankingLeft => {
                let (cup, cap) = (self.induced_cup(), self.induced_cap());
                (cap.tensor(&id).compose(&id.tensor(cup))?, id)
            }
            Axiom::YankingRight => {
                let (cup, cap) = (self.induced_cup(), self.induced_cap());
                (id.tensor(&cap).compose(&cup.tensor(&id))?, id)
            }
        })
    }

    fn check_axiom(&self, axiom: Axiom, tol: Tolerance) -> Result<AxiomResult> {
        let (lhs, rhs) = self
            .axiom_sides(axiom)
            .map_err(|e| e.in_axiom(axiom.name()))?;
        let holds = lhs.equal(&rhs, tol).map_err(|e| e.in_axiom(axiom.name()))?;
        let residual = lhs.residual(&rhs).map_err(|e| e.in_axiom(axiom.name()))?;
        Ok(AxiomResult {
            axiom,
            holds,
            residual,
        })
    }

    /// Evaluates every algebra axiom as a morphism equation.
    ///
    /// Symmetry is checked as `counit∘mult∘σ = counit∘mult`; yanking uses the
    /// induced cup and cap.
    pub fn check_axioms(&self, tol: Tolerance) -> Result<AxiomReport> {
        let results = exec::map(Axiom::ALL.len(), |i| self.check_axiom(Axiom::ALL[i], tol));
        Ok(AxiomReport {
            results: results.into_iter().collect::<Result<_>>()?,
        })
    }

    /// `(mult⊗1)∘(1⊗cup) = (1⊗mult)∘(cup⊗1)` as maps `A → A⊗A`.
    pub fn bent_multiplication_agrees(&self, tol: Tolerance) -> Result<bool> {
        let (id, cup) = (self.id(), self.induced_cup());
        let lhs = self.mult.tensor(&id).compose(&id.tensor(cup))?;
        let rhs = id.tensor(&self.mult).compose(&cup.tensor(&id))?;
        lhs.equal(&rhs, tol)
    }

    pub fn point(&self, morphism: M) -> Result<Point<M>> {
        let p = Point::new(morphism)?;
        self.check_point(&p)?;
        Ok(p)
    }

    fn check_point(&self, p: &Point<M>) -> Result<()> {
        if !self.carrier.matches(p.0.cod()) {
            return Err(Error::AlgebraMismatch(format!(
                "point has codomain {} but the carrier is {}",
                p.0.cod(),
                self.carrier
            )));
        }
        Ok(())
    }

    pub fn unit_point(&self) -> Point<M> {
        Point(self.unit.clone())
    }

    pub fn zero_point(&self) -> Point<M> {
        Point(M::zero(&M::unit_object(), &self.carrier))
    }

    /// `p·q = mult ∘ (p⊗q)`.
    pub fn mult_points(&self, p: &Point<M>, q: &Point<M>) -> Result<Point<M>> {
        self.check_point(p)?;
        self.check_point(q)?;
        let product = self.mult.compose(&p.0.tensor(&q.0))?;
        Ok(Point(product.retype(&M::unit_object(), &self.carrier)?))
    }

    /// The conjugate `p* = (p†⊗1) ∘ cup` with respect to the induced compact
    /// structure.
    pub fn conjugate_point(&self, p: &Point<M>) -> Result<Point<M>> {
        self.check_point(p)?;
        let bent =
            p.0.dagger()
                .tensor(&self.id())
                .compose(self.induced_cup())?;
        Ok(Point(bent.retype(&M::unit_object(), &self.carrier)?))
    }

    /// Idempotent and self-conjugate.
    pub fn is_projection(&self, p: &Point<M>, tol: Tolerance) -> Result<bool> {
        Ok(self.mult_points(p, p)?.equal(p, tol)? && self.conjugate_point(p)?.equal(p, tol)?)
    }

    /// `comult ∘ x = x⊗x`.
    pub fn is_copyable(&self, x: &Point<M>, tol: Tolerance) -> Result<bool> {
        self.check_point(x)?;
        let copied = self.derived.comult.compose(&x.0)?;
        copied.equal(&x.0.tensor(&x.0), tol)
    }

    /// `mult ∘ (x⊗1) = mult ∘ (1⊗x)` as maps `A → A`.
    pub fn is_central(&self, x: &Point<M>, tol: Tolerance) -> Result<bool> {
        self.check_point(x)?;
        let id = self.id();
        let left = self.mult.compose(&x.0.tensor(&id))?;
        let right = self.mult.compose(&id.tensor(&x.0))?;
        left.equal(&right, tol)
    }

    /// `mult ∘ σ = mult`.
    pub fn is_commutative(&self, tol: Tolerance) -> Result<bool> {
        let swapped = self.mult.compose(&M::swap(&self.carrier, &self.carrier))?;
        swapped.equal(&self.mult, tol)
    }

    /// `z` is a projection and `z·p = z` for every `p` in `family`.
    pub fn is_zero_projection(
        &self,
        z: &Point<M>,
        family: &[Point<M>],
        tol: Tolerance,
    ) -> Result<bool> {
        if !self.is_projection(z, tol)? {
            return Ok(false);
        }
        for p in family {
            if !self.mult_points(z, p)?.equal(z, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
