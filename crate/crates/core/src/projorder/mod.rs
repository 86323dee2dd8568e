//! The order and orthogonality carried by the projections of an algebra.
//!
//! For projections `p, q` of a symmetric dagger Frobenius algebra,
//! `p ≤ q ⟺ p·q = p` and `p ⊥ q ⟺ p·q = 0`. Nothing about these relations is
//! assumed: [`build_poset`] computes them from the product table and then
//! checks every poset and orthogonality law, failing loudly if one breaks.

use serde::{Deserialize, Serialize};

use crate::backend::{Morphism, Relation, Tolerance};
use crate::bitset::BitSet;
use crate::error::{Error, LawViolation, Result};
use crate::exec;
use crate::frobenius::{FrobeniusAlgebra, Point};
use crate::groupoid::{enumerate_subgroupoids, EnumLimits, Groupoid};

mod lattice;

pub use lattice::{
    compare_orders, forbidden_sublattice, lattice_report, ore_crossvalidate, orthocomplement_probe,
    ComplementProbe, ForbiddenSublattice, LatticeReport, OrderComparison, OrderDifference,
    OrderRelation, OreReport, OreRow, OrthoProbe, Verdict,
};

/// The outcome of checking one law, with the first counterexample in index
/// order when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

impl LawCheck {
    pub(crate) fn from_witness(law: &str, witness: Option<Vec<String>>) -> Self {
        LawCheck {
            law: law.into(),
            holds: witness.is_none(),
            witness: witness.unwrap_or_default(),
        }
    }
}

/// A finite order on named elements, optionally with an orthogonality
/// relation and a designated zero. `leq[i][j]` means element `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orth: Option<Vec<Vec<bool>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
}

pub(crate) fn first_pair(
    n: usize,
    bad: impl Fn(usize, usize) -> bool + Sync + Send,
) -> Option<(usize, usize)> {
    exec::find_first(n * n, |k| {
        let (i, j) = (k / n, k % n);
        bad(i, j).then_some((i, j))
    })
}

pub(crate) fn first_triple(
    n: usize,
    bad: impl Fn(usize, usize, usize) -> bool + Sync + Send,
) -> Option<(usize, usize, usize)> {
    exec::find_first(n * n * n, |k| {
        let (i, j, l) = (k / (n * n), k / n % n, k % n);
        bad(i, j, l).then_some((i, j, l))
    })
}

impl Poset {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn orthogonal(&self, i: usize, j: usize) -> Option<bool> {
        self.orth.as_ref().map(|o| o[i][j])
    }

    fn named(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// The element below every other one, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|x| self.le(b, x)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|x| self.le(x, t)))
    }

    /// Reflexivity, antisymmetry and transitivity of `leq`.
    pub fn check_partial_order(&self) -> Vec<LawCheck> {
        let n = self.len();
        let refl = (0..n).find(|&i| !self.le(i, i)).map(|i| self.named(&[i]));
        let anti = first_pair(n, |i, j| i != j && self.le(i, j) && self.le(j, i))
            .map(|(i, j)| self.named(&[i, j]));
        let trans = first_triple(n, |i, j, k| {
            self.le(i, j) && self.le(j, k) && !self.le(i, k)
        })
        .map(|(i, j, k)| self.named(&[i, j, k]));
        vec![
            LawCheck::from_witness("reflexivity", refl),
            LawCheck::from_witness("antisymmetry", anti),
            LawCheck::from_witness("transitivity", trans),
        ]
    }

    /// Symmetry, antireflexivity above zero and downward closure of `orth`.
    /// Without an orthogonality relation there is nothing to check.
    pub fn check_orthogonality_axioms(&self) -> Vec<LawCheck> {
        let Some(orth) = &self.orth else {
            return Vec::new();
        };
        let n = self.len();
        let sym = first_pair(n, |i, j| orth[i][j] && !orth[j][i]).map(|(i, j)| self.named(&[i, j]));
        let anti = (0..n)
            .find(|&i| orth[i][i] && Some(i) != self.zero)
            .map(|i| self.named(&[i]));
        let down = first_triple(n, |p, q, r| self.le(p, q) && orth[q][r] && !orth[p][r])
            .map(|(p, q, r)| self.named(&[p, q, r]));
        vec![
            LawCheck::from_witness("orthogonality symmetry", sym),
            LawCheck::from_witness("antireflexivity above zero", anti),
            LawCheck::from_witness("downward closure", down),
        ]
    }

    /// Cover pairs `(lower, upper)` of the order, sorted by index.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let covers = exec::filter(n * n, |k| {
            let (i, j) = (k / n, k % n);
            i != j
                && self.le(i, j)
                && !(0..n).any(|m| m != i && m != j && self.le(i, m) && self.le(m, j))
        });
        covers.into_iter().map(|k| (k / n, k % n)).collect()
    }
}

/// Reflexive-transitive closure of an edge list on `n` elements.
pub fn transitive_closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

/// A projection family together with its product table and the order and
/// orthogonality it induces.
#[derive(Debug, Clone)]
pub struct ProjectionPoset<M> {
    poset: Poset,
    points: Vec<Point<M>>,
    products: Vec<Point<M>>,
}

impl<M: Morphism> ProjectionPoset<M> {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn names(&self) -> &[String] {
        &self.poset.names
    }

    pub fn points(&self) -> &[Point<M>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `points[i] · points[j]`.
    pub fn product(&self, i: usize, j: usize) -> &Point<M> {
        &self.products[i * self.len() + j]
    }
}

/// Name given to an adjoined zero projection.
pub const ADJOINED_ZERO: &str = "0";

/// Builds the projection order of `family`, adjoining the zero point when no
/// member equals it.
///
/// Fails with [`Error::NotAProjection`] naming the first offending member,
/// [`Error::DuplicateElement`] on a repeated name, and
/// [`Error::InvalidPoset`] listing every broken poset or orthogonality law.
pub fn build_poset<M: Morphism>(
    alg: &FrobeniusAlgebra<M>,
    family: Vec<(String, Point<M>)>,
    tol: Tolerance,
) -> Result<ProjectionPoset<M>> {
    let mut names = Vec::with_capacity(family.len() + 1);
    let mut points = Vec::with_capacity(family.len() + 1);
    for (name, p) in family {
        if names.contains(&name) {
            return Err(Error::DuplicateElement(name));
        }
        if !alg.is_projection(&p, tol)? {
            return Err(Error::NotAProjection(name));
        }
        names.push(name);
        points.push(p);
    }

    let zero_point = alg.zero_point();
    let mut zero = None;
    for (i, p) in points.iter().enumerate() {
        if p.equal(&zero_point, tol)? {
            zero = Some(i);
            break;
        }
    }
    if zero.is_none() {
        let mut name = ADJOINED_ZERO.to_string();
        while names.contains(&name) {
            name.push('\'');
        }
        zero = Some(points.len());
        names.push(name);
        points.push(zero_point.clone());
    }

    let n = points.len();
    let products = exec::map(n * n, |k| alg.mult_points(&points[k / n], &points[k % n]))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let relations = exec::map(n * n, |k| -> Result<(bool, bool)> {
        let prod = &products[k];
        Ok((
            prod.equal(&points[k / n], tol)?,
            prod.equal(&zero_point, tol)?,
        ))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let table = |pick: fn(&(bool, bool)) -> bool| -> Vec<Vec<bool>> {
        relations
            .chunks(n)
            .map(|row| row.iter().map(pick).collect())
            .collect()
    };
    let poset = Poset {
        names,
        leq: table(|r| r.0),
        orth: Some(table(|r| r.1)),
        zero,
    };

    let violations: Vec<LawViolation> = poset
        .check_partial_order()
        .into_iter()
        .chain(poset.check_orthogonality_axioms())
        .filter(|c| !c.holds)
        .map(|c| LawViolation {
            law: law_name(&c.law),
            witness: c.witness,
        })
        .collect();
    if !violations.is_empty() {
        return Err(Error::InvalidPoset(violations));
    }
    Ok(ProjectionPoset {
        poset,
        points,
        products,
    })
}

fn law_name(law: &str) -> &'static str {
    [
        "reflexivity",
        "antisymmetry",
        "transitivity",
        "orthogonality symmetry",
        "antireflexivity above zero",
        "downward closure",
    ]
    .into_iter()
    .find(|l| *l == law)
    .unwrap_or("poset law")
}

/// One pair of the commute / projection / greatest-lower-bound comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub left: String,
    pub right: String,
    pub commute: bool,
    pub product_is_projection: bool,
    pub product_is_glb: bool,
}

impl PairVerdict {
    pub fn agrees(&self) -> bool {
        self.commute == self.product_is_projection && self.commute == self.product_is_glb
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommuteGlbReport {
    pub pairs_checked: usize,
    pub commuting_pairs: usize,
    /// Pairs where the three conditions do not all agree.
    pub disagreements: Vec<PairVerdict>,
    /// The first non-commuting pair, if any.
    pub noncommuting_example: Option<PairVerdict>,
}

impl CommuteGlbReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Greatest lower bound of `i` and `j`, found by exhaustive search.
pub(crate) fn glb(poset: &Poset, below_count: &[usize], i: usize, j: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..poset.len())
        .filter(|&k| poset.le(k, i) && poset.le(k, j))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&m| below_count[m] == lower.len())
}

pub(crate) fn below_counts(poset: &Poset) -> Vec<usize> {
    (0..poset.len())
        .map(|m| (0..poset.len()).filter(|&k| poset.le(k, m)).count())
        .collect()
}

/// For every ordered pair, checks that `p·q = q·p`, `p·q` is a projection,
/// and `p·q` is the greatest lower bound of `p, q` all hold or all fail.
pub fn commute_glb_equivalence<M: Morphism>(
    alg: &FrobeniusAlgebra<M>,
    pp: &ProjectionPoset<M>,
    tol: Tolerance,
) -> Result<CommuteGlbReport> {
    let n = pp.len();
    let poset = pp.poset();
    let below = below_counts(poset);
    let verdicts = exec::map(n * n, |k| -> Result<PairVerdict> {
        let (i, j) = (k / n, k % n);
        let prod = pp.product(i, j);
        let glb_holds = match glb(poset, &below, i, j) {
            Some(m) => prod.equal(&pp.points()[m], tol)?,
            None => false,
        };
        Ok(PairVerdict {
            left: poset.names[i].clone(),
            right: poset.names[j].clone(),
            commute: prod.equal(pp.product(j, i), tol)?,
            product_is_projection: alg.is_projection(prod, tol)?,
            product_is_glb: glb_holds,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(CommuteGlbReport {
        pairs_checked: verdicts.len(),
        commuting_pairs: verdicts.iter().filter(|v| v.commute).count(),
        noncommuting_example: verdicts.iter().find(|v| !v.commute).cloned(),
        disagreements: verdicts.into_iter().filter(|v| !v.agrees()).collect(),
    })
}

/// Subset inclusion on subgroupoids; meets are intersections, `⊥` is
/// disjointness and the empty subgroupoid is the zero.
pub fn inclusion_poset(g: &Groupoid, subgroupoids: &[BitSet]) -> Poset {
    Poset {
        names: subgroupoids.iter().map(|s| g.set_name(s)).collect(),
        leq: subgroupoids
            .iter()
            .map(|a| subgroupoids.iter().map(|b| a.is_subset(b)).collect())
            .collect(),
        orth: Some(
            subgroupoids
                .iter()
                .map(|a| subgroupoids.iter().map(|b| a.is_disjoint(b)).collect())
                .collect(),
        ),
        zero: subgroupoids.iter().position(BitSet::is_empty),
    }
}

/// A groupoid algebra, its subgroupoids, and those subgroupoids as named
/// points.
pub type SubgroupoidFamily = (
    FrobeniusAlgebra<Relation>,
    Vec<BitSet>,
    Vec<(String, Point<Relation>)>,
);

/// The groupoid algebra with every subgroupoid as a named point, in the
/// enumeration order.
pub fn subgroupoid_family(g: &Groupoid, limits: EnumLimits) -> Result<SubgroupoidFamily> {
    let alg = g.to_algebra();
    let subs = enumerate_subgroupoids(g, limits)?;
    let family = subs
        .iter()
        .map(|s| {
            Ok((
                g.set_name(s),
                alg.point(Relation::subset(alg.carrier(), s)?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((alg, subs, family))
}

/// Named points of `alg` with 0/1 coordinates that are projections.
pub fn zero_one_family(
    alg: &FrobeniusAlgebra<crate::backend::LinearMap>,
    tol: Tolerance,
) -> Result<Vec<(String, Point<crate::backend::LinearMap>)>> {
    let mut out = Vec::new();
    for (name, p) in crate::cstar::zero_one_points(alg)? {
        if alg.is_projection(&p, tol)? {
            out.push((name, p));
        }
    }
    Ok(out)
}

/// Every subset of a Rel carrier that is a projection, in lectic order, named
/// by its elements (carrier labels when present).
pub fn subset_projection_family(
    alg: &FrobeniusAlgebra<Relation>,
    tol: Tolerance,
) -> Result<Vec<(String, Point<Relation>)>> {
    let carrier = alg.carrier();
    let n = carrier.size();
    if n > crate::groupoid::BRUTE_FORCE_MAX {
        return Err(Error::ResourceLimit(format!(
            "2^{n} subsets of the carrier"
        )));
    }
    let name = |set: &BitSet| {
        let items: Vec<String> = set
            .iter()
            .map(|i| {
                carrier
                    .labels()
                    .map_or_else(|| i.to_string(), |l| l[i].clone())
            })
            .collect();
        format!("{{{}}}", items.join(","))
    };
    let hits = exec::map(
        1usize << n,
        |mask| -> Result<Option<(String, Point<Relation>)>> {
            let set = BitSet::from_mask(n, mask as u64);
            let p = alg.point(Relation::subset(carrier, &set)?)?;
            Ok(alg.is_projection(&p, tol)?.then(|| (name(&set), p)))
        },
    )
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut family: Vec<_> = hits.into_iter().flatten().collect();
    family.sort_by(|a, b| {
        let set = |p: &Point<Relation>| p.morphism().as_subset().cloned().expect("point");
        crate::groupoid::lectic_cmp(&set(&a.1), &set(&b.1))
    });
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::LinearMap;
    use crate::cstar::{basis_algebra, pants_algebra, point_from_matrix};
    use crate::groupoid::fixtures;
    use nalgebra::DMatrix;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn chain(n: usize) -> Poset {
        Poset {
            names: (0..n).map(|i| i.to_string()).collect(),
            leq: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
            orth: None,
            zero: Some(0),
        }
    }

    #[test]
    fn boolean_poset_from_basis_two() {
        let alg = basis_algebra(2).unwrap();
        let family = zero_one_family(&alg, tol()).unwrap();
        assert_eq!(family.len(), 4);
        let pp = build_poset(&alg, family, tol()).unwrap();
        let p = pp.poset();
        assert_eq!(p.names, ["00", "10", "01", "11"]);
        assert_eq!(p.zero, Some(0));
        let (e0, e1, one) = (1, 2, 3);
        assert!(p.le(0, e0) && p.le(e0, one) && !p.le(e0, e1));
        assert_eq!(p.orthogonal(e0, e1), Some(true));
        assert_eq!(p.orthogonal(e0, e0), Some(false));
        assert_eq!(p.hasse_edges().len(), 4);
    }

    #[test]
    fn zero_is_adjoined_when_missing() {
        let alg = basis_algebra(2).unwrap();
        let family = vec![("one".to_string(), alg.unit_point())];
        let pp = build_poset(&alg, family, tol()).unwrap();
        assert_eq!(pp.names(), ["one", ADJOINED_ZERO]);
        assert_eq!(pp.poset().zero, Some(1));
        let only_zero = build_poset(&alg, vec![("z".into(), alg.zero_point())], tol()).unwrap();
        assert_eq!(only_zero.len(), 1);
        assert!(only_zero
            .poset()
            .check_orthogonality_axioms()
            .iter()
            .all(|c| c.holds));
    }

    #[test]
    fn non_projection_and_duplicates_are_named() {
        let alg = pants_algebra(2).unwrap();
        let nil = point_from_matrix(
            &alg,
            &DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0].map(|x| x.into())),
        )
        .unwrap();
        let err = build_poset(&alg, vec![("nil".into(), nil)], tol()).unwrap_err();
        assert_eq!(err, Error::NotAProjection("nil".into()));
        let dup = vec![
            ("a".to_string(), alg.unit_point()),
            ("a".to_string(), alg.zero_point()),
        ];
        assert_eq!(
            build_poset(&alg, dup, tol()).unwrap_err(),
            Error::DuplicateElement("a".into())
        );
    }

    #[test]
    fn loose_tolerance_makes_the_order_collapse() {
        let alg = basis_algebra(2).unwrap();
        let family = zero_one_family(&alg, tol()).unwrap();
        let err = build_poset(&alg, family, Tolerance::new(10.0).unwrap()).unwrap_err();
        let Error::InvalidPoset(violations) = err else {
            panic!("expected a law report, got {err:?}");
        };
        let laws: Vec<_> = violations.iter().map(|v| v.law).collect();
        assert!(laws.contains(&"antisymmetry"));
        assert!(laws.contains(&"antireflexivity above zero"));
    }

    #[test]
    fn edited_orthogonality_is_caught() {
        let alg = basis_algebra(2).unwrap();
        let pp = build_poset(&alg, zero_one_family(&alg, tol()).unwrap(), tol()).unwrap();
        let mut poset = pp.poset().clone();
        // e₀ ⊥ e₁ but make 0 ≤ e₀ fail to inherit it
        poset.orth.as_mut().unwrap()[0][2] = false;
        poset.orth.as_mut().unwrap()[2][0] = false;
        let down = poset
            .check_orthogonality_axioms()
            .into_iter()
            .find(|c| c.law == "downward closure")
            .unwrap();
        assert!(!down.holds);
        assert_eq!(down.witness, ["00", "10", "01"]);
    }

    #[test]
    fn interval_pair_does_not_commute() {
        let g = fixtures::interval();
        let (alg, _, family) = subgroupoid_family(&g, EnumLimits::default()).unwrap();
        let pp = build_poset(&alg, family, tol()).unwrap();
        let report = commute_glb_equivalence(&alg, &pp, tol()).unwrap();
        assert!(report.holds(), "{:?}", report.disagreements);
        let x = pp.poset().index_of("{id_x}").unwrap();
        let full = pp.poset().index_of("{id_x,id_y,f,f_inv}").unwrap();
        let xf = pp.product(x, full).morphism().as_subset().unwrap().clone();
        let fx = pp.product(full, x).morphism().as_subset().unwrap().clone();
        assert_eq!(g.set_name(&xf), "{id_x,f_inv}");
        assert_eq!(g.set_name(&fx), "{id_x,f}");
        assert!(report.noncommuting_example.is_some());
    }

    #[test]
    fn basis_three_products_are_componentwise_min() {
        let alg = basis_algebra(3).unwrap();
        let pp = build_poset(&alg, zero_one_family(&alg, tol()).unwrap(), tol()).unwrap();
        let report = commute_glb_equivalence(&alg, &pp, tol()).unwrap();
        assert_eq!(report.commuting_pairs, 64);
        assert!(report.holds());
        for i in 0..8 {
            for j in 0..8 {
                let and: String = pp.names()[i]
                    .chars()
                    .zip(pp.names()[j].chars())
                    .map(|(a, b)| if a == '1' && b == '1' { '1' } else { '0' })
                    .collect();
                let prod = pp.product(i, j);
                let k = pp.poset().index_of(&and).unwrap();
                assert!(prod.equal(&pp.points()[k], tol()).unwrap());
            }
        }
    }

    #[test]
    fn group_posets_bijection_with_subgroupoids() {
        for (name, g) in fixtures::all_fixtures() {
            let (alg, subs, family) = subgroupoid_family(&g, EnumLimits::default()).unwrap();
            let pp = build_poset(&alg, family, tol()).unwrap();
            assert_eq!(pp.len(), subs.len(), "{name}");
            for (i, s) in subs.iter().enumerate() {
                assert_eq!(pp.points()[i].morphism().as_subset(), Some(s), "{name}");
            }
        }
    }

    #[test]
    fn subset_scan_finds_the_subgroupoids() {
        for g in [
            fixtures::klein4(),
            fixtures::interval(),
            fixtures::symmetric3(),
        ] {
            let (alg, subs, _) = subgroupoid_family(&g, EnumLimits::default()).unwrap();
            let scanned = subset_projection_family(&alg, tol()).unwrap();
            let sets: Vec<BitSet> = scanned
                .iter()
                .map(|(_, p)| p.morphism().as_subset().unwrap().clone())
                .collect();
            assert_eq!(sets, subs);
            assert_eq!(scanned[0].0, "{}");
        }
    }

    #[test]
    fn hasse_roundtrip() {
        let two = chain(2);
        assert_eq!(two.hasse_edges(), [(0, 1)]);
        assert_eq!(transitive_closure(5, &chain(5).hasse_edges()), chain(5).leq);
        let g = fixtures::klein4();
        let subs = enumerate_subgroupoids(&g, EnumLimits::default()).unwrap();
        let incl = inclusion_poset(&g, &subs);
        let edges = incl.hasse_edges();
        assert_eq!(edges.len(), 1 + 3 + 3);
        assert_eq!(transitive_closure(incl.len(), &edges), incl.leq);
    }

    #[test]
    fn fhilb_rank_one_family() {
        let alg = pants_algebra(2).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let m = |v: [f64; 2]| DMatrix::from_fn(2, 2, |i, j| (v[i] * v[j]).into());
        let family: Vec<(String, Point<LinearMap>)> =
            [("a", m([1.0, 0.0])), ("b", m([0.0, 1.0])), ("c", m([h, h]))]
                .into_iter()
                .map(|(n, rho)| (n.to_string(), point_from_matrix(&alg, &rho).unwrap()))
                .chain([("1".to_string(), alg.unit_point())])
                .collect();
        let pp = build_poset(&alg, family, tol()).unwrap();
        let p = pp.poset();
        assert_eq!(p.orthogonal(0, 1), Some(true));
        assert_eq!(p.orthogonal(0, 2), Some(false));
        assert!(!p.le(0, 2) && !p.le(2, 0));
        let report = commute_glb_equivalence(&alg, &pp, tol()).unwrap();
        assert!(report.holds(), "{:?}", report.disagreements);
    }
}
