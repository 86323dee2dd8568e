//! Lattice analysis of finite posets: meet/join tables, distributivity and
//! modularity scans, the M₃/N₅ sublattice search, order comparison, the
//! orthocomplement probe and the subgroup-lattice check against cyclicity.

use serde::{Deserialize, Serialize};

use super::{below_counts, first_triple, glb, inclusion_poset, Poset};
use crate::error::{Error, Result};
use crate::groupoid::{enumerate_subgroupoids, EnumLimits, Groupoid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    /// `witness = [a, b, c]`; `lhs` and `rhs` are the two sides of the law.
    Fails {
        witness: Vec<String>,
        lhs: String,
        rhs: String,
    },
    NotApplicable,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementProbe {
    pub element: String,
    /// Maximum of the elements orthogonal to this one, if there is one.
    pub complement: Option<String>,
    pub meet_is_zero: bool,
    pub join_is_top: bool,
    pub involutive: bool,
    pub order_reversing: bool,
}

impl ComplementProbe {
    pub fn succeeds(&self) -> bool {
        self.complement.is_some()
            && self.meet_is_zero
            && self.join_is_top
            && self.involutive
            && self.order_reversing
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthoProbe {
    /// False when the poset has no orthogonality, top or bottom.
    pub applicable: bool,
    pub elements: Vec<ComplementProbe>,
}

impl OrthoProbe {
    pub fn succeeds_everywhere(&self) -> bool {
        self.applicable && self.elements.iter().all(ComplementProbe::succeeds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub names: Vec<String>,
    pub is_lattice: bool,
    pub meet: Vec<Vec<Option<usize>>>,
    pub join: Vec<Vec<Option<usize>>>,
    pub distributive: Verdict,
    pub modular: Verdict,
    pub orthocomplement: OrthoProbe,
}

type Table = Vec<Vec<Option<usize>>>;

fn tables(poset: &Poset) -> (Table, Table) {
    let n = poset.len();
    let below = below_counts(poset);
    let dual = Poset {
        names: poset.names.clone(),
        leq: (0..n)
            .map(|i| (0..n).map(|j| poset.le(j, i)).collect())
            .collect(),
        orth: None,
        zero: None,
    };
    let above = below_counts(&dual);
    let meet = (0..n)
        .map(|i| (0..n).map(|j| glb(poset, &below, i, j)).collect())
        .collect();
    let join = (0..n)
        .map(|i| (0..n).map(|j| glb(&dual, &above, i, j)).collect())
        .collect();
    (meet, join)
}

/// Meets and joins by exhaustive search, then the distributive and modular
/// laws over every triple. Witnesses are the first failing triple in index
/// order.
pub fn lattice_report(poset: &Poset) -> LatticeReport {
    let n = poset.len();
    let (meet, join) = tables(poset);
    let is_lattice = meet
        .iter()
        .chain(&join)
        .all(|row| row.iter().all(Option::is_some));
    let (distributive, modular) = if is_lattice {
        let m = |a: usize, b: usize| meet[a][b].expect("lattice");
        let j = |a: usize, b: usize| join[a][b].expect("lattice");
        let verdict =
            |found: Option<(usize, usize, usize)>,
             sides: &dyn Fn(usize, usize, usize) -> (usize, usize)| {
                match found {
                    None => Verdict::Holds,
                    Some((a, b, c)) => {
                        let (l, r) = sides(a, b, c);
                        Verdict::Fails {
                            witness: vec![
                                poset.names[a].clone(),
                                poset.names[b].clone(),
                                poset.names[c].clone(),
                            ],
                            lhs: poset.names[l].clone(),
                            rhs: poset.names[r].clone(),
                        }
                    }
                }
            };
        let dist_sides = |a: usize, b: usize, c: usize| (m(a, j(b, c)), j(m(a, b), m(a, c)));
        let mod_sides = |a: usize, b: usize, c: usize| (j(a, m(b, c)), m(j(a, b), c));
        let dist = first_triple(n, |a, b, c| {
            let (l, r) = dist_sides(a, b, c);
            l != r
        });
        let modular = first_triple(n, |a, b, c| {
            let (l, r) = mod_sides(a, b, c);
            poset.le(a, c) && l != r
        });
        (verdict(dist, &dist_sides), verdict(modular, &mod_sides))
    } else {
        (Verdict::NotApplicable, Verdict::NotApplicable)
    };
    let orthocomplement = probe_with(poset, &meet, &join);
    LatticeReport {
        names: poset.names.clone(),
        is_lattice,
        meet,
        join,
        distributive,
        modular,
        orthocomplement,
    }
}

/// M₃ and N₅ copies found from the meet/join tables alone, each listed as
/// `[bottom, x, y, z, top]` resp. `[bottom, a, b, c, top]` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenSublattice {
    pub m3: Option<Vec<String>>,
    pub n5: Option<Vec<String>>,
}

impl ForbiddenSublattice {
    pub fn distributive(&self) -> bool {
        self.m3.is_none() && self.n5.is_none()
    }

    pub fn modular(&self) -> bool {
        self.n5.is_none()
    }
}

/// Searches for the two forbidden sublattices. Only meaningful for lattices;
/// returns `None` otherwise.
pub fn forbidden_sublattice(report: &LatticeReport) -> Option<ForbiddenSublattice> {
    if !report.is_lattice {
        return None;
    }
    let n = report.names.len();
    let m = |a: usize, b: usize| report.meet[a][b].expect("lattice");
    let j = |a: usize, b: usize| report.join[a][b].expect("lattice");
    let below = |a: usize, b: usize| a != b && m(a, b) == a;
    let comparable = |a: usize, b: usize| m(a, b) == a || m(a, b) == b;
    let name = |idx: [usize; 5]| {
        idx.iter()
            .map(|&i| report.names[i].clone())
            .collect::<Vec<_>>()
    };

    let m3 = first_triple(n, |x, y, z| {
        x < y
            && y < z
            && !comparable(x, y)
            && !comparable(x, z)
            && !comparable(y, z)
            && m(x, y) == m(x, z)
            && m(x, y) == m(y, z)
            && j(x, y) == j(x, z)
            && j(x, y) == j(y, z)
    })
    .map(|(x, y, z)| name([m(x, y), x, y, z, j(x, y)]));
    let n5 = first_triple(n, |a, b, c| {
        below(a, b) && m(a, c) == m(b, c) && j(a, c) == j(b, c)
    })
    .map(|(a, b, c)| name([m(a, c), a, b, c, j(a, c)]));
    Some(ForbiddenSublattice { m3, n5 })
}

/// For each element `a`, looks for the largest `a′ ⊥ a` and checks whether it
/// behaves as an orthocomplement.
pub fn orthocomplement_probe(poset: &Poset) -> OrthoProbe {
    let (meet, join) = tables(poset);
    probe_with(poset, &meet, &join)
}

fn probe_with(poset: &Poset, meet: &Table, join: &Table) -> OrthoProbe {
    let (Some(orth), Some(bottom), Some(top)) = (&poset.orth, poset.bottom(), poset.top()) else {
        return OrthoProbe {
            applicable: false,
            elements: Vec::new(),
        };
    };
    let n = poset.len();
    let complement: Vec<Option<usize>> = (0..n)
        .map(|a| {
            let orth_set: Vec<usize> = (0..n).filter(|&b| orth[a][b]).collect();
            orth_set
                .iter()
                .copied()
                .find(|&c| orth_set.iter().all(|&b| poset.le(b, c)))
        })
        .collect();
    let elements = (0..n)
        .map(|a| {
            let c = complement[a];
            let reversing = c.is_some()
                && (0..n)
                    .filter(|&b| poset.le(a, b))
                    .all(|b| match (complement[b], c) {
                        (Some(cb), Some(ca)) => poset.le(cb, ca),
                        _ => false,
                    });
            ComplementProbe {
                element: poset.names[a].clone(),
                complement: c.map(|c| poset.names[c].clone()),
                meet_is_zero: c.is_some_and(|c| meet[a][c] == Some(bottom)),
                join_is_top: c.is_some_and(|c| join[a][c] == Some(top)),
                involutive: c.is_some_and(|c| complement[c] == Some(a)),
                order_reversing: reversing,
            }
        })
        .collect();
    OrthoProbe {
        applicable: true,
        elements,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderRelation {
    Equal,
    Dual,
    /// Dual once the common bottom element is set aside.
    DualExceptBottom,
    Neither,
}

/// A pair `lower ≤ upper` that holds in exactly one of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDifference {
    pub lower: String,
    pub upper: String,
    pub in_first: bool,
    pub in_second: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderComparison {
    pub relation: OrderRelation,
    pub differences: Vec<OrderDifference>,
}

/// Compares two orders on the same named elements.
pub fn compare_orders(first: &Poset, second: &Poset) -> Result<OrderComparison> {
    let mut sorted_a = first.names.clone();
    let mut sorted_b = second.names.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Err(Error::ElementMismatch(format!(
            "{{{}}} vs {{{}}}",
            first.names.join(", "),
            second.names.join(", ")
        )));
    }
    let n = first.len();
    let to_second: Vec<usize> = first
        .names
        .iter()
        .map(|name| second.index_of(name).expect("same element set"))
        .collect();
    let le2 = |i: usize, j: usize| second.le(to_second[i], to_second[j]);
    let pairs = || {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
    };

    let differences: Vec<OrderDifference> = pairs()
        .filter(|&(i, j)| first.le(i, j) != le2(i, j))
        .map(|(i, j)| OrderDifference {
            lower: first.names[i].clone(),
            upper: first.names[j].clone(),
            in_first: first.le(i, j),
            in_second: le2(i, j),
        })
        .collect();
    let dual_on = |skip: Option<usize>| {
        pairs()
            .filter(|&(i, j)| Some(i) != skip && Some(j) != skip)
            .all(|(i, j)| first.le(i, j) == le2(j, i))
    };
    let common_bottom = first
        .bottom()
        .filter(|&b| second.bottom() == Some(to_second[b]));
    let relation = if differences.is_empty() {
        OrderRelation::Equal
    } else if dual_on(None) {
        OrderRelation::Dual
    } else if common_bottom.is_some() && dual_on(common_bottom) {
        OrderRelation::DualExceptBottom
    } else {
        OrderRelation::Neither
    };
    Ok(OrderComparison {
        relation,
        differences,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreRow {
    pub name: String,
    pub order: usize,
    pub subgroups: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub distributive: bool,
    pub modular: bool,
    /// The M₃/N₅ search reaches the same distributivity and modularity verdicts.
    pub sublattice_check_agrees: bool,
}

impl OreRow {
    pub fn agrees(&self) -> bool {
        self.cyclic == self.distributive && self.sublattice_check_agrees
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreReport {
    pub rows: Vec<OreRow>,
}

impl OreReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(OreRow::agrees)
    }
}

/// For each finite group, compares distributivity of its subgroup lattice
/// with cyclicity.
pub fn ore_crossvalidate(fixtures: &[(String, Groupoid)], limits: EnumLimits) -> Result<OreReport> {
    let mut rows = Vec::with_capacity(fixtures.len());
    for (name, g) in fixtures {
        let cyclic = g
            .is_cyclic_group()
            .map_err(|_| Error::NotAGroup(name.clone()))?;
        let subgroups: Vec<_> = enumerate_subgroupoids(g, limits)?
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        let report = lattice_report(&inclusion_poset(g, &subgroups));
        let forbidden = forbidden_sublattice(&report);
        let distributive = report.distributive.holds();
        let modular = report.modular.holds();
        rows.push(OreRow {
            name: name.clone(),
            order: g.num_morphisms(),
            subgroups: subgroups.len(),
            abelian: g.is_abelian(),
            cyclic,
            distributive,
            modular,
            sublattice_check_agrees: forbidden
                .is_some_and(|f| f.distributive() == distributive && f.modular() == modular),
        });
    }
    Ok(OreReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::Tolerance;
    use crate::cstar::basis_algebra;
    use crate::groupoid::fixtures;
    use crate::projorder::{build_poset, subgroupoid_family, zero_one_family};

    fn incl(g: &Groupoid) -> Poset {
        inclusion_poset(
            g,
            &enumerate_subgroupoids(g, EnumLimits::default()).unwrap(),
        )
    }

    fn mult(g: &Groupoid) -> Poset {
        let (alg, _, family) = subgroupoid_family(g, EnumLimits::default()).unwrap();
        build_poset(&alg, family, Tolerance::default())
            .unwrap()
            .poset()
            .clone()
    }

    #[test]
    fn klein_inclusion_lattice_is_m3_over_a_bottom() {
        let g = fixtures::klein4();
        let report = lattice_report(&incl(&g));
        assert!(report.is_lattice);
        let Verdict::Fails { witness, lhs, rhs } = &report.distributive else {
            panic!("expected failure");
        };
        assert_eq!(lhs, &witness[0]);
        assert_ne!(lhs, rhs);
        assert!(report.modular.holds());
        let forbidden = forbidden_sublattice(&report).unwrap();
        assert!(forbidden.m3.is_some() && forbidden.n5.is_none());
    }

    #[test]
    fn interval_inclusion_is_distributive_and_mult_order_is_not() {
        let g = fixtures::interval();
        let inclusion = lattice_report(&incl(&g));
        assert!(inclusion.distributive.holds());
        assert_eq!(inclusion.names.len(), 5);
        let multiplication = lattice_report(&mult(&g));
        assert!(multiplication.is_lattice);
        assert!(multiplication.distributive.fails());
        let cmp = compare_orders(&mult(&g), &incl(&g)).unwrap();
        assert_eq!(cmp.relation, OrderRelation::Neither);
        assert!(cmp.differences.contains(&OrderDifference {
            lower: "{id_x,id_y,f,f_inv}".into(),
            upper: "{id_x,id_y}".into(),
            in_first: true,
            in_second: false,
        }));
    }

    #[test]
    fn group_orders_are_dual_except_bottom() {
        for (name, g) in fixtures::ore_fixtures() {
            let cmp = compare_orders(&mult(&g), &incl(&g)).unwrap();
            let expected = if g.num_morphisms() == 1 {
                OrderRelation::Equal
            } else {
                OrderRelation::DualExceptBottom
            };
            assert_eq!(cmp.relation, expected, "{name}");
        }
        let p = incl(&fixtures::klein4());
        assert_eq!(
            compare_orders(&p, &p).unwrap().relation,
            OrderRelation::Equal
        );
        assert!(compare_orders(&p, &incl(&fixtures::interval())).is_err());
    }

    #[test]
    fn boolean_lattice_is_complemented() {
        for n in 1..=3 {
            let alg = basis_algebra(n).unwrap();
            let pp = build_poset(
                &alg,
                zero_one_family(&alg, Tolerance::default()).unwrap(),
                Tolerance::default(),
            )
            .unwrap();
            let report = lattice_report(pp.poset());
            assert!(report.distributive.holds() && report.modular.holds());
            assert!(report.orthocomplement.succeeds_everywhere());
            assert!(forbidden_sublattice(&report).unwrap().distributive());
        }
    }

    #[test]
    fn klein_inclusion_probe_fails_somewhere() {
        let probe = orthocomplement_probe(&incl(&fixtures::klein4()));
        assert!(probe.applicable);
        assert!(!probe.succeeds_everywhere());
        let atom = probe
            .elements
            .iter()
            .find(|e| e.element == "{(0,0),(0,1)}")
            .unwrap();
        assert_eq!(atom.complement.as_deref(), Some("{}"));
        assert!(!atom.join_is_top);
    }

    #[test]
    fn probe_is_vacuous_on_one_element() {
        let single = Poset {
            names: vec!["0".into()],
            leq: vec![vec![true]],
            orth: Some(vec![vec![true]]),
            zero: Some(0),
        };
        let probe = orthocomplement_probe(&single);
        assert!(probe.applicable && probe.succeeds_everywhere());
        let report = lattice_report(&single);
        assert!(report.distributive.holds());
    }

    #[test]
    fn non_lattice_marks_laws_not_applicable() {
        // two incomparable maximal elements over a bottom
        let v = Poset {
            names: vec!["0".into(), "a".into(), "b".into()],
            leq: vec![
                vec![true, true, true],
                vec![false, true, false],
                vec![false, false, true],
            ],
            orth: None,
            zero: Some(0),
        };
        let report = lattice_report(&v);
        assert!(!report.is_lattice);
        assert_eq!(report.distributive, Verdict::NotApplicable);
        assert!(forbidden_sublattice(&report).is_none());
        assert!(!report.orthocomplement.applicable);
    }

    #[test]
    fn pentagon_is_not_modular() {
        // 0 < a < b < 1, 0 < c < 1
        let names = ["0", "a", "b", "c", "1"];
        let up = [
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 4],
            vec![2, 4],
            vec![3, 4],
            vec![4],
        ];
        let p = Poset {
            names: names.map(String::from).to_vec(),
            leq: (0..5)
                .map(|i| (0..5).map(|j| up[i].contains(&j)).collect())
                .collect(),
            orth: None,
            zero: Some(0),
        };
        let report = lattice_report(&p);
        assert!(report.modular.fails() && report.distributive.fails());
        let f = forbidden_sublattice(&report).unwrap();
        assert_eq!(f.n5.unwrap(), ["0", "a", "b", "c", "1"]);
        assert!(f.m3.is_none());
    }

    #[test]
    fn ore_on_fixtures() {
        let report = ore_crossvalidate(&fixtures::ore_fixtures(), EnumLimits::default()).unwrap();
        assert!(report.all_agree(), "{report:?}");
        let q8 = report
            .rows
            .iter()
            .find(|r| r.name == "quaternion8")
            .unwrap();
        assert!(!q8.distributive && q8.modular);
        let err = ore_crossvalidate(
            &[("interval".into(), fixtures::interval())],
            EnumLimits::default(),
        );
        assert!(matches!(err, Err(Error::NotAGroup(_))));
    }
}
