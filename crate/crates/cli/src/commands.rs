//! One function per subcommand, each returning a report.

use qlogic::bitset::BitSet;
use qlogic::cstar::{pants_algebra, point_from_matrix, random_projection};
use qlogic::doc::AnyAlgebra;
use qlogic::error::LawViolation;
use qlogic::groupoid::{self, enumerate_copyables, enumerate_subgroupoids, Groupoid};
use qlogic::projorder::{
    build_poset, commute_glb_equivalence, forbidden_sublattice, inclusion_poset, lattice_report,
    subgroupoid_family, subset_projection_family, zero_one_family, Poset, ProjectionPoset, Verdict,
};
use qlogic::tensor::{bi_order_check, groupoid_coherence, tensor_algebras};
use qlogic::{AxiomReport, Backend, Error, FrobeniusAlgebra, LinearMap, Morphism, Point, Relation};

use crate::input::{self, Input, Loaded};
use crate::report::{Hasse, Item, Report, Section};
use crate::{CliError, Config, Order, Outcome};

/// Largest `|A|·|B|` for which the tensor command runs the exhaustive
/// bi-order check (its cost grows with the square of this).
pub const BI_ORDER_MAX_PAIRS: usize = 64;

pub enum Subject {
    Groupoid(Groupoid),
    Algebra(AnyAlgebra),
}

impl Subject {
    pub fn backend(&self) -> Backend {
        match self {
            Subject::Groupoid(_) => Backend::Rel,
            Subject::Algebra(a) => a.backend(),
        }
    }
}

pub fn resolve(loaded: &Loaded) -> Result<Subject, CliError> {
    Ok(match &loaded.input {
        Input::Groupoid(spec) => Subject::Groupoid(groupoid::validate(spec)?),
        Input::Algebra(doc) => Subject::Algebra(doc.build()?),
    })
}

fn violation_items(violations: &[LawViolation]) -> Vec<Item> {
    violations
        .iter()
        .map(|v| Item::Check {
            law: v.law.to_string(),
            holds: false,
            witness: v.witness.clone(),
            residual: None,
        })
        .collect()
}

fn axiom_section(title: &str, report: &AxiomReport) -> Section {
    let items = report
        .results
        .iter()
        .map(|r| Item::Check {
            law: r.axiom.to_string(),
            holds: r.holds,
            witness: Vec::new(),
            residual: Some(r.residual),
        })
        .collect();
    Section::new(title, items)
}

fn set_names(g: &Groupoid, sets: &[BitSet]) -> Vec<String> {
    sets.iter().map(|s| g.set_name(s)).collect()
}

pub fn validate(
    loaded: &Loaded,
    backend: Option<Backend>,
    cfg: &Config,
) -> Result<Report, CliError> {
    let found = match &loaded.input {
        Input::Groupoid(_) => Backend::Rel,
        Input::Algebra(doc) => doc.backend,
    };
    if let Some(wanted) = backend.filter(|&b| b != found) {
        return Err(CliError::Usage(format!(
            "`{}` is a {found} document, not {wanted}",
            loaded.name
        )));
    }
    let mut report = Report::new("validate", &loaded.name);
    match &loaded.input {
        Input::Groupoid(spec) => match groupoid::validate(spec) {
            Err(Error::InvalidGroupoid(violations)) => {
                report.push(Section::new("groupoid laws", violation_items(&violations)));
            }
            Err(e) => return Err(e.into()),
            Ok(g) => {
                report.push(Section::new(
                    "groupoid",
                    vec![
                        Item::check("groupoid laws", true),
                        Item::fact("objects", g.num_objects()),
                        Item::fact("morphisms", g.num_morphisms()),
                        Item::list("components", set_names(&g, &g.connected_components())),
                    ],
                ));
                let axioms = g.to_algebra().check_axioms(cfg.tol)?;
                report.push(axiom_section("frobenius axioms (rel)", &axioms));
            }
        },
        Input::Algebra(doc) => {
            let axioms = match doc.build()? {
                AnyAlgebra::FHilb(a) => a.check_axioms(cfg.tol)?,
                AnyAlgebra::Rel(a) => a.check_axioms(cfg.tol)?,
            };
            report.push(Section::new(
                "algebra",
                vec![
                    Item::fact("backend", doc.backend),
                    Item::fact("carrier", doc.carrier.size),
                ],
            ));
            report.push(axiom_section(
                &format!("frobenius axioms ({})", doc.backend),
                &axioms,
            ));
        }
    }
    Ok(report)
}

/// The named projections a command works with, in either category.
pub enum Family {
    Rel(FrobeniusAlgebra<Relation>, Vec<(String, Point<Relation>)>),
    FHilb(FrobeniusAlgebra<LinearMap>, Vec<(String, Point<LinearMap>)>),
}

/// Side `n` when `alg` is the algebra of `n×n` matrices.
fn pants_side(alg: &FrobeniusAlgebra<LinearMap>, cfg: &Config) -> Option<usize> {
    let dim = alg.carrier().size();
    let n = (1..=dim).find(|n| n * n >= dim).filter(|n| n * n == dim)?;
    let pants = pants_algebra(n).ok()?;
    let same = pants.mult().equal(alg.mult(), cfg.tol).ok()?
        && pants.unit().equal(alg.unit(), cfg.tol).ok()?;
    same.then_some(n)
}

/// Subgroupoids for a groupoid, projection subsets for a relation algebra,
/// 0/1 projections for a linear one plus `samples` seeded random projections
/// of intermediate rank when it is a full matrix algebra.
pub fn family(subject: &Subject, samples: usize, cfg: &Config) -> Result<Family, CliError> {
    Ok(match subject {
        Subject::Groupoid(g) => {
            let (alg, _, fam) = subgroupoid_family(g, cfg.limits)?;
            Family::Rel(alg, fam)
        }
        Subject::Algebra(AnyAlgebra::Rel(alg)) => {
            Family::Rel(alg.clone(), subset_projection_family(alg, cfg.tol)?)
        }
        Subject::Algebra(AnyAlgebra::FHilb(alg)) => {
            let mut fam = zero_one_family(alg, cfg.tol)?;
            if let Some(n) = pants_side(alg, cfg).filter(|&n| n >= 2) {
                for k in 0..samples {
                    let rank = 1 + k % (n - 1);
                    let rho = random_projection(n, rank, cfg.seed.wrapping_add(k as u64))?;
                    fam.push((format!("r{k}"), point_from_matrix(alg, &rho)?));
                }
            }
            Family::FHilb(alg.clone(), fam)
        }
    })
}

/// Builds the order, reporting broken laws as failing checks instead of an
/// error. `None` when the family does not form an order.
fn order_sections<M: Morphism>(
    alg: &FrobeniusAlgebra<M>,
    fam: Vec<(String, Point<M>)>,
    cfg: &Config,
    report: &mut Report,
) -> Result<Option<ProjectionPoset<M>>, CliError> {
    let supplied = fam.len();
    let pp = match build_poset(alg, fam, cfg.tol) {
        Ok(pp) => pp,
        Err(Error::InvalidPoset(violations)) => {
            report.push(Section::new("order laws", violation_items(&violations)));
            return Ok(None);
        }
        Err(e) => return Err(e.into()),
    };
    let poset = pp.poset();
    let mut items = vec![
        Item::fact("projections", supplied),
        Item::fact("adjoined zero", poset.len() > supplied),
    ];
    items.extend(poset.check_partial_order().into_iter().map(Item::from));
    items.extend(
        poset
            .check_orthogonality_axioms()
            .into_iter()
            .map(Item::from),
    );
    report.push(Section::new("order laws", items));

    let cg = commute_glb_equivalence(alg, &pp, cfg.tol)?;
    let mut items = vec![
        Item::fact("pairs", cg.pairs_checked),
        Item::fact("commuting pairs", cg.commuting_pairs),
        Item::Check {
            law: "commute iff product is a projection iff product is the meet".into(),
            holds: cg.holds(),
            witness: cg
                .disagreements
                .first()
                .map(|v| vec![v.left.clone(), v.right.clone()])
                .unwrap_or_default(),
            residual: None,
        },
    ];
    if let Some(v) = &cg.noncommuting_example {
        items.push(Item::list("non-commuting pair", [&v.left, &v.right]));
    }
    report.push(Section::new("products", items));
    Ok(Some(pp))
}

pub fn projections(loaded: &Loaded, samples: usize, cfg: &Config) -> Result<Report, CliError> {
    let subject = resolve(loaded)?;
    let mut report = Report::new("projections", &loaded.name);
    let poset = match family(&subject, samples, cfg)? {
        Family::Rel(alg, fam) => {
            order_sections(&alg, fam, cfg, &mut report)?.map(|p| p.poset().clone())
        }
        Family::FHilb(alg, fam) => {
            order_sections(&alg, fam, cfg, &mut report)?.map(|p| p.poset().clone())
        }
    };
    report.hasse = poset.as_ref().map(Hasse::of);
    Ok(report)
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Holds => "yes".into(),
        Verdict::NotApplicable => "n/a (not a lattice)".into(),
        Verdict::Fails { witness, lhs, rhs } => {
            format!("no: ({}) gives {lhs} vs {rhs}", witness.join(", "))
        }
    }
}

/// Lattice facts for `poset`. Failing distributivity or modularity is a
/// finding, not a failed check; only the order laws can fail.
pub fn lattice_sections(poset: &Poset, report: &mut Report) {
    report.push(Section::new(
        "order laws",
        poset
            .check_partial_order()
            .into_iter()
            .map(Item::from)
            .collect(),
    ));
    let lr = lattice_report(poset);
    let mut items = vec![
        Item::fact("elements", poset.len()),
        Item::fact("lattice", if lr.is_lattice { "yes" } else { "no" }),
        Item::fact("distributive", verdict_text(&lr.distributive)),
        Item::fact("modular", verdict_text(&lr.modular)),
    ];
    if let Some(fs) = forbidden_sublattice(&lr) {
        let show = |s: &Option<Vec<String>>| s.as_ref().map_or("none".into(), |v| v.join(", "));
        items.push(Item::fact("M3 sublattice", show(&fs.m3)));
        items.push(Item::fact("N5 sublattice", show(&fs.n5)));
    }
    report.push(Section::new("lattice", items));

    let probe = &lr.orthocomplement;
    let mut items = vec![Item::fact(
        "orthocomplemented",
        match (probe.applicable, probe.succeeds_everywhere()) {
            (false, _) => "n/a",
            (true, true) => "yes",
            (true, false) => "no",
        },
    )];
    if probe.applicable {
        items.push(Item::list(
            "complements",
            probe.elements.iter().map(|c| {
                let status = if c.succeeds() { "ok" } else { "fails" };
                format!(
                    "{} -> {} ({status})",
                    c.element,
                    c.complement.as_deref().unwrap_or("none")
                )
            }),
        ));
    }
    report.push(Section::new("orthocomplement", items));
    report.hasse = Some(Hasse::of(poset));
}

pub fn lattice(
    loaded: &Loaded,
    order: Order,
    samples: usize,
    cfg: &Config,
) -> Result<Report, CliError> {
    let subject = resolve(loaded)?;
    let title = match order {
        Order::Mult => "lattice (multiplication order)",
        Order::Inclusion => "lattice (inclusion order)",
    };
    let mut report = Report::new(title, &loaded.name);
    let poset = match (order, &subject) {
        (Order::Inclusion, Subject::Groupoid(g)) => {
            inclusion_poset(g, &enumerate_subgroupoids(g, cfg.limits)?)
        }
        (Order::Inclusion, Subject::Algebra(_)) => {
            return Err(CliError::Usage(
                "--order inclusion needs a groupoid input".into(),
            ))
        }
        (Order::Mult, _) => {
            let mut scratch = Report::new("", "");
            let pp = match family(&subject, samples, cfg)? {
                Family::Rel(alg, fam) => {
                    order_sections(&alg, fam, cfg, &mut scratch)?.map(|p| p.poset().clone())
                }
                Family::FHilb(alg, fam) => {
                    order_sections(&alg, fam, cfg, &mut scratch)?.map(|p| p.poset().clone())
                }
            };
            match pp {
                Some(p) => p,
                None => {
                    report.sections = scratch.sections;
                    report.passed = false;
                    return Ok(report);
                }
            }
        }
    };
    lattice_sections(&poset, &mut report);
    Ok(report)
}

pub fn copyables(loaded: &Loaded, cfg: &Config) -> Result<Report, CliError> {
    let subject = resolve(loaded)?;
    let mut report = Report::new("copyables", &loaded.name);
    match &subject {
        Subject::Groupoid(g) => {
            let alg = g.to_algebra();
            let found = enumerate_copyables(&alg, cfg.limits)?;
            let mut expected = g.connected_components();
            expected.push(BitSet::new(g.num_morphisms()));
            expected.sort_by(groupoid::lectic_cmp);
            let central = central_check(&alg, &found, cfg)?;
            report.push(Section::new(
                "copyables",
                vec![
                    Item::list("copyable", set_names(g, &found)),
                    Item::list("components and empty set", set_names(g, &expected)),
                    Item::Check {
                        law: "copyables are the components and the empty set".into(),
                        holds: found == expected,
                        witness: set_names(g, &symmetric_difference(&found, &expected)),
                        residual: None,
                    },
                    central,
                ],
            ));
        }
        Subject::Algebra(AnyAlgebra::Rel(alg)) => {
            let found = enumerate_copyables(alg, cfg.limits)?;
            let names = found.iter().map(|s| {
                let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", items.join(","))
            });
            let central = central_check(alg, &found, cfg)?;
            report.push(Section::new(
                "copyables",
                vec![Item::list("copyable", names), central],
            ));
        }
        Subject::Algebra(AnyAlgebra::FHilb(alg)) => {
            let mut names = Vec::new();
            let mut not_central = Vec::new();
            for (name, p) in qlogic::cstar::zero_one_points(alg)? {
                if alg.is_copyable(&p, cfg.tol)? {
                    if !alg.is_central(&p, cfg.tol)? {
                        not_central.push(name.clone());
                    }
                    names.push(name);
                }
            }
            report.push(Section::new(
                "copyables among 0/1 points",
                vec![
                    Item::list("copyable", names),
                    Item::Check {
                        law: "every copyable is central".into(),
                        holds: not_central.is_empty(),
                        witness: not_central,
                        residual: None,
                    },
                ],
            ));
        }
    }
    Ok(report)
}

fn symmetric_difference(a: &[BitSet], b: &[BitSet]) -> Vec<BitSet> {
    a.iter()
        .filter(|s| !b.contains(s))
        .chain(b.iter().filter(|s| !a.contains(s)))
        .cloned()
        .collect()
}

fn central_check(
    alg: &FrobeniusAlgebra<Relation>,
    sets: &[BitSet],
    cfg: &Config,
) -> Result<Item, CliError> {
    let mut witness = Vec::new();
    for s in sets {
        let p = alg.point(Relation::subset(alg.carrier(), s)?)?;
        if !alg.is_central(&p, cfg.tol)? {
            witness.push(format!("{:?}", s.iter().collect::<Vec<_>>()));
        }
    }
    Ok(Item::Check {
        law: "every copyable is central".into(),
        holds: witness.is_empty(),
        witness,
        residual: None,
    })
}

fn tensor_sections<M: Morphism>(
    left: (&FrobeniusAlgebra<M>, Vec<(String, Point<M>)>),
    right: (&FrobeniusAlgebra<M>, Vec<(String, Point<M>)>),
    cfg: &Config,
    report: &mut Report,
) -> Result<(), CliError> {
    let ta = tensor_algebras(left.0, right.0, cfg.tol)?;
    report.push(Section::new(
        "composite",
        vec![
            Item::fact("carrier", ta.algebra.carrier().size()),
            Item::fact("left family", left.1.len()),
            Item::fact("right family", right.1.len()),
        ],
    ));
    report.push(axiom_section("frobenius axioms (composite)", &ta.axioms));
    let pairs = left.1.len() * right.1.len();
    if pairs > BI_ORDER_MAX_PAIRS {
        report.push(Section::new(
            "bi-order",
            vec![Item::fact(
                "skipped",
                format!("{pairs} projection pairs exceed {BI_ORDER_MAX_PAIRS}"),
            )],
        ));
        return Ok(());
    }
    let fa = build_poset(left.0, left.1, cfg.tol)?;
    let fb = build_poset(right.0, right.1, cfg.tol)?;
    let bi = bi_order_check(&ta, &fa, &fb, cfg.tol)?;
    let mut items = vec![Item::fact("instances", bi.instances)];
    items.extend(bi.checks.into_iter().map(Item::from));
    report.push(Section::new("bi-order", items));
    Ok(())
}

pub fn tensor(left: &Loaded, right: &Loaded, cfg: &Config) -> Result<Report, CliError> {
    let (a, b) = (resolve(left)?, resolve(right)?);
    if a.backend() != b.backend() {
        return Err(CliError::Usage(format!(
            "cannot tensor a {} algebra with a {} algebra",
            a.backend(),
            b.backend()
        )));
    }
    let mut report = Report::new("tensor", &format!("{} (x) {}", left.name, right.name));
    if let (Subject::Groupoid(g), Subject::Groupoid(h)) = (&a, &b) {
        report.push(Section::new(
            "groupoids",
            vec![Item::check(
                "algebra of the product equals the tensor of the algebras",
                groupoid_coherence(g, h)?,
            )],
        ));
    }
    match (family(&a, 0, cfg)?, family(&b, 0, cfg)?) {
        (Family::Rel(x, fx), Family::Rel(y, fy)) => {
            tensor_sections((&x, fx), (&y, fy), cfg, &mut report)?
        }
        (Family::FHilb(x, fx), Family::FHilb(y, fy)) => {
            tensor_sections((&x, fx), (&y, fy), cfg, &mut report)?
        }
        _ => unreachable!("backends were compared above"),
    }
    Ok(report)
}

pub fn fixture(name: Option<&str>, list: bool) -> Result<Outcome, CliError> {
    let stdout = match (name, list) {
        (_, true) => input::fixture_names().join("\n") + "\n",
        (Some(name), false) => {
            let json = match input::builtin(name) {
                Some(Input::Groupoid(spec)) => serde_json::to_string_pretty(&spec),
                Some(Input::Algebra(doc)) => serde_json::to_string_pretty(&doc),
                None => return Err(CliError::Usage(format!("unknown fixture `{name}`"))),
            };
            json.expect("documents serialize") + "\n"
        }
        (None, false) => return Err(CliError::Usage("give a fixture name or --list".into())),
    };
    Ok(Outcome { stdout, code: 0 })
}
