//! Bundled counterexamples. Each one recomputes its claims from embedded
//! fixtures and fails the report if any claim does not hold.

use nalgebra::DMatrix;

use qlogic::cstar::{basis_algebra, matrices_close, subspace_join, subspace_meet, MatrixElement};
use qlogic::groupoid::{enumerate_subgroupoids, fixtures, Groupoid};
use qlogic::projorder::{
    build_poset, compare_orders, inclusion_poset, lattice_report, subgroupoid_family,
    zero_one_family, Verdict,
};
use qlogic::C64;

use crate::report::{Hasse, Item, Report, Section};
use crate::{CliError, Config};

pub const NAMES: [&str; 4] = [
    "klein4-nondistributive",
    "interval-noncommutative",
    "fhilb-nondistributive",
    "boolean-basis",
];

pub fn run(name: &str, cfg: &Config) -> Result<Report, CliError> {
    match name {
        "klein4-nondistributive" => klein4(cfg),
        "interval-noncommutative" => interval(cfg),
        "fhilb-nondistributive" => fhilb(cfg),
        "boolean-basis" => boolean(cfg),
        _ => Err(CliError::Usage(format!(
            "unknown counterexample `{name}`; known: {}",
            NAMES.join(", ")
        ))),
    }
}

fn claim(law: &str, holds: bool, witness: Vec<String>) -> Item {
    Item::Check {
        law: law.into(),
        holds,
        witness,
        residual: None,
    }
}

fn groupoid_facts(g: &Groupoid, cfg: &Config, report: &mut Report) -> Result<(), CliError> {
    let subs = enumerate_subgroupoids(g, cfg.limits)?;
    report.push(Section::new(
        "subgroupoids",
        vec![
            Item::fact("count", subs.len()),
            Item::list("members", subs.iter().map(|s| g.set_name(s))),
        ],
    ));
    Ok(())
}

fn klein4(cfg: &Config) -> Result<Report, CliError> {
    let g = fixtures::klein4();
    let mut report = Report::new("counterexamples", "klein4-nondistributive");
    groupoid_facts(&g, cfg, &mut report)?;
    let subs = enumerate_subgroupoids(&g, cfg.limits)?;
    let proper = subs.iter().filter(|s| s.count() == 2).count();
    let commutative = g.to_algebra().is_commutative(cfg.tol)?;
    let lr = lattice_report(&inclusion_poset(&g, &subs));
    let mut items = vec![
        claim("six subgroupoids", subs.len() == 6, vec![]),
        claim("three nontrivial proper subgroups", proper == 3, vec![]),
        claim("algebra is commutative", commutative, vec![]),
    ];
    items.push(match &lr.distributive {
        Verdict::Fails { witness, lhs, rhs } => {
            let a = &witness[0];
            claim(
                &format!(
                    "inclusion lattice is not distributive: a∧(b∨c) = {lhs} ≠ {rhs} = (a∧b)∨(a∧c)"
                ),
                lhs == a && lhs != rhs,
                witness.clone(),
            )
        }
        other => claim(
            &format!("inclusion lattice is not distributive (found {other:?})"),
            false,
            vec![],
        ),
    });
    report.push(Section::new("claims", items));
    report.hasse = Some(Hasse::of(&inclusion_poset(&g, &subs)));
    Ok(report)
}

fn interval(cfg: &Config) -> Result<Report, CliError> {
    let g = fixtures::interval();
    let mut report = Report::new("counterexamples", "interval-noncommutative");
    groupoid_facts(&g, cfg, &mut report)?;
    let alg = g.to_algebra();
    let (_, subs, family) = subgroupoid_family(&g, cfg.limits)?;
    let inclusion = inclusion_poset(&g, &subs);
    let lr = lattice_report(&inclusion);
    let mult = build_poset(&alg, family, cfg.tol)?;
    let names = g.morphism_names();
    let pair = g
        .noncommuting_pair()
        .map(|(f, h)| vec![names[f].clone(), names[h].clone()])
        .unwrap_or_default();
    report.push(Section::new(
        "claims",
        vec![
            claim(
                "algebra is not commutative",
                !alg.is_commutative(cfg.tol)?,
                pair,
            ),
            claim("five projections", mult.len() == 5, vec![]),
            claim(
                "inclusion lattice is distributive",
                lr.distributive.holds(),
                vec![],
            ),
        ],
    ));
    let cmp = compare_orders(mult.poset(), &inclusion)?;
    let mut items = vec![
        Item::fact("relation", format!("{:?}", cmp.relation)),
        Item::fact("differences", cmp.differences.len()),
    ];
    items.push(Item::list(
        "pairs",
        cmp.differences.iter().map(|d| {
            let side = if d.in_first {
                "multiplication only"
            } else {
                "inclusion only"
            };
            format!("{} <= {} ({side})", d.lower, d.upper)
        }),
    ));
    report.push(Section::new("multiplication vs inclusion order", items));
    report.hasse = Some(Hasse::of(mult.poset()));
    Ok(report)
}

fn projector(v: [f64; 2]) -> MatrixElement {
    let col = DMatrix::from_fn(2, 1, |i, _| C64::new(v[i], 0.0));
    let norm2: f64 = v.iter().map(|x| x * x).sum();
    (&col * col.adjoint()).map(|z| z / norm2)
}

fn max_diff(a: &MatrixElement, b: &MatrixElement) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn fhilb(cfg: &Config) -> Result<Report, CliError> {
    let (a, b, c) = (
        projector([1.0, 0.0]),
        projector([0.0, 1.0]),
        projector([1.0, 1.0]),
    );
    let zero = DMatrix::zeros(2, 2);
    let left = subspace_meet(&a, &subspace_join(&b, &c, cfg.tol)?, cfg.tol)?;
    let right = subspace_join(
        &subspace_meet(&a, &b, cfg.tol)?,
        &subspace_meet(&a, &c, cfg.tol)?,
        cfg.tol,
    )?;
    let mut report = Report::new("counterexamples", "fhilb-nondistributive");
    report.push(Section::new(
        "subspaces of C^2",
        vec![
            Item::fact("a", "span (1, 0)"),
            Item::fact("b", "span (0, 1)"),
            Item::fact("c", "span (1, 1)"),
        ],
    ));
    report.push(Section::new(
        "claims",
        vec![
            Item::Check {
                law: "a∧(b∨c) = a".into(),
                holds: matrices_close(&left, &a, cfg.tol),
                witness: vec![],
                residual: Some(max_diff(&left, &a)),
            },
            Item::Check {
                law: "(a∧b)∨(a∧c) = 0".into(),
                holds: matrices_close(&right, &zero, cfg.tol),
                witness: vec![],
                residual: Some(max_diff(&right, &zero)),
            },
        ],
    ));
    Ok(report)
}

/// Bit mask of a coordinate-string name, coordinate 0 as bit 0.
fn mask(name: &str) -> usize {
    name.bytes()
        .enumerate()
        .filter(|&(_, c)| c == b'1')
        .map(|(i, _)| 1 << i)
        .sum()
}

fn boolean(cfg: &Config) -> Result<Report, CliError> {
    let mut report = Report::new("counterexamples", "boolean-basis");
    for n in 1..=4 {
        let alg = basis_algebra(n)?;
        let family = zero_one_family(&alg, cfg.tol)?;
        let count = family.len();
        let pp = build_poset(&alg, family, cfg.tol)?;
        let poset = pp.poset();
        let lr = lattice_report(poset);
        let masks: Vec<usize> = poset.names.iter().map(|s| mask(s)).collect();
        let m = masks.len();
        let mut table_ok = lr.is_lattice;
        for i in 0..m {
            for j in 0..m {
                let (meet, join) = (lr.meet[i][j], lr.join[i][j]);
                table_ok &= meet.map(|k| masks[k]) == Some(masks[i] & masks[j])
                    && join.map(|k| masks[k]) == Some(masks[i] | masks[j]);
            }
        }
        let ortho = &lr.orthocomplement;
        let bad: Vec<String> = ortho
            .elements
            .iter()
            .filter(|c| !c.succeeds())
            .map(|c| c.element.clone())
            .collect();
        report.push(Section::new(
            &format!("basis({n})"),
            vec![
                claim(
                    &format!("{} projections among 0/1 points", 1 << n),
                    count == 1 << n,
                    vec![],
                ),
                claim("meets and joins are bitwise and/or", table_ok, vec![]),
                claim("distributive", lr.distributive.holds(), vec![]),
                claim(
                    "every element has an orthocomplement",
                    ortho.succeeds_everywhere(),
                    bad,
                ),
            ],
        ));
        if n == 3 {
            report.hasse = Some(Hasse::of(poset));
        }
    }
    Ok(report)
}
