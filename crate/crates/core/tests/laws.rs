use nalgebra::DMatrix;
use proptest::prelude::*;
use qlogic::bitset::BitSet;
use qlogic::cstar::{
    basis_algebra, correspondence_samples, direct_sum, is_orthogonal_projection, matrix_from_point,
    pants_algebra, point_from_matrix, CStarSpec,
};
use qlogic::groupoid::{
    brute_force_subgroupoids, enumerate_subgroupoids, fixtures, EnumLimits, Groupoid,
};
use qlogic::projorder::{
    build_poset, forbidden_sublattice, inclusion_poset, lattice_report, subgroupoid_family,
    transitive_closure, zero_one_family, Poset,
};
use qlogic::{FrobeniusAlgebra, LinearMap, Morphism, ObjectRef, Point, Relation, Tolerance, C64};

fn tol() -> Tolerance {
    Tolerance::default()
}

fn linear(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    proptest::collection::vec((-2.0..2.0f64, -2.0..2.0f64), rows * cols).prop_map(move |v| {
        let m = DMatrix::from_fn(rows, cols, |r, c| {
            C64::new(v[r * cols + c].0, v[r * cols + c].1)
        });
        LinearMap::from_matrix(m).unwrap()
    })
}

fn relation(dom: usize, cod: usize) -> impl Strategy<Value = Relation> {
    proptest::collection::vec(any::<bool>(), dom * cod).prop_map(move |bits| {
        let pairs = (0..dom * cod)
            .filter(|&k| bits[k])
            .map(|k| (k / cod, k % cod));
        Relation::new(ObjectRef::rel(dom), ObjectRef::rel(cod), pairs).unwrap()
    })
}

fn dims() -> impl Strategy<Value = (usize, usize, usize)> {
    (1..=3usize, 1..=3usize, 1..=3usize)
}

proptest! {
    #[test]
    fn dagger_reverses_composition_fhilb((f, g) in dims().prop_flat_map(|(a, b, c)| (linear(c, b), linear(b, a)))) {
        let lhs = f.compose(&g).unwrap().dagger();
        let rhs = g.dagger().compose(&f.dagger()).unwrap();
        prop_assert!(lhs.equal(&rhs, tol()).unwrap());
        prop_assert!(f.dagger().dagger().equal(&f, Tolerance::new(0.0).unwrap()).unwrap());
    }

    #[test]
    fn dagger_reverses_composition_rel((f, g) in dims().prop_flat_map(|(a, b, c)| (relation(b, c), relation(a, b)))) {
        prop_assert_eq!(f.compose(&g).unwrap().dagger(), g.dagger().compose(&f.dagger()).unwrap());
        prop_assert_eq!(f.dagger().dagger(), f);
    }

    #[test]
    fn tensor_is_bifunctorial_fhilb(
        (f, f2, g, g2) in (dims(), dims()).prop_flat_map(|((a, b, c), (d, e, h))| {
            (linear(c, b), linear(b, a), linear(h, e), linear(e, d))
        })
    ) {
        let lhs = f.tensor(&g).compose(&f2.tensor(&g2)).unwrap();
        let rhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap());
        prop_assert!(lhs.equal(&rhs, tol()).unwrap());
    }

    #[test]
    fn tensor_is_bifunctorial_rel(
        (f, f2, g, g2) in (dims(), dims()).prop_flat_map(|((a, b, c), (d, e, h))| {
            (relation(b, c), relation(a, b), relation(e, h), relation(d, e))
        })
    ) {
        let lhs = f.tensor(&g).compose(&f2.tensor(&g2)).unwrap();
        let rhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_is_natural_fhilb((f, g) in (dims(), dims()).prop_flat_map(|((a, b, _), (c, d, _))| (linear(b, a), linear(d, c)))) {
        let lhs = LinearMap::swap(f.cod(), g.cod()).compose(&f.tensor(&g)).unwrap();
        let rhs = g.tensor(&f).compose(&LinearMap::swap(f.dom(), g.dom())).unwrap();
        prop_assert!(lhs.equal(&rhs, tol()).unwrap());
    }

    #[test]
    fn swap_is_natural_rel((f, g) in (dims(), dims()).prop_flat_map(|((a, b, _), (c, d, _))| (relation(a, b), relation(c, d)))) {
        let lhs = Relation::swap(f.cod(), g.cod()).compose(&f.tensor(&g)).unwrap();
        let rhs = g.tensor(&f).compose(&Relation::swap(f.dom(), g.dom())).unwrap();
        prop_assert_eq!(lhs, rhs);
        let twice = Relation::swap(g.dom(), f.dom()).compose(&Relation::swap(f.dom(), g.dom())).unwrap();
        prop_assert_eq!(twice, Relation::identity(&f.dom().tensor(g.dom())));
    }

    #[test]
    fn conjugation_reverses_products_fhilb(which in 0..4usize, seed in any::<u64>()) {
        let alg = [
            pants_algebra(2).unwrap(),
            pants_algebra(3).unwrap(),
            basis_algebra(3).unwrap(),
            direct_sum(&CStarSpec::new(vec![2, 1]).unwrap()).unwrap(),
        ][which].clone();
        let dim = alg.carrier().size();
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let mut point = || {
            let v: Vec<C64> = (0..dim).map(|_| C64::new(next(), next())).collect();
            alg.point(LinearMap::column(&v).unwrap()).unwrap()
        };
        let (p, q) = (point(), point());
        let lhs = alg.conjugate_point(&alg.mult_points(&p, &q).unwrap()).unwrap();
        let rhs = alg.mult_points(&alg.conjugate_point(&q).unwrap(), &alg.conjugate_point(&p).unwrap()).unwrap();
        prop_assert!(lhs.equal(&rhs, tol()).unwrap());
    }

    #[test]
    fn conjugation_reverses_products_rel(which in 0..4usize, a in any::<u64>(), b in any::<u64>()) {
        let g = [fixtures::klein4(), fixtures::interval(), fixtures::symmetric3(), fixtures::interval().product(&fixtures::cyclic(2))][which].clone();
        let alg = g.to_algebra();
        let n = g.num_morphisms();
        let point = |mask: u64| alg.point(Relation::subset(alg.carrier(), &BitSet::from_mask(n, mask & ((1 << n) - 1))).unwrap()).unwrap();
        let (p, q) = (point(a), point(b));
        let lhs = alg.conjugate_point(&alg.mult_points(&p, &q).unwrap()).unwrap();
        let rhs = alg.mult_points(&alg.conjugate_point(&q).unwrap(), &alg.conjugate_point(&p).unwrap()).unwrap();
        prop_assert!(lhs.equal(&rhs, tol()).unwrap());
    }

    #[test]
    fn reduction_then_closure_is_identity(n in 1..8usize, bits in proptest::collection::vec(any::<bool>(), 64)) {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| bits[i * 8 + j])
            .collect();
        let leq = transitive_closure(n, &edges);
        let poset = Poset { names: (0..n).map(|i| i.to_string()).collect(), leq: leq.clone(), orth: None, zero: None };
        prop_assert!(poset.check_partial_order().iter().all(|c| c.holds));
        let hasse = poset.hasse_edges();
        prop_assert_eq!(transitive_closure(n, &hasse), leq);
        for &(i, j) in &hasse {
            prop_assert!(edges.contains(&(i, j)));
        }
    }

    #[test]
    fn next_closure_matches_brute_force(pick in proptest::collection::vec(0..5usize, 1..=3), product in any::<bool>()) {
        let pool = [fixtures::cyclic(1), fixtures::cyclic(2), fixtures::cyclic(3), fixtures::interval(), fixtures::klein4()];
        let mut g: Groupoid = pool[pick[0]].clone();
        for &k in &pick[1..] {
            let h = &pool[k];
            let candidate = if product { g.product(h) } else { g.disjoint_union(h) };
            if candidate.num_morphisms() <= 16 {
                g = candidate;
            }
        }
        let fast = enumerate_subgroupoids(&g, EnumLimits::default()).unwrap();
        prop_assert_eq!(fast, brute_force_subgroupoids(&g).unwrap());
    }
}

fn projection_families() -> Vec<(
    String,
    FrobeniusAlgebra<Relation>,
    Vec<(String, Point<Relation>)>,
)> {
    fixtures::all_fixtures()
        .into_iter()
        .map(|(name, g)| {
            let (alg, _, family) = subgroupoid_family(&g, EnumLimits::default()).unwrap();
            (name, alg, family)
        })
        .collect()
}

#[test]
fn projections_commute_under_conjugation() {
    for (name, alg, family) in projection_families() {
        for (pn, p) in &family {
            for (qn, q) in &family {
                let pq = alg.mult_points(p, q).unwrap();
                let qp = alg.mult_points(q, p).unwrap();
                assert!(
                    alg.conjugate_point(&pq).unwrap().equal(&qp, tol()).unwrap(),
                    "{name}: {pn}, {qn}"
                );
            }
        }
    }
}

#[test]
fn matrix_correspondence() {
    for n in [2, 3] {
        let alg = pants_algebra(n).unwrap();
        let samples = correspondence_samples(n, 100, 41 + n as u64).unwrap();
        let mut positives = 0;
        for (k, rho) in samples.iter().enumerate() {
            let p = point_from_matrix(&alg, rho).unwrap();
            let algebraic = alg.is_projection(&p, tol()).unwrap();
            assert_eq!(
                algebraic,
                is_orthogonal_projection(rho, tol()),
                "n={n} sample {k}"
            );
            positives += algebraic as usize;
            assert_eq!(&matrix_from_point(&alg, &p).unwrap(), rho);

            let sigma = &samples[(k * 7 + 3) % samples.len()];
            let q = point_from_matrix(&alg, sigma).unwrap();
            let product = alg.mult_points(&p, &q).unwrap();
            assert!(product
                .equal(&point_from_matrix(&alg, &(rho * sigma)).unwrap(), tol())
                .unwrap());
            let conj = alg.conjugate_point(&p).unwrap();
            assert!(conj
                .equal(&point_from_matrix(&alg, &rho.adjoint()).unwrap(), tol())
                .unwrap());
        }
        assert_eq!(
            positives, 25,
            "every fourth sample is an orthogonal projection"
        );
    }
}

#[test]
fn distributivity_checkers_agree() {
    let mut lattices: Vec<(String, Poset)> = Vec::new();
    for (name, g) in fixtures::all_fixtures() {
        let subs = enumerate_subgroupoids(&g, EnumLimits::default()).unwrap();
        lattices.push((format!("{name}/inclusion"), inclusion_poset(&g, &subs)));
        let (alg, _, family) = subgroupoid_family(&g, EnumLimits::default()).unwrap();
        lattices.push((
            format!("{name}/mult"),
            build_poset(&alg, family, tol()).unwrap().poset().clone(),
        ));
    }
    for n in 1..=4 {
        let alg = basis_algebra(n).unwrap();
        let pp = build_poset(&alg, zero_one_family(&alg, tol()).unwrap(), tol()).unwrap();
        lattices.push((format!("basis{n}"), pp.poset().clone()));
    }
    for (name, poset) in lattices {
        let report = lattice_report(&poset);
        let Some(forbidden) = forbidden_sublattice(&report) else {
            assert!(!report.is_lattice);
            continue;
        };
        assert_eq!(
            forbidden.distributive(),
            report.distributive.holds(),
            "{name}"
        );
        assert_eq!(forbidden.modular(), report.modular.holds(), "{name}");
    }
}
