//! Small groups and groupoids used throughout the tests and the CLI.

use super::{validate, Groupoid, GroupoidSpec, MorphismSpec};

/// One-object groupoid from a multiplication table; `op(a, b)` is `a∘b`.
pub fn group_from_table(names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Groupoid {
    let n = names.len();
    let morphisms = names
        .iter()
        .map(|name| MorphismSpec {
            name: name.clone(),
            dom: "*".into(),
            cod: "*".into(),
        })
        .collect();
    let compose = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| [names[a].clone(), names[b].clone(), names[op(a, b)].clone()])
        .collect();
    let spec = GroupoidSpec {
        objects: vec!["*".into()],
        morphisms,
        compose,
        identities: None,
        inverses: None,
    };
    validate(&spec).expect("fixture table is a group")
}

/// ℤₙ with elements `"0"…"n-1"`.
pub fn cyclic(n: usize) -> Groupoid {
    assert!(n >= 1);
    group_from_table((0..n).map(|k| k.to_string()).collect(), |a, b| (a + b) % n)
}

/// ℤ₂×ℤ₂ with `(i,j)` at index `2i + j`, matching `cyclic(2).product(&cyclic(2))`.
pub fn klein4() -> Groupoid {
    let names = ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
        .map(String::from)
        .to_vec();
    group_from_table(names, |a, b| a ^ b)
}

/// Dihedral group of order `2n`: `r{k}` is the rotation `rᵏ`, `s{k}` is `rᵏs`.
pub fn dihedral(n: usize) -> Groupoid {
    assert!(n >= 1);
    let names = (0..n)
        .map(|k| format!("r{k}"))
        .chain((0..n).map(|k| format!("s{k}")))
        .collect();
    // rᵃsᵉ · rᵇsᶠ = r^(a + (-1)ᵉ b) s^(e+f)
    group_from_table(names, |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        rot + n * ((e + f) % 2)
    })
}

/// Quaternion group: `±1, ±i, ±j, ±k`.
pub fn quaternion8() -> Groupoid {
    let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
        .map(String::from)
        .to_vec();
    // unit products (sign, unit) for 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    group_from_table(names, |x, y| {
        let (s, u) = UNIT[x % 4][y % 4];
        let sign = (x / 4 + y / 4 + s) % 2;
        sign * 4 + u
    })
}

/// Permutations of `{0,1,2}` in lexicographic order, `(p∘q)(x) = p(q(x))`.
pub fn symmetric3() -> Groupoid {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let names = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect())
        .collect();
    group_from_table(names, |a, b| {
        let composed = [
            perms[a][perms[b][0]],
            perms[a][perms[b][1]],
            perms[a][perms[b][2]],
        ];
        perms
            .iter()
            .position(|p| *p == composed)
            .expect("closed under composition")
    })
}

/// Two objects `x, y` joined by `f: x → y` and its inverse `f_inv`.
pub fn interval() -> Groupoid {
    let m = |name: &str, dom: &str, cod: &str| MorphismSpec {
        name: name.into(),
        dom: dom.into(),
        cod: cod.into(),
    };
    let c = |f: &str, g: &str, h: &str| [f.to_string(), g.to_string(), h.to_string()];
    let spec = GroupoidSpec {
        objects: vec!["x".into(), "y".into()],
        morphisms: vec![
            m("id_x", "x", "x"),
            m("id_y", "y", "y"),
            m("f", "x", "y"),
            m("f_inv", "y", "x"),
        ],
        compose: vec![
            c("id_x", "id_x", "id_x"),
            c("id_y", "id_y", "id_y"),
            c("f", "id_x", "f"),
            c("id_y", "f", "f"),
            c("f_inv", "id_y", "f_inv"),
            c("id_x", "f_inv", "f_inv"),
            c("f", "f_inv", "id_y"),
            c("f_inv", "f", "id_x"),
        ],
        identities: None,
        inverses: None,
    };
    validate(&spec).expect("interval groupoid is valid")
}

pub fn empty() -> Groupoid {
    validate(&GroupoidSpec {
        objects: vec![],
        morphisms: vec![],
        compose: vec![],
        identities: None,
        inverses: None,
    })
    .expect("empty groupoid is valid")
}

/// A two-element "group" whose non-identity element is idempotent; it has no
/// inverse, so validation must fail.
pub fn broken_inverse_spec() -> GroupoidSpec {
    let m = |name: &str| MorphismSpec {
        name: name.into(),
        dom: "*".into(),
        cod: "*".into(),
    };
    let c = |f: &str, g: &str, h: &str| [f.to_string(), g.to_string(), h.to_string()];
    GroupoidSpec {
        objects: vec!["*".into()],
        morphisms: vec![m("e"), m("f")],
        compose: vec![
            c("e", "e", "e"),
            c("e", "f", "f"),
            c("f", "e", "f"),
            c("f", "f", "f"),
        ],
        identities: None,
        inverses: None,
    }
}

/// Groups used for the subgroup-lattice cross-validation.
pub fn ore_fixtures() -> Vec<(String, Groupoid)> {
    let mut out: Vec<(String, Groupoid)> =
        (1..=8).map(|n| (format!("cyclic{n}"), cyclic(n))).collect();
    out.push(("klein4".into(), klein4()));
    out.push(("z2xz4".into(), cyclic(2).product(&cyclic(4))));
    out.push(("symmetric3".into(), symmetric3()));
    out.push(("dihedral4".into(), dihedral(4)));
    out.push(("quaternion8".into(), quaternion8()));
    out
}

/// Every named groupoid fixture.
pub fn all_fixtures() -> Vec<(String, Groupoid)> {
    let mut out = ore_fixtures();
    out.push(("empty".into(), empty()));
    out.push(("interval".into(), interval()));
    out.push(("dihedral3".into(), dihedral(3)));
    out.push(("z2+trivial".into(), cyclic(2).disjoint_union(&cyclic(1))));
    out.push(("interval+z2".into(), interval().disjoint_union(&cyclic(2))));
    out.push(("interval^2".into(), interval().product(&interval())));
    out
}

/// Looks a fixture up by name: `trivial`, `z2`, `cyclicN`, `dihedralN`,
/// `klein4`, `z2xz4`, `symmetric3`, `quaternion8`, `interval`, `empty`.
pub fn by_name(name: &str) -> Option<Groupoid> {
    let numbered = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1)
    };
    if let Some(n) = numbered("cyclic") {
        return Some(cyclic(n));
    }
    if let Some(n) = numbered("dihedral") {
        return Some(dihedral(n));
    }
    Some(match name {
        "trivial" => cyclic(1),
        "z2" => cyclic(2),
        "klein4" => klein4(),
        "z2xz4" => cyclic(2).product(&cyclic(4)),
        "symmetric3" | "s3" => symmetric3(),
        "quaternion8" | "q8" => quaternion8(),
        "interval" => interval(),
        "empty" => empty(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(dihedral(4).num_morphisms(), 8);
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion8().is_abelian());
        let q = quaternion8();
        let (i, j, k) = (
            q.index_of("i").unwrap(),
            q.index_of("j").unwrap(),
            q.index_of("k").unwrap(),
        );
        assert_eq!(q.compose(i, j), Some(k));
        assert_eq!(q.compose(j, i), q.index_of("-k"));
        assert_eq!(q.element_order(q.index_of("-1").unwrap()), 2);
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("cyclic5").unwrap().num_morphisms(), 5);
        assert_eq!(by_name("dihedral4").unwrap().num_morphisms(), 8);
        assert!(by_name("cyclic0").is_none());
        assert!(by_name("nope").is_none());
    }
}
