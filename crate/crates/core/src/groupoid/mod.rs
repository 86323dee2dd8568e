//! Finite groupoids and the symmetric dagger Frobenius algebras they induce
//! in Rel.
//!
//! Composition convention: `f∘g` means "first `g`, then `f`" and is defined
//! exactly when `dom(f) = cod(g)`. Compose-table entries `[f, g, h]` read as
//! `f∘g = h`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::backend::{ObjectRef, Relation};
use crate::bitset::BitSet;
use crate::error::{Error, LawViolation, Result};
use crate::frobenius::FrobeniusAlgebra;

mod enumerate;
pub mod fixtures;

pub use enumerate::{
    brute_force_subgroupoids, enumerate_copyables, enumerate_subgroupoids, lectic_cmp,
    verify_copyables_are_components, EnumLimits, BRUTE_FORCE_MAX,
};

/// Groupoid document as read from disk, before any law is checked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidSpec {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismSpec>,
    /// Entries `[f, g, h]` meaning `f∘g = h`.
    pub compose: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverses: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// A validated finite groupoid. Morphisms are indexed `0..n` in declaration
/// order; the same indices label the carrier of [`Groupoid::to_algebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    objects: Vec<String>,
    names: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    table: Vec<Option<usize>>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
}

fn index_names(
    kind: &'static str,
    names: &[String],
    violations: &mut Vec<LawViolation>,
) -> HashMap<String, usize> {
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            violations.push(LawViolation::new(kind, [n.as_str()]));
        }
    }
    index
}

/// Checks every groupoid law and returns the validated groupoid, or the full
/// list of violations with witnesses.
pub fn validate(spec: &GroupoidSpec) -> Result<Groupoid> {
    let mut bad = Vec::new();
    let obj_index = index_names("distinct object names", &spec.objects, &mut bad);
    let names: Vec<String> = spec.morphisms.iter().map(|m| m.name.clone()).collect();
    let mor_index = index_names("distinct morphism names", &names, &mut bad);

    let mut dom = Vec::with_capacity(names.len());
    let mut cod = Vec::with_capacity(names.len());
    for m in &spec.morphisms {
        for end in [&m.dom, &m.cod] {
            if !obj_index.contains_key(end) {
                bad.push(LawViolation::new(
                    "known object",
                    [m.name.as_str(), end.as_str()],
                ));
            }
        }
        dom.push(obj_index.get(&m.dom).copied().unwrap_or(0));
        cod.push(obj_index.get(&m.cod).copied().unwrap_or(0));
    }
    if !bad.is_empty() {
        return Err(Error::InvalidGroupoid(bad));
    }

    let n = names.len();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for [f, g, h] in &spec.compose {
        let lookup = |s: &String| mor_index.get(s).copied();
        let (Some(fi), Some(gi), Some(hi)) = (lookup(f), lookup(g), lookup(h)) else {
            bad.push(LawViolation::new("known morphism", [f, g, h]));
            continue;
        };
        if dom[fi] != cod[gi] {
            bad.push(LawViolation::new(
                "composite only on composable pairs",
                [f, g, h],
            ));
            continue;
        }
        if dom[hi] != dom[gi] || cod[hi] != cod[fi] {
            bad.push(LawViolation::new("composite type", [f, g, h]));
        }
        match table[fi * n + gi] {
            Some(prev) if prev != hi => {
                bad.push(LawViolation::new(
                    "single-valued composition",
                    [f, g, h, &names[prev]],
                ));
            }
            _ => table[fi * n + gi] = Some(hi),
        }
    }
    for f in 0..n {
        for g in 0..n {
            if dom[f] == cod[g] && table[f * n + g].is_none() {
                bad.push(LawViolation::new(
                    "composition total on composable pairs",
                    [&names[f], &names[g]],
                ));
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::InvalidGroupoid(bad));
    }

    let c = |f: usize, g: usize| table[f * n + g].expect("checked total");
    for f in 0..n {
        for g in (0..n).filter(|&g| dom[f] == cod[g]) {
            for h in (0..n).filter(|&h| dom[g] == cod[h]) {
                if c(c(f, g), h) != c(f, c(g, h)) {
                    bad.push(LawViolation::new(
                        "associativity",
                        [&names[f], &names[g], &names[h]],
                    ));
                }
            }
        }
    }

    let mut identity = Vec::with_capacity(spec.objects.len());
    for (x, obj) in spec.objects.iter().enumerate() {
        let is_identity = |e: usize| {
            dom[e] == x
                && cod[e] == x
                && (0..n).all(|g| cod[g] != x || c(e, g) == g)
                && (0..n).all(|f| dom[f] != x || c(f, e) == f)
        };
        match (0..n).find(|&e| is_identity(e)) {
            Some(e) => identity.push(e),
            None => {
                let loops: Vec<&str> = (0..n)
                    .filter(|&e| dom[e] == x && cod[e] == x)
                    .map(|e| names[e].as_str())
                    .collect();
                let mut witness = vec![obj.as_str()];
                witness.extend(loops);
                bad.push(LawViolation::new("identity", witness));
                identity.push(usize::MAX);
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::InvalidGroupoid(bad));
    }

    let mut inverse = Vec::with_capacity(n);
    for f in 0..n {
        let candidate = (0..n).find(|&g| {
            dom[g] == cod[f]
                && cod[g] == dom[f]
                && c(g, f) == identity[dom[f]]
                && c(f, g) == identity[cod[f]]
        });
        match candidate {
            Some(g) => inverse.push(g),
            None => {
                bad.push(LawViolation::new(
                    "inverse",
                    [&names[f], &names[identity[dom[f]]]],
                ));
                inverse.push(usize::MAX);
            }
        }
    }

    if let Some(declared) = &spec.identities {
        for (obj, e) in declared {
            match (obj_index.get(obj), mor_index.get(e)) {
                (Some(&x), Some(&ei)) if identity[x] == ei => {}
                _ => bad.push(LawViolation::new("declared identity", [obj, e])),
            }
        }
    }
    if let Some(declared) = &spec.inverses {
        for (f, g) in declared {
            match (mor_index.get(f), mor_index.get(g)) {
                (Some(&fi), Some(&gi)) if inverse.get(fi) == Some(&gi) => {}
                _ => bad.push(LawViolation::new("declared inverse", [f, g])),
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::InvalidGroupoid(bad));
    }

    Ok(Groupoid {
        objects: spec.objects.clone(),
        names,
        dom,
        cod,
        table,
        identity,
        inverse,
    })
}

impl Groupoid {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.names
    }

    pub fn num_morphisms(&self) -> usize {
        self.names.len()
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn dom(&self, f: usize) -> usize {
        self.dom[f]
    }

    pub fn cod(&self, f: usize) -> usize {
        self.cod[f]
    }

    /// `f∘g`, if composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.table[f * self.names.len() + g]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn is_group(&self) -> bool {
        self.objects.len() == 1
    }

    /// Renders a subset of morphisms as `{a,b,…}` in index order.
    pub fn set_name(&self, set: &BitSet) -> String {
        let members: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", members.join(","))
    }

    pub fn to_spec(&self) -> GroupoidSpec {
        let n = self.names.len();
        let morphisms = (0..n)
            .map(|f| MorphismSpec {
                name: self.names[f].clone(),
                dom: self.objects[self.dom[f]].clone(),
                cod: self.objects[self.cod[f]].clone(),
            })
            .collect();
        let compose = (0..n)
            .flat_map(|f| (0..n).map(move |g| (f, g)))
            .filter_map(|(f, g)| {
                self.compose(f, g).map(|h| {
                    [
                        self.names[f].clone(),
                        self.names[g].clone(),
                        self.names[h].clone(),
                    ]
                })
            })
            .collect();
        GroupoidSpec {
            objects: self.objects.clone(),
            morphisms,
            compose,
            identities: None,
            inverses: None,
        }
    }

    /// The induced algebra in Rel: the carrier is the morphism set, `mult`
    /// relates `(f, g)` to `f∘g` on composable pairs and `unit` picks out the
    /// identities.
    pub fn to_algebra(&self) -> FrobeniusAlgebra<Relation> {
        let n = self.names.len();
        let carrier = ObjectRef::rel_labeled(self.names.clone()).expect("names are distinct");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|f| (0..n).map(move |g| (f, g)))
            .filter_map(|(f, g)| self.compose(f, g).map(|h| (f * n + g, h)))
            .collect();
        let mult = Relation::new(carrier.tensor(&carrier), carrier.clone(), pairs)
            .expect("indices in range");
        let unit = Relation::new(
            ObjectRef::rel(1),
            carrier,
            self.identity.iter().map(|&e| (0, e)),
        )
        .expect("indices in range");
        FrobeniusAlgebra::new(mult, unit).expect("groupoid algebra is well typed")
    }

    /// Morphism sets of the connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<BitSet> {
        let mut parent: Vec<usize> = (0..self.objects.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for f in 0..self.names.len() {
            let (a, b) = (
                find(&mut parent, self.dom[f]),
                find(&mut parent, self.cod[f]),
            );
            parent[a] = b;
        }
        let mut blocks: Vec<(usize, BitSet)> = Vec::new();
        for f in 0..self.names.len() {
            let root = find(&mut parent, self.dom[f]);
            match blocks.iter_mut().find(|(r, _)| *r == root) {
                Some((_, set)) => {
                    set.insert(f);
                }
                None => blocks.push((root, BitSet::from_indices(self.names.len(), [f]))),
            }
        }
        blocks.into_iter().map(|(_, s)| s).collect()
    }

    /// Product groupoid; morphism `(f, g)` sits at index `f·|Mor(H)| + g`.
    pub fn product(&self, other: &Groupoid) -> Groupoid {
        let (n, m) = (self.names.len(), other.names.len());
        let no = other.objects.len();
        let objects = self
            .objects
            .iter()
            .flat_map(|x| other.objects.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let names = self
            .names
            .iter()
            .flat_map(|f| other.names.iter().map(move |g| format!("({f},{g})")))
            .collect();
        let pair = |f: usize, g: usize| f * m + g;
        let mut dom = vec![0; n * m];
        let mut cod = vec![0; n * m];
        let mut inverse = vec![0; n * m];
        for f in 0..n {
            for g in 0..m {
                dom[pair(f, g)] = self.dom[f] * no + other.dom[g];
                cod[pair(f, g)] = self.cod[f] * no + other.cod[g];
                inverse[pair(f, g)] = pair(self.inverse[f], other.inverse[g]);
            }
        }
        let mut table = vec![None; n * m * n * m];
        for f1 in 0..n {
            for g1 in 0..m {
                for f2 in 0..n {
                    for g2 in 0..m {
                        if let (Some(f), Some(g)) = (self.compose(f1, f2), other.compose(g1, g2)) {
                            table[pair(f1, g1) * n * m + pair(f2, g2)] = Some(pair(f, g));
                        }
                    }
                }
            }
        }
        let identity = (0..self.objects.len())
            .flat_map(|x| (0..no).map(move |y| (x, y)))
            .map(|(x, y)| pair(self.identity[x], other.identity[y]))
            .collect();
        Groupoid {
            objects,
            names,
            dom,
            cod,
            table,
            identity,
            inverse,
        }
    }

    /// Disjoint union; colliding names on the right get a `'` suffix.
    pub fn disjoint_union(&self, other: &Groupoid) -> Groupoid {
        fn fresh(taken: &[String], name: &str) -> String {
            let mut candidate = name.to_string();
            while taken.contains(&candidate) {
                candidate.push('\'');
            }
            candidate
        }
        let (n, m) = (self.names.len(), other.names.len());
        let no = self.objects.len();
        let mut objects = self.objects.clone();
        for o in &other.objects {
            let name = fresh(&objects, o);
            objects.push(name);
        }
        let mut names = self.names.clone();
        for f in &other.names {
            let name = fresh(&names, f);
            names.push(name);
        }
        let mut table = vec![None; (n + m) * (n + m)];
        for f in 0..n {
            for g in 0..n {
                table[f * (n + m) + g] = self.compose(f, g);
            }
        }
        for f in 0..m {
            for g in 0..m {
                table[(n + f) * (n + m) + n + g] = other.compose(f, g).map(|h| n + h);
            }
        }
        Groupoid {
            objects,
            names,
            dom: self
                .dom
                .iter()
                .copied()
                .chain(other.dom.iter().map(|d| d + no))
                .collect(),
            cod: self
                .cod
                .iter()
                .copied()
                .chain(other.cod.iter().map(|d| d + no))
                .collect(),
            table,
            identity: self
                .identity
                .iter()
                .copied()
                .chain(other.identity.iter().map(|e| e + n))
                .collect(),
            inverse: self
                .inverse
                .iter()
                .copied()
                .chain(other.inverse.iter().map(|e| e + n))
                .collect(),
        }
    }

    /// Composability is symmetric and `f∘g = g∘f` whenever defined.
    pub fn is_abelian(&self) -> bool {
        let n = self.names.len();
        (0..n).all(|f| (0..n).all(|g| self.compose(f, g) == self.compose(g, f)))
    }

    /// First pair `(f, g)` with `f∘g ≠ g∘f` (one side may be undefined).
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.names.len();
        (0..n)
            .flat_map(|f| (0..n).map(move |g| (f, g)))
            .find(|&(f, g)| self.compose(f, g) != self.compose(g, f))
    }

    /// Order of a group element.
    pub fn element_order(&self, f: usize) -> usize {
        let e = self.identity[self.dom[f]];
        let mut power = f;
        let mut k = 1;
        while power != e {
            power = self
                .compose(f, power)
                .expect("loops compose with themselves");
            k += 1;
        }
        k
    }

    /// A finite group is cyclic (equivalently, locally cyclic) iff some
    /// element has order `|G|`.
    pub fn is_cyclic_group(&self) -> Result<bool> {
        if !self.is_group() {
            return Err(Error::NotAGroup(format!(
                "groupoid with {} objects",
                self.objects.len()
            )));
        }
        let n = self.names.len();
        Ok((0..n).any(|f| self.element_order(f) == n))
    }
}
