//! Closed-set enumeration for subgroupoids and copyable points.

use std::cmp::Ordering;

use super::Groupoid;
use crate::backend::{Relation, Tolerance};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exec;
use crate::frobenius::{FrobeniusAlgebra, Point};

/// Largest carrier for which exhaustive subset scans are run.
pub const BRUTE_FORCE_MAX: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_closed_sets: usize,
    pub max_carrier: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_closed_sets: 1_000_000,
            max_carrier: 64,
        }
    }
}

impl EnumLimits {
    fn check_carrier(&self, n: usize) -> Result<()> {
        if n > self.max_carrier {
            return Err(Error::ResourceLimit(format!(
                "carrier of {n} elements exceeds the cap of {}",
                self.max_carrier
            )));
        }
        Ok(())
    }
}

/// Lectic order: the smaller set is the one missing the least element on
/// which the two differ.
pub fn lectic_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    let first_diff = a
        .iter()
        .filter(|&i| !b.contains(i))
        .chain(b.iter().filter(|&i| !a.contains(i)))
        .min();
    match first_diff {
        None => Ordering::Equal,
        Some(i) if b.contains(i) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

impl Groupoid {
    /// Smallest subgroupoid containing `set`: adds the identities at both
    /// ends, inverses, and composites until nothing changes.
    pub fn closure(&self, set: &BitSet) -> BitSet {
        let mut closed = set.clone();
        let mut frontier: Vec<usize> = set.iter().collect();
        while let Some(f) = frontier.pop() {
            let mut add = vec![
                self.identity(self.dom(f)),
                self.identity(self.cod(f)),
                self.inverse(f),
            ];
            for g in closed.iter() {
                add.extend(self.compose(f, g));
                add.extend(self.compose(g, f));
            }
            for h in add {
                if closed.insert(h) {
                    frontier.push(h);
                }
            }
        }
        closed
    }

    /// Direct check of the subgroupoid conditions, without building a closure.
    pub fn is_subgroupoid(&self, set: &BitSet) -> bool {
        set.iter().all(|f| {
            set.contains(self.inverse(f))
                && set.contains(self.identity(self.dom(f)))
                && set.contains(self.identity(self.cod(f)))
                && set
                    .iter()
                    .all(|g| self.compose(f, g).is_none_or(|h| set.contains(h)))
        })
    }
}

/// Every subgroupoid (including `∅` and the whole groupoid) in lectic order,
/// by Next-Closure. Small groupoids are cross-checked against a full subset
/// scan.
pub fn enumerate_subgroupoids(g: &Groupoid, limits: EnumLimits) -> Result<Vec<BitSet>> {
    let n = g.num_morphisms();
    limits.check_carrier(n)?;
    let mut out = Vec::new();
    let mut current = g.closure(&BitSet::new(n));
    loop {
        if out.len() == limits.max_closed_sets {
            return Err(Error::ResourceLimit(format!(
                "more than {} subgroupoids",
                limits.max_closed_sets
            )));
        }
        out.push(current.clone());
        match next_closure(g, &current) {
            Some(next) => current = next,
            None => break,
        }
    }
    if n <= BRUTE_FORCE_MAX {
        let oracle = brute_force_subgroupoids(g)?;
        if oracle != out {
            return Err(Error::LawViolation(format!(
                "Next-Closure found {} subgroupoids but the subset scan found {}",
                out.len(),
                oracle.len()
            )));
        }
    }
    Ok(out)
}

fn next_closure(g: &Groupoid, current: &BitSet) -> Option<BitSet> {
    for i in (0..g.num_morphisms()).rev() {
        if current.contains(i) {
            continue;
        }
        let prefix = current.truncated(i);
        let mut seed = prefix.clone();
        seed.insert(i);
        let candidate = g.closure(&seed);
        if candidate.truncated(i) == prefix {
            return Some(candidate);
        }
    }
    None
}

/// All subgroupoids by scanning every subset, sorted lectically.
pub fn brute_force_subgroupoids(g: &Groupoid) -> Result<Vec<BitSet>> {
    let n = g.num_morphisms();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::ResourceLimit(format!(
            "subset scan over {n} morphisms"
        )));
    }
    let hits = exec::filter(1 << n, |mask| {
        g.is_subgroupoid(&BitSet::from_mask(n, mask as u64))
    });
    let mut sets: Vec<BitSet> = hits
        .into_iter()
        .map(|m| BitSet::from_mask(n, m as u64))
        .collect();
    sets.sort_by(lectic_cmp);
    Ok(sets)
}

fn is_copyable_subset(alg: &FrobeniusAlgebra<Relation>, set: &BitSet) -> bool {
    let point = Point::new(Relation::subset(alg.carrier(), set).expect("sized to carrier"))
        .expect("subset is a point");
    alg.is_copyable(&point, Tolerance::default())
        .expect("point on carrier")
}

/// Copyable points of a Rel algebra, as subsets in lectic order.
///
/// Carriers up to [`BRUTE_FORCE_MAX`] are scanned exhaustively. Larger ones
/// test unions of the blocks of "appears together in some product", which is
/// where every copyable of a groupoid algebra lives.
pub fn enumerate_copyables(
    alg: &FrobeniusAlgebra<Relation>,
    limits: EnumLimits,
) -> Result<Vec<BitSet>> {
    let n = alg.carrier().size();
    limits.check_carrier(n)?;
    let candidates: Vec<BitSet> = if n <= BRUTE_FORCE_MAX {
        (0..1u64 << n).map(|m| BitSet::from_mask(n, m)).collect()
    } else {
        let blocks = product_blocks(alg);
        if blocks.len() > BRUTE_FORCE_MAX {
            return Err(Error::ResourceLimit(format!(
                "{} candidate blocks",
                blocks.len()
            )));
        }
        (0..1u64 << blocks.len())
            .map(|m| {
                let mut s = BitSet::new(n);
                for (b, block) in blocks.iter().enumerate() {
                    if m >> b & 1 == 1 {
                        s.union_with(block);
                    }
                }
                s
            })
            .collect()
    };
    let hits = exec::filter(candidates.len(), |i| {
        is_copyable_subset(alg, &candidates[i])
    });
    if hits.len() > limits.max_closed_sets {
        return Err(Error::ResourceLimit(format!(
            "{} copyable points",
            hits.len()
        )));
    }
    let mut found: Vec<BitSet> = hits.into_iter().map(|i| candidates[i].clone()).collect();
    found.sort_by(lectic_cmp);
    Ok(found)
}

/// Partition of the carrier generated by `a ~ b ~ c` whenever `(a, b) ↦ c`.
fn product_blocks(alg: &FrobeniusAlgebra<Relation>) -> Vec<BitSet> {
    let n = alg.carrier().size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (pair, c) in alg.mult().pairs() {
        let (a, b) = (pair / n, pair % n);
        for other in [b, c] {
            let (ra, ro) = (find(&mut parent, a), find(&mut parent, other));
            parent[ra] = ro;
        }
    }
    let mut blocks: Vec<(usize, BitSet)> = Vec::new();
    for a in 0..n {
        let r = find(&mut parent, a);
        match blocks.iter_mut().find(|(root, _)| *root == r) {
            Some((_, s)) => {
                s.insert(a);
            }
            None => blocks.push((r, BitSet::from_indices(n, [a]))),
        }
    }
    blocks.into_iter().map(|(_, s)| s).collect()
}

/// Enumerates the copyables of `to_algebra(g)` and checks they are exactly
/// `∅` plus the connected components.
pub fn verify_copyables_are_components(g: &Groupoid, limits: EnumLimits) -> Result<Vec<BitSet>> {
    let copyables = enumerate_copyables(&g.to_algebra(), limits)?;
    let mut expected = g.connected_components();
    expected.push(BitSet::new(g.num_morphisms()));
    expected.sort_by(lectic_cmp);
    if copyables != expected {
        let show = |sets: &[BitSet]| {
            sets.iter()
                .map(|s| g.set_name(s))
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(Error::LawViolation(format!(
            "copyable points [{}] differ from components plus empty set [{}]",
            show(&copyables),
            show(&expected)
        )));
    }
    Ok(copyables)
}
