//! The poset of nontrivial `p`-subgroups under inclusion, with `G` acting on
//! the right by conjugation, plus its elementary abelian and radical parts.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::permgroup::{is_prime, normalizer, GroupRef, Subgroup};

#[derive(Clone, Debug)]
pub struct PSubgroupPoset {
    group: GroupRef,
    prime: u64,
    p_divides_order: bool,
    nodes: Vec<Subgroup>,
    /// `above[i]` holds every `j` with `nodes[i] < nodes[j]`.
    above: Vec<FixedBitSet>,
    /// `action[i * |G| + g]` is the node equal to `nodes[i]^g`.
    action: Vec<u32>,
}

/// All nontrivial `p`-subgroups of `group`, sorted canonically (by order, then
/// by member indices), so strict inclusion always points to a larger index.
///
/// Each subgroup of order `p^(k+1)` contains a normal subgroup of order `p^k`,
/// so it is reached from the previous level inside that subgroup's
/// normalizer.
pub fn enumerate_p_subgroups(group: &GroupRef, p: u64) -> Result<PSubgroupPoset> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut level: BTreeSet<Subgroup> = BTreeSet::new();
    for x in 0..group.order() {
        if group.element_order(x) as u64 == p {
            level.insert(Subgroup::generated_by(group, &[x])?);
        }
    }
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for q in &level {
            let n = normalizer(group, q)?;
            let mut covered = q.mask().clone();
            for &x in n.members() {
                let x = x as usize;
                if covered.contains(x) || !q.contains(group.pow(x, p as usize)) {
                    continue;
                }
                let mut gens = q.generators().to_vec();
                gens.push(x);
                let r = Subgroup::generated_by(group, &gens)?;
                covered.union_with(r.mask());
                next.insert(r);
            }
        }
        found.extend(std::mem::take(&mut level));
        level = next;
    }
    let nodes: Vec<Subgroup> = found.into_iter().collect();
    PSubgroupPoset::from_nodes(group, p, (group.order() as u64).is_multiple_of(p), nodes)
}

impl PSubgroupPoset {
    fn from_nodes(group: &GroupRef, p: u64, divides: bool, nodes: Vec<Subgroup>) -> Result<Self> {
        let n = nodes.len();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if nodes[i].order() < nodes[j].order() && nodes[i].is_subgroup_of(&nodes[j]) {
                    above[i].insert(j);
                }
            }
        }
        let lookup: HashMap<&[u32], usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, q)| (q.members(), i))
            .collect();
        let order = group.order();
        let mut action = vec![0u32; n * order];
        for (i, q) in nodes.iter().enumerate() {
            for g in 0..order {
                let c = q.conjugate(g)?;
                let j = *lookup.get(c.members()).ok_or_else(|| {
                    Error::Invariant(format!("node {i} is not G-stable under element {g}"))
                })?;
                action[i * order + g] = j as u32;
            }
        }
        Ok(PSubgroupPoset {
            group: Arc::clone(group),
            prime: p,
            p_divides_order: divides,
            nodes,
            above,
            action,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `false` flags the degenerate input where the poset is empty because
    /// `p ∤ |G|`.
    pub fn p_divides_order(&self) -> bool {
        self.p_divides_order
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, q: &Subgroup) -> Option<usize> {
        self.nodes.binary_search(q).ok()
    }

    /// Whether `nodes[i] < nodes[j]` (strict inclusion).
    pub fn less_than(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Nodes strictly above `i`.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].ones()
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.above[i].ones().map(move |j| (i, j)))
            .collect()
    }

    /// The node `nodes[i]^g`.
    #[inline]
    pub fn act(&self, i: usize, g: usize) -> usize {
        self.action[i * self.group.order() + g] as usize
    }

    /// Nodes contained in `sub` (not necessarily a node itself).
    pub fn nodes_within(&self, sub: &Subgroup) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.nodes[i].is_subgroup_of(sub))
            .collect()
    }

    /// The sub-poset on the nodes accepted by `keep`, which must select a
    /// `G`-stable set.
    pub fn restrict(&self, keep: impl Fn(&Subgroup) -> Result<bool>) -> Result<PSubgroupPoset> {
        let mut kept = Vec::new();
        for q in &self.nodes {
            if keep(q)? {
                kept.push(q.clone());
            }
        }
        PSubgroupPoset::from_nodes(&self.group, self.prime, self.p_divides_order, kept)
    }

    /// Elementary abelian nodes.
    pub fn quillen_filter(&self) -> Result<PSubgroupPoset> {
        let p = self.prime;
        self.restrict(|q| Ok(q.is_elementary_abelian(p)))
    }

    /// Radical nodes: `Q = O_p(N_G(Q))`.
    pub fn bouc_filter(&self) -> Result<PSubgroupPoset> {
        let p = self.prime;
        let group = &self.group;
        self.restrict(|q| {
            let n = normalizer(group, q)?;
            Ok(n.largest_normal_p_subgroup(p)? == *q)
        })
    }

    /// Orbits of the conjugation action, each sorted, listed by smallest member.
    pub fn node_orbits(&self) -> Vec<Vec<usize>> {
        let mut orbit_of = vec![usize::MAX; self.len()];
        let mut orbits = Vec::new();
        for i in 0..self.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order()).map(|g| self.act(i, g)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &j in &orbit {
                orbit_of[j] = orbits.len();
            }
            orbits.push(orbit);
        }
        orbits
    }
}
