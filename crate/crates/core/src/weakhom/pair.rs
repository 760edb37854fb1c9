use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permgroup::{is_prime, p_part, FiniteGroup, GroupRef, Subgroup};

/// A group with a fixed Sylow `p`-subgroup `P` and a table of its distinct
/// conjugates, so that intersections `P^{g_1} ∩ … ∩ P^{g_k}` are mask tests.
#[derive(Debug)]
pub struct SylowPair {
    group: GroupRef,
    prime: u64,
    sylow: Subgroup,
    conjugates: Vec<Subgroup>,
    conj_of: Vec<u32>,
    /// `pair_meets[i * c + j]`: conjugates `i` and `j` meet nontrivially.
    pair_meets: Vec<bool>,
}

impl SylowPair {
    /// Uses the canonical Sylow subgroup of `group`.
    pub fn new(group: &GroupRef, p: u64) -> Result<Arc<SylowPair>> {
        let sylow = group.whole().sylow(p)?;
        SylowPair::with_sylow(group, p, sylow)
    }

    pub fn with_sylow(group: &GroupRef, p: u64, sylow: Subgroup) -> Result<Arc<SylowPair>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !sylow.is_subgroup_of(&group.whole()) {
            return Err(Error::DifferentParents);
        }
        let expected = p_part(group.order(), p);
        if sylow.order() != expected || !sylow.is_p_group(p) {
            return Err(Error::NotSylow {
                p,
                order: sylow.order(),
                expected,
            });
        }
        let mut conjugates: Vec<Subgroup> = Vec::new();
        let mut conj_of = Vec::with_capacity(group.order());
        for g in 0..group.order() {
            let c = sylow.conjugate(g)?;
            let i = match conjugates.iter().position(|q| q == &c) {
                Some(i) => i,
                None => {
                    conjugates.push(c);
                    conjugates.len() - 1
                }
            };
            conj_of.push(i as u32);
        }
        let c = conjugates.len();
        let mut pair_meets = vec![false; c * c];
        for i in 0..c {
            for j in 0..c {
                pair_meets[i * c + j] = meets(&[&conjugates[i], &conjugates[j]]);
            }
        }
        Ok(Arc::new(SylowPair {
            group: Arc::clone(group),
            prime: p,
            sylow,
            conjugates,
            conj_of,
            pair_meets,
        }))
    }

    /// The pair `(H, P)` for a subgroup `H ≥ P`, with `H` re-enumerated as a
    /// group. Element `i` of the new group is `H.members()[i]`.
    pub fn for_subgroup(&self, sub: &Subgroup) -> Result<Arc<SylowPair>> {
        if !self.sylow.is_subgroup_of(sub) {
            return Err(Error::Incompatible(
                "the subgroup does not contain the Sylow subgroup".into(),
            ));
        }
        let group = FiniteGroup::from_subgroup(sub);
        let positions: Vec<usize> = self
            .sylow
            .members()
            .iter()
            .map(|&x| {
                sub.members()
                    .binary_search(&x)
                    .expect("P lies in the subgroup")
            })
            .collect();
        let sylow = Subgroup::from_members(&group, &positions)?;
        SylowPair::with_sylow(&group, self.prime, sylow)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    /// `P^g`.
    pub fn conjugate(&self, g: usize) -> &Subgroup {
        &self.conjugates[self.conj_of[g] as usize]
    }

    /// Number of distinct conjugates of `P`.
    pub fn conjugate_count(&self) -> usize {
        self.conjugates.len()
    }

    /// `P^s ∩ P^t ≠ 1`.
    #[inline]
    pub fn overlap(&self, s: usize, t: usize) -> bool {
        let c = self.conjugates.len();
        self.pair_meets[self.conj_of[s] as usize * c + self.conj_of[t] as usize]
    }

    /// `P^a ∩ P^b ∩ P^c ≠ 1`.
    pub fn triple_overlap(&self, a: usize, b: usize, c: usize) -> bool {
        self.overlap(a, b)
            && self.overlap(b, c)
            && self.overlap(a, c)
            && meets(&[self.conjugate(a), self.conjugate(b), self.conjugate(c)])
    }

    /// `⋂ P^{g_i} ≠ 1`.
    pub fn meets_all(&self, gs: &[usize]) -> bool {
        let subs: Vec<&Subgroup> = gs.iter().map(|&g| self.conjugate(g)).collect();
        meets(&subs)
    }

    /// Whether the two pairs describe the same group and Sylow subgroup.
    pub fn same_as(&self, other: &SylowPair) -> bool {
        std::ptr::eq(self, other)
            || (self.prime == other.prime
                && *self.group == *other.group
                && self.sylow.members() == other.sylow.members())
    }
}

fn meets(subs: &[&Subgroup]) -> bool {
    let Some((first, rest)) = subs.split_first() else {
        return true;
    };
    first.members()[1..]
        .iter()
        .any(|&x| rest.iter().all(|q| q.contains(x as usize)))
}
