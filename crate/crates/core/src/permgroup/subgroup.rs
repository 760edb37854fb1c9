use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

use super::{is_prime, p_part, GroupRef};

/// A subgroup stored extensionally as a sorted member set.
#[derive(Clone)]
pub struct Subgroup {
    group: GroupRef,
    members: Vec<u32>,
    mask: FixedBitSet,
    generators: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted_members_unchecked(group: &GroupRef, members: Vec<u32>) -> Self {
        let mut mask = FixedBitSet::with_capacity(group.order());
        for &m in &members {
            mask.insert(m as usize);
        }
        let generators = greedy_generators(group, &members);
        Subgroup {
            group: Arc::clone(group),
            members,
            mask,
            generators,
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn generated_by(group: &GroupRef, gens: &[usize]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= group.order()) {
            return Err(Error::ForeignElement(bad));
        }
        let mask = closure(group, FixedBitSet::with_capacity(group.order()), gens);
        let members: Vec<u32> = mask.ones().map(|i| i as u32).collect();
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        Ok(Subgroup {
            group: Arc::clone(group),
            members,
            mask,
            generators,
        })
    }

    /// Validates that `members` is closed under the group operation.
    pub fn from_members(group: &GroupRef, members: &[usize]) -> Result<Self> {
        let mut sorted: Vec<u32> = members.iter().map(|&m| m as u32).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&m| m as usize >= group.order()) {
            return Err(Error::ForeignElement(bad as usize));
        }
        if sorted.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let sub = Subgroup::from_sorted_members_unchecked(group, sorted);
        for &a in &sub.members {
            if !sub.contains(group.inv(a as usize)) {
                return Err(Error::NotASubgroup(format!("no inverse for element {a}")));
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a as usize, b as usize)) {
                    return Err(Error::NotASubgroup(format!(
                        "product of elements {a} and {b} escapes"
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// A small generating set (greedy, in element order).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::DifferentParents)
        }
    }

    fn check_element(&self, g: usize) -> Result<()> {
        if g < self.group.order() {
            Ok(())
        } else {
            Err(Error::ForeignElement(g))
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.mask.is_subset(&other.mask)
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, g: usize) -> Result<Subgroup> {
        self.check_element(g)?;
        let group = &self.group;
        let mut members: Vec<u32> = self
            .members
            .iter()
            .map(|&h| group.conj(h as usize, g) as u32)
            .collect();
        members.sort_unstable();
        let mut mask = FixedBitSet::with_capacity(group.order());
        for &m in &members {
            mask.insert(m as usize);
        }
        let generators = self.generators.iter().map(|&h| group.conj(h, g)).collect();
        Ok(Subgroup {
            group: Arc::clone(group),
            members,
            mask,
            generators,
        })
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m as usize))
            .collect();
        Ok(Subgroup::from_sorted_members_unchecked(
            &self.group,
            members,
        ))
    }

    /// Whether `g⁻¹ H g = H`.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.generators
            .iter()
            .all(|&h| self.contains(self.group.conj(h, g)))
    }

    /// `N_self(h)`: the elements of `self` normalizing `h`.
    pub fn normalizer_of(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_parent(h)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| h.is_normalized_by(g as usize))
            .collect();
        Ok(Subgroup::from_sorted_members_unchecked(
            &self.group,
            members,
        ))
    }

    pub fn is_normal_in(&self, ambient: &Subgroup) -> bool {
        self.is_subgroup_of(ambient) && ambient.generators.iter().all(|&g| self.is_normalized_by(g))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        p_part(self.order(), p) == self.order()
    }

    /// Abelian with every non-identity element of order `p`.
    pub fn is_elementary_abelian(&self, p: u64) -> bool {
        self.is_abelian()
            && self.members[1..]
                .iter()
                .all(|&m| self.group.element_order(m as usize) as u64 == p)
    }

    /// A Sylow `p`-subgroup of `self`; the trivial subgroup when `p ∤ |self|`.
    ///
    /// Grows a `p`-subgroup one prime step at a time inside its own
    /// normalizer, always taking the smallest admissible element.
    pub fn sylow(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        let group = &self.group;
        let mut q = group.trivial_subgroup();
        while q.order() < target {
            let n = self.normalizer_of(&q)?;
            let x = n
                .members
                .iter()
                .map(|&x| x as usize)
                .find(|&x| !q.contains(x) && q.contains(group.pow(x, p as usize)))
                .ok_or_else(|| Error::Invariant("normalizer has no p-step".into()))?;
            let mut gens = q.generators.clone();
            gens.push(x);
            let next = Subgroup::generated_by(group, &gens)?;
            if next.order() != q.order() * p as usize {
                return Err(Error::Invariant(format!(
                    "p-step produced order {} from {}",
                    next.order(),
                    q.order()
                )));
            }
            q = next;
        }
        Ok(q)
    }

    /// The distinct conjugates `H^a` for `a` in `ambient`, in order of first appearance.
    pub fn conjugates_under(&self, ambient: &Subgroup) -> Result<Vec<Subgroup>> {
        self.check_parent(ambient)?;
        let mut out: Vec<Subgroup> = Vec::new();
        for &a in &ambient.members {
            let c = self.conjugate(a as usize)?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// `O_p(self)`: the intersection of all Sylow `p`-subgroups of `self`.
    pub fn largest_normal_p_subgroup(&self, p: u64) -> Result<Subgroup> {
        let s = self.sylow(p)?;
        let mut acc = s.clone();
        for &a in &self.members {
            acc = acc.intersection(&s.conjugate(a as usize)?)?;
            if acc.is_trivial() {
                break;
            }
        }
        Ok(acc)
    }
}

fn closure(group: &GroupRef, mut mask: FixedBitSet, gens: &[usize]) -> FixedBitSet {
    mask.insert(0);
    let mut frontier: Vec<usize> = mask.ones().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for &g in gens {
                let y = group.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    mask
}

fn greedy_generators(group: &GroupRef, members: &[u32]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = FixedBitSet::with_capacity(group.order());
    span.insert(0);
    let target = members.len();
    for &m in members {
        if span.count_ones(..) == target {
            break;
        }
        if !span.contains(m as usize) {
            gens.push(m as usize);
            span = closure(group, span, &gens);
        }
    }
    gens
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.same_parent(other)
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical subgroup order: by order, then by sorted member indices.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, &g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.group.element(g))?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {})", self.order(), self)
    }
}
