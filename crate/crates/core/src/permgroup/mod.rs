//! Finite permutation groups enumerated element by element.
//!
//! Everything downstream needs fast membership tests, so subgroups are kept
//! as member sets rather than as generators.

mod group;
mod named;
mod perm;
mod subgroup;

pub use group::{FiniteGroup, GroupRef, DEFAULT_MAX_ORDER};
pub use named::{direct_product, named_group, GroupFamily};
pub use perm::Permutation;
pub use subgroup::Subgroup;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The largest power of `p` dividing `n` (1 when `p ∤ n`).
pub fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut n = n;
    let mut part = 1;
    while p > 1 && n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn sylow_subgroup(group: &GroupRef, p: u64) -> Result<Subgroup> {
    group.whole().sylow(p)
}

pub fn normalizer(group: &GroupRef, h: &Subgroup) -> Result<Subgroup> {
    group.whole().normalizer_of(h)
}

pub fn conjugate_subgroup(h: &Subgroup, g: usize) -> Result<Subgroup> {
    h.conjugate(g)
}

pub fn subgroup_intersection(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.intersection(k)
}

/// `p` divides `|H|` and `p ∤ |H ∩ H^g|` for every `g ∉ H`.
pub fn is_strongly_p_embedded(group: &GroupRef, h: &Subgroup, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !h.is_subgroup_of(&group.whole()) {
        return Err(Error::DifferentParents);
    }
    if !(h.order() as u64).is_multiple_of(p) {
        return Ok(false);
    }
    for g in (0..group.order()).filter(|&g| !h.contains(g)) {
        if (h.intersection(&h.conjugate(g)?)?.order() as u64).is_multiple_of(p) {
            return Ok(false);
        }
    }
    Ok(true)
}
