use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Permutation, Subgroup};

/// Default cap on enumerated group orders.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Orders above this are multiplied on demand instead of through a table.
const TABLE_LIMIT: usize = 2048;

pub type GroupRef = Arc<FiniteGroup>;

/// A finite permutation group with its elements enumerated.
///
/// Elements are sorted lexicographically by image sequence, so the identity
/// sits at index 0 and element indices are reproducible across runs.
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the closure of `gens` on `degree` points.
    pub fn generate(degree: usize, gens: &[Permutation], max_order: usize) -> Result<GroupRef> {
        if degree == 0 {
            return Err(Error::UnsupportedGroup("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.then(g);
                    if !seen.contains(&y) {
                        if seen.len() >= max_order {
                            return Err(Error::OrderCapExceeded { cap: max_order });
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let group = FiniteGroup::from_sorted(degree, elements, gens);
        Ok(Arc::new(group))
    }

    fn from_sorted(degree: usize, elements: Vec<Permutation>, gens: &[Permutation]) -> Self {
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for (a, pa) in elements.iter().enumerate() {
                for (b, pb) in elements.iter().enumerate() {
                    t[a * n + b] = index[&pa.then(pb)];
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let mut generators: Vec<usize> = gens
            .iter()
            .map(|g| index[g] as usize)
            .filter(|&i| i != 0)
            .collect();
        generators.sort_unstable();
        generators.dedup();
        FiniteGroup {
            degree,
            elements,
            index,
            table,
            inverses,
            orders,
            generators,
        }
    }

    /// Re-enumerates a subgroup as a group in its own right.
    pub fn from_subgroup(sub: &Subgroup) -> GroupRef {
        let parent = sub.group();
        let elements: Vec<Permutation> = sub
            .members()
            .iter()
            .map(|&i| parent.element(i as usize).clone())
            .collect();
        let gens: Vec<Permutation> = sub
            .generators()
            .iter()
            .map(|&i| parent.element(i).clone())
            .collect();
        Arc::new(FiniteGroup::from_sorted(parent.degree, elements, &gens))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Indices of the generating permutations (identity dropped).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of the product that applies `a` first, then `b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted_members_unchecked(self, (0..self.order() as u32).collect())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted_members_unchecked(self, vec![0])
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    #[test]
    fn s3_from_two_generators() {
        let g = FiniteGroup::generate(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn empty_generating_set() {
        let g = FiniteGroup::generate(5, &[], 100).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn a5_order() {
        let g =
            FiniteGroup::generate(5, &[perm("(1 2 3 4 5)", 5), perm("(1 2 3)", 5)], 1000).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn errors() {
        assert_eq!(
            FiniteGroup::generate(4, &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)], 10).unwrap_err(),
            Error::OrderCapExceeded { cap: 10 }
        );
        assert!(matches!(
            FiniteGroup::generate(4, &[perm("(1 2)", 3)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn group_axioms_on_s4() {
        let g = FiniteGroup::generate(4, &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)], 100).unwrap();
        let n = g.order();
        assert_eq!(n, 24);
        // elements are sorted and distinct
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for a in 0..n {
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}
