//! Reduced integral homology through the augmented chain complex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{drop_entry, SimplicialGComplex};
use crate::abelian::{smith_diagonal_sparse, BigList, FpAbelianGroup};

/// Nonzero reduced homology groups by degree (degree `-1` only for the
/// empty complex), plus the reduced Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    groups: BTreeMap<i64, FpAbelianGroup>,
    reduced_euler: i64,
}

impl HomologyProfile {
    /// `H̃_n`, trivial when not stored.
    pub fn group(&self, n: i64) -> FpAbelianGroup {
        self.groups
            .get(&n)
            .cloned()
            .unwrap_or_else(FpAbelianGroup::trivial)
    }

    pub fn betti(&self, n: i64) -> usize {
        self.groups.get(&n).map_or(0, FpAbelianGroup::free_rank)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i64, &FpAbelianGroup)> {
        self.groups.iter().map(|(&n, g)| (n, g))
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn reduced_euler(&self) -> i64 {
        self.reduced_euler
    }

    /// `Σ (-1)^n β̃_n`, which must equal [`Self::reduced_euler`].
    pub fn euler_from_betti(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&n, g)| {
                if n.rem_euclid(2) == 0 {
                    g.free_rank() as i64
                } else {
                    -(g.free_rank() as i64)
                }
            })
            .sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Entry<'a> {
            degree: i64,
            free_rank: usize,
            invariant_factors: BigList<'a>,
        }
        let entries: Vec<Entry<'_>> = self
            .groups
            .iter()
            .map(|(&degree, group)| Entry {
                degree,
                free_rank: group.free_rank(),
                invariant_factors: BigList(group.invariant_factors()),
            })
            .collect();
        let mut s = serializer.serialize_struct("HomologyProfile", 2)?;
        s.serialize_field("reducedHomology", &entries)?;
        s.serialize_field("reducedEuler", &self.reduced_euler)?;
        s.end()
    }
}

/// Reduced integral homology of a complex.
pub fn homology(complex: &SimplicialGComplex) -> HomologyProfile {
    let top = complex.dimension().map_or(-1, |d| d as i64);
    // Smith diagonals of the boundaries ∂_n : C_n → C_{n-1} for n = 0..=top,
    // with ∂_0 the augmentation.
    let mut diagonals: Vec<Vec<BigInt>> = Vec::new();
    for n in 0..=top {
        let n = n as usize;
        let rows: Vec<Vec<(usize, i64)>> = complex
            .simplices_of(n)
            .map(|s| {
                if n == 0 {
                    vec![(0, 1)]
                } else {
                    (0..=n)
                        .map(|i| {
                            let face = complex.find(&drop_entry(s, i)).expect("complex is closed");
                            (face, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                }
            })
            .collect();
        let cols = if n == 0 { 1 } else { complex.count(n - 1) };
        diagonals.push(smith_diagonal_sparse(cols, &rows));
    }
    let count = |n: i64| -> usize {
        match n {
            -1 => 1,
            n if n < 0 => 0,
            n => complex.count(n as usize),
        }
    };
    let rank = |n: i64| -> usize {
        if n < 0 || n > top {
            0
        } else {
            diagonals[n as usize].len()
        }
    };
    let mut groups = BTreeMap::new();
    for n in -1..=top {
        let betti = count(n) - rank(n) - rank(n + 1);
        let torsion: Vec<_> = if n < top {
            diagonals[(n + 1) as usize]
                .iter()
                .filter(|d| !d.is_one())
                .map(|d| d.magnitude().clone())
                .collect()
        } else {
            Vec::new()
        };
        let group = FpAbelianGroup::from_big_orders(betti, torsion);
        if !group.is_trivial() {
            groups.insert(n, group);
        }
    }
    HomologyProfile {
        groups,
        reduced_euler: complex.reduced_euler(),
    }
}
