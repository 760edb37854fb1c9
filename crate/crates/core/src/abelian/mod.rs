//! Exact integer linear algebra: Smith normal form, finitely presented
//! abelian groups, and an independent modular solution counter.

mod matrix;
mod modular;
mod smith;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use matrix::IntegerMatrix;
pub use modular::solve_homogeneous_mod;
pub(crate) use smith::smith_with_right_transform;
pub use smith::{smith_diagonal, smith_diagonal_sparse, smith_normal_form, SmithForm};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `1 < d₁ | d₂ | … | d_k`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FpAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigUint>,
}

impl FpAbelianGroup {
    pub fn trivial() -> Self {
        FpAbelianGroup::default()
    }

    /// Normalizes an arbitrary list of cyclic orders (0 meaning `Z`) into
    /// invariant-factor form.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[u64]) -> Self {
        let big: Vec<BigUint> = orders.iter().map(|&d| BigUint::from(d)).collect();
        FpAbelianGroup::from_big_orders(free_rank, big)
    }

    pub(crate) fn from_big_orders(mut free_rank: usize, orders: Vec<BigUint>) -> Self {
        let mut finite = Vec::new();
        for d in orders {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        // Pairwise gcd/lcm sweeps turn any list into a divisibility chain.
        for i in 0..finite.len() {
            for j in i + 1..finite.len() {
                let g = finite[i].gcd(&finite[j]);
                let l = finite[i].lcm(&finite[j]);
                finite[i] = g;
                finite[j] = l;
            }
        }
        finite.retain(|d| !d.is_one());
        FpAbelianGroup {
            free_rank,
            invariant_factors: finite,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn factors_u64(&self) -> Option<Vec<u64>> {
        self.invariant_factors
            .iter()
            .map(ToPrimitive::to_u64)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// The torsion subgroup.
    pub fn torsion(&self) -> FpAbelianGroup {
        FpAbelianGroup {
            free_rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    /// Exponent of the torsion subgroup (1 when it is trivial).
    pub fn torsion_exponent(&self) -> BigUint {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigUint::one)
    }

    pub fn has_p_torsion(&self, p: u64) -> bool {
        let p = BigUint::from(p);
        self.invariant_factors.iter().any(|d| (d % &p).is_zero())
    }

    /// `|Hom(A, Z/m)| = ∏ gcd(dᵢ, m) · m^free_rank`.
    pub fn hom_count_to_cyclic(&self, m: u64) -> BigUint {
        let mb = BigUint::from(m);
        let torsion: BigUint = self.invariant_factors.iter().map(|d| d.gcd(&mb)).product();
        torsion * mb.pow(self.free_rank as u32)
    }
}

impl fmt::Display for FpAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for FpAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FpAbelianGroup", 2)?;
        s.serialize_field("freeRank", &self.free_rank)?;
        s.serialize_field("invariantFactors", &BigList(&self.invariant_factors))?;
        s.end()
    }
}

/// Serializes big integers as JSON numbers when they fit in `u64`, as
/// decimal strings otherwise.
pub(crate) struct BigList<'a>(pub &'a [BigUint]);

impl Serialize for BigList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            match d.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

/// The abelian group presented by `cols` generators subject to the rows of
/// `relations`.
pub fn cokernel(relations: &IntegerMatrix) -> FpAbelianGroup {
    let diag = smith_diagonal(relations);
    let rank = diag.len();
    let factors = diag
        .into_iter()
        .map(|d| d.to_biguint().expect("Smith diagonal is nonnegative"))
        .filter(|d| !d.is_one())
        .collect();
    FpAbelianGroup {
        free_rank: relations.cols() - rank,
        invariant_factors: factors,
    }
}

/// The prime-to-`p` part of the torsion subgroup.
pub fn p_prime_torsion(group: &FpAbelianGroup, p: u64) -> FpAbelianGroup {
    let pb = BigUint::from(p);
    let stripped = group
        .invariant_factors
        .iter()
        .map(|d| {
            let mut d = d.clone();
            while (&d % &pb).is_zero() {
                d /= &pb;
            }
            d
        })
        .collect();
    FpAbelianGroup::from_big_orders(0, stripped)
}
