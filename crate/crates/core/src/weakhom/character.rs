//! Homomorphisms `G → Z/m` and the weak homomorphisms they induce.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{SylowPair, WeakHom};
use crate::abelian::{cokernel, smith_with_right_transform, FpAbelianGroup, IntegerMatrix};
use crate::error::{Error, Result};
use crate::permgroup::{GroupRef, Subgroup};

/// A homomorphism `G → Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: GroupRef,
    modulus: u64,
    values: Vec<u64>,
}

impl Character {
    pub fn new(group: &GroupRef, modulus: u64, values: Vec<u64>) -> Result<Character> {
        let n = group.order();
        if modulus == 0 || values.len() != n || values.iter().any(|&v| v >= modulus) {
            return Err(Error::InvalidCharacter(
                "value table does not fit Z/m".into(),
            ));
        }
        for g in 0..n {
            for h in 0..n {
                if (values[g] + values[h]) % modulus != values[group.mul(g, h)] {
                    return Err(Error::InvalidCharacter(format!(
                        "not multiplicative at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(Character {
            group: Arc::clone(group),
            modulus,
            values,
        })
    }

    pub fn trivial(group: &GroupRef, modulus: u64) -> Character {
        Character {
            group: Arc::clone(group),
            modulus: modulus.max(1),
            values: vec![0; group.order()],
        }
    }

    /// The sign of the permutation, into `Z/2`.
    pub fn sign(group: &GroupRef) -> Character {
        let values = group.elements().iter().map(|p| p.parity() as u64).collect();
        Character {
            group: Arc::clone(group),
            modulus: 2,
            values,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, g: usize) -> u64 {
        self.values[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_trivial_on(&self, sub: &Subgroup) -> bool {
        sub.members().iter().all(|&h| self.values[h as usize] == 0)
    }
}

/// Relations `x_{gh} - x_g - x_h` for all `g, h`, and `x_n` for `n ∈ N`.
fn abelianization_relations(group: &GroupRef, normal: &Subgroup) -> IntegerMatrix {
    let n = group.order();
    let mut rows = Vec::with_capacity(n * n + normal.order());
    for g in 0..n {
        for h in 0..n {
            let mut r = vec![0i64; n];
            r[group.mul(g, h)] += 1;
            r[g] -= 1;
            r[h] -= 1;
            rows.push(r);
        }
    }
    for &x in normal.members() {
        let mut r = vec![0i64; n];
        r[x as usize] = 1;
        rows.push(r);
    }
    IntegerMatrix::from_rows(n, &rows).expect("rows have length |G|")
}

/// The abelianization of `G/N`, presented on all elements of `G`.
pub fn quotient_abelianization(group: &GroupRef, normal: &Subgroup) -> FpAbelianGroup {
    cokernel(&abelianization_relations(group, normal))
}

/// Every homomorphism `G → Z/m` vanishing on `sub` (which need not be
/// normal; the normal closure is killed automatically).
pub fn characters_trivial_on(group: &GroupRef, sub: &Subgroup, m: u64) -> Result<Vec<Character>> {
    if m == 0 {
        return Err(Error::InvalidCharacter("modulus must be positive".into()));
    }
    let relations = abelianization_relations(group, sub);
    let (diag, v) = smith_with_right_transform(&relations);
    let n = group.order();
    let big_m = BigInt::from(m);
    // Generators of the solution space with their orders.
    let mut gens: Vec<(Vec<u64>, u64)> = Vec::new();
    for i in 0..n {
        let (scale, order) = match diag.get(i) {
            Some(d) => {
                let g = d.gcd(&big_m);
                (&big_m / &g, g.to_u64().expect("divides m"))
            }
            None => (BigInt::from(1), m),
        };
        if order > 1 {
            let values = (0..n)
                .map(|row| {
                    (v.get(row, i) * &scale)
                        .mod_floor(&big_m)
                        .to_u64()
                        .expect("reduced")
                })
                .collect();
            gens.push((values, order));
        }
    }
    let total: u64 = gens.iter().map(|(_, o)| o).product();
    if total > 1 << 20 {
        return Err(Error::TooLarge(format!("{total} characters")));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut coeffs = vec![0u64; gens.len()];
    loop {
        let mut values = vec![0u64; n];
        for ((gen, _), &c) in gens.iter().zip(&coeffs) {
            for (x, &y) in values.iter_mut().zip(gen) {
                *x = (*x + c * y) % m;
            }
        }
        out.push(Character::new(group, m, values)?);
        let mut i = 0;
        loop {
            if i == gens.len() {
                out.sort_by(|a, b| a.values.cmp(&b.values));
                return Ok(out);
            }
            coeffs[i] += 1;
            if coeffs[i] < gens[i].1 {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// `ũ(g) = χ(g)` where `P ∩ P^g ≠ 1`, and `0` elsewhere.
pub fn tilde_from_character(pair: &Arc<SylowPair>, chi: &Character) -> Result<WeakHom> {
    if *chi.group != **pair.group() {
        return Err(Error::Incompatible("character of a different group".into()));
    }
    let chi = Character::new(&chi.group, chi.modulus, chi.values.clone())?;
    if !chi.is_trivial_on(pair.sylow()) {
        return Err(Error::InvalidCharacter(
            "not trivial on the Sylow subgroup".into(),
        ));
    }
    let values = (0..chi.values.len())
        .map(|g| if pair.overlap(0, g) { chi.values[g] } else { 0 })
        .collect();
    WeakHom::new(pair, chi.modulus, values)
}
