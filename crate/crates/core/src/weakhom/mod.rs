//! Weak `P`-homomorphisms `u: G → μ_m`, written additively as exponents in
//! `Z/m`.
//!
//! A function `u` is a weak `P`-homomorphism when
//!
//! * (WH1) `u(h) = 0` for `h ∈ P`,
//! * (WH2) `u(g) = 0` whenever `P ∩ P^g = 1`,
//! * (WH3) `u(g₂g₁) = u(g₂) + u(g₁)` whenever `P ∩ P^{g₁} ∩ P^{g₂g₁} ≠ 1`.
//!
//! They form an abelian group under pointwise addition. Its integral
//! presentation has one generator per element and one relation per instance
//! of the three conditions; [`weakhom_group`] computes the cokernel.

mod character;
mod oracle;
mod pair;
mod restrict;

pub use character::{
    characters_trivial_on, quotient_abelianization, tilde_from_character, Character,
};
pub use oracle::{brute_force_weakhoms, exhaustive_weakhoms, OracleCount, OracleMode};
pub use pair::SylowPair;
pub use restrict::Restriction;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::abelian::{
    cokernel, p_prime_torsion, smith_with_right_transform, FpAbelianGroup, IntegerMatrix,
};
use crate::error::{Error, Result};

/// Relation matrix of the weak-homomorphism group. Rows come in three
/// blocks: WH1, WH2, then WH3 over ordered pairs `(g₂, g₁)` in element order.
#[derive(Clone, Debug)]
pub struct WeakHomPresentation {
    pair: Arc<SylowPair>,
    relations: IntegerMatrix,
    wh1_rows: usize,
    wh2_rows: usize,
    wh3_rows: usize,
}

impl WeakHomPresentation {
    pub fn pair(&self) -> &Arc<SylowPair> {
        &self.pair
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.relations.cols()
    }

    /// Row counts of the WH1, WH2 and WH3 blocks.
    pub fn block_sizes(&self) -> (usize, usize, usize) {
        (self.wh1_rows, self.wh2_rows, self.wh3_rows)
    }
}

/// Row and column counts of [`build_presentation`], without building it.
pub fn presentation_shape(pair: &SylowPair) -> (usize, usize) {
    let group = pair.group();
    let n = group.order();
    let wh2 = (0..n).filter(|&g| !pair.overlap(0, g)).count();
    let wh3 = (0..n)
        .filter(|&g1| pair.overlap(0, g1))
        .map(|g1| {
            (0..n)
                .filter(|&g2| pair.triple_overlap(0, g1, group.mul(g2, g1)))
                .count()
        })
        .sum::<usize>();
    (pair.sylow().order() + wh2 + wh3, n)
}

pub fn build_presentation(pair: &Arc<SylowPair>) -> WeakHomPresentation {
    let group = pair.group();
    let n = group.order();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let unit = |g: usize| {
        let mut r = vec![0i64; n];
        r[g] = 1;
        r
    };
    for &h in pair.sylow().members() {
        rows.push(unit(h as usize));
    }
    let wh1_rows = rows.len();
    for g in 0..n {
        if !pair.overlap(0, g) {
            rows.push(unit(g));
        }
    }
    let wh2_rows = rows.len() - wh1_rows;
    for g2 in 0..n {
        for g1 in 0..n {
            let prod = group.mul(g2, g1);
            if pair.triple_overlap(0, g1, prod) {
                let mut r = vec![0i64; n];
                r[prod] += 1;
                r[g2] -= 1;
                r[g1] -= 1;
                rows.push(r);
            }
        }
    }
    let wh3_rows = rows.len() - wh1_rows - wh2_rows;
    let relations = IntegerMatrix::from_rows(n, &rows).expect("rows have length |G|");
    WeakHomPresentation {
        pair: Arc::clone(pair),
        relations,
        wh1_rows,
        wh2_rows,
        wh3_rows,
    }
}

/// The presented group `W`, its torsion `Tors(A)`, and the prime-to-`p`
/// torsion `T`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeakHomGroup {
    pub w: FpAbelianGroup,
    pub torsion: FpAbelianGroup,
    pub prime_to_p: FpAbelianGroup,
    /// Whether `W` has torsion of order divisible by `p`.
    pub w_has_p_torsion: bool,
}

pub fn weakhom_group(presentation: &WeakHomPresentation) -> WeakHomGroup {
    let w = cokernel(presentation.relations());
    let p = presentation.pair().prime();
    WeakHomGroup {
        torsion: w.torsion(),
        prime_to_p: p_prime_torsion(&w, p),
        w_has_p_torsion: w.has_p_torsion(p),
        w,
    }
}

/// An element of `A(G, P)` with values in `Z/m`.
#[derive(Clone)]
pub struct WeakHom {
    pair: Arc<SylowPair>,
    modulus: u64,
    values: Vec<u64>,
}

/// The first condition a candidate fails, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A value is not reduced modulo `m`, or the table has the wrong length.
    Malformed {
        element: usize,
    },
    Wh1 {
        element: usize,
    },
    Wh2 {
        element: usize,
    },
    Wh3 {
        g2: usize,
        g1: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Malformed { element } => write!(f, "malformed value at element {element}"),
            Violation::Wh1 { element } => write!(f, "WH1 fails at element {element}"),
            Violation::Wh2 { element } => write!(f, "WH2 fails at element {element}"),
            Violation::Wh3 { g2, g1 } => write!(f, "WH3 fails at the pair ({g2}, {g1})"),
        }
    }
}

/// Checks WH1 over `P`, WH2 over every element, and WH3 over every ordered
/// pair, directly from subgroup intersections.
pub fn validate_weakhom(pair: &SylowPair, modulus: u64, values: &[u64]) -> Result<(), Violation> {
    let group = pair.group();
    let n = group.order();
    if modulus == 0 || values.len() != n {
        return Err(Violation::Malformed {
            element: values.len().min(n),
        });
    }
    if let Some(g) = values.iter().position(|&v| v >= modulus) {
        return Err(Violation::Malformed { element: g });
    }
    for &h in pair.sylow().members() {
        if values[h as usize] != 0 {
            return Err(Violation::Wh1 {
                element: h as usize,
            });
        }
    }
    for g in 0..n {
        if values[g] != 0 && !pair.overlap(0, g) {
            return Err(Violation::Wh2 { element: g });
        }
    }
    for g2 in 0..n {
        for g1 in 0..n {
            let prod = group.mul(g2, g1);
            if (values[g2] + values[g1]) % modulus != values[prod]
                && pair.triple_overlap(0, g1, prod)
            {
                return Err(Violation::Wh3 { g2, g1 });
            }
        }
    }
    Ok(())
}

impl WeakHom {
    pub fn new(pair: &Arc<SylowPair>, modulus: u64, values: Vec<u64>) -> Result<WeakHom> {
        validate_weakhom(pair, modulus, &values)
            .map_err(|v| Error::InvalidWeakHom(v.to_string()))?;
        Ok(WeakHom {
            pair: Arc::clone(pair),
            modulus,
            values,
        })
    }

    pub(crate) fn new_unchecked(pair: &Arc<SylowPair>, modulus: u64, values: Vec<u64>) -> WeakHom {
        WeakHom {
            pair: Arc::clone(pair),
            modulus,
            values,
        }
    }

    pub fn trivial(pair: &Arc<SylowPair>, modulus: u64) -> WeakHom {
        WeakHom::new_unchecked(pair, modulus.max(1), vec![0; pair.group().order()])
    }

    pub fn pair(&self) -> &Arc<SylowPair> {
        &self.pair
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

    /// Additive order in `Z/m`.
    pub fn order(&self) -> u64 {
        self.values
            .iter()
            .fold(1, |acc, &v| acc.lcm(&(self.modulus / v.gcd(&self.modulus))))
    }

    /// The same function with values in `Z/(k·m)`.
    pub fn lift(&self, modulus: u64) -> Result<WeakHom> {
        if modulus == 0 || !modulus.is_multiple_of(self.modulus) {
            return Err(Error::Incompatible(format!(
                "cannot lift Z/{} to Z/{modulus}",
                self.modulus
            )));
        }
        let k = modulus / self.modulus;
        Ok(WeakHom::new_unchecked(
            &self.pair,
            modulus,
            self.values.iter().map(|v| v * k).collect(),
        ))
    }

    /// Pointwise product, over the lcm of the two moduli.
    pub fn multiply(&self, other: &WeakHom) -> Result<WeakHom> {
        if !self.pair.same_as(&other.pair) {
            return Err(Error::Incompatible(
                "weak homomorphisms of different pairs".into(),
            ));
        }
        let m = self.modulus.lcm(&other.modulus);
        let (a, b) = (self.lift(m)?, other.lift(m)?);
        let values = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x + y) % m)
            .collect();
        WeakHom::new(&self.pair, m, values)
    }

    pub fn inverse(&self) -> WeakHom {
        let m = self.modulus;
        WeakHom::new_unchecked(
            &self.pair,
            m,
            self.values.iter().map(|&v| (m - v) % m).collect(),
        )
    }

    /// Equality as functions into `Q/Z`, ignoring the chosen modulus.
    pub fn same_element(&self, other: &WeakHom) -> bool {
        let m = self.modulus.lcm(&other.modulus);
        self.pair.same_as(&other.pair)
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&x, &y)| x * (m / self.modulus) == y * (m / other.modulus))
    }
}

impl PartialEq for WeakHom {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self.values == other.values
            && self.pair.same_as(&other.pair)
    }
}

impl Eq for WeakHom {}

impl fmt::Debug for WeakHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeakHom")
            .field("modulus", &self.modulus)
            .field("values", &self.values)
            .finish()
    }
}

/// Explicit generators of `Hom(W, Z/m)`, one per invariant factor `d` with
/// `gcd(d, m) > 1` and one per free summand.
///
/// With `U·M·V = D`, solutions of `M x ≡ 0 (mod m)` are `x = V y` with
/// `D y ≡ 0`, so column `i` of `V` scaled by `m / gcd(d_i, m)` is a solution
/// of order `gcd(d_i, m)`. The default modulus is the exponent of `Tors(W)`.
pub fn decode_generators(
    presentation: &WeakHomPresentation,
    modulus: Option<u64>,
) -> Result<Vec<WeakHom>> {
    let (diag, v) = smith_with_right_transform(presentation.relations());
    let m = match modulus {
        Some(0) => return Err(Error::Incompatible("modulus must be positive".into())),
        Some(m) => m,
        None => {
            let exponent = diag.iter().fold(BigInt::from(1), |acc, d| acc.lcm(d));
            exponent
                .to_u64()
                .ok_or_else(|| Error::TooLarge(format!("torsion exponent {exponent}")))?
        }
    };
    let pair = presentation.pair();
    let n = presentation.generator_count();
    let big_m = BigInt::from(m);
    let mut out = Vec::new();
    for i in 0..n {
        let scale = match diag.get(i) {
            Some(d) => {
                let g = d.gcd(&big_m);
                if g == BigInt::from(1) {
                    continue;
                }
                &big_m / g
            }
            None => BigInt::from(1),
        };
        let values: Vec<u64> = (0..n)
            .map(|row| {
                let x = (v.get(row, i) * &scale).mod_floor(&big_m);
                x.to_u64().expect("reduced below the modulus")
            })
            .collect();
        if values.iter().all(Zero::is_zero) {
            continue;
        }
        out.push(WeakHom::new(pair, m, values)?);
    }
    Ok(out)
}

/// Number of weak homomorphisms into `Z/m` predicted by the invariant
/// factors of `W`: `Π gcd(d_i, m) · m^rank`.
pub fn predicted_count(group: &WeakHomGroup, m: u64) -> BigUint {
    group.w.hom_count_to_cyclic(m)
}

#[cfg(test)]
mod tests;
