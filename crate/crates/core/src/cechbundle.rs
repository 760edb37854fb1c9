//! Constant-transition line-bundle cocycles on the cover of the Brown complex
//! by the translates `Y·s`, `s ∈ G`.
//!
//! Patches are indexed by all of `G`. A cocycle stores an exponent `c(s, t)`
//! in `Z/m` for each ordered pair whose patches meet, which happens exactly
//! when `P^s ∩ P^t ≠ 1`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::weakhom::{Character, SylowPair, WeakHom};

#[derive(Clone)]
pub struct CechBundle {
    pair: Arc<SylowPair>,
    modulus: u64,
    /// Row-major `|G| × |G|` table; `None` off the overlap domain.
    transitions: Vec<Option<u64>>,
}

/// The first failed invariant, with the lexicographically least witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleViolation {
    /// Defined on a non-overlapping pair, or undefined on an overlapping one.
    Domain {
        s: usize,
        t: usize,
    },
    /// Not reduced modulo `m`.
    Range {
        s: usize,
        t: usize,
    },
    Antisymmetry {
        s: usize,
        t: usize,
    },
    Cocycle {
        s: usize,
        t: usize,
        r: usize,
    },
    Coherence {
        s: usize,
        t: usize,
        g: usize,
    },
    Normalization {
        h: usize,
    },
}

impl fmt::Display for BundleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BundleViolation::Domain { s, t } => write!(f, "domain mismatch at ({s}, {t})"),
            BundleViolation::Range { s, t } => write!(f, "unreduced value at ({s}, {t})"),
            BundleViolation::Antisymmetry { s, t } => write!(f, "antisymmetry fails at ({s}, {t})"),
            BundleViolation::Cocycle { s, t, r } => {
                write!(f, "cocycle condition fails at ({s}, {t}, {r})")
            }
            BundleViolation::Coherence { s, t, g } => {
                write!(f, "coherence fails at ({s}, {t}) translated by {g}")
            }
            BundleViolation::Normalization { h } => write!(f, "c({h}, e) is nonzero"),
        }
    }
}

impl BundleViolation {
    /// Group elements named by the witness.
    pub fn elements(&self) -> Vec<usize> {
        match *self {
            BundleViolation::Domain { s, t }
            | BundleViolation::Range { s, t }
            | BundleViolation::Antisymmetry { s, t } => vec![s, t],
            BundleViolation::Cocycle { s, t, r } => vec![s, t, r],
            BundleViolation::Coherence { s, t, g } => vec![s, t, g],
            BundleViolation::Normalization { h } => vec![h, 0],
        }
    }
}

impl CechBundle {
    /// Wraps a raw transition table without checking it.
    pub fn from_transitions(
        pair: &Arc<SylowPair>,
        modulus: u64,
        transitions: Vec<Option<u64>>,
    ) -> Result<CechBundle> {
        let n = pair.group().order();
        if transitions.len() != n * n || modulus == 0 {
            return Err(Error::InvalidBundle(
                "transition table must be |G| x |G|".into(),
            ));
        }
        Ok(CechBundle {
            pair: Arc::clone(pair),
            modulus,
            transitions,
        })
    }

    /// The zero cocycle on the overlap domain.
    pub fn zero(pair: &Arc<SylowPair>, modulus: u64) -> CechBundle {
        let n = pair.group().order();
        let transitions = (0..n * n)
            .map(|i| pair.overlap(i / n, i % n).then_some(0))
            .collect();
        CechBundle {
            pair: Arc::clone(pair),
            modulus: modulus.max(1),
            transitions,
        }
    }

    pub fn pair(&self) -> &Arc<SylowPair> {
        &self.pair
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn n(&self) -> usize {
        self.pair.group().order()
    }

    pub fn get(&self, s: usize, t: usize) -> Option<u64> {
        self.transitions[s * self.n() + t]
    }

    /// A copy with one entry replaced.
    pub fn with_entry(&self, s: usize, t: usize, value: Option<u64>) -> CechBundle {
        let mut out = self.clone();
        let n = self.n();
        out.transitions[s * n + t] = value;
        out
    }

    /// Defined pairs in lexicographic order, with their exponents.
    pub fn defined(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        let n = self.n();
        self.transitions
            .iter()
            .enumerate()
            .filter_map(move |(i, v)| v.map(|v| ((i / n, i % n), v)))
    }

    pub fn is_zero(&self) -> bool {
        self.defined().all(|(_, v)| v == 0)
    }

    fn lift(&self, modulus: u64) -> Result<CechBundle> {
        if !modulus.is_multiple_of(self.modulus) {
            return Err(Error::Incompatible(format!(
                "cannot lift Z/{} to Z/{modulus}",
                self.modulus
            )));
        }
        let k = modulus / self.modulus;
        Ok(CechBundle {
            pair: Arc::clone(&self.pair),
            modulus,
            transitions: self.transitions.iter().map(|v| v.map(|x| x * k)).collect(),
        })
    }
}

impl PartialEq for CechBundle {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self.transitions == other.transitions
            && self.pair.same_as(&other.pair)
    }
}

impl Eq for CechBundle {}

impl fmt::Debug for CechBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CechBundle")
            .field("modulus", &self.modulus)
            .field("defined", &self.defined().count())
            .finish()
    }
}

/// Checks, in order: domain, range, antisymmetry, the cocycle condition on
/// triple overlaps, coherence `c(sg, tg) = c(s, t)`, and `c(h, e) = 0` on `P`.
pub fn validate_bundle(c: &CechBundle) -> Result<(), BundleViolation> {
    let pair = &c.pair;
    let group = pair.group();
    let n = c.n();
    let m = c.modulus;
    for s in 0..n {
        for t in 0..n {
            match c.get(s, t) {
                Some(_) if !pair.overlap(s, t) => return Err(BundleViolation::Domain { s, t }),
                None if pair.overlap(s, t) => return Err(BundleViolation::Domain { s, t }),
                Some(v) if v >= m => return Err(BundleViolation::Range { s, t }),
                _ => {}
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            if let (Some(a), Some(b)) = (c.get(s, t), c.get(t, s)) {
                if (a + b) % m != 0 {
                    return Err(BundleViolation::Antisymmetry { s, t });
                }
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            let Some(st) = c.get(s, t) else { continue };
            for r in 0..n {
                let (Some(tr), Some(sr)) = (c.get(t, r), c.get(s, r)) else {
                    continue;
                };
                if (st + tr) % m != sr && pair.triple_overlap(s, t, r) {
                    return Err(BundleViolation::Cocycle { s, t, r });
                }
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            let Some(v) = c.get(s, t) else { continue };
            for g in 0..n {
                if c.get(group.mul(s, g), group.mul(t, g)) != Some(v) {
                    return Err(BundleViolation::Coherence { s, t, g });
                }
            }
        }
    }
    for &h in pair.sylow().members() {
        if c.get(h as usize, 0) != Some(0) {
            return Err(BundleViolation::Normalization { h: h as usize });
        }
    }
    Ok(())
}

fn checked(c: CechBundle) -> Result<CechBundle> {
    match validate_bundle(&c) {
        Ok(()) => Ok(c),
        Err(v) => Err(Error::InvalidBundle(v.to_string())),
    }
}

/// `c(s, t) = u(s t⁻¹)` on every overlapping pair.
pub fn bundle_from_weakhom(u: &WeakHom) -> Result<CechBundle> {
    crate::weakhom::validate_weakhom(u.pair(), u.modulus(), u.values())
        .map_err(|v| Error::InvalidWeakHom(v.to_string()))?;
    let pair = u.pair();
    let group = pair.group();
    let n = group.order();
    let transitions = (0..n * n)
        .map(|i| {
            let (s, t) = (i / n, i % n);
            pair.overlap(s, t)
                .then(|| u.value(group.mul(s, group.inv(t))))
        })
        .collect();
    checked(CechBundle {
        pair: Arc::clone(pair),
        modulus: u.modulus(),
        transitions,
    })
}

/// `u(g) = c(g, e)` where defined, `0` elsewhere.
pub fn weakhom_from_bundle(c: &CechBundle) -> Result<WeakHom> {
    validate_bundle(c).map_err(|v| Error::InvalidBundle(v.to_string()))?;
    let values = (0..c.n()).map(|g| c.get(g, 0).unwrap_or(0)).collect();
    WeakHom::new(&c.pair, c.modulus, values)
}

/// Pointwise sum of exponents over the lcm of the moduli.
pub fn tensor_bundles(a: &CechBundle, b: &CechBundle) -> Result<CechBundle> {
    if !a.pair.same_as(&b.pair) {
        return Err(Error::Incompatible("bundles over different pairs".into()));
    }
    let m = a.modulus.lcm(&b.modulus);
    let (a, b) = (a.lift(m)?, b.lift(m)?);
    let mut transitions = Vec::with_capacity(a.transitions.len());
    for (x, y) in a.transitions.iter().zip(&b.transitions) {
        transitions.push(match (x, y) {
            (Some(x), Some(y)) => Some((x + y) % m),
            (None, None) => None,
            _ => return Err(Error::Incompatible("transition domains differ".into())),
        });
    }
    Ok(CechBundle {
        pair: a.pair,
        modulus: m,
        transitions,
    })
}

/// The inverse bundle: negated exponents.
pub fn dual_bundle(c: &CechBundle) -> CechBundle {
    let m = c.modulus;
    CechBundle {
        pair: Arc::clone(&c.pair),
        modulus: m,
        transitions: c
            .transitions
            .iter()
            .map(|v| v.map(|x| (m - x) % m))
            .collect(),
    }
}

/// `c(s, t) = χ(s) − χ(t)` on every overlapping pair.
pub fn constant_bundle_from_character(
    pair: &Arc<SylowPair>,
    chi: &Character,
) -> Result<CechBundle> {
    if **chi.group() != **pair.group() {
        return Err(Error::Incompatible("character of a different group".into()));
    }
    let chi = Character::new(chi.group(), chi.modulus(), chi.values().to_vec())?;
    if !chi.is_trivial_on(pair.sylow()) {
        return Err(Error::InvalidCharacter(
            "not trivial on the Sylow subgroup".into(),
        ));
    }
    let m = chi.modulus();
    let n = pair.group().order();
    let transitions = (0..n * n)
        .map(|i| {
            let (s, t) = (i / n, i % n);
            pair.overlap(s, t)
                .then(|| (chi.value(s) + m - chi.value(t)) % m)
        })
        .collect();
    checked(CechBundle {
        pair: Arc::clone(pair),
        modulus: m,
        transitions,
    })
}

/// The character `h ↦ c(h, e)` on `P`, as `(element, exponent)` pairs.
pub fn res_to_p(c: &CechBundle) -> Vec<(usize, u64)> {
    c.pair
        .sylow()
        .members()
        .iter()
        .map(|&h| (h as usize, c.get(h as usize, 0).unwrap_or(0)))
        .collect()
}

const ENUMERATION_LIMIT: u32 = 24;

/// Every valid cocycle, found by trying all antisymmetric assignments on the
/// overlap domain. Only feasible for tiny inputs.
pub fn enumerate_cocycles(pair: &Arc<SylowPair>, modulus: u64) -> Result<Vec<CechBundle>> {
    let n = pair.group().order();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
        .filter(|&(s, t)| pair.overlap(s, t))
        .collect();
    let bits = (modulus as f64).log2() * slots.len() as f64;
    if modulus < 2 || bits > ENUMERATION_LIMIT as f64 {
        return Err(Error::TooLarge(format!(
            "{modulus}^{} assignments",
            slots.len()
        )));
    }
    let mut digits = vec![0u64; slots.len()];
    let mut found = Vec::new();
    let mut c = CechBundle::zero(pair, modulus);
    loop {
        for (&(s, t), &d) in slots.iter().zip(&digits) {
            c.transitions[s * n + t] = Some(d);
            c.transitions[t * n + s] = Some((modulus - d) % modulus);
        }
        if validate_bundle(&c).is_ok() {
            found.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(found);
            }
            digits[i] += 1;
            if digits[i] < modulus {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
