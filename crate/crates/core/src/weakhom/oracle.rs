//! Counting weak homomorphisms without the Smith form.

use std::sync::Arc;

use num_bigint::BigUint;

use super::{build_presentation, validate_weakhom, SylowPair, WeakHom};
use crate::abelian::solve_homogeneous_mod;
use crate::error::{Error, Result};

const EXHAUSTIVE_MAX_ORDER: usize = 8;
const EXHAUSTIVE_MAX_CANDIDATES: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub enum OracleMode {
    /// Every function `G → Z/m` tested against the definition.
    Exhaustive,
    /// The presentation solved modulo each prime power of `m`.
    Elimination,
}

#[derive(Clone, Debug)]
pub struct OracleCount {
    pub mode: OracleMode,
    pub count: BigUint,
    /// Present in exhaustive mode.
    pub solutions: Option<Vec<WeakHom>>,
}

fn candidates(order: usize, m: u64) -> Option<u64> {
    (0..order).try_fold(1u64, |acc, _| acc.checked_mul(m))
}

/// All weak homomorphisms into `Z/m`, found by trying every function.
pub fn exhaustive_weakhoms(pair: &Arc<SylowPair>, m: u64) -> Result<Vec<WeakHom>> {
    let n = pair.group().order();
    if m < 2 {
        return Err(Error::Incompatible("modulus must be at least 2".into()));
    }
    let total =
        candidates(n, m).filter(|&c| n <= EXHAUSTIVE_MAX_ORDER && c <= EXHAUSTIVE_MAX_CANDIDATES);
    if total.is_none() {
        return Err(Error::TooLarge(format!("{m}^{n} candidate functions")));
    }
    let mut values = vec![0u64; n];
    let mut found = Vec::new();
    loop {
        if validate_weakhom(pair, m, &values).is_ok() {
            found.push(WeakHom::new_unchecked(pair, m, values.clone()));
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(found);
            }
            values[i] += 1;
            if values[i] < m {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// Counts weak homomorphisms into `Z/m`: exhaustively for tiny groups,
/// otherwise by modular elimination on the presentation.
pub fn brute_force_weakhoms(pair: &Arc<SylowPair>, m: u64) -> Result<OracleCount> {
    if m < 2 {
        return Err(Error::Incompatible("modulus must be at least 2".into()));
    }
    let n = pair.group().order();
    let small = n <= EXHAUSTIVE_MAX_ORDER
        && candidates(n, m).is_some_and(|c| c <= EXHAUSTIVE_MAX_CANDIDATES);
    if small {
        let solutions = exhaustive_weakhoms(pair, m)?;
        return Ok(OracleCount {
            mode: OracleMode::Exhaustive,
            count: BigUint::from(solutions.len()),
            solutions: Some(solutions),
        });
    }
    let presentation = build_presentation(pair);
    Ok(OracleCount {
        mode: OracleMode::Elimination,
        count: solve_homogeneous_mod(presentation.relations(), m),
        solutions: None,
    })
}
