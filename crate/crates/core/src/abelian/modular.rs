//! Counting solutions of `M x ≡ 0 (mod m)` by elimination over `Z/p^e`.
//!
//! Over the local ring `Z/p^e` an entry of least `p`-valuation divides every
//! other entry, so plain Gaussian elimination diagonalizes the system. The
//! counts for the prime powers of `m` multiply by the Chinese remainder
//! theorem. No integer Smith form is involved.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::IntegerMatrix;

/// Number of vectors `x ∈ (Z/m)^cols` with `M x ≡ 0 (mod m)`.
pub fn solve_homogeneous_mod(m: &IntegerMatrix, modulus: u64) -> BigUint {
    assert!(modulus >= 2, "modulus must be at least 2");
    factorize(modulus)
        .into_iter()
        .map(|(p, e)| count_prime_power(m, p, e))
        .product()
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn valuation(mut x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while x.is_multiple_of(p) && v < cap {
        x /= p;
        v += 1;
    }
    v
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn inverse_mod(a: u64, q: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(q));
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&BigInt::from(q))
        .to_u64()
        .expect("reduced residue")
}

fn count_prime_power(m: &IntegerMatrix, p: u64, e: u32) -> BigUint {
    let q = p.pow(e);
    let qb = BigInt::from(q);
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.mod_floor(&qb).to_u64().expect("reduced residue"))
                .collect()
        })
        .collect();
    let mut count = BigUint::one();
    let mut pivots = 0usize;
    for t in 0..rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                let v = valuation(x, p, e);
                if v < e && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        a.swap(t, i);
        for row in &mut a {
            row.swap(t, j);
        }
        let pv = p.pow(v);
        let unit_inv = inverse_mod(a[t][t] / pv, q);
        for i in t + 1..rows {
            if a[i][t] == 0 {
                continue;
            }
            let f = mul_mod(a[i][t] / pv, unit_inv, q);
            for j in t..cols {
                let delta = mul_mod(f, a[t][j], q);
                a[i][j] = (a[i][j] + q - delta) % q;
            }
        }
        // Clearing row t by column operations leaves the other rows alone:
        // column t is zero below the pivot now.
        for j in t + 1..cols {
            a[t][j] = 0;
        }
        count *= BigUint::from(pv);
        pivots += 1;
    }
    count * BigUint::from(q).pow((cols - pivots) as u32)
}
