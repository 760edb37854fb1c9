use crate::error::{Error, Result};

use super::{FiniteGroup, GroupRef, Permutation};

/// Families of the built-in permutation realizations.
#[derive(Clone, Debug)]
pub enum GroupFamily {
    /// Cyclic group of order n on n points.
    Cyclic(usize),
    /// Dihedral group of the given (even) order, acting on order/2 points.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Quaternion group in its regular representation on 8 points.
    Quaternion8,
    /// Direct product on the disjoint union of the two point sets.
    DirectProduct(GroupRef, GroupRef),
}

pub fn named_group(family: &GroupFamily, max_order: usize) -> Result<GroupRef> {
    let unsupported = |what: String| Err(Error::UnsupportedGroup(what));
    match *family {
        GroupFamily::Cyclic(n) => {
            if n == 0 {
                return unsupported("cyclic group needs n >= 1".into());
            }
            FiniteGroup::generate(n, &[rotation(n)], max_order)
        }
        GroupFamily::Dihedral(order) => {
            if order < 2 || order % 2 != 0 {
                return unsupported(format!("dihedral order {order} must be even and >= 2"));
            }
            let n = order / 2;
            let gens = match n {
                1 => vec![Permutation::from_cycles(2, &[&[0, 1]])?],
                2 => vec![
                    Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                    Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
                ],
                _ => {
                    let reflection = (0..n).map(|x| ((n - x) % n) as u32).collect();
                    vec![rotation(n), Permutation::from_images(reflection)?]
                }
            };
            FiniteGroup::generate(gens[0].degree(), &gens, max_order)
        }
        GroupFamily::Symmetric(n) => {
            if n == 0 {
                return unsupported("symmetric group needs n >= 1".into());
            }
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
                gens.push(rotation(n));
            }
            FiniteGroup::generate(n, &gens, max_order)
        }
        GroupFamily::Alternating(n) => {
            if n == 0 {
                return unsupported("alternating group needs n >= 1".into());
            }
            let gens = (2..n)
                .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::generate(n, &gens, max_order)
        }
        GroupFamily::Quaternion8 => {
            let gens = [1, 2].map(right_regular_q8);
            FiniteGroup::generate(8, &gens, max_order)
        }
        GroupFamily::DirectProduct(ref a, ref b) => direct_product(a, b, max_order),
    }
}

pub fn direct_product(a: &GroupRef, b: &GroupRef, max_order: usize) -> Result<GroupRef> {
    let degree = a.degree() + b.degree();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|&g| a.element(g).shifted(0, degree))
        .chain(
            b.generators()
                .iter()
                .map(|&g| b.element(g).shifted(a.degree(), degree)),
        )
        .collect();
    FiniteGroup::generate(degree, &gens, max_order)
}

fn rotation(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| ((x + 1) % n) as u32).collect())
        .expect("rotation is a bijection")
}

/// Right multiplication by the unit `1, i, j, k` (0..4) on Q8, with the
/// element `s·u` encoded as `4s + u` for sign bit `s`.
fn right_regular_q8(unit: usize) -> Permutation {
    // UNIT_PRODUCT[a][b] = (sign, unit) of a·b for units 1, i, j, k.
    const UNIT_PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let images = (0..8)
        .map(|x| {
            let (sign, u) = (x / 4, x % 4);
            let (s2, v) = UNIT_PRODUCT[u][unit];
            (((sign + s2) % 2) * 4 + v) as u32
        })
        .collect();
    Permutation::from_images(images).expect("regular action is a bijection")
}
