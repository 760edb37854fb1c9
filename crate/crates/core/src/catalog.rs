//! Textual group specifications and the built-in catalog of test groups.
//!
//! Grammar: `sym:n`, `alt:n`, `cyclic:n`, `dihedral:2n`, `q8`,
//! `product:<spec>x<spec>`, and `perm:<degree>:<cycles>;<cycles>;...` with
//! 1-based cycle notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permgroup::{
    direct_product, named_group, FiniteGroup, GroupFamily, GroupRef, Permutation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    text: String,
    kind: SpecKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum SpecKind {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Perm {
        degree: usize,
        gens: Vec<Permutation>,
    },
}

fn spec_error(spec: &str, reason: impl Into<String>) -> Error {
    Error::GroupSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_count(spec: &str, digits: &str) -> Result<usize> {
    let n: usize = digits
        .trim()
        .parse()
        .map_err(|_| spec_error(spec, format!("`{digits}` is not a positive integer")))?;
    if n == 0 {
        return Err(spec_error(spec, "size must be positive"));
    }
    Ok(n)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, rest) = text.split_once(':').unwrap_or((text, ""));
        let kind = match head {
            "sym" => SpecKind::Symmetric(parse_count(text, rest)?),
            "alt" => SpecKind::Alternating(parse_count(text, rest)?),
            "cyclic" => SpecKind::Cyclic(parse_count(text, rest)?),
            "dihedral" => {
                let order = parse_count(text, rest)?;
                if order % 2 != 0 {
                    return Err(spec_error(text, "dihedral order must be even"));
                }
                SpecKind::Dihedral(order)
            }
            "q8" if rest.is_empty() => SpecKind::Quaternion8,
            "product" => {
                let split = rest.match_indices('x').find_map(|(i, _)| {
                    let left = rest[..i].parse::<GroupSpec>().ok()?;
                    let right = rest[i + 1..].parse::<GroupSpec>().ok()?;
                    Some((left, right))
                });
                let (a, b) =
                    split.ok_or_else(|| spec_error(text, "expected product:<spec>x<spec>"))?;
                SpecKind::Product(Box::new(a), Box::new(b))
            }
            "perm" => {
                let (degree, cycles) = rest
                    .split_once(':')
                    .ok_or_else(|| spec_error(text, "expected perm:<degree>:<cycles>;..."))?;
                let degree = parse_count(text, degree)?;
                let gens = cycles
                    .split(';')
                    .map(|c| Permutation::parse(c.trim(), degree))
                    .collect::<Result<Vec<_>>>()?;
                SpecKind::Perm { degree, gens }
            }
            _ => return Err(spec_error(text, "unknown group family")),
        };
        Ok(GroupSpec {
            text: text.to_string(),
            kind,
        })
    }
}

impl GroupSpec {
    pub fn text(&self) -> &str {
        &self.text
    }

    /// Enumerates the group, failing with [`Error::OrderCapExceeded`] above
    /// `max_order` elements.
    pub fn build(&self, max_order: usize) -> Result<GroupRef> {
        match &self.kind {
            SpecKind::Symmetric(n) => named_group(&GroupFamily::Symmetric(*n), max_order),
            SpecKind::Alternating(n) => named_group(&GroupFamily::Alternating(*n), max_order),
            SpecKind::Cyclic(n) => named_group(&GroupFamily::Cyclic(*n), max_order),
            SpecKind::Dihedral(order) => named_group(&GroupFamily::Dihedral(*order), max_order),
            SpecKind::Quaternion8 => named_group(&GroupFamily::Quaternion8, max_order),
            SpecKind::Product(a, b) => {
                direct_product(&a.build(max_order)?, &b.build(max_order)?, max_order)
            }
            SpecKind::Perm { degree, gens } => FiniteGroup::generate(*degree, gens, max_order),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: &'static str,
    /// The primes among 2, 3, 5 dividing the order.
    pub primes: &'static [u64],
}

impl CatalogEntry {
    pub fn build(&self) -> GroupRef {
        self.spec
            .parse::<GroupSpec>()
            .and_then(|s| s.build(crate::permgroup::DEFAULT_MAX_ORDER))
            .expect("catalog specs are valid")
    }
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "S3",
        spec: "sym:3",
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "S4",
        spec: "sym:4",
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "A4",
        spec: "alt:4",
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "A5",
        spec: "alt:5",
        primes: &[2, 3, 5],
    },
    CatalogEntry {
        name: "D8xC3",
        spec: "product:dihedral:8xcyclic:3",
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "Q8",
        spec: "q8",
        primes: &[2],
    },
    CatalogEntry {
        name: "C4",
        spec: "cyclic:4",
        primes: &[2],
    },
    CatalogEntry {
        name: "D8",
        spec: "dihedral:8",
        primes: &[2],
    },
    CatalogEntry {
        name: "D12",
        spec: "dihedral:12",
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "D16",
        spec: "dihedral:16",
        primes: &[2],
    },
    CatalogEntry {
        name: "C3:C4",
        spec: "perm:7:(1 2 3);(2 3)(4 5 6 7)",
        primes: &[2, 3],
    },
];

/// Every `(entry, p)` pair of the catalog, in catalog order.
pub fn catalog_pairs() -> impl Iterator<Item = (&'static CatalogEntry, u64)> {
    CATALOG
        .iter()
        .flat_map(|e| e.primes.iter().map(move |&p| (e, p)))
}
