//! Weak `P`-homomorphisms of finite groups, Brown complexes of
//! `p`-subgroups, and constant-transition line-bundle cocycles on them.
//!
//! Modules build on each other bottom-up:
//!
//! * [`permgroup`] enumerates permutation groups and their subgroups;
//! * [`abelian`] does exact integer linear algebra;
//! * [`psubgroups`] and [`gcomplex`] build the subgroup posets and their
//!   order complexes with homology and orbit spaces;
//! * [`weakhom`] presents the group of weak homomorphisms;
//! * [`cechbundle`] models the associated cocycles;
//! * [`catalog`] parses group specs and lists the built-in test groups.
//!
//! ```
//! use brownlab::catalog::GroupSpec;
//! use brownlab::weakhom::{build_presentation, weakhom_group, SylowPair};
//!
//! let a5 = "alt:5".parse::<GroupSpec>()?.build(1000)?;
//! let pair = SylowPair::new(&a5, 2)?;
//! let w = weakhom_group(&build_presentation(&pair));
//! assert_eq!(w.prime_to_p.to_string(), "Z/3");
//! # Ok::<(), brownlab::Error>(())
//! ```

pub mod abelian;
pub mod catalog;
pub mod cechbundle;
pub mod error;
pub mod gcomplex;
pub mod permgroup;
pub mod psubgroups;
pub mod weakhom;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/weak-homomorphisms.md")]
    mod weak_homomorphisms {}
    #[doc = include_str!("../../../book/src/cocycles.md")]
    mod cocycles {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
