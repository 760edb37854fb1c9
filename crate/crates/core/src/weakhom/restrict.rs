use std::sync::Arc;

use super::{SylowPair, WeakHom};
use crate::error::{Error, Result};
use crate::permgroup::Subgroup;

/// Restriction `A(G, P) → A(H, P)` along a subgroup `P ≤ H ≤ G`.
#[derive(Clone, Debug)]
pub struct Restriction {
    source: Arc<SylowPair>,
    target: Arc<SylowPair>,
    /// Element of `G` for each element of `H`.
    embedding: Vec<usize>,
}

impl Restriction {
    pub fn new(source: &Arc<SylowPair>, sub: &Subgroup) -> Result<Restriction> {
        if !sub.is_subgroup_of(&source.group().whole()) {
            return Err(Error::DifferentParents);
        }
        let target = source.for_subgroup(sub)?;
        Ok(Restriction {
            source: Arc::clone(source),
            target,
            embedding: sub.members().iter().map(|&g| g as usize).collect(),
        })
    }

    pub fn source(&self) -> &Arc<SylowPair> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SylowPair> {
        &self.target
    }

    /// Element of `G` underlying element `i` of `H`.
    pub fn embed(&self, i: usize) -> usize {
        self.embedding[i]
    }

    pub fn apply(&self, u: &WeakHom) -> Result<WeakHom> {
        if !u.pair().same_as(&self.source) {
            return Err(Error::Incompatible(
                "weak homomorphism of a different pair".into(),
            ));
        }
        let values = self.embedding.iter().map(|&g| u.value(g)).collect();
        WeakHom::new(&self.target, u.modulus(), values)
    }
}
