//! Finite simplicial complexes with a simplicial right action of a subgroup
//! of a [`FiniteGroup`](crate::permgroup::FiniteGroup).
//!
//! Simplices are strictly increasing vertex tuples, stored flat per
//! dimension in lexicographic order, so a simplex is found by binary search.
//! The action table is indexed by vertex and by the *position* of the acting
//! element inside the acting subgroup's sorted member list.

mod homology;
mod subdivision;

pub use homology::{homology, HomologyProfile};
pub use subdivision::{
    barycentric_subdivision, is_regular, quotient_complex, quotient_via_subdivision, OrbitSpace,
    QuotientRoute,
};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permgroup::Subgroup;
use crate::psubgroups::PSubgroupPoset;

/// What a vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    /// A node of a subgroup poset.
    Subgroup(Subgroup),
    /// A simplex of the complex that was subdivided.
    Face(Vec<u32>),
    /// A vertex orbit of the complex that was quotiented, by its least member.
    Orbit(u32),
}

#[derive(Clone, Debug)]
pub struct SimplicialGComplex {
    acting: Subgroup,
    labels: Vec<VertexLabel>,
    /// `simplices[n]` holds the `n`-simplices back to back, `n + 1` entries each.
    simplices: Vec<Vec<u32>>,
    action: Vec<u32>,
}

impl SimplicialGComplex {
    /// Builds a complex from arbitrary simplices, adding all faces.
    ///
    /// `action[v * |acting| + k]` is the image of vertex `v` under the `k`-th
    /// member of `acting`. The action must permute the simplices.
    pub fn from_simplices(
        acting: Subgroup,
        labels: Vec<VertexLabel>,
        simplices: &[Vec<u32>],
        action: Vec<u32>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<u32>>> = Vec::new();
        for v in 0..n as u32 {
            add_with_faces(&mut by_dim, vec![v]);
        }
        for s in simplices {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            if let Some(&v) = s.iter().find(|&&v| v as usize >= n) {
                return Err(Error::Invariant(format!("vertex {v} out of range")));
            }
            add_with_faces(&mut by_dim, s);
        }
        let flat = by_dim
            .into_iter()
            .map(|set| set.into_iter().flatten().collect())
            .collect();
        let complex = Self::from_parts(acting, labels, flat, action);
        complex.validate()?;
        Ok(complex)
    }

    pub(crate) fn from_parts(
        acting: Subgroup,
        labels: Vec<VertexLabel>,
        mut simplices: Vec<Vec<u32>>,
        action: Vec<u32>,
    ) -> Self {
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        SimplicialGComplex {
            acting,
            labels,
            simplices,
            action,
        }
    }

    /// Checks downward closure, the shape of the action table, and that the
    /// action permutes vertices and sends simplices to simplices.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let k = self.acting.order();
        if self.action.len() != n * k {
            return Err(Error::Invariant("action table has the wrong size".into()));
        }
        if self.simplices.first().is_some_and(|v| v.len() != n) {
            return Err(Error::Invariant("every vertex must be a 0-simplex".into()));
        }
        for pos in 0..k {
            let mut seen = vec![false; n];
            for v in 0..n {
                let w = self.action[v * k + pos] as usize;
                if w >= n || std::mem::replace(&mut seen[w], true) {
                    return Err(Error::Invariant(format!(
                        "element {pos} does not permute vertices"
                    )));
                }
            }
        }
        for dim in 0..self.simplices.len() {
            for s in self.simplices_of(dim) {
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Invariant(format!("simplex {s:?} is not increasing")));
                }
                if dim > 0 {
                    for i in 0..=dim {
                        if self.find(&drop_entry(s, i)).is_none() {
                            return Err(Error::Invariant(format!("a face of {s:?} is missing")));
                        }
                    }
                }
                for pos in 0..k {
                    if self.find(&self.image_by_position(s, pos)).is_none() {
                        return Err(Error::Invariant(format!("image of {s:?} is not a simplex")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn acting(&self) -> &Subgroup {
        &self.acting
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.simplices
            .get(dim)
            .map_or(0, |flat| flat.len() / (dim + 1))
    }

    /// Simplex counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.simplices.len()).map(|d| self.count(d)).collect()
    }

    pub fn simplex(&self, dim: usize, i: usize) -> &[u32] {
        &self.simplices[dim][i * (dim + 1)..(i + 1) * (dim + 1)]
    }

    pub fn simplices_of(&self, dim: usize) -> std::slice::ChunksExact<'_, u32> {
        self.simplices
            .get(dim)
            .map_or(&[][..], Vec::as_slice)
            .chunks_exact(dim + 1)
    }

    /// Index of a sorted simplex within its dimension.
    pub fn find(&self, simplex: &[u32]) -> Option<usize> {
        let dim = simplex.len().checked_sub(1)?;
        let count = self.count(dim);
        let (mut lo, mut hi) = (0, count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.simplex(dim, mid).cmp(simplex) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Position of a group element inside the acting subgroup.
    pub fn position_of(&self, g: usize) -> Option<usize> {
        self.acting.members().binary_search(&(g as u32)).ok()
    }

    #[inline]
    pub(crate) fn act_by_position(&self, v: usize, pos: usize) -> usize {
        self.action[v * self.acting.order() + pos] as usize
    }

    /// Image of vertex `v` under the group element `g`, which must lie in
    /// the acting subgroup.
    pub fn act(&self, v: usize, g: usize) -> usize {
        let pos = self
            .position_of(g)
            .expect("element outside the acting subgroup");
        self.act_by_position(v, pos)
    }

    pub(crate) fn image_by_position(&self, simplex: &[u32], pos: usize) -> Vec<u32> {
        let mut image: Vec<u32> = simplex
            .iter()
            .map(|&v| self.act_by_position(v as usize, pos) as u32)
            .collect();
        image.sort_unstable();
        image
    }

    /// Image of a simplex, sorted.
    pub fn act_on_simplex(&self, simplex: &[u32], g: usize) -> Vec<u32> {
        let pos = self
            .position_of(g)
            .expect("element outside the acting subgroup");
        self.image_by_position(simplex, pos)
    }

    /// Whether every element stabilizing a simplex fixes its vertices.
    pub fn stabilizers_fix_pointwise(&self) -> bool {
        (0..self.simplices.len()).all(|dim| {
            self.simplices_of(dim).all(|s| {
                (0..self.acting.order()).all(|pos| {
                    let image = self.image_by_position(s, pos);
                    image != s
                        || s.iter()
                            .all(|&v| self.act_by_position(v as usize, pos) == v as usize)
                })
            })
        })
    }

    /// `Σ (-1)^n f_n - 1`.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(n, &f)| if n % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum::<i64>()
            - 1
    }

    /// Vertex sets of connected components, each with its setwise stabilizer
    /// in the acting subgroup. Components are listed by least vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for e in self.simplices_of(1) {
            uf.union(e[0] as usize, e[1] as usize);
        }
        let mut index_of_root = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index_of_root[r]].push(v);
        }
        let group = self.acting.group();
        comps
            .into_iter()
            .map(|vertices| {
                let root = uf.find(vertices[0]);
                let members: Vec<u32> = (0..self.acting.order())
                    .filter(|&pos| uf.find(self.act_by_position(vertices[0], pos)) == root)
                    .map(|pos| self.acting.members()[pos])
                    .collect();
                let stabilizer = Subgroup::from_sorted_members_unchecked(group, members);
                Component {
                    vertices,
                    stabilizer,
                }
            })
            .collect()
    }

    /// The same complex with the action restricted to a subgroup of the
    /// acting group.
    pub fn restrict_action(&self, sub: &Subgroup) -> Result<SimplicialGComplex> {
        if !sub.is_subgroup_of(&self.acting) {
            return Err(Error::NotASubgroup("not inside the acting subgroup".into()));
        }
        let positions: Vec<usize> = sub
            .members()
            .iter()
            .map(|&g| self.position_of(g as usize).expect("checked above"))
            .collect();
        let mut action = Vec::with_capacity(self.vertex_count() * positions.len());
        for v in 0..self.vertex_count() {
            action.extend(
                positions
                    .iter()
                    .map(|&pos| self.act_by_position(v, pos) as u32),
            );
        }
        Ok(Self::from_parts(
            sub.clone(),
            self.labels.clone(),
            self.simplices.clone(),
            action,
        ))
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub stabilizer: Subgroup,
}

/// The order complex of a subgroup poset: one simplex per strictly
/// increasing chain, with the conjugation action.
pub fn order_complex(poset: &PSubgroupPoset) -> SimplicialGComplex {
    let group = poset.group();
    let n = poset.len();
    let mut by_dim: Vec<Vec<u32>> = Vec::new();
    // Extend chains upward; indices increase along a chain, so each chain
    // is produced exactly once and already sorted. Emitting by dimension in
    // lexicographic order needs a sort per dimension afterwards.
    let mut stack: Vec<Vec<u32>> = (0..n as u32).rev().map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        let dim = chain.len() - 1;
        if by_dim.len() <= dim {
            by_dim.push(Vec::new());
        }
        by_dim[dim].extend_from_slice(&chain);
        let top = *chain.last().expect("chains are nonempty") as usize;
        for next in poset.successors(top) {
            let mut longer = chain.clone();
            longer.push(next as u32);
            stack.push(longer);
        }
    }
    for (dim, flat) in by_dim.iter_mut().enumerate() {
        let mut rows: Vec<&[u32]> = flat.chunks_exact(dim + 1).collect();
        rows.sort_unstable();
        *flat = rows.concat();
    }
    let order = group.order();
    let mut action = Vec::with_capacity(n * order);
    for v in 0..n {
        action.extend((0..order).map(|g| poset.act(v, g) as u32));
    }
    let labels = poset
        .nodes()
        .iter()
        .cloned()
        .map(VertexLabel::Subgroup)
        .collect();
    SimplicialGComplex::from_parts(Arc::clone(group).whole(), labels, by_dim, action)
}

/// The full subcomplex on the vertices below a fixed `p`-subgroup `P`, acted
/// on by `N_G(P)`, together with its translates inside the ambient complex.
#[derive(Clone, Debug)]
pub struct SylowSubcomplex {
    sylow: Subgroup,
    ambient: SimplicialGComplex,
    /// Ambient vertex of each local vertex.
    embedding: Vec<usize>,
    complex: SimplicialGComplex,
}

/// `Y = Δ(S_p(P))` inside an order complex whose vertices are subgroups.
pub fn sub_complex_y(ambient: &SimplicialGComplex, sylow: &Subgroup) -> Result<SylowSubcomplex> {
    let prime = prime_of_p_group(sylow)?;
    let mut embedding = Vec::new();
    for (v, label) in ambient.labels().iter().enumerate() {
        let VertexLabel::Subgroup(q) = label else {
            return Err(Error::Invariant(
                "vertices are not labelled by subgroups".into(),
            ));
        };
        if !q.is_p_group(prime) {
            return Err(Error::Invariant(format!(
                "vertex {v} is not a {prime}-subgroup"
            )));
        }
        if q.is_subgroup_of(sylow) {
            embedding.push(v);
        }
    }
    let whole = ambient.acting().group().whole();
    if !ambient.acting().is_subgroup_of(&whole) || ambient.acting().order() != whole.order() {
        return Err(Error::Invariant(
            "ambient complex must carry the full group action".into(),
        ));
    }
    let norm = whole.normalizer_of(sylow)?;
    let mut local = vec![u32::MAX; ambient.vertex_count()];
    for (i, &v) in embedding.iter().enumerate() {
        local[v] = i as u32;
    }
    let mut simplices: Vec<Vec<u32>> = Vec::new();
    for dim in 0..=ambient.dimension().unwrap_or(0) {
        let mut flat = Vec::new();
        for s in ambient.simplices_of(dim) {
            if s.iter().all(|&v| local[v as usize] != u32::MAX) {
                flat.extend(s.iter().map(|&v| local[v as usize]));
            }
        }
        simplices.push(flat);
    }
    let mut action = Vec::with_capacity(embedding.len() * norm.order());
    for &v in &embedding {
        for &g in norm.members() {
            action.push(local[ambient.act(v, g as usize)]);
        }
    }
    let labels = embedding
        .iter()
        .map(|&v| ambient.label(v).clone())
        .collect();
    let complex = SimplicialGComplex::from_parts(norm, labels, simplices, action);
    Ok(SylowSubcomplex {
        sylow: sylow.clone(),
        ambient: ambient.clone(),
        embedding,
        complex,
    })
}

impl SylowSubcomplex {
    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn complex(&self) -> &SimplicialGComplex {
        &self.complex
    }

    /// Ambient vertices of `Y` itself.
    pub fn vertices(&self) -> &[usize] {
        &self.embedding
    }

    /// Ambient vertices of the translate `Y·g`, sorted.
    pub fn translate(&self, g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .embedding
            .iter()
            .map(|&v| self.ambient.act(v, g))
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether `⋂ P^{g_i}` is nontrivial, computed both from subgroup
    /// intersections and from vertex sets of translates. Disagreement is an
    /// [`Error::Invariant`].
    pub fn translate_intersection_nonempty(&self, gs: &[usize]) -> Result<bool> {
        let Some((&first, rest)) = gs.split_first() else {
            return Err(Error::Invariant("empty list of translates".into()));
        };
        let mut meet = self.sylow.conjugate(first)?;
        for &g in rest {
            meet = meet.intersection(&self.sylow.conjugate(g)?)?;
        }
        let by_groups = !meet.is_trivial();
        let mut common = vec![0usize; self.ambient.vertex_count()];
        for &g in gs {
            for v in self.translate(g) {
                common[v] += 1;
            }
        }
        let by_vertices = common.contains(&gs.len());
        if by_groups != by_vertices {
            return Err(Error::Invariant(format!(
                "translates {gs:?}: subgroup test says {by_groups}, vertex test says {by_vertices}"
            )));
        }
        Ok(by_groups)
    }
}

fn prime_of_p_group(sub: &Subgroup) -> Result<u64> {
    let order = sub.order() as u64;
    let p = (2..=order).find(|d| order.is_multiple_of(*d));
    match p {
        Some(p) if sub.is_p_group(p) => Ok(p),
        _ => Err(Error::Invariant(format!(
            "a subgroup of order {order} is not a nontrivial p-group"
        ))),
    }
}

fn add_with_faces(by_dim: &mut Vec<std::collections::BTreeSet<Vec<u32>>>, s: Vec<u32>) {
    let dim = s.len() - 1;
    while by_dim.len() <= dim {
        by_dim.push(Default::default());
    }
    if by_dim[dim].contains(&s) {
        return;
    }
    if dim > 0 {
        for i in 0..=dim {
            add_with_faces(by_dim, drop_entry(&s, i));
        }
    }
    by_dim[dim].insert(s);
}

pub(crate) fn drop_entry(s: &[u32], i: usize) -> Vec<u32> {
    let mut face = Vec::with_capacity(s.len() - 1);
    face.extend_from_slice(&s[..i]);
    face.extend_from_slice(&s[i + 1..]);
    face
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests;
