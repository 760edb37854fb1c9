//! Barycentric subdivision and orbit-space quotients.

use std::collections::HashMap;

use super::{SimplicialGComplex, UnionFind, VertexLabel};
use crate::error::{Error, Result};

/// Vertices are the simplices of `complex`, ordered by dimension and then
/// lexicographically; simplices are flags `σ_0 ⊂ … ⊂ σ_k`.
pub fn barycentric_subdivision(complex: &SimplicialGComplex) -> SimplicialGComplex {
    let dims = complex.dimension().map_or(0, |d| d + 1);
    let mut offset = vec![0usize; dims + 1];
    for d in 0..dims {
        offset[d + 1] = offset[d] + complex.count(d);
    }
    let vertex_of = |s: &[u32]| -> u32 {
        let d = s.len() - 1;
        (offset[d] + complex.find(s).expect("complex is closed")) as u32
    };

    // flags[d][i]: all flags whose top is the i-th d-simplex, each listed
    // bottom-up as new vertex ids.
    let mut flags: Vec<Vec<Vec<Vec<u32>>>> = Vec::with_capacity(dims);
    let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dims];
    for d in 0..dims {
        let mut level = Vec::with_capacity(complex.count(d));
        for (i, s) in complex.simplices_of(d).enumerate() {
            let me = (offset[d] + i) as u32;
            let mut mine = vec![vec![me]];
            // Every proper face, via the nonempty proper subsets of vertices.
            for mask in 1u32..(1 << (d + 1)) - 1 {
                let face: Vec<u32> = (0..=d)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| s[j])
                    .collect();
                let fd = face.len() - 1;
                let fi = complex.find(&face).expect("complex is closed");
                for flag in &flags[fd][fi] {
                    let mut longer = flag.clone();
                    longer.push(me);
                    mine.push(longer);
                }
            }
            for flag in &mine {
                out[flag.len() - 1].push(flag.clone());
            }
            level.push(mine);
        }
        flags.push(level);
    }
    let mut simplices = Vec::with_capacity(dims);
    for mut rows in out {
        rows.sort_unstable();
        simplices.push(rows.concat());
    }

    let labels: Vec<VertexLabel> = (0..dims)
        .flat_map(|d| {
            complex
                .simplices_of(d)
                .map(|s| VertexLabel::Face(s.to_vec()))
        })
        .collect();
    let k = complex.acting().order();
    let mut action = Vec::with_capacity(labels.len() * k);
    for d in 0..dims {
        for s in complex.simplices_of(d) {
            action.extend((0..k).map(|pos| vertex_of(&complex.image_by_position(s, pos))));
        }
    }
    SimplicialGComplex::from_parts(complex.acting().clone(), labels, simplices, action)
}

/// Orbit labels of the vertices: each vertex maps to the least vertex in its
/// orbit.
fn vertex_orbits(complex: &SimplicialGComplex) -> Vec<u32> {
    (0..complex.vertex_count())
        .map(|v| {
            (0..complex.acting().order())
                .map(|pos| complex.act_by_position(v, pos) as u32)
                .min()
                .unwrap_or(v as u32)
        })
        .collect()
}

/// Whether the action is regular: no simplex meets a vertex orbit twice,
/// and simplices whose vertices lie in the same orbits form a single orbit.
/// A regular complex's orbit space is the complex of vertex-orbit images.
pub fn is_regular(complex: &SimplicialGComplex) -> bool {
    let orbit = vertex_orbits(complex);
    let generators: Vec<usize> = complex
        .acting()
        .generators()
        .iter()
        .map(|&g| {
            complex
                .position_of(g)
                .expect("generator of the acting subgroup")
        })
        .collect();
    for dim in 0..complex.dimension().map_or(0, |d| d + 1) {
        let count = complex.count(dim);
        let mut uf = UnionFind::new(count);
        for (i, s) in complex.simplices_of(dim).enumerate() {
            for &pos in &generators {
                let j = complex
                    .find(&complex.image_by_position(s, pos))
                    .expect("action is simplicial");
                uf.union(i, j);
            }
        }
        let mut class_of_labels: HashMap<Vec<u32>, usize> = HashMap::new();
        for (i, s) in complex.simplices_of(dim).enumerate() {
            let mut labels: Vec<u32> = s.iter().map(|&v| orbit[v as usize]).collect();
            labels.sort_unstable();
            if labels.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
            let root = uf.find(i);
            if *class_of_labels.entry(labels).or_insert(root) != root {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub enum QuotientRoute {
    /// The complex was already regular.
    Direct,
    /// Quotient taken after two barycentric subdivisions.
    SecondSubdivision,
}

#[derive(Clone, Debug)]
pub struct OrbitSpace {
    pub complex: SimplicialGComplex,
    pub route: QuotientRoute,
}

/// A simplicial model of the orbit space, with the acting subgroup acting
/// trivially.
pub fn quotient_complex(complex: &SimplicialGComplex) -> Result<OrbitSpace> {
    if is_regular(complex) {
        return Ok(OrbitSpace {
            complex: quotient_regular(complex),
            route: QuotientRoute::Direct,
        });
    }
    quotient_via_subdivision(complex)
}

/// The orbit space through the second subdivision, even when the complex is
/// already regular.
pub fn quotient_via_subdivision(complex: &SimplicialGComplex) -> Result<OrbitSpace> {
    let twice = barycentric_subdivision(&barycentric_subdivision(complex));
    if !is_regular(&twice) {
        return Err(Error::Invariant("second subdivision is not regular".into()));
    }
    Ok(OrbitSpace {
        complex: quotient_regular(&twice),
        route: QuotientRoute::SecondSubdivision,
    })
}

fn quotient_regular(complex: &SimplicialGComplex) -> SimplicialGComplex {
    let orbit = vertex_orbits(complex);
    let mut reps: Vec<u32> = orbit.clone();
    reps.sort_unstable();
    reps.dedup();
    let new_index: HashMap<u32, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u32))
        .collect();
    let mut simplices = Vec::new();
    for dim in 0..complex.dimension().map_or(0, |d| d + 1) {
        let mut rows: Vec<Vec<u32>> = complex
            .simplices_of(dim)
            .map(|s| {
                let mut image: Vec<u32> =
                    s.iter().map(|&v| new_index[&orbit[v as usize]]).collect();
                image.sort_unstable();
                image
            })
            .collect();
        rows.sort_unstable();
        rows.dedup();
        simplices.push(rows.concat());
    }
    let k = complex.acting().order();
    let action: Vec<u32> = (0..reps.len() as u32)
        .flat_map(|v| std::iter::repeat_n(v, k))
        .collect();
    let labels = reps.into_iter().map(VertexLabel::Orbit).collect();
    SimplicialGComplex::from_parts(complex.acting().clone(), labels, simplices, action)
}
