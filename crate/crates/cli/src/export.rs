//! Machine-readable dumps of complexes and bundles.

use brownlab::cechbundle::CechBundle;
use brownlab::gcomplex::{order_complex, quotient_complex, SimplicialGComplex, VertexLabel};
use brownlab::psubgroups::enumerate_p_subgroups;
use brownlab::weakhom::{build_presentation, decode_generators, SylowPair, WeakHom};
use serde::Serialize;

use crate::report::{bundle_export, InputEcho, SCHEMA_VERSION};
use crate::{Failure, Loaded};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplexExport {
    schema_version: u32,
    input: InputEcho,
    group_order: usize,
    elements: Vec<String>,
    /// Indices into `elements`; column `k` of `action` is `actingElements[k]`.
    acting_elements: Vec<u32>,
    vertices: Vec<Vertex>,
    simplices: Vec<Vec<Vec<u32>>>,
    action: Vec<Vec<u32>>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Vertex {
    Subgroup {
        index: usize,
        order: usize,
        generators: Vec<String>,
    },
    Face {
        index: usize,
        face: Vec<u32>,
    },
    #[serde(rename_all = "camelCase")]
    Orbit {
        index: usize,
        orbit_representative: u32,
    },
}

pub fn complex_export(input: &Loaded, x: &SimplicialGComplex) -> ComplexExport {
    let group = &input.group;
    let vertices = x
        .labels()
        .iter()
        .enumerate()
        .map(|(index, label)| match label {
            VertexLabel::Subgroup(h) => Vertex::Subgroup {
                index,
                order: h.order(),
                generators: h
                    .generators()
                    .iter()
                    .map(|&g| group.element(g).to_string())
                    .collect(),
            },
            VertexLabel::Face(face) => Vertex::Face {
                index,
                face: face.clone(),
            },
            VertexLabel::Orbit(rep) => Vertex::Orbit {
                index,
                orbit_representative: *rep,
            },
        })
        .collect();
    let simplices = (0..x.dimension().map_or(0, |d| d + 1))
        .map(|n| x.simplices_of(n).map(<[u32]>::to_vec).collect())
        .collect();
    let acting = x.acting().members();
    let action = (0..x.vertex_count())
        .map(|v| {
            acting
                .iter()
                .map(|&g| x.act(v, g as usize) as u32)
                .collect()
        })
        .collect();
    ComplexExport {
        schema_version: SCHEMA_VERSION,
        input: InputEcho::of(input),
        group_order: group.order(),
        elements: group.elements().iter().map(ToString::to_string).collect(),
        acting_elements: acting.to_vec(),
        vertices,
        simplices,
        action,
    }
}

/// The poset complex, or its orbit space when `quotient` is set.
pub fn complex_document(input: &Loaded, quotient: bool) -> Result<ComplexExport, Failure> {
    let x = order_complex(&enumerate_p_subgroups(&input.group, input.p)?);
    if quotient {
        Ok(complex_export(input, &quotient_complex(&x)?.complex))
    } else {
        Ok(complex_export(input, &x))
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BundleExport {
    schema_version: u32,
    input: InputEcho,
    modulus: u64,
    elements: Vec<String>,
    bundles: Vec<BundleEntry>,
}

impl BundleExport {
    pub fn new(input: &Loaded, modulus: u64, bundles: Vec<BundleEntry>) -> Self {
        BundleExport {
            schema_version: SCHEMA_VERSION,
            input: InputEcho::of(input),
            modulus,
            elements: input
                .group
                .elements()
                .iter()
                .map(ToString::to_string)
                .collect(),
            bundles,
        }
    }
}

#[derive(Serialize)]
pub struct BundleEntry {
    generator: usize,
    order: u64,
    transitions: Vec<Transition>,
}

#[derive(Serialize)]
struct Transition {
    s: usize,
    t: usize,
    exponent: u64,
}

pub fn bundle_entry(generator: usize, u: &WeakHom, c: &CechBundle) -> BundleEntry {
    BundleEntry {
        generator,
        order: u.order(),
        transitions: c
            .defined()
            .map(|((s, t), exponent)| Transition { s, t, exponent })
            .collect(),
    }
}

/// Bundles of the decoded generators, reduced mod `modulus` when given.
pub fn bundle_document(input: &Loaded, modulus: Option<u64>) -> Result<BundleExport, Failure> {
    if modulus == Some(0) {
        return Err(Failure::new(2, "modulus must be positive"));
    }
    let pair = SylowPair::new(&input.group, input.p)?;
    let generators = decode_generators(&build_presentation(&pair), modulus)?;
    let mut doc = bundle_export(input, &generators)?;
    if let Some(m) = modulus {
        doc.modulus = m;
    }
    Ok(doc)
}
