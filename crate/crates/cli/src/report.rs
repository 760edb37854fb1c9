//! JSON documents for `analyze` and `weakhom`.

use std::path::PathBuf;

use brownlab::cechbundle::bundle_from_weakhom;
use brownlab::gcomplex::{
    homology, order_complex, quotient_complex, HomologyProfile, QuotientRoute,
};
use brownlab::permgroup::{is_strongly_p_embedded, p_part};
use brownlab::psubgroups::enumerate_p_subgroups;
use brownlab::weakhom::{
    brute_force_weakhoms, build_presentation, decode_generators, predicted_count,
    presentation_shape, weakhom_group, OracleMode, SylowPair, WeakHom, WeakHomGroup,
    WeakHomPresentation,
};
use serde::Serialize;

use crate::export::{bundle_entry, complex_export, BundleExport, ComplexExport};
use crate::{to_json, Failure, Loaded};

pub const SCHEMA_VERSION: u32 = 1;

/// Presentations above this many matrix entries are refused.
const PRESENTATION_MAX_ENTRIES: usize = 20_000_000;

const ORACLE_MODULI: std::ops::RangeInclusive<u64> = 2..=12;

#[derive(Serialize)]
pub struct InputEcho {
    pub group: String,
    pub p: u64,
}

impl InputEcho {
    pub fn of(input: &Loaded) -> Self {
        InputEcho {
            group: input.spec.text().to_string(),
            p: input.p,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    elapsed_ms: f64,
}

fn timing(input: &Loaded, enabled: bool) -> Option<Timing> {
    enabled.then(|| Timing {
        elapsed_ms: (input.started.elapsed().as_secs_f64() * 1e6).round() / 1e3,
    })
}

/// A count as a JSON number when it fits, else a decimal string.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Count {
    Small(u64),
    Big(String),
}

impl Count {
    fn of(n: &impl ToString) -> Self {
        let text = n.to_string();
        text.parse().map_or(Count::Big(text), Count::Small)
    }
}

pub struct AnalyzeOptions {
    pub complex: bool,
    pub quotient: bool,
    pub variants: bool,
    pub export: Option<PathBuf>,
    pub timing: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeReport {
    schema_version: u32,
    input: InputEcho,
    group_order: usize,
    sylow_order: usize,
    p_divides_order: bool,
    notes: Vec<String>,
    poset_sizes: PosetSizes,
    complex: ComplexSummary,
    components: ComponentSummary,
    quotient: QuotientSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    variants: Option<Variants>,
    weak_homomorphisms: WeakHomGroup,
    oracle: OracleSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    complex_export: Option<ComplexExport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient_export: Option<ComplexExport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

#[derive(Serialize)]
struct PosetSizes {
    brown: usize,
    quillen: usize,
    bouc: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ComplexSummary {
    f_vector: Vec<usize>,
    homology: HomologyProfile,
    reduced_euler: i64,
    reduced_euler_divisible_by_sylow_order: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ComponentSummary {
    count: usize,
    stabilizer_orders: Vec<usize>,
    /// One verdict per component; empty when the complex is connected.
    strongly_p_embedded: Vec<bool>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct QuotientSummary {
    route: QuotientRoute,
    f_vector: Vec<usize>,
    homology: HomologyProfile,
    acyclic: bool,
}

#[derive(Serialize)]
struct Variants {
    quillen: HomologyProfile,
    bouc: HomologyProfile,
    agree: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleCheck {
    modulus: u64,
    mode: OracleMode,
    count: Count,
    predicted: Count,
    agree: bool,
}

#[derive(Serialize)]
struct OracleSummary {
    agree: bool,
    checks: Vec<OracleCheck>,
}

fn presentation(pair: &std::sync::Arc<SylowPair>) -> Result<WeakHomPresentation, Failure> {
    let (rows, cols) = presentation_shape(pair);
    if rows.saturating_mul(cols) > PRESENTATION_MAX_ENTRIES {
        return Err(brownlab::Error::TooLarge(format!(
            "presentation with {rows} x {cols} entries"
        ))
        .into());
    }
    Ok(build_presentation(pair))
}

fn oracle_checks(
    pair: &std::sync::Arc<SylowPair>,
    w: &WeakHomGroup,
    moduli: &[u64],
) -> Result<OracleSummary, Failure> {
    let mut checks = Vec::new();
    for &m in moduli {
        let oracle = brute_force_weakhoms(pair, m)?;
        let predicted = predicted_count(w, m);
        checks.push(OracleCheck {
            modulus: m,
            mode: oracle.mode,
            agree: oracle.count == predicted,
            count: Count::of(&oracle.count),
            predicted: Count::of(&predicted),
        });
    }
    Ok(OracleSummary {
        agree: checks.iter().all(|c| c.agree),
        checks,
    })
}

fn invariant(cond: bool, what: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(brownlab::Error::Invariant(what()).into())
    }
}

pub fn analyze(input: &Loaded, options: &AnalyzeOptions) -> Result<AnalyzeReport, Failure> {
    let (group, p) = (&input.group, input.p);
    let pair = SylowPair::new(group, p)?;
    let p_divides_order = (group.order() as u64).is_multiple_of(p);
    let mut notes = Vec::new();
    if !p_divides_order {
        notes.push(format!(
            "p does not divide |G|; the {p}-subgroup poset is empty"
        ));
    }

    let poset = enumerate_p_subgroups(group, p)?;
    let quillen = poset.quillen_filter()?;
    let bouc = poset.bouc_filter()?;
    let x = order_complex(&poset);
    let h = homology(&x);
    invariant(h.reduced_euler() == h.euler_from_betti(), || {
        format!(
            "reduced Euler {} but Betti sum {}",
            h.reduced_euler(),
            h.euler_from_betti()
        )
    })?;
    let sylow_order = p_part(group.order(), p);
    let complex = ComplexSummary {
        f_vector: x.f_vector(),
        reduced_euler: x.reduced_euler(),
        reduced_euler_divisible_by_sylow_order: x.reduced_euler() % sylow_order as i64 == 0,
        homology: h,
    };

    let comps = x.connected_components();
    let mut strongly = Vec::new();
    if comps.len() > 1 {
        for c in &comps {
            strongly.push(is_strongly_p_embedded(group, &c.stabilizer, p)?);
        }
    }
    let components = ComponentSummary {
        count: comps.len(),
        stabilizer_orders: comps.iter().map(|c| c.stabilizer.order()).collect(),
        strongly_p_embedded: strongly,
    };

    let q = quotient_complex(&x)?;
    let hq = homology(&q.complex);
    let quotient = QuotientSummary {
        route: q.route,
        f_vector: q.complex.f_vector(),
        acyclic: hq.is_acyclic(),
        homology: hq,
    };
    notes.push("acyclicity of the orbit space is checked by homology only".into());

    let variants = options.variants.then(|| {
        let hq = homology(&order_complex(&quillen));
        let hb = homology(&order_complex(&bouc));
        let agree = hq == complex.homology && hb == complex.homology;
        Variants {
            quillen: hq,
            bouc: hb,
            agree,
        }
    });

    let pres = presentation(&pair)?;
    let w = weakhom_group(&pres);
    let generators = decode_generators(&pres, None)?;
    let moduli: Vec<u64> = ORACLE_MODULI.collect();
    let oracle = oracle_checks(&pair, &w, &moduli)?;

    if let Some(dir) = &options.export {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure::new(2, format!("cannot create {}: {e}", dir.display())))?;
        let write = |name: &str, text: String| {
            let path = dir.join(name);
            std::fs::write(&path, text)
                .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display())))
        };
        write("complex.json", to_json(&complex_export(input, &x)))?;
        write("quotient.json", to_json(&complex_export(input, &q.complex)))?;
        write("bundles.json", to_json(&bundle_export(input, &generators)?))?;
    }

    Ok(AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        input: InputEcho::of(input),
        group_order: group.order(),
        sylow_order,
        p_divides_order,
        notes,
        poset_sizes: PosetSizes {
            brown: poset.len(),
            quillen: quillen.len(),
            bouc: bouc.len(),
        },
        complex_export: options.complex.then(|| complex_export(input, &x)),
        quotient_export: options.quotient.then(|| complex_export(input, &q.complex)),
        complex,
        components,
        quotient,
        variants,
        weak_homomorphisms: w,
        oracle,
        timing: timing(input, options.timing),
    })
}

pub fn bundle_export(input: &Loaded, generators: &[WeakHom]) -> Result<BundleExport, Failure> {
    let mut bundles = Vec::with_capacity(generators.len());
    for (i, u) in generators.iter().enumerate() {
        bundles.push(bundle_entry(i, u, &bundle_from_weakhom(u)?));
    }
    Ok(BundleExport::new(
        input,
        generators.first().map_or(1, WeakHom::modulus),
        bundles,
    ))
}

pub struct WeakhomOptions {
    pub modulus: Option<u64>,
    pub list: bool,
    pub oracle: bool,
    pub timing: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeakhomReport {
    schema_version: u32,
    input: InputEcho,
    group_order: usize,
    sylow_order: usize,
    presentation: PresentationShape,
    #[serde(flatten)]
    weak_homomorphisms: WeakHomGroup,
    modulus: u64,
    generator_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<GeneratorTable>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PresentationShape {
    generators: usize,
    wh1_rows: usize,
    wh2_rows: usize,
    wh3_rows: usize,
}

#[derive(Serialize)]
struct GeneratorTable {
    order: u64,
    values: Vec<ValueEntry>,
}

#[derive(Serialize)]
struct ValueEntry {
    element: String,
    exponent: u64,
}

pub fn weakhom(input: &Loaded, options: &WeakhomOptions) -> Result<WeakhomReport, Failure> {
    if options.modulus == Some(0) {
        return Err(Failure::new(2, "modulus must be positive"));
    }
    let (group, p) = (&input.group, input.p);
    let pair = SylowPair::new(group, p)?;
    let pres = presentation(&pair)?;
    let w = weakhom_group(&pres);
    let generators = decode_generators(&pres, options.modulus)?;
    let modulus = match options.modulus {
        Some(m) => m,
        None => generators.first().map_or(1, WeakHom::modulus),
    };
    let tables = options.list.then(|| {
        generators
            .iter()
            .map(|u| GeneratorTable {
                order: u.order(),
                values: (0..group.order())
                    .map(|g| ValueEntry {
                        element: group.element(g).to_string(),
                        exponent: u.value(g),
                    })
                    .collect(),
            })
            .collect()
    });
    let oracle = if options.oracle {
        let moduli: Vec<u64> = match options.modulus {
            Some(m) if m >= 2 => vec![m],
            Some(_) => Vec::new(),
            None => ORACLE_MODULI.collect(),
        };
        Some(oracle_checks(&pair, &w, &moduli)?)
    } else {
        None
    };
    let (wh1, wh2, wh3) = pres.block_sizes();
    Ok(WeakhomReport {
        schema_version: SCHEMA_VERSION,
        input: InputEcho::of(input),
        group_order: group.order(),
        sylow_order: pair.sylow().order(),
        presentation: PresentationShape {
            generators: pres.generator_count(),
            wh1_rows: wh1,
            wh2_rows: wh2,
            wh3_rows: wh3,
        },
        weak_homomorphisms: w,
        modulus,
        generator_count: generators.len(),
        generators: tables,
        oracle,
        timing: timing(input, options.timing),
    })
}
