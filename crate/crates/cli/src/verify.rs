//! Self-checks over the built-in catalog.
//!
//! Each property runs on its own thread; lines are printed in a fixed order.

use std::io::Write;
use std::sync::Arc;

use brownlab::catalog::{catalog_pairs, CatalogEntry, CATALOG};
use brownlab::cechbundle::{
    bundle_from_weakhom, enumerate_cocycles, res_to_p, tensor_bundles, validate_bundle,
    weakhom_from_bundle,
};
use brownlab::gcomplex::{
    barycentric_subdivision, homology, order_complex, quotient_complex, sub_complex_y,
    SimplicialGComplex,
};
use brownlab::permgroup::{is_strongly_p_embedded, p_part, GroupRef};
use brownlab::psubgroups::enumerate_p_subgroups;
use brownlab::weakhom::{
    brute_force_weakhoms, build_presentation, characters_trivial_on, decode_generators,
    predicted_count, quotient_abelianization, tilde_from_character, validate_weakhom,
    weakhom_group, SylowPair, WeakHom,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    WeakhomOracle,
    Cocycle,
    Topology,
}

impl SuiteName {
    fn label(self) -> &'static str {
        match self {
            SuiteName::WeakhomOracle => "weakhom-oracle",
            SuiteName::Cocycle => "cocycle",
            SuiteName::Topology => "topology",
        }
    }

    fn properties(self) -> &'static [(&'static str, Property)] {
        match self {
            SuiteName::WeakhomOracle => &[
                ("oracle-agreement", oracle_agreement),
                ("t-prime-to-p", t_prime_to_p),
                ("normal-sylow", normal_sylow),
                ("decoded-generators", decoded_generators),
                ("connected-characters", connected_characters),
                ("w-p-torsion", w_p_torsion),
            ],
            SuiteName::Cocycle => &[
                ("round-trip", round_trip),
                ("tensor-law", tensor_law),
                ("domain", domain),
                ("enumeration", enumeration),
                ("mutations-rejected", mutations_rejected),
                ("restriction-to-p", restriction_to_p),
            ],
            SuiteName::Topology => &[
                ("euler-congruence", euler_congruence),
                ("variants-agree", variants_agree),
                ("orbit-space-acyclic", orbit_space_acyclic),
                ("subdivision-invariance", subdivision_invariance),
                ("stabilizers-fix-pointwise", stabilizers_fix_pointwise),
                ("strongly-embedded", strongly_embedded),
                ("translates", translates),
            ],
        }
    }
}

type Verdict = Result<String, String>;
type Property = fn() -> Verdict;

/// Runs the suites, writing one line per property; true when all pass.
pub fn run(suites: &[SuiteName], out: &mut impl Write) -> bool {
    let jobs: Vec<(SuiteName, &str, Property)> = suites
        .iter()
        .flat_map(|&s| s.properties().iter().map(move |&(name, f)| (s, name, f)))
        .collect();
    let verdicts: Vec<Verdict> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|&(_, _, f)| scope.spawn(f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("panicked".into())))
            .collect()
    });
    let mut failed = 0;
    for ((suite, name, _), verdict) in jobs.iter().zip(&verdicts) {
        let line = match verdict {
            Ok(detail) => format!("PASS {}/{name}: {detail}", suite.label()),
            Err(witness) => {
                failed += 1;
                format!("FAIL {}/{name}: {witness}", suite.label())
            }
        };
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(
        out,
        "{} of {} properties passed",
        jobs.len() - failed,
        jobs.len()
    );
    failed == 0
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn err(e: brownlab::Error) -> String {
    e.to_string()
}

struct Case {
    name: &'static str,
    p: u64,
    group: GroupRef,
    pair: Arc<SylowPair>,
}

impl Case {
    fn all() -> Vec<Case> {
        catalog_pairs()
            .map(|(e, p)| {
                let group = e.build();
                let pair = SylowPair::new(&group, p).expect("catalog primes divide the order");
                Case {
                    name: e.name,
                    p,
                    group,
                    pair,
                }
            })
            .collect()
    }

    fn tag(&self) -> String {
        format!("{} p={}", self.name, self.p)
    }

    fn complex(&self) -> Result<SimplicialGComplex, String> {
        Ok(order_complex(
            &enumerate_p_subgroups(&self.group, self.p).map_err(err)?,
        ))
    }

    fn generators(&self) -> Result<Vec<WeakHom>, String> {
        decode_generators(&build_presentation(&self.pair), None).map_err(err)
    }

    /// Decoded generators plus the identity.
    fn weakhoms(&self) -> Result<Vec<WeakHom>, String> {
        let mut all = self.generators()?;
        let m = all.first().map_or(1, WeakHom::modulus);
        all.push(WeakHom::trivial(&self.pair, m));
        Ok(all)
    }
}

fn for_each_case(mut check: impl FnMut(&Case) -> Result<(), String>) -> Verdict {
    let cases = Case::all();
    for case in &cases {
        check(case).map_err(|w| format!("{}: {w}", case.tag()))?;
    }
    Ok(format!("{} pairs", cases.len()))
}

fn oracle_agreement() -> Verdict {
    for_each_case(|c| {
        let w = weakhom_group(&build_presentation(&c.pair));
        for m in 2..=12 {
            let oracle = brute_force_weakhoms(&c.pair, m).map_err(err)?;
            let predicted = predicted_count(&w, m);
            ensure(oracle.count == predicted, || {
                format!("m={m}: oracle {} vs predicted {predicted}", oracle.count)
            })?;
        }
        Ok(())
    })
}

fn t_prime_to_p() -> Verdict {
    for_each_case(|c| {
        let t = weakhom_group(&build_presentation(&c.pair)).prime_to_p;
        ensure(t.is_finite() && !t.has_p_torsion(c.p), || {
            format!("T = {t}")
        })
    })
}

fn normal_sylow() -> Verdict {
    let mut normal = 0;
    for_each_case(|c| {
        if !c.pair.sylow().is_normal_in(&c.group.whole()) {
            return Ok(());
        }
        normal += 1;
        let torsion = weakhom_group(&build_presentation(&c.pair)).torsion;
        let expected = quotient_abelianization(&c.group, c.pair.sylow());
        ensure(torsion == expected, || {
            format!("Tors(A) = {torsion}, G/P abelianized = {expected}")
        })
    })
    .map(|detail| format!("{detail}, {normal} with a normal Sylow"))
}

fn decoded_generators() -> Verdict {
    for_each_case(|c| {
        for u in c.generators()? {
            validate_weakhom(&c.pair, u.modulus(), u.values()).map_err(|v| v.to_string())?;
        }
        Ok(())
    })
}

fn connected_characters() -> Verdict {
    for_each_case(|c| {
        if c.complex()?.connected_components().len() != 1 {
            return Ok(());
        }
        for chi in
            characters_trivial_on(&c.group, c.pair.sylow(), c.group.order() as u64).map_err(err)?
        {
            let tilde = tilde_from_character(&c.pair, &chi).map_err(err)?;
            ensure(!tilde.is_trivial() || chi.is_trivial(), || {
                format!("nontrivial character {:?} has trivial tilde", chi.values())
            })?;
        }
        Ok(())
    })
}

fn w_p_torsion() -> Verdict {
    let mut with = Vec::new();
    for_each_case(|c| {
        if weakhom_group(&build_presentation(&c.pair)).w_has_p_torsion {
            with.push(c.tag());
        }
        Ok(())
    })
    .map(|detail| match with.is_empty() {
        true => format!("{detail}, none with p-torsion in W"),
        false => format!("{detail}, p-torsion in W: {}", with.join(", ")),
    })
}

fn round_trip() -> Verdict {
    for_each_case(|c| {
        for u in c.weakhoms()? {
            let bundle = bundle_from_weakhom(&u).map_err(err)?;
            validate_bundle(&bundle).map_err(|v| format!("image invalid: {v}"))?;
            ensure(weakhom_from_bundle(&bundle).map_err(err)? == u, || {
                "round trip changed the map".into()
            })?;
        }
        Ok(())
    })
}

fn tensor_law() -> Verdict {
    for_each_case(|c| {
        let all = c.weakhoms()?;
        for u in &all {
            for v in &all {
                let lhs = bundle_from_weakhom(&u.multiply(v).map_err(err)?).map_err(err)?;
                let rhs = tensor_bundles(
                    &bundle_from_weakhom(u).map_err(err)?,
                    &bundle_from_weakhom(v).map_err(err)?,
                )
                .map_err(err)?;
                ensure(lhs == rhs, || {
                    "bundle of a product is not the tensor product".into()
                })?;
            }
        }
        Ok(())
    })
}

fn domain() -> Verdict {
    for_each_case(|c| {
        let x = c.complex()?;
        let y = sub_complex_y(&x, c.pair.sylow()).map_err(err)?;
        let n = c.group.order();
        let bundle = bundle_from_weakhom(&WeakHom::trivial(&c.pair, 1)).map_err(err)?;
        for s in 0..n {
            for t in 0..n {
                let meets = y.translate_intersection_nonempty(&[s, t]).map_err(err)?;
                ensure(meets == bundle.get(s, t).is_some(), || {
                    format!("pair ({s}, {t}): translates meet = {meets}")
                })?;
            }
        }
        Ok(())
    })
}

fn enumeration() -> Verdict {
    let entry = |name: &str| {
        CATALOG
            .iter()
            .find(|e| e.name == name)
            .map(CatalogEntry::build)
    };
    let s3 = entry("S3").ok_or("S3 missing from the catalog")?;
    let pair = SylowPair::new(&s3, 3).map_err(err)?;
    let found = enumerate_cocycles(&pair, 2).map_err(err)?;
    ensure(found.len() == 2, || {
        format!("S3 p=3 m=2: {} cocycles", found.len())
    })?;
    Ok("S3 p=3 m=2: 2 cocycles".into())
}

fn mutations_rejected() -> Verdict {
    let mut rejected = 0;
    for_each_case(|c| {
        for u in c.weakhoms()? {
            let bundle = bundle_from_weakhom(&u).map_err(err)?;
            let m = bundle.modulus();
            if m < 2 {
                continue;
            }
            for ((s, t), v) in bundle.defined() {
                let bad = bundle.with_entry(s, t, Some((v + 1) % m));
                match validate_bundle(&bad) {
                    Ok(()) => return Err(format!("mutation at ({s}, {t}) accepted")),
                    Err(w) => ensure(w.elements().iter().any(|&x| x == s || x == t), || {
                        format!("witness {w} misses ({s}, {t})")
                    })?,
                }
                rejected += 1;
            }
        }
        Ok(())
    })
    .map(|detail| format!("{detail}, {rejected} mutations"))
}

fn restriction_to_p() -> Verdict {
    for_each_case(|c| {
        for u in c.weakhoms()? {
            let restricted = res_to_p(&bundle_from_weakhom(&u).map_err(err)?);
            ensure(restricted.iter().all(|&(_, v)| v == 0), || {
                format!("nonzero entries on P: {restricted:?}")
            })?;
        }
        Ok(())
    })
}

fn euler_congruence() -> Verdict {
    for_each_case(|c| {
        let chi = c.complex()?.reduced_euler();
        let sylow = p_part(c.group.order(), c.p) as i64;
        ensure(chi % sylow == 0, || {
            format!("reduced Euler {chi} not divisible by {sylow}")
        })
    })
}

fn variants_agree() -> Verdict {
    for_each_case(|c| {
        let poset = enumerate_p_subgroups(&c.group, c.p).map_err(err)?;
        let brown = homology(&order_complex(&poset));
        for variant in [
            poset.quillen_filter().map_err(err)?,
            poset.bouc_filter().map_err(err)?,
        ] {
            let h = homology(&order_complex(&variant));
            ensure(h == brown, || format!("{h:?} vs {brown:?}"))?;
        }
        Ok(())
    })
}

fn orbit_space_acyclic() -> Verdict {
    for_each_case(|c| {
        let q = quotient_complex(&c.complex()?).map_err(err)?;
        let h = homology(&q.complex);
        ensure(h.is_acyclic(), || {
            format!("{:?} route, homology {h:?}", q.route)
        })
    })
}

fn subdivision_invariance() -> Verdict {
    for_each_case(|c| {
        let x = c.complex()?;
        ensure(
            homology(&barycentric_subdivision(&x)) == homology(&x),
            || "subdivision changed homology".into(),
        )
    })
}

fn stabilizers_fix_pointwise() -> Verdict {
    for_each_case(|c| {
        ensure(c.complex()?.stabilizers_fix_pointwise(), || {
            "a simplex is flipped".into()
        })
    })
}

fn strongly_embedded() -> Verdict {
    let mut disconnected = Vec::new();
    for_each_case(|c| {
        let comps = c.complex()?.connected_components();
        if comps.len() == 1 {
            return ensure(comps[0].stabilizer.order() == c.group.order(), || {
                "connected but the stabilizer is proper".into()
            });
        }
        for comp in &comps {
            ensure(
                is_strongly_p_embedded(&c.group, &comp.stabilizer, c.p).map_err(err)?,
                || {
                    format!(
                        "component stabilizer of order {} is not strongly embedded",
                        comp.stabilizer.order()
                    )
                },
            )?;
        }
        disconnected.push(c.tag());
        Ok(())
    })
    .map(|detail| format!("{detail}, disconnected: {}", disconnected.join(", ")))
}

fn translates() -> Verdict {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut tuples = 0;
    for_each_case(|c| {
        let x = c.complex()?;
        let y = sub_complex_y(&x, c.pair.sylow()).map_err(err)?;
        for _ in 0..500 {
            let len = rng.gen_range(1..=3);
            let gs: Vec<usize> = (0..len)
                .map(|_| rng.gen_range(0..c.group.order()))
                .collect();
            let meets = y.translate_intersection_nonempty(&gs).map_err(err)?;
            ensure(meets == c.pair.meets_all(&gs), || {
                format!("elements {gs:?}")
            })?;
            tuples += 1;
        }
        Ok(())
    })
    .map(|detail| format!("{detail}, {tuples} random tuples"))
}
