//! End-to-end acceptance checks over the built-in catalog. Runs without the
//! libtest harness so that each criterion prints exactly one verdict line.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use brownlab::abelian::{cokernel, smith_normal_form, solve_homogeneous_mod, IntegerMatrix};
use brownlab::catalog::{catalog_pairs, CatalogEntry, CATALOG};
use brownlab::cechbundle::{
    bundle_from_weakhom, enumerate_cocycles, tensor_bundles, validate_bundle, weakhom_from_bundle,
};
use brownlab::gcomplex::{
    homology, order_complex, quotient_complex, sub_complex_y, HomologyProfile, QuotientRoute,
};
use brownlab::permgroup::{is_strongly_p_embedded, p_part, GroupRef};
use brownlab::psubgroups::enumerate_p_subgroups;
use brownlab::weakhom::{
    brute_force_weakhoms, build_presentation, decode_generators, predicted_count,
    quotient_abelianization, weakhom_group, Restriction, SylowPair, WeakHom,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair_of(entry: &CatalogEntry, p: u64) -> Arc<SylowPair> {
    SylowPair::new(&entry.build(), p).expect("catalog prime")
}

fn entry(name: &str) -> &'static CatalogEntry {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .expect("catalog name")
}

fn is_p_group(g: &GroupRef, p: u64) -> bool {
    p_part(g.order(), p) == g.order()
}

fn weakhom_values() -> Check {
    let start = Instant::now();
    let mut cases: Vec<(&str, u64, Vec<u64>)> = vec![
        ("S3", 3, vec![2]),
        ("S3", 2, vec![]),
        ("S4", 2, vec![]),
        ("A4", 3, vec![]),
        ("A5", 2, vec![3]),
    ];
    for e in CATALOG {
        for &p in e.primes {
            if is_p_group(&e.build(), p) {
                cases.push((e.name, p, vec![]));
            }
        }
    }
    for (name, p, expected) in &cases {
        let pair = pair_of(entry(name), *p);
        let w = weakhom_group(&build_presentation(&pair));
        let got = w.torsion.factors_u64().unwrap();
        ensure(&got == expected, || {
            format!("{name} p={p}: torsion {got:?}, expected {expected:?}")
        })?;
        for m in 2..=12 {
            let oracle = brute_force_weakhoms(&pair, m).map_err(|e| e.to_string())?;
            let predicted = predicted_count(&w, m);
            ensure(oracle.count == predicted, || {
                format!(
                    "{name} p={p} m={m}: oracle {} vs {}",
                    oracle.count, predicted
                )
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} pairs, m in 2..=12, {:.2?}",
        cases.len(),
        elapsed
    ))
}

fn normal_sylow_law() -> Check {
    let mut checked = Vec::new();
    for (e, p) in catalog_pairs() {
        let g = e.build();
        let pair = SylowPair::new(&g, p).unwrap();
        if !pair.sylow().is_normal_in(&g.whole()) {
            continue;
        }
        let torsion = weakhom_group(&build_presentation(&pair)).torsion;
        let quotient = quotient_abelianization(&g, pair.sylow());
        ensure(torsion == quotient, || {
            format!("{} p={p}: {torsion} vs {quotient}", e.name)
        })?;
        checked.push(format!("{} p={p}: {torsion}", e.name));
    }
    let d8c3 = checked.iter().any(|c| c == "D8xC3 p=3: Z/2 + Z/2");
    ensure(d8c3, || "D8xC3 at p=3 did not give (Z/2)^2".into())?;
    Ok(checked.join("; "))
}

fn brown_congruence() -> Check {
    let mut count = 0;
    for (e, p) in catalog_pairs() {
        let g = e.build();
        let x = order_complex(&enumerate_p_subgroups(&g, p).unwrap());
        let chi = x.reduced_euler();
        let gp = p_part(g.order(), p) as i64;
        ensure(chi % gp == 0, || {
            format!("{} p={p}: reduced Euler {chi} vs |G|_p = {gp}", e.name)
        })?;
        count += 1;
    }
    let a5 = order_complex(&enumerate_p_subgroups(&entry("A5").build(), 2).unwrap());
    ensure(a5.reduced_euler() == 4, || {
        "A5 p=2 reduced Euler is not 4".into()
    })?;
    Ok(format!("{count} pairs"))
}

fn orbit_space_acyclic() -> Check {
    let mut slowest = Duration::ZERO;
    let (mut count, mut subdivided) = (0, 0);
    for (e, p) in catalog_pairs() {
        let start = Instant::now();
        let x = order_complex(&enumerate_p_subgroups(&e.build(), p).unwrap());
        let q = quotient_complex(&x).map_err(|err| err.to_string())?;
        let h = homology(&q.complex);
        ensure(h.is_acyclic(), || {
            format!("{} p={p}: orbit space homology {h:?}", e.name)
        })?;
        subdivided += (q.route == QuotientRoute::SecondSubdivision) as usize;
        slowest = slowest.max(start.elapsed());
        count += 1;
    }
    ensure(slowest < Duration::from_secs(60), || {
        format!("slowest entry took {slowest:?}")
    })?;
    Ok(format!(
        "{count} pairs ({subdivided} via second subdivision), slowest {slowest:.2?}"
    ))
}

fn translate_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut total = 0;
    for (e, p) in catalog_pairs() {
        let g = e.build();
        let x = order_complex(&enumerate_p_subgroups(&g, p).unwrap());
        let pair = SylowPair::new(&g, p).unwrap();
        let y = sub_complex_y(&x, pair.sylow()).map_err(|err| err.to_string())?;
        for _ in 0..2000 {
            let len = rng.gen_range(1..=3);
            let gs: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.order())).collect();
            let both = y
                .translate_intersection_nonempty(&gs)
                .map_err(|err| format!("{} p={p}: {err}", e.name))?;
            ensure(both == pair.meets_all(&gs), || {
                format!("{} p={p}: {gs:?}", e.name)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} tuples, 0 mismatches"))
}

fn variant_homology() -> Check {
    let mut count = 0;
    for (e, p) in catalog_pairs() {
        let poset = enumerate_p_subgroups(&e.build(), p).unwrap();
        let brown = homology(&order_complex(&poset));
        let quillen = homology(&order_complex(&poset.quillen_filter().unwrap()));
        let bouc = homology(&order_complex(&poset.bouc_filter().unwrap()));
        let strip =
            |h: &HomologyProfile| h.nonzero().map(|(n, g)| (n, g.clone())).collect::<Vec<_>>();
        ensure(
            strip(&brown) == strip(&quillen) && strip(&brown) == strip(&bouc),
            || format!("{} p={p}: {brown:?} / {quillen:?} / {bouc:?}", e.name),
        )?;
        count += 1;
    }
    Ok(format!("{count} pairs"))
}

fn cocycle_suite() -> Check {
    let mut generators = 0;
    let mut mutations = 0;
    for (e, p) in catalog_pairs() {
        let pair = pair_of(e, p);
        let gens =
            decode_generators(&build_presentation(&pair), None).map_err(|err| err.to_string())?;
        let mut all = gens.clone();
        all.push(WeakHom::trivial(
            &pair,
            gens.first().map_or(1, WeakHom::modulus),
        ));
        for u in &all {
            let c = bundle_from_weakhom(u).map_err(|err| format!("{} p={p}: (a) {err}", e.name))?;
            ensure(validate_bundle(&c).is_ok(), || {
                format!("{} p={p}: (a) invalid image", e.name)
            })?;
            let back = weakhom_from_bundle(&c).map_err(|err| err.to_string())?;
            ensure(&back == u, || format!("{} p={p}: (b) round trip", e.name))?;
            if c.modulus() < 2 {
                continue;
            }
            for ((s, t), v) in c.defined() {
                let bad = c.with_entry(s, t, Some((v + 1) % c.modulus()));
                match validate_bundle(&bad) {
                    Ok(()) => {
                        return Err(format!(
                            "{} p={p}: (e) mutation at ({s}, {t}) accepted",
                            e.name
                        ))
                    }
                    Err(w) => ensure(w.elements().iter().any(|&x| x == s || x == t), || {
                        format!("{} p={p}: (e) witness {w} misses ({s}, {t})", e.name)
                    })?,
                }
                mutations += 1;
            }
        }
        for u in &all {
            for v in &all {
                let lhs = bundle_from_weakhom(&u.multiply(v).map_err(|err| err.to_string())?)
                    .map_err(|err| err.to_string())?;
                let rhs = tensor_bundles(
                    &bundle_from_weakhom(u).unwrap(),
                    &bundle_from_weakhom(v).unwrap(),
                )
                .map_err(|err| err.to_string())?;
                ensure(lhs == rhs, || format!("{} p={p}: (c) tensor law", e.name))?;
            }
        }
        generators += gens.len();
    }
    let s3 = pair_of(entry("S3"), 3);
    let found = enumerate_cocycles(&s3, 2).map_err(|err| err.to_string())?;
    let order = weakhom_group(&build_presentation(&s3))
        .torsion
        .torsion_order();
    ensure(num_bigint::BigUint::from(found.len()) == order, || {
        format!("(d) {} cocycles vs |Tors A| = {order}", found.len())
    })?;
    ensure(found.len() == 2, || format!("(d) {} cocycles", found.len()))?;
    Ok(format!(
        "{generators} generators, {mutations} mutations rejected, 2 cocycles enumerated"
    ))
}

fn strongly_embedded_dichotomy() -> Check {
    let mut disconnected = Vec::new();
    for (e, p) in catalog_pairs() {
        let g = e.build();
        let x = order_complex(&enumerate_p_subgroups(&g, p).unwrap());
        let comps = x.connected_components();
        if comps.len() > 1 {
            for c in &comps {
                let ok = is_strongly_p_embedded(&g, &c.stabilizer, p).unwrap();
                ensure(ok, || {
                    format!(
                        "{} p={p}: stabilizer of order {} fails",
                        e.name,
                        c.stabilizer.order()
                    )
                })?;
            }
            disconnected.push(format!("{} p={p}", e.name));
        } else {
            ensure(
                comps.len() == 1 && comps[0].stabilizer.order() == g.order(),
                || format!("{} p={p}: connected but stabilizer is not G", e.name),
            )?;
        }
    }
    for must in ["S3 p=2", "A5 p=2"] {
        ensure(disconnected.iter().any(|d| d == must), || {
            format!("{must} should be disconnected")
        })?;
    }
    Ok(format!("disconnected: {}", disconnected.join(", ")))
}

fn restriction_naturality() -> Check {
    let a5 = entry("A5").build();
    let pair = SylowPair::new(&a5, 2).unwrap();
    let n = a5.whole().normalizer_of(pair.sylow()).unwrap();
    let res = Restriction::new(&pair, &n).map_err(|err| err.to_string())?;
    let source = weakhom_group(&build_presentation(&pair)).torsion;
    let target = weakhom_group(&build_presentation(res.target())).torsion;
    ensure(
        source.factors_u64() == Some(vec![3]) && target.factors_u64() == Some(vec![3]),
        || format!("A(A5, P) = {source}, A(A4, P) = {target}"),
    )?;
    let u = decode_generators(&build_presentation(&pair), None)
        .unwrap()
        .remove(0);
    let r = res.apply(&u).map_err(|err| err.to_string())?;
    ensure(u.order() == 3 && r.order() == 3, || {
        "generator does not map to a generator".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let power = |k: u64| {
        (0..k).fold(WeakHom::trivial(&pair, 3), |acc, _| {
            acc.multiply(&u).unwrap()
        })
    };
    for _ in 0..200 {
        let (a, b) = (power(rng.gen_range(0..3)), power(rng.gen_range(0..3)));
        let lhs = res.apply(&a.multiply(&b).unwrap()).unwrap();
        let rhs = res
            .apply(&a)
            .unwrap()
            .multiply(&res.apply(&b).unwrap())
            .unwrap();
        ensure(lhs == rhs, || {
            "restriction does not commute with multiplication".into()
        })?;
    }
    Ok("Z/3 -> Z/3, generator to generator, 200 random products".into())
}

fn linear_algebra_kernel() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for trial in 0..500 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let m = IntegerMatrix::from_rows(c, &rows).unwrap();
        let s = smith_normal_form(&m);
        ensure(&(&s.u * &m) * &s.v == s.d && s.d.is_diagonal(), || {
            format!("trial {trial}: U·M·V ≠ D")
        })?;
        let diag = s.nonzero_diagonal();
        ensure(diag.iter().all(Signed::is_positive), || {
            format!("trial {trial}: sign")
        })?;
        ensure(diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), || {
            format!("trial {trial}: chain")
        })?;
        for t in [&s.u, &s.v] {
            ensure(t.determinant().unwrap().abs() == BigInt::from(1), || {
                format!("trial {trial}: not unimodular")
            })?;
        }
        let group = cokernel(&m);
        for modulus in 2..=12 {
            ensure(
                solve_homogeneous_mod(&m, modulus) == group.hom_count_to_cyclic(modulus),
                || format!("trial {trial}: count mismatch at m={modulus}"),
            )?;
        }
    }
    Ok("500 matrices, m in 2..=12".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("weak homomorphism groups and oracle counts", weakhom_values),
        ("normal Sylow law", normal_sylow_law),
        ("reduced Euler congruence", brown_congruence),
        ("orbit space acyclicity", orbit_space_acyclic),
        ("translate intersections", translate_equivalence),
        ("Brown/Quillen/Bouc homology agreement", variant_homology),
        ("cocycle suite", cocycle_suite),
        ("strongly p-embedded dichotomy", strongly_embedded_dichotomy),
        ("restriction naturality", restriction_naturality),
        ("linear algebra kernel", linear_algebra_kernel),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
