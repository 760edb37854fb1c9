use super::*;
use crate::permgroup::{
    direct_product, named_group, FiniteGroup, GroupFamily, GroupRef, Permutation, Subgroup,
};

fn group(f: GroupFamily) -> GroupRef {
    named_group(&f, 1000).unwrap()
}

fn pair(f: GroupFamily, p: u64) -> Arc<SylowPair> {
    SylowPair::new(&group(f), p).unwrap()
}

fn torsion(f: GroupFamily, p: u64) -> Vec<u64> {
    weakhom_group(&build_presentation(&pair(f, p)))
        .torsion
        .factors_u64()
        .unwrap()
}

fn c3_by_c4() -> GroupRef {
    let gens = [
        Permutation::parse("(1 2 3)", 7).unwrap(),
        Permutation::parse("(2 3)(4 5 6 7)", 7).unwrap(),
    ];
    FiniteGroup::generate(7, &gens, 100).unwrap()
}

fn d4_x_c3() -> GroupRef {
    direct_product(
        &group(GroupFamily::Dihedral(8)),
        &group(GroupFamily::Cyclic(3)),
        100,
    )
    .unwrap()
}

fn element(g: &GroupRef, cycles: &str) -> usize {
    g.index_of(&Permutation::parse(cycles, g.degree()).unwrap())
        .unwrap()
}

#[test]
fn presentation_shapes() {
    let s3c3 = build_presentation(&pair(GroupFamily::Symmetric(3), 3));
    assert_eq!(s3c3.generator_count(), 6);
    assert_eq!(s3c3.block_sizes(), (3, 0, 36));
    let s3c2 = build_presentation(&pair(GroupFamily::Symmetric(3), 2));
    assert_eq!(s3c2.block_sizes(), (2, 4, 4));
    for f in [GroupFamily::Symmetric(3), GroupFamily::Alternating(5)] {
        let pr = pair(f, 2);
        let built = build_presentation(&pr);
        let (a, b, c) = built.block_sizes();
        assert_eq!(
            presentation_shape(&pr),
            (a + b + c, built.generator_count())
        );
    }
    let q8 = build_presentation(&pair(GroupFamily::Quaternion8, 2));
    assert_eq!(q8.block_sizes().0, 8);
    assert!(weakhom_group(&q8).w.is_trivial());
}

#[test]
fn catalog_values() {
    assert_eq!(torsion(GroupFamily::Symmetric(3), 3), vec![2]);
    assert_eq!(torsion(GroupFamily::Symmetric(3), 2), Vec::<u64>::new());
    assert_eq!(torsion(GroupFamily::Symmetric(4), 2), Vec::<u64>::new());
    assert_eq!(torsion(GroupFamily::Alternating(4), 3), Vec::<u64>::new());
    assert_eq!(torsion(GroupFamily::Alternating(5), 2), vec![3]);
    let a5 = weakhom_group(&build_presentation(&pair(GroupFamily::Alternating(5), 2)));
    assert_eq!(a5.prime_to_p.factors_u64().unwrap(), vec![3]);
    assert_eq!(a5.w.free_rank(), 0);
    for f in [
        GroupFamily::Quaternion8,
        GroupFamily::Cyclic(4),
        GroupFamily::Dihedral(8),
    ] {
        assert_eq!(torsion(f, 2), Vec::<u64>::new());
    }
}

#[test]
fn normal_sylow_law() {
    for (g, p, expected) in [
        (group(GroupFamily::Symmetric(3)), 3, vec![2]),
        (d4_x_c3(), 3, vec![2, 2]),
        (c3_by_c4(), 3, vec![4]),
    ] {
        let pair = SylowPair::new(&g, p).unwrap();
        assert!(pair.sylow().is_normal_in(&g.whole()));
        let a = weakhom_group(&build_presentation(&pair)).torsion;
        assert_eq!(a.factors_u64().unwrap(), expected);
        assert_eq!(a, quotient_abelianization(&g, pair.sylow()));
    }
}

#[test]
fn oracle_examples() {
    let s3c3 = pair(GroupFamily::Symmetric(3), 3);
    let two = brute_force_weakhoms(&s3c3, 2).unwrap();
    assert_eq!(two.mode, OracleMode::Exhaustive);
    assert_eq!(two.count, BigUint::from(2u32));
    assert_eq!(
        brute_force_weakhoms(&s3c3, 3).unwrap().count,
        BigUint::from(1u32)
    );
    let s3c2 = pair(GroupFamily::Symmetric(3), 2);
    assert_eq!(
        brute_force_weakhoms(&s3c2, 6).unwrap().count,
        BigUint::from(1u32)
    );
    let a5 = pair(GroupFamily::Alternating(5), 2);
    assert_eq!(
        brute_force_weakhoms(&a5, 3).unwrap().mode,
        OracleMode::Elimination
    );
    assert!(exhaustive_weakhoms(&a5, 2).is_err());
}

#[test]
fn oracle_agrees_with_smith_form() {
    for (f, p) in [
        (GroupFamily::Symmetric(3), 3),
        (GroupFamily::Symmetric(3), 2),
        (GroupFamily::Alternating(4), 2),
        (GroupFamily::Cyclic(4), 2),
        (GroupFamily::Alternating(5), 2),
    ] {
        let pair = pair(f, p);
        let w = weakhom_group(&build_presentation(&pair));
        for m in 2..=12 {
            assert_eq!(
                brute_force_weakhoms(&pair, m).unwrap().count,
                predicted_count(&w, m),
                "m = {m}"
            );
        }
    }
}

#[test]
fn decoded_generators() {
    let s3c3 = pair(GroupFamily::Symmetric(3), 3);
    let gens = decode_generators(&build_presentation(&s3c3), None).unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].modulus(), 2);
    let sign = tilde_from_character(&s3c3, &Character::sign(s3c3.group())).unwrap();
    assert_eq!(gens[0], sign);
    assert!(gens[0].multiply(&gens[0]).unwrap().is_trivial());

    let a5 = pair(GroupFamily::Alternating(5), 2);
    let gens = decode_generators(&build_presentation(&a5), None).unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].order(), 3);
    let at_six = decode_generators(&build_presentation(&a5), Some(6)).unwrap();
    assert_eq!(at_six.len(), 1);
    assert_eq!(at_six[0].order(), 3);
    assert!(decode_generators(&build_presentation(&a5), Some(2))
        .unwrap()
        .is_empty());
    let trivial = decode_generators(
        &build_presentation(&pair(GroupFamily::Symmetric(4), 2)),
        None,
    )
    .unwrap();
    assert!(trivial.is_empty());
}

#[test]
fn validation_witnesses() {
    let s3 = group(GroupFamily::Symmetric(3));
    let t = element(&s3, "(1 2)");
    let p = Subgroup::generated_by(&s3, &[t]).unwrap();
    let pair = SylowPair::with_sylow(&s3, 2, p).unwrap();
    let sign = Character::sign(&s3);
    assert_eq!(
        validate_weakhom(&pair, 2, sign.values()),
        Err(Violation::Wh1 { element: t })
    );
    assert_eq!(validate_weakhom(&pair, 2, &[0; 6]), Ok(()));
    let mut bad = vec![0u64; 6];
    bad[element(&s3, "(1 3)")] = 1;
    assert_eq!(
        validate_weakhom(&pair, 2, &bad),
        Err(Violation::Wh2 {
            element: element(&s3, "(1 3)")
        })
    );
    assert!(matches!(
        validate_weakhom(&pair, 2, &[0, 0, 0, 0, 0, 2]),
        Err(Violation::Malformed { .. })
    ));

    let s3c3 = SylowPair::new(&s3, 3).unwrap();
    let mut wh3 = sign.values().to_vec();
    wh3[t] = 0;
    assert!(matches!(
        validate_weakhom(&s3c3, 2, &wh3),
        Err(Violation::Wh3 { .. })
    ));
    assert!(SylowPair::with_sylow(&s3, 3, s3.trivial_subgroup()).is_err());
}

#[test]
fn group_laws() {
    let s3c3 = pair(GroupFamily::Symmetric(3), 3);
    let u = decode_generators(&build_presentation(&s3c3), None)
        .unwrap()
        .remove(0);
    let one = WeakHom::trivial(&s3c3, 2);
    assert_eq!(u.multiply(&one).unwrap(), u);
    assert!(u.multiply(&u.inverse()).unwrap().is_trivial());
    let lifted = u.lift(6).unwrap();
    assert!(lifted.same_element(&u));
    assert_eq!(lifted.multiply(&u).unwrap().modulus(), 6);
    let other = WeakHom::trivial(&pair(GroupFamily::Symmetric(3), 2), 2);
    assert!(u.multiply(&other).is_err());
}

#[test]
fn characters() {
    let s3 = group(GroupFamily::Symmetric(3));
    let p = s3.whole().sylow(3).unwrap();
    let chars = characters_trivial_on(&s3, &p, 2).unwrap();
    assert_eq!(chars.len(), 2);
    assert!(chars.contains(&Character::sign(&s3)));
    let a5 = group(GroupFamily::Alternating(5));
    let chars = characters_trivial_on(&a5, &a5.trivial_subgroup(), 60).unwrap();
    assert_eq!(chars.len(), 1);
    let pair = SylowPair::new(&a5, 2).unwrap();
    assert!(tilde_from_character(&pair, &chars[0]).unwrap().is_trivial());
    assert!(Character::new(&s3, 3, vec![0, 1, 2, 0, 1, 2]).is_err());
    let s3p2 = SylowPair::new(&s3, 2).unwrap();
    assert!(tilde_from_character(&s3p2, &Character::sign(&s3)).is_err());
}

#[test]
fn restriction_a5_to_a4() {
    let a5 = group(GroupFamily::Alternating(5));
    let pair = SylowPair::new(&a5, 2).unwrap();
    let n = a5.whole().normalizer_of(pair.sylow()).unwrap();
    assert_eq!(n.order(), 12);
    let res = Restriction::new(&pair, &n).unwrap();
    let target_w = weakhom_group(&build_presentation(res.target()));
    assert_eq!(target_w.torsion.factors_u64().unwrap(), vec![3]);
    let u = decode_generators(&build_presentation(&pair), None)
        .unwrap()
        .remove(0);
    let r = res.apply(&u).unwrap();
    assert_eq!(r.order(), 3);
    assert!(res.apply(&WeakHom::trivial(&pair, 3)).unwrap().is_trivial());
    let uu = u.multiply(&u).unwrap();
    assert_eq!(res.apply(&uu).unwrap(), r.multiply(&r).unwrap());
    let whole = Restriction::new(&pair, &a5.whole()).unwrap();
    assert_eq!(whole.apply(&u).unwrap().values(), u.values());
    let c3 = a5.whole().sylow(3).unwrap();
    assert!(Restriction::new(&pair, &c3).is_err());
}
