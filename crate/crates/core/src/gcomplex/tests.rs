use super::*;
use crate::abelian::FpAbelianGroup;
use crate::permgroup::{named_group, sylow_subgroup, FiniteGroup, GroupFamily, GroupRef};
use crate::psubgroups::enumerate_p_subgroups;

fn group(f: GroupFamily) -> GroupRef {
    named_group(&f, 1000).unwrap()
}

fn brown(f: GroupFamily, p: u64) -> SimplicialGComplex {
    order_complex(&enumerate_p_subgroups(&group(f), p).unwrap())
}

/// A complex with the trivial group acting.
fn plain(vertices: usize, simplices: &[Vec<u32>]) -> SimplicialGComplex {
    let trivial = FiniteGroup::generate(1, &[], 1).unwrap().whole();
    let labels = (0..vertices as u32).map(VertexLabel::Orbit).collect();
    let action = (0..vertices as u32).collect();
    SimplicialGComplex::from_simplices(trivial, labels, simplices, action).unwrap()
}

fn rp2() -> SimplicialGComplex {
    let mut facets = Vec::new();
    for i in 0..5u32 {
        let (a, b, c) = (1 + i, 1 + (i + 1) % 5, 1 + (i + 3) % 5);
        facets.push(vec![0, a, b]);
        facets.push(vec![a, b, c]);
    }
    plain(6, &facets)
}

#[test]
fn order_complex_examples() {
    let s3 = brown(GroupFamily::Symmetric(3), 2);
    assert_eq!(s3.f_vector(), vec![3]);
    assert_eq!(brown(GroupFamily::Cyclic(4), 2).f_vector(), vec![2, 1]);
    let a5 = brown(GroupFamily::Alternating(5), 2);
    assert_eq!(a5.f_vector(), vec![20, 15]);
    for x in [s3, a5, brown(GroupFamily::Symmetric(4), 2)] {
        x.validate().unwrap();
        assert!(x.stabilizers_fix_pointwise());
    }
}

#[test]
fn reduced_euler_examples() {
    assert_eq!(brown(GroupFamily::Symmetric(3), 2).reduced_euler(), 2);
    assert_eq!(brown(GroupFamily::Symmetric(3), 3).reduced_euler(), 0);
    assert_eq!(brown(GroupFamily::Alternating(5), 2).reduced_euler(), 4);
    assert_eq!(brown(GroupFamily::Symmetric(3), 5).reduced_euler(), -1);
}

#[test]
fn homology_examples() {
    let points = homology(&plain(3, &[]));
    assert_eq!(points.group(0), FpAbelianGroup::from_cyclic_orders(2, &[]));
    assert_eq!(points.nonzero().count(), 1);
    assert!(homology(&plain(1, &[])).is_acyclic());
    let a5 = homology(&brown(GroupFamily::Alternating(5), 2));
    assert_eq!(a5.betti(0), 4);
    assert!(a5.group(1).is_trivial());
    let circle = homology(&plain(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]));
    assert_eq!(circle.group(1), FpAbelianGroup::from_cyclic_orders(1, &[]));
    let rp2 = homology(&rp2());
    assert_eq!(rp2.group(1), FpAbelianGroup::from_cyclic_orders(0, &[2]));
    assert!(rp2.group(2).is_trivial() && rp2.group(0).is_trivial());
    let empty = homology(&plain(0, &[]));
    assert_eq!(empty.group(-1), FpAbelianGroup::from_cyclic_orders(1, &[]));
    for h in [points, a5, circle, rp2, empty] {
        assert_eq!(h.reduced_euler(), h.euler_from_betti());
    }
}

#[test]
fn components_and_stabilizers() {
    let s3 = brown(GroupFamily::Symmetric(3), 2);
    let comps = s3.connected_components();
    assert_eq!(comps.len(), 3);
    assert!(comps.iter().all(|c| c.stabilizer.order() == 2));
    let a5 = brown(GroupFamily::Alternating(5), 2);
    let comps = a5.connected_components();
    assert_eq!(comps.len(), 5);
    assert!(comps
        .iter()
        .all(|c| c.stabilizer.order() == 12 && c.vertices.len() == 4));
    let s4 = brown(GroupFamily::Symmetric(4), 2);
    let comps = s4.connected_components();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].stabilizer.order(), 24);
}

/// Nontrivial subgroups of a small group by testing every subset.
fn nontrivial_subgroups_by_subsets(sub: &Subgroup) -> usize {
    let g = sub.group();
    let m: Vec<usize> = sub.members().iter().map(|&x| x as usize).collect();
    assert!(m.len() <= 16);
    (1u32..1 << m.len())
        .filter(|mask| {
            let set: Vec<usize> = (0..m.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| m[i])
                .collect();
            set.len() > 1
                && set.contains(&0)
                && set
                    .iter()
                    .all(|&a| set.iter().all(|&b| set.contains(&g.mul(a, b))))
        })
        .count()
}

#[test]
fn sylow_subcomplex() {
    let s3 = group(GroupFamily::Symmetric(3));
    let x = order_complex(&enumerate_p_subgroups(&s3, 2).unwrap());
    let p = sylow_subgroup(&s3, 2).unwrap();
    let y = sub_complex_y(&x, &p).unwrap();
    assert_eq!(y.complex().f_vector(), vec![1]);
    assert_eq!(y.translate(0), y.vertices());
    let moved = (0..6).find(|&g| p.conjugate(g).unwrap() != p).unwrap();
    assert!(!y.translate_intersection_nonempty(&[0, moved]).unwrap());
    assert!(y.translate_intersection_nonempty(&[0]).unwrap());

    let s4 = group(GroupFamily::Symmetric(4));
    let x = order_complex(&enumerate_p_subgroups(&s4, 2).unwrap());
    let p = sylow_subgroup(&s4, 2).unwrap();
    let y = sub_complex_y(&x, &p).unwrap();
    assert_eq!(
        y.complex().vertex_count(),
        nontrivial_subgroups_by_subsets(&p)
    );
    assert_eq!(y.complex().vertex_count(), 9);
    assert_eq!(y.complex().acting().order(), 8);
    y.complex().validate().unwrap();
    for a in 0..24 {
        for b in 0..24 {
            assert!(y.translate_intersection_nonempty(&[a, b]).unwrap());
        }
    }
    let not_p = s4.whole().sylow(3).unwrap();
    assert!(sub_complex_y(&x, &not_p).is_err());
}

#[test]
fn subdivision_examples() {
    let edge = barycentric_subdivision(&plain(2, &[vec![0, 1]]));
    assert_eq!(edge.f_vector(), vec![3, 2]);
    edge.validate().unwrap();
    assert_eq!(barycentric_subdivision(&plain(3, &[])).f_vector(), vec![3]);
    let triangle = barycentric_subdivision(&plain(3, &[vec![0, 1, 2]]));
    assert_eq!(triangle.f_vector(), vec![7, 12, 6]);
    let rp2 = rp2();
    assert_eq!(homology(&barycentric_subdivision(&rp2)), homology(&rp2));
    let s4 = brown(GroupFamily::Symmetric(4), 2);
    let sd = barycentric_subdivision(&s4);
    sd.validate().unwrap();
    assert_eq!(homology(&sd), homology(&s4));
}

#[test]
fn quotient_examples() {
    let s3 = quotient_complex(&brown(GroupFamily::Symmetric(3), 2)).unwrap();
    assert_eq!(s3.complex.f_vector(), vec![1]);
    assert_eq!(s3.route, QuotientRoute::Direct);
    let circle = plain(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
    let same = quotient_complex(&circle).unwrap();
    assert_eq!(same.complex.f_vector(), circle.f_vector());
    assert_eq!(homology(&same.complex), homology(&circle));
    let a5 = brown(GroupFamily::Alternating(5), 2);
    for q in [
        quotient_complex(&a5).unwrap(),
        quotient_via_subdivision(&a5).unwrap(),
    ] {
        assert_eq!(q.complex.connected_components().len(), 1);
        assert!(homology(&q.complex).is_acyclic());
    }
}

#[test]
fn rotation_of_a_circle_is_not_regular() {
    // C3 rotating a triangle boundary: an edge meets one orbit twice.
    let c3 = group(GroupFamily::Cyclic(3));
    let labels = (0..3).map(VertexLabel::Orbit).collect();
    let mut action = Vec::new();
    for v in 0..3u32 {
        for &g in c3.whole().members() {
            let perm = c3.element(g as usize);
            action.push(perm.image(v as usize) as u32);
        }
    }
    let x = SimplicialGComplex::from_simplices(
        c3.whole(),
        labels,
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
        action,
    )
    .unwrap();
    assert!(!is_regular(&x));
    let q = quotient_complex(&x).unwrap();
    assert_eq!(q.route, QuotientRoute::SecondSubdivision);
    assert_eq!(
        homology(&q.complex).group(1),
        FpAbelianGroup::from_cyclic_orders(1, &[])
    );
}
