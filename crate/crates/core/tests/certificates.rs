use selfcomp_core::compress::{
    construct_self_compression, series, series_consistency, verify_descent, verify_equivariance,
    EquivarianceMode, SeriesKind, DEFAULT_ALPHA_BOUND,
};
use selfcomp_core::groups::{build_group, GroupKind};

fn catalog() -> Vec<GroupKind> {
    let mut v: Vec<GroupKind> = (2..=8).map(GroupKind::Cyclic).collect();
    v.extend((2..=8).map(GroupKind::BinaryDihedral));
    v.extend([
        GroupKind::BinaryTetrahedral,
        GroupKind::BinaryOctahedral,
        GroupKind::BinaryIcosahedral,
    ]);
    v
}

#[test]
fn every_certificate_up_to_forty() {
    for kind in catalog() {
        let g = build_group(&kind).unwrap();
        let s = series(&kind, SeriesKind::S, 40).unwrap();
        for d in 2..=40 {
            if s.coeff(d) == 0 {
                continue;
            }
            let c = construct_self_compression(&g, d, DEFAULT_ALPHA_BOUND).unwrap();
            assert!(c.all_checks_pass(), "{} d={d}", kind.name());
            assert!(c.gcd_degree + 2 <= d);
            let lin = verify_equivariance(g.elements(), &c.phi1, &c.phi2, EquivarianceMode::Linear).unwrap();
            assert!(lin.passed);
            let r = verify_descent(&g, &c.phi1, &c.phi2).unwrap();
            assert!(r.criteria_agree && r.nontrivial);
        }
    }
}

#[test]
fn minimal_degrees() {
    let cases = [
        (GroupKind::BinaryTetrahedral, 5),
        (GroupKind::BinaryOctahedral, 7),
        (GroupKind::BinaryIcosahedral, 11),
    ];
    let dihedral = (2..=6).flat_map(|l| [(GroupKind::BinaryDihedral(l), 2 * l - 1), (GroupKind::Cyclic(l), 2 * l - 1)]);
    for (kind, dmin) in cases.into_iter().chain(dihedral) {
        let s = series(&kind, SeriesKind::S, dmin).unwrap();
        assert_eq!(s.first_nonzero(), Some(dmin), "{}", kind.name());
        let g = build_group(&kind).unwrap();
        assert!(construct_self_compression(&g, dmin, DEFAULT_ALPHA_BOUND).unwrap().all_checks_pass());
    }
}

#[test]
fn series_consistency_catalog() {
    for kind in catalog().into_iter().filter(|k| !matches!(k, GroupKind::Cyclic(_))) {
        let g = build_group(&kind).unwrap();
        let r = series_consistency(&g, 40).unwrap();
        assert!(r.inequality_holds, "{}", kind.name());
        assert_eq!(r.rows.len(), 40);
    }
}
