use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use selfcomp_core::compress::{combine, DescentContext};
use selfcomp_core::forms::{equivariant_basis, form_gcd, first_equivariance_failure, Form, FormMap};
use selfcomp_core::groups::{build_group, GroupKind, MatrixGroup};
use selfcomp_core::{CycField, CycNum};

fn cyc(f: &Arc<CycField>, coeffs: &[i64]) -> CycNum {
    let mut acc = CycNum::zero(f);
    for (k, &c) in coeffs.iter().enumerate() {
        acc += &(&CycNum::root_of_unity(f, k as i64) * &CycNum::from_int(f, c));
    }
    acc
}

fn field12() -> Arc<CycField> {
    static F: OnceLock<Arc<CycField>> = OnceLock::new();
    F.get_or_init(|| CycField::new(12)).clone()
}

proptest! {
    #[test]
    fn field_axioms(a in prop::collection::vec(-9i64..9, 4), b in prop::collection::vec(-9i64..9, 4), c in prop::collection::vec(-9i64..9, 4)) {
        let f = field12();
        let (a, b, c) = (cyc(&f, &a), cyc(&f, &b), cyc(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn gcd_divides(p in prop::collection::vec(-4i64..4, 5), q in prop::collection::vec(-4i64..4, 5), r in prop::collection::vec(-4i64..4, 3)) {
        let f = CycField::new(1);
        let r = Form::from_ints(&f, 2, 2, &r).unwrap();
        prop_assume!(!r.is_zero());
        let a = Form::from_ints(&f, 2, 4, &p).unwrap().mul(&r);
        let b = Form::from_ints(&f, 2, 4, &q).unwrap().mul(&r);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = form_gcd(&a, &b).unwrap();
        prop_assert!(a.divide(&g).is_some());
        prop_assert!(b.divide(&g).is_some());
        prop_assert!(g.divide(&r).is_some());
    }
}

struct Sample {
    group: MatrixGroup,
    bases: Vec<(u32, Vec<FormMap>, DescentContext)>,
}

fn sample(kind: GroupKind, degrees: &[u32]) -> Sample {
    let group = build_group(&kind).unwrap();
    let bases = degrees
        .iter()
        .map(|&d| (d, equivariant_basis(&group, d).unwrap(), DescentContext::new(&group, d).unwrap()))
        .collect();
    Sample { group, bases }
}

fn samples() -> &'static [Sample] {
    static S: OnceLock<Vec<Sample>> = OnceLock::new();
    S.get_or_init(|| {
        vec![
            sample(GroupKind::BinaryDihedral(2), &[3, 5, 7]),
            sample(GroupKind::BinaryDihedral(3), &[5, 7, 11]),
            sample(GroupKind::BinaryTetrahedral, &[5, 7, 9]),
            sample(GroupKind::BinaryOctahedral, &[7, 9]),
            sample(GroupKind::BinaryIcosahedral, &[11, 13]),
        ]
    })
}

/// Both triviality criteria agree on random equivariant maps, including
/// sparse combinations that are often trivial.
#[test]
fn descent_criteria_agree_on_random_maps() {
    for s in samples() {
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(100));
        let strategy = (0..s.bases.len(), prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], 6));
        let seen = std::cell::Cell::new((0, 0));
        runner
            .run(&strategy, |(which, alpha)| {
                let (d, basis, ctx) = &s.bases[which];
                let alpha = &alpha[..basis.len().min(alpha.len())];
                prop_assume!(alpha.iter().any(|&a| a != 0));
                let phi = combine(s.group.field(), basis, alpha, *d);
                prop_assert!(first_equivariance_failure(&s.group, &phi).unwrap().is_none());
                let r = ctx.check(&phi[0], &phi[1]).unwrap();
                prop_assert!(r.criteria_agree, "{} d={} alpha={:?}", s.group.kind().name(), d, alpha);
                let (t, n) = seen.get();
                seen.set(if r.nontrivial { (t, n + 1) } else { (t + 1, n) });
                Ok(())
            })
            .unwrap();
        let (t, n) = seen.get();
        assert!(t > 0 && n > 0, "{}: only one verdict sampled", s.group.kind().name());
    }
}
