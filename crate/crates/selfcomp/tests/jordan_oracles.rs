//! Subgroup lattices and Jordan constants against independent brute force.

use std::collections::BTreeSet;

use selfcomp::resolve::group_table;
use selfcomp::suite::m_by_class_unions;
use selfcomp_core::groups::GroupTable;
use selfcomp_core::jordan::{jordan_report, m_of, p_rank, subgroups};

/// All subgroups generated by at most three elements, by naive closure.
fn subgroups_by_triples(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let close = |gens: &[usize]| -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([g.id()]);
        loop {
            let before = set.len();
            let cur: Vec<usize> = set.iter().copied().collect();
            for &a in &cur {
                for &b in gens {
                    set.insert(g.mul(a, b));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    };
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                out.insert(close(&[a, b, c]));
            }
        }
    }
    out
}

#[test]
fn subgroup_counts() {
    // every subgroup of these groups needs at most three generators
    for (name, count) in [
        ("S3", 6),
        ("Q8", 6),
        ("D4", 10),
        ("E2^3", 16),
        ("Z12", 6),
        ("S4", 30),
        ("2T", 15),
        ("S3xZ2", 16),
    ] {
        let g = group_table(name).unwrap();
        let list = subgroups(&g).unwrap();
        let ours: BTreeSet<Vec<usize>> = list
            .subgroups
            .iter()
            .map(|s| {
                let mut e = s.elements.clone();
                e.sort_unstable();
                e
            })
            .collect();
        assert_eq!(ours.len(), list.len(), "{name}: duplicates");
        assert_eq!(ours, subgroups_by_triples(&g), "{name}");
        assert_eq!(list.len(), count, "{name}");
    }
}

#[test]
fn m_matches_class_unions() {
    for name in ["S3", "S4", "Q8", "D4", "D5", "2T", "S3xS3", "Z2xZ4", "E3^2", "S3xZ3"] {
        let g = group_table(name).unwrap();
        assert_eq!(m_of(&g).unwrap().0, m_by_class_unions(&g), "{name}");
    }
}

#[test]
fn abelian_groups_have_trivial_constants() {
    for name in ["Z1", "Z7", "Z2xZ6", "E2^3", "E5^2"] {
        let r = jordan_report(&group_table(name).unwrap()).unwrap();
        assert_eq!((r.m, r.big_j, r.small_j), (1, 1, 1), "{name}");
    }
}

#[test]
fn p_rank_is_additive_on_products() {
    // an elementary abelian subgroup of A x B has rank at most rank(E ∩ A) + rank(π_B E)
    let names = ["S3", "Q8", "Z4", "E2^2", "S4", "D5"];
    for a in names {
        for b in names {
            let (ta, tb) = (group_table(a).unwrap(), group_table(b).unwrap());
            let prod = group_table(&format!("{a}x{b}")).unwrap();
            if prod.order() > 120 {
                continue;
            }
            for p in [2, 3, 5] {
                let lhs = p_rank(&prod, p).unwrap();
                let rhs = p_rank(&ta, p).unwrap() + p_rank(&tb, p).unwrap();
                assert_eq!(lhs, rhs, "{a}x{b}, p={p}");
            }
        }
    }
}
