//! Seeded random polynomial maps for the path checks.

use std::sync::Arc;

use rand::Rng;

use selfcomp_core::connect::PolyMap;
use selfcomp_core::poly::MPoly;
use selfcomp_core::{CycField, CycNum};

/// Exponent vector of total degree `k` in `n` variables.
fn random_exps<R: Rng>(rng: &mut R, n: usize, k: u32) -> Vec<i32> {
    let mut e = vec![0i32; n];
    for _ in 0..k {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A small nonzero integer, times `ζ` with probability one in four.
fn random_coeff<R: Rng>(rng: &mut R, field: &Arc<CycField>) -> CycNum {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-5i64..=5);
    }
    let c = CycNum::from_int(field, c);
    if field.conductor() > 2 && rng.gen_ratio(1, 4) {
        &c * &CycNum::zeta(field)
    } else {
        c
    }
}

/// Random nonlinear terms of degree `2..=max_degree`.
fn random_tail<R: Rng>(rng: &mut R, field: &Arc<CycField>, n: usize, max_degree: u32) -> MPoly {
    let mut p = MPoly::zero(field, n);
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(2..=max_degree);
        p.add_term(random_exps(rng, n, k), &random_coeff(rng, field));
    }
    p
}

/// `θ_i = x_i + (terms of degree 2..=max_degree)`.
pub fn random_normalized_map<R: Rng>(rng: &mut R, field: &Arc<CycField>, n: usize, max_degree: u32) -> PolyMap {
    let comps = (0..n)
        .map(|i| MPoly::var(field, n, i).add(&random_tail(rng, field, n, max_degree)))
        .collect();
    PolyMap::new(comps).expect("well-formed")
}

/// A random map with constant, linear and nonlinear parts.
pub fn random_general_map<R: Rng>(rng: &mut R, field: &Arc<CycField>, n: usize, max_degree: u32) -> PolyMap {
    let comps = (0..n)
        .map(|_| {
            let mut p = random_tail(rng, field, n, max_degree);
            p.add_term(vec![0; n], &CycNum::from_int(field, rng.gen_range(-3..=3)));
            for j in 0..n {
                let mut e = vec![0; n];
                e[j] = 1;
                p.add_term(e, &CycNum::from_int(field, rng.gen_range(-3..=3)));
            }
            p
        })
        .collect();
    PolyMap::new(comps).expect("well-formed")
}

/// A triangular automorphism `θ_i = x_i + p_i(x_(i+1), …, x_n)` with its
/// inverse.
pub fn random_triangular_pair<R: Rng>(
    rng: &mut R,
    field: &Arc<CycField>,
    n: usize,
    max_degree: u32,
) -> (PolyMap, PolyMap) {
    let tails: Vec<MPoly> = (0..n)
        .map(|i| {
            let mut p = MPoly::zero(field, n);
            if i + 1 < n {
                for _ in 0..rng.gen_range(1..=3) {
                    let k = rng.gen_range(2..=max_degree);
                    let mut e = vec![0; n];
                    let rest = random_exps(rng, n - i - 1, k);
                    e[i + 1..].copy_from_slice(&rest);
                    p.add_term(e, &random_coeff(rng, field));
                }
            }
            p
        })
        .collect();
    let theta = PolyMap::new(
        (0..n)
            .map(|i| MPoly::var(field, n, i).add(&tails[i]))
            .collect(),
    )
    .expect("well-formed");
    // solve from the last coordinate upwards: x_i = y_i − p_i(x_(i+1), …)
    let mut inv: Vec<MPoly> = (0..n).map(|i| MPoly::var(field, n, i)).collect();
    for i in (0..n).rev() {
        let subs: Vec<MPoly> = inv.clone();
        inv[i] = MPoly::var(field, n, i).sub(&tails[i].compose(&subs));
    }
    (theta, PolyMap::new(inv).expect("well-formed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangular_inverse() {
        let f = CycField::new(4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=3 {
            let (t, i) = random_triangular_pair(&mut rng, &f, n, 4);
            assert!(t.compose(&i).unwrap().is_identity());
            assert!(i.compose(&t).unwrap().is_identity());
        }
    }
}
