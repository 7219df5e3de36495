//! Polynomial self-maps of affine space and the path `ρ(t)` joining an
//! origin-normalized map to the identity.
//!
//! A map `θ` with `θ(o) = o` and identity differential at `o` has graded
//! pieces `θ_i = x_i + Σ_(d≥2) F_(i,d)`; its path is
//! `ρ(t)_i = x_i + Σ_(d≥2) t^(d-1) F_(i,d)`, equal to `ϑ(t⁻¹)∘θ∘ϑ(t)` for
//! the scaling `ϑ(t) = t·id`.

use alloc::{string::String, sync::Arc, vec, vec::Vec};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::MPoly;
use crate::scalars::{CycField, CycNum};

/// Default truncation order for rational maps.
pub const DEFAULT_TRUNCATION: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    field: Arc<CycField>,
    components: Vec<MPoly>,
}

impl PolyMap {
    /// `n` components in `n` variables.
    pub fn new(components: Vec<MPoly>) -> Result<PolyMap> {
        let n = components.len();
        let field = components
            .first()
            .ok_or_else(|| Error::InvalidInput(String::from("empty map")))?
            .field()
            .clone();
        for c in &components {
            if c.nvars() != n {
                return Err(Error::DimensionMismatch(c.nvars(), n));
            }
            if c.field().conductor() != field.conductor() {
                return Err(Error::ConductorMismatch {
                    left: c.field().conductor(),
                    right: field.conductor(),
                });
            }
            if c.terms().any(|(e, _)| e.iter().any(|&k| k < 0)) {
                return Err(Error::InvalidInput(String::from("negative exponent")));
            }
        }
        Ok(PolyMap { field, components })
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> PolyMap {
        PolyMap {
            field: field.clone(),
            components: (0..n).map(|i| MPoly::var(field, n, i)).collect(),
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MPoly] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .filter_map(MPoly::total_degree)
            .max()
            .unwrap_or(0) as u32
    }

    /// `F_(i,d)`.
    pub fn graded_piece(&self, i: usize, d: u32) -> MPoly {
        self.components[i].homogeneous_part(self.n(), d as i32)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.n() != self.n() {
            return Err(Error::DimensionMismatch(inner.n(), self.n()));
        }
        Ok(PolyMap {
            field: self.field.clone(),
            components: self
                .components
                .iter()
                .map(|c| c.compose(&inner.components))
                .collect(),
        })
    }

    pub fn eval(&self, point: &[CycNum]) -> Vec<CycNum> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// `∂θ_i/∂x_j` at `point`.
    pub fn jacobian_at(&self, point: &[CycNum]) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(&self.field, n, n);
        for (i, c) in self.components.iter().enumerate() {
            for j in 0..n {
                m.set(i, j, c.derivative(j).eval(point));
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(&self.field, self.n())
    }

    pub fn truncate(&self, order: u32) -> PolyMap {
        PolyMap {
            field: self.field.clone(),
            components: self
                .components
                .iter()
                .map(|c| c.truncate(self.n(), order as i32))
                .collect(),
        }
    }
}

/// `v ↦ A·v + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: Matrix,
    pub translation: Vec<CycNum>,
}

impl AffineMap {
    pub fn to_polymap(&self) -> PolyMap {
        let field = self.linear.field();
        let n = self.translation.len();
        let components = (0..n)
            .map(|i| {
                let mut c = MPoly::constant(field, n, self.translation[i].clone());
                for j in 0..n {
                    c = c.add(&MPoly::var(field, n, j).scale(self.linear.get(i, j)));
                }
                c
            })
            .collect();
        PolyMap {
            field: field.clone(),
            components,
        }
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let inv = self.linear.inverse().map_err(|_| Error::SingularJacobian)?;
        let shifted = inv.mul_vec(&self.translation);
        Ok(AffineMap {
            translation: shifted.iter().map(|x| -x).collect(),
            linear: inv,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OriginReport {
    /// Polynomial maps are defined everywhere.
    pub defined: bool,
    /// `θ(o) = o`.
    pub fixes_origin: bool,
    /// `d_oθ = id`.
    pub identity_differential: bool,
}

impl OriginReport {
    pub fn passes(&self) -> bool {
        self.defined && self.fixes_origin && self.identity_differential
    }
}

pub fn check_origin_conditions(theta: &PolyMap) -> OriginReport {
    let n = theta.n();
    let fixes_origin = (0..n).all(|i| theta.graded_piece(i, 0).is_zero());
    let identity_differential =
        (0..n).all(|i| theta.graded_piece(i, 1) == MPoly::var(&theta.field, n, i));
    OriginReport {
        defined: true,
        fixes_origin,
        identity_differential,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub alpha: AffineMap,
    pub theta: PolyMap,
    pub tau: AffineMap,
}

/// `σ = α∘θ∘τ` with `τ(v) = v − s`, `α(v) = σ(s) + J·v` for `J = d_sσ`,
/// and `θ` fixing the origin with identity differential.
pub fn factor_through_origin(sigma: &PolyMap, s: &[CycNum]) -> Result<Factorization> {
    let n = sigma.n();
    if s.len() != n {
        return Err(Error::DimensionMismatch(s.len(), n));
    }
    let field = sigma.field();
    let j = sigma.jacobian_at(s);
    if j.det()?.is_zero() {
        return Err(Error::SingularJacobian);
    }
    let tau = AffineMap {
        linear: Matrix::identity(field, n),
        translation: s.iter().map(|x| -x).collect(),
    };
    let alpha = AffineMap {
        linear: j,
        translation: sigma.eval(s),
    };
    let tau_inv = tau.inverse()?.to_polymap();
    let alpha_inv = alpha.inverse()?.to_polymap();
    let theta = alpha_inv.compose(&sigma.compose(&tau_inv)?)?;
    let f = Factorization { alpha, theta, tau };
    if !check_origin_conditions(&f.theta).passes() || reassemble(&f)? != *sigma {
        return Err(Error::ConditionsFail);
    }
    Ok(f)
}

/// `α∘θ∘τ`.
pub fn reassemble(f: &Factorization) -> Result<PolyMap> {
    f.alpha
        .to_polymap()
        .compose(&f.theta.compose(&f.tau.to_polymap())?)
}

/// An integer point of small height where `d_sσ` is invertible.
pub fn find_etale_point(sigma: &PolyMap, height: i64) -> Option<Vec<CycNum>> {
    let n = sigma.n();
    let field = sigma.field();
    let alphabet: Vec<i64> = core::iter::once(0)
        .chain((1..=height).flat_map(|j| [j, -j]))
        .collect();
    let base = alphabet.len();
    let total = base.checked_pow(n as u32)?;
    (0..total).find_map(|mut code| {
        let mut p = vec![CycNum::zero(field); n];
        for slot in p.iter_mut() {
            *slot = CycNum::from_int(field, alphabet[code % base]);
            code /= base;
        }
        matches!(sigma.jacobian_at(&p).det(), Ok(d) if !d.is_zero()).then_some(p)
    })
}

/// `ρ(t)` as polynomials in `x_1, …, x_n, t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub base: PolyMap,
    pub components: Vec<MPoly>,
}

fn require_conditions(theta: &PolyMap) -> Result<()> {
    if check_origin_conditions(theta).passes() {
        Ok(())
    } else {
        Err(Error::ConditionsFail)
    }
}

pub fn path_family(theta: &PolyMap) -> Result<PathFamily> {
    require_conditions(theta)?;
    let n = theta.n();
    let components = theta
        .components
        .iter()
        .map(|c| {
            MPoly::from_terms(
                &theta.field,
                n + 1,
                c.terms().map(|(e, v)| {
                    let d: i32 = e.iter().sum();
                    let mut e2 = e.clone();
                    e2.push(d - 1);
                    (e2, v.clone())
                }),
            )
        })
        .collect();
    let fam = PathFamily {
        base: theta.clone(),
        components,
    };
    let zero = CycNum::zero(&theta.field);
    let one = CycNum::one(&theta.field);
    if !evaluate_path(&fam, &zero)?.is_identity() || evaluate_path(&fam, &one)? != *theta {
        return Err(Error::ConditionsFail);
    }
    Ok(fam)
}

/// `ρ(t₀)`.
pub fn evaluate_path(fam: &PathFamily, t0: &CycNum) -> Result<PolyMap> {
    let n = fam.base.n();
    let components = fam
        .components
        .iter()
        .map(|c| c.specialize(n, t0))
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(components)
}

/// `ϑ(t₀⁻¹)∘g∘ϑ(t₀)`, i.e. `t₀⁻¹·g(t₀x)`.
pub fn conjugate_by_scaling(g: &PolyMap, t0: &CycNum) -> Result<PolyMap> {
    let n = g.n();
    let field = g.field();
    let scaled: Vec<MPoly> = (0..n).map(|i| MPoly::var(field, n, i).scale(t0)).collect();
    let t_inv = t0.inv()?;
    PolyMap::new(
        g.components
            .iter()
            .map(|c| c.compose(&scaled).scale(&t_inv))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInverseReport {
    pub rho: PolyMap,
    pub inverse: PolyMap,
    /// `ρ(t₀)∘inverse = id` and `inverse∘ρ(t₀) = id`.
    pub verified: bool,
}

/// `ρ(t₀)` with the inverse `ϑ(t₀⁻¹)∘θ⁻¹∘ϑ(t₀)` for `t₀ ≠ 0`.
pub fn evaluate_path_with_inverse(
    fam: &PathFamily,
    t0: &CycNum,
    theta_inv: &PolyMap,
) -> Result<PathInverseReport> {
    let rho = evaluate_path(fam, t0)?;
    let inverse = conjugate_by_scaling(theta_inv, t0)?;
    let verified = rho.compose(&inverse)?.is_identity() && inverse.compose(&rho)?.is_identity();
    Ok(PathInverseReport {
        rho,
        inverse,
        verified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationReport {
    /// `t⁻¹·θ(t x)` as a Laurent polynomial in `t`.
    pub conjugated: Vec<MPoly>,
    pub no_negative_powers: bool,
    pub holds: bool,
}

/// Expands `ϑ(t⁻¹)∘θ∘ϑ(t)` over Laurent polynomials in `t` and compares
/// it with `ρ(t)`.
pub fn verify_conjugation_identity(theta: &PolyMap) -> Result<ConjugationReport> {
    let fam = path_family(theta)?;
    let n = theta.n();
    let field = theta.field();
    let t = MPoly::var(field, n + 1, n);
    let mut t_inv_exp = vec![0; n + 1];
    t_inv_exp[n] = -1;
    let t_inv = MPoly::monomial(field, n + 1, t_inv_exp, CycNum::one(field));
    let scaled: Vec<MPoly> = (0..n).map(|i| MPoly::var(field, n + 1, i).mul(&t)).collect();
    let conjugated: Vec<MPoly> = theta
        .components
        .iter()
        .map(|c| c.extend_vars(1).compose(&scaled).mul(&t_inv))
        .collect();
    let no_negative_powers = conjugated
        .iter()
        .all(|c| c.terms().all(|(e, _)| e[n] >= 0));
    let holds = no_negative_powers && conjugated == fam.components;
    Ok(ConjugationReport {
        conjugated,
        no_negative_powers,
        holds,
    })
}

/// `num/den` expanded as a power series through total degree `order`.
pub fn truncated_quotient(num: &MPoly, den: &MPoly, order: u32) -> Result<MPoly> {
    let n = den.nvars();
    let c = den.coeff(&vec![0; n]);
    if c.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let c_inv = c.inv()?;
    // den = c·(1 + u)
    let u = den
        .sub(&MPoly::constant(den.field(), n, c.clone()))
        .scale(&c_inv);
    let order = order as i32;
    let mut acc = MPoly::zero(den.field(), n);
    let mut term = num.scale(&c_inv).truncate(n, order);
    let minus_u = u.scale(&CycNum::from_int(den.field(), -1));
    while !term.is_zero() {
        acc = acc.add(&term);
        term = term.mul(&minus_u).truncate(n, order);
    }
    Ok(acc)
}

/// A rational self-map `θ_i = p_i/q_i` with `q_i(o) ≠ 0`, expanded to a
/// polynomial map modulo terms of degree above `order`.
pub fn expand_rational_map(nums: &[MPoly], dens: &[MPoly], order: u32) -> Result<PolyMap> {
    if nums.len() != dens.len() {
        return Err(Error::DimensionMismatch(nums.len(), dens.len()));
    }
    PolyMap::new(
        nums.iter()
            .zip(dens)
            .map(|(p, q)| truncated_quotient(p, q, order))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// The conjugation identity modulo terms of `x`-degree above `order`.
pub fn verify_conjugation_truncated(theta: &PolyMap, order: u32) -> Result<ConjugationReport> {
    verify_conjugation_identity(&theta.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f1() -> Arc<CycField> {
        CycField::new(1)
    }

    /// Components from `(coeff, exps)` lists.
    fn map(n: usize, comps: &[&[(i64, &[i32])]]) -> PolyMap {
        let f = f1();
        PolyMap::new(
            comps
                .iter()
                .map(|terms| {
                    MPoly::from_terms(
                        &f,
                        n,
                        terms
                            .iter()
                            .map(|(c, e)| (e.to_vec(), CycNum::from_int(&f, *c))),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn origin_conditions() {
        assert!(check_origin_conditions(&map(2, &[&[(1, &[1, 0]), (1, &[0, 2])], &[(1, &[0, 1])]])).passes());
        let r = check_origin_conditions(&map(2, &[&[(1, &[1, 0]), (1, &[0, 0])], &[(1, &[0, 1])]]));
        assert!(!r.fixes_origin && r.identity_differential);
        let r = check_origin_conditions(&map(2, &[&[(2, &[1, 0])], &[(1, &[0, 1])]]));
        assert!(r.fixes_origin && !r.identity_differential);
    }

    #[test]
    fn factorization() {
        let f = f1();
        let o = vec![CycNum::zero(&f); 2];
        let swap = map(2, &[&[(1, &[0, 1])], &[(1, &[1, 0])]]);
        let fac = factor_through_origin(&swap, &o).unwrap();
        assert!(fac.theta.is_identity());
        let shifted = map(2, &[&[(1, &[1, 0]), (1, &[0, 0]), (1, &[2, 0])], &[(1, &[0, 1])]]);
        let fac = factor_through_origin(&shifted, &o).unwrap();
        assert_eq!(fac.theta, map(2, &[&[(1, &[1, 0]), (1, &[2, 0])], &[(1, &[0, 1])]]));
        assert_eq!(fac.alpha.translation, vec![CycNum::one(&f), CycNum::zero(&f)]);
        assert!(fac.alpha.linear.is_identity());
        let s = vec![CycNum::from_int(&f, 2), CycNum::from_int(&f, -1)];
        let fac = factor_through_origin(&shifted, &s).unwrap();
        assert_eq!(reassemble(&fac).unwrap(), shifted);
        let flat = map(2, &[&[(1, &[2, 0])], &[(1, &[0, 1])]]);
        assert_eq!(factor_through_origin(&flat, &o).unwrap_err(), Error::SingularJacobian);
        assert!(find_etale_point(&flat, 2).is_some());
    }

    #[test]
    fn path_examples() {
        let f = f1();
        let theta = map(2, &[&[(1, &[1, 0]), (1, &[0, 2])], &[(1, &[0, 1]), (1, &[3, 0])]]);
        let fam = path_family(&theta).unwrap();
        let poly3 = |terms: &[(i64, [i32; 3])]| {
            MPoly::from_terms(&f, 3, terms.iter().map(|(c, e)| (e.to_vec(), CycNum::from_int(&f, *c))))
        };
        let expected = vec![
            poly3(&[(1, [1, 0, 0]), (1, [0, 2, 1])]),
            poly3(&[(1, [0, 1, 0]), (1, [3, 0, 2])]),
        ];
        assert_eq!(fam.components, expected);
        assert!(verify_conjugation_identity(&theta).unwrap().holds);
        let id = PolyMap::identity(&f, 2);
        let id_fam: Vec<MPoly> = id.components().iter().map(|c| c.extend_vars(1)).collect();
        assert_eq!(path_family(&id).unwrap().components, id_fam);
        let bad = map(1, &[&[(2, &[1])]]);
        assert_eq!(path_family(&bad).unwrap_err(), Error::ConditionsFail);
    }

    #[test]
    fn path_inverse() {
        let f = f1();
        let theta = map(2, &[&[(1, &[1, 0]), (1, &[0, 2])], &[(1, &[0, 1])]]);
        let inv = map(2, &[&[(1, &[1, 0]), (-1, &[0, 2])], &[(1, &[0, 1])]]);
        let fam = path_family(&theta).unwrap();
        let r = evaluate_path_with_inverse(&fam, &CycNum::from_int(&f, 2), &inv).unwrap();
        assert!(r.verified);
        assert_eq!(r.rho, map(2, &[&[(1, &[1, 0]), (2, &[0, 2])], &[(1, &[0, 1])]]));
        assert_eq!(r.inverse, map(2, &[&[(1, &[1, 0]), (-2, &[0, 2])], &[(1, &[0, 1])]]));
    }

    #[test]
    fn rational_expansion() {
        let f = f1();
        // x/(1 - x) = x + x^2 + … + x^N
        let x = MPoly::var(&f, 1, 0);
        let den = MPoly::one(&f, 1).sub(&x);
        let q = truncated_quotient(&x, &den, 5).unwrap();
        assert_eq!(q.len(), 5);
        assert!(q.terms().all(|(_, c)| c.is_one()));
        let m = expand_rational_map(core::slice::from_ref(&x), &[den], DEFAULT_TRUNCATION).unwrap();
        assert!(verify_conjugation_truncated(&m, DEFAULT_TRUNCATION).unwrap().holds);
        assert_eq!(truncated_quotient(&x, &x, 3).unwrap_err(), Error::ZeroDenominator);
    }
}
