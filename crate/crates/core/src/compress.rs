//! Homogeneous self-compressions of binary polyhedral groups.
//!
//! A degree-`d` self-compression is a pair of forms `φ = (φ1, φ2)` with
//! `φ(Mv) = Mφ(v)` for every group element `M`. Its descent to `P^1` is
//! `z ↦ φ1(z,1)/φ2(z,1)` after removing `gcd(φ1, φ2)`; it is nontrivial iff
//! the gcd has degree at most `d − 2`.
//!
//! Charts: `z = x1/x2`, and `(az+b)/(cz+e)` acts on `(x1 : x2)` through the
//! matrix `[[a, b], [c, e]]`.

use alloc::{string::String, sync::Arc, vec, vec::Vec};

use crate::error::{Error, Result};
use crate::forms::{
    apply_matrix_to_map, equivariant_basis, first_equivariance_failure, form_gcd,
    isotypic_basis, isotypic_dims, jacobian, multiplicities_chi, Form, FormMap,
};
use crate::groups::{build_group, chi_stabilizer_characters, GroupKind, LinearCharacter, Mat, MatrixGroup};
use crate::linalg::{span_rank, Matrix};
use crate::poly::{MPoly, UniPoly};
use crate::scalars::{CycField, CycNum};

/// Default max-norm bound for the coefficient search.
pub const DEFAULT_ALPHA_BOUND: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    /// `S_G`, whose nonzero coefficients are the degrees of nontrivial compressions.
    S,
    /// Multiplicity of the defining character in `A_d`.
    PChi,
    /// Dimension of the invariants.
    P1,
    /// Dimension of the `θ`-isotypic part (dihedral only).
    PTheta,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::S => "S_G",
            SeriesKind::PChi => "P_chi",
            SeriesKind::P1 => "P_1",
            SeriesKind::PTheta => "P_theta",
        }
    }

    pub fn parse(s: &str) -> Option<SeriesKind> {
        match s {
            "S" | "S_G" | "s" => Some(SeriesKind::S),
            "Pchi" | "P_chi" | "chi" => Some(SeriesKind::PChi),
            "P1" | "P_1" | "1" => Some(SeriesKind::P1),
            "Ptheta" | "P_theta" | "theta" => Some(SeriesKind::PTheta),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    pub group: GroupKind,
    /// Coefficients of `t^0 … t^upto`.
    pub coeffs: Vec<i64>,
}

impl SeriesTable {
    pub fn coeff(&self, d: u32) -> i64 {
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    /// Smallest `d ≥ 1` with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c != 0)
            .map(|(i, _)| i as u32)
    }
}

/// `numerator / Π (1 − t^k)` expanded through `t^upto`.
fn expand_rational(numerator: &[(u32, i64)], denominators: &[u32], upto: u32) -> Vec<i64> {
    let n = upto as usize + 1;
    let mut c = vec![0i64; n];
    for &(e, v) in numerator {
        if (e as usize) < n {
            c[e as usize] += v;
        }
    }
    for &k in denominators {
        let k = k as usize;
        for i in k..n {
            c[i] += c[i - k];
        }
    }
    c
}

/// Closed-form series, expanded through `t^upto`.
pub fn series(group: &GroupKind, kind: SeriesKind, upto: u32) -> Result<SeriesTable> {
    if upto < 1 {
        return Err(Error::InvalidInput(String::from("upto must be at least 1")));
    }
    let unknown = || Err(Error::UnknownKind(alloc::format!("{} for {}", kind.name(), group.name())));
    let coeffs = match (group, kind) {
        (g, k) if g.primitive_a().is_some() => {
            let a = g.primitive_a().unwrap();
            let den = [2 * a, 4 * a - 4];
            match k {
                SeriesKind::S => {
                    let mut s = expand_rational(&[(2 * a - 1, 1), (6 * a - 7, 1)], &den, upto);
                    let tail = expand_rational(&[(4 * a - 5, 1)], &[4 * a - 4], upto);
                    for (x, y) in s.iter_mut().zip(tail) {
                        *x += y;
                    }
                    s
                }
                SeriesKind::PChi => expand_rational(
                    &[(1, 1), (2 * a - 1, 1), (4 * a - 5, 1), (6 * a - 7, 1)],
                    &den,
                    upto,
                ),
                SeriesKind::P1 => expand_rational(&[(0, 1), (6 * a - 6, 1)], &den, upto),
                SeriesKind::PTheta => return unknown(),
            }
        }
        (GroupKind::BinaryDihedral(l), k) | (GroupKind::Cyclic(l), k @ SeriesKind::S) => {
            let l = *l;
            let den = [4, 2 * l];
            match k {
                SeriesKind::S => expand_rational(&[(2 * l - 1, 1)], &[2 * l], upto),
                SeriesKind::PChi => expand_rational(
                    &[(1, 1), (3, 1), (2 * l - 1, 1), (2 * l + 1, 1)],
                    &den,
                    upto,
                ),
                SeriesKind::P1 => expand_rational(&[(0, 1), (2 * l + 2, 1)], &den, upto),
                SeriesKind::PTheta => expand_rational(&[(2, 1), (2 * l, 1)], &den, upto),
            }
        }
        _ => return unknown(),
    };
    Ok(SeriesTable {
        kind,
        group: group.clone(),
        coeffs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyRow {
    pub d: u32,
    pub s_d: i64,
    pub mult_chi: usize,
    /// `dim A(γ)_(d-1)` for each `γ ∈ [χ]`, trivial character first.
    pub dims_prev: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub group: GroupKind,
    pub rows: Vec<ConsistencyRow>,
    /// `s_d ≤ mult − max_γ dim A(γ)_(d-1)` at every degree.
    pub inequality_holds: bool,
    /// `ℓ = 2` only: the three nontrivial characters of `[χ]` share one series.
    pub theta_series_equal: Option<bool>,
}

fn mismatch(d: u32, expected: i64, computed: i64) -> Error {
    Error::Mismatch {
        d,
        expected,
        computed,
    }
}

/// Compares the closed-form series with character computations for
/// `1 ≤ d ≤ upto`.
pub fn series_consistency(group: &MatrixGroup, upto: u32) -> Result<ConsistencyReport> {
    let kind = group.kind().clone();
    let dihedral = matches!(kind, GroupKind::BinaryDihedral(_));
    if kind.primitive_a().is_none() && !dihedral {
        return Err(Error::UnknownKind(kind.name()));
    }
    let s = series(&kind, SeriesKind::S, upto)?;
    let p_chi = series(&kind, SeriesKind::PChi, upto)?;
    let p_1 = series(&kind, SeriesKind::P1, upto)?;
    let p_theta = if dihedral {
        Some(series(&kind, SeriesKind::PTheta, upto)?)
    } else {
        None
    };
    let mult = multiplicities_chi(group, upto)?;
    let chars = chi_stabilizer_characters(group)?;
    let dims: Vec<Vec<usize>> = chars
        .iter()
        .map(|c| isotypic_dims(group, c, upto))
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut inequality_holds = true;
    for d in 1..=upto {
        let du = d as usize;
        if p_chi.coeff(d) != mult[du] as i64 {
            return Err(mismatch(d, p_chi.coeff(d), mult[du] as i64));
        }
        if p_1.coeff(d) != dims[0][du] as i64 {
            return Err(mismatch(d, p_1.coeff(d), dims[0][du] as i64));
        }
        if let Some(pt) = &p_theta {
            if pt.coeff(d) != dims[1][du] as i64 {
                return Err(mismatch(d, pt.coeff(d), dims[1][du] as i64));
            }
        }
        let dims_prev: Vec<usize> = dims.iter().map(|v| v[du - 1]).collect();
        let mut rhs = mult[du] as i64 - dims_prev[0] as i64;
        if dihedral {
            rhs -= dims_prev[1] as i64;
        }
        if s.coeff(d) != rhs {
            return Err(mismatch(d, s.coeff(d), rhs));
        }
        let max_prev = *dims_prev.iter().max().unwrap() as i64;
        if s.coeff(d) > mult[du] as i64 - max_prev {
            inequality_holds = false;
        }
        rows.push(ConsistencyRow {
            d,
            s_d: s.coeff(d),
            mult_chi: mult[du],
            dims_prev,
        });
    }
    let theta_series_equal = (kind == GroupKind::BinaryDihedral(2))
        .then(|| dims.len() == 4 && dims[1] == dims[2] && dims[2] == dims[3]);
    Ok(ConsistencyReport {
        group: kind,
        rows,
        inequality_holds,
        theta_series_equal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CertificateChecks {
    /// `φ(Mv) = Mφ(v)` for every element of the group.
    pub equivariant: bool,
    pub jacobian_nonzero: bool,
    /// `gcd_degree ≤ d − 2`.
    pub descent_nontrivial: bool,
    /// No `γ ∈ [χ]` and `s ∈ A(γ)_(d-1)` with `span(φ1, φ2) = s·A_1`.
    pub no_semi_invariant_factor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionCertificate {
    pub group: GroupKind,
    pub d: u32,
    pub phi1: Form,
    pub phi2: Form,
    pub alpha: Vec<i64>,
    pub gcd_degree: u32,
    pub descent_degree: u32,
    pub checks: CertificateChecks,
}

impl CompressionCertificate {
    pub fn all_checks_pass(&self) -> bool {
        let c = &self.checks;
        c.equivariant && c.jacobian_nonzero && c.descent_nontrivial && c.no_semi_invariant_factor
    }
}

/// Integer vectors of length `m` with max-norm `1..=bound`, by shell and
/// then lexicographically with entries ordered `0, 1, −1, 2, −2, …`.
pub fn alpha_candidates(m: usize, bound: u32) -> impl Iterator<Item = Vec<i64>> {
    (1..=bound as i64).flat_map(move |k| {
        let alphabet: Vec<i64> = core::iter::once(0)
            .chain((1..=k).flat_map(|j| [j, -j]))
            .collect();
        let base = alphabet.len();
        let total = (base as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        (0..total).filter_map(move |mut code| {
            let mut v = vec![0i64; m];
            for slot in v.iter_mut().rev() {
                *slot = alphabet[(code % base as u128) as usize];
                code /= base as u128;
            }
            (v.iter().map(|x| x.abs()).max() == Some(k)).then_some(v)
        })
    })
}

/// Spans `A(γ)_(d-1)·A_1` for each `γ ∈ [χ]`, as bases of `s` forms.
struct SemiInvariantData {
    bases: Vec<Vec<Form>>,
}

impl SemiInvariantData {
    fn new(chars: &[LinearCharacter], group: &MatrixGroup, d: u32) -> SemiInvariantData {
        let bases = chars
            .iter()
            .map(|c| {
                if d == 0 {
                    Vec::new()
                } else {
                    isotypic_basis(group, Some(c), d - 1)
                }
            })
            .collect();
        SemiInvariantData { bases }
    }

    /// Whether `φ1, φ2 ∈ span(A(γ)_(d-1)·A_1)`, per `γ`.
    fn contained(&self, phi1: &Form, phi2: &Form) -> Vec<bool> {
        let field = phi1.field();
        let len = phi1.coeffs().len();
        self.bases
            .iter()
            .map(|b| {
                let w: Vec<Vec<CycNum>> = b
                    .iter()
                    .flat_map(|s| [s.mul_var(0).coeffs().to_vec(), s.mul_var(1).coeffs().to_vec()])
                    .collect();
                let r = span_rank(field, len, &w);
                let mut ext = w;
                ext.push(phi1.coeffs().to_vec());
                ext.push(phi2.coeffs().to_vec());
                span_rank(field, len, &ext) == r
            })
            .collect()
    }

    /// Whether some nonzero `s ∈ A(γ)_(d-1)` has `s·x1, s·x2 ∈ span(φ1, φ2)`, per `γ`.
    fn exact_factor(&self, phi1: &Form, phi2: &Form) -> Vec<bool> {
        let field = phi1.field();
        let len = phi1.coeffs().len();
        self.bases
            .iter()
            .map(|b| {
                if b.is_empty() {
                    return false;
                }
                // unknowns (β_1..β_r, a, b, c, e):
                //   Σ β_k s_k x1 − a φ1 − b φ2 = 0,  Σ β_k s_k x2 − c φ1 − e φ2 = 0
                let r = b.len();
                let mut m = Matrix::zeros(field, 2 * len, r + 4);
                for (k, s) in b.iter().enumerate() {
                    for (half, var) in [(0, 0), (1, 1)] {
                        for (i, c) in s.mul_var(var).coeffs().iter().enumerate() {
                            m.set(half * len + i, k, c.clone());
                        }
                    }
                }
                for half in 0..2 {
                    for i in 0..len {
                        m.set(half * len + i, r + 2 * half, -&phi1.coeffs()[i]);
                        m.set(half * len + i, r + 2 * half + 1, -&phi2.coeffs()[i]);
                    }
                }
                !m.nullspace().is_empty()
            })
            .collect()
    }
}

fn independent(phi1: &Form, phi2: &Form) -> bool {
    span_rank(
        phi1.field(),
        phi1.coeffs().len(),
        &[phi1.coeffs().to_vec(), phi2.coeffs().to_vec()],
    ) == 2
}

/// Builds a nontrivial degree-`d` self-compression by searching integer
/// combinations of the equivariant basis. Cyclic groups are handled through
/// the binary dihedral group of twice their order.
pub fn construct_self_compression(
    group: &MatrixGroup,
    d: u32,
    alpha_bound: u32,
) -> Result<CompressionCertificate> {
    let kind = group.kind().clone();
    let s = series(&kind, SeriesKind::S, d.max(1))?;
    if d == 0 || s.coeff(d) == 0 {
        return Err(Error::InfeasibleDegree { d });
    }
    let ambient_owned;
    let ambient = match kind {
        GroupKind::Cyclic(l) => {
            ambient_owned = build_group(&GroupKind::BinaryDihedral(l))?;
            if ambient_owned.conductor() != group.conductor() {
                return Err(Error::ConductorMismatch {
                    left: group.conductor(),
                    right: ambient_owned.conductor(),
                });
            }
            &ambient_owned
        }
        _ => group,
    };
    let basis = equivariant_basis(ambient, d)?;
    let chars = chi_stabilizer_characters(ambient)?;
    let semi = SemiInvariantData::new(&chars, ambient, d);
    let field = ambient.field();

    for alpha in alpha_candidates(basis.len(), alpha_bound) {
        let phi = combine(field, &basis, &alpha, d);
        if !independent(&phi[0], &phi[1]) {
            continue;
        }
        let g = form_gcd(&phi[0], &phi[1])?;
        if g.degree() + 2 > d {
            continue;
        }
        if semi.contained(&phi[0], &phi[1]).iter().any(|&c| c) {
            continue;
        }
        let (phi1, phi2) = (phi[0].clone(), phi[1].clone());
        let mut equivariant = first_equivariance_failure(group, &phi)?.is_none();
        if !core::ptr::eq(ambient, group) {
            equivariant &= first_equivariance_failure(ambient, &phi)?.is_none();
        }
        let checks = CertificateChecks {
            equivariant,
            jacobian_nonzero: !jacobian(&phi1, &phi2).is_zero(),
            descent_nontrivial: true,
            no_semi_invariant_factor: !semi.exact_factor(&phi1, &phi2).iter().any(|&c| c),
        };
        return Ok(CompressionCertificate {
            group: kind,
            d,
            phi1,
            phi2,
            alpha,
            gcd_degree: g.degree(),
            descent_degree: d - g.degree(),
            checks,
        });
    }
    Err(Error::SearchExhausted { d, bound: alpha_bound })
}

/// `Σ α_k basis_k`.
pub fn combine(field: &Arc<CycField>, basis: &[FormMap], alpha: &[i64], d: u32) -> FormMap {
    let n = basis.first().map_or(2, Vec::len);
    let mut phi = vec![Form::zero(field, n, d); n];
    for (b, &a) in basis.iter().zip(alpha) {
        if a == 0 {
            continue;
        }
        let a = CycNum::from_int(field, a);
        for (p, f) in phi.iter_mut().zip(b) {
            *p = p.add(&f.scale(&a)).expect("same shape");
        }
    }
    phi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivarianceMode {
    /// `φ(Mv) = Mφ(v)`.
    Linear,
    /// `φ(Mv) = λ_M · Mφ(v)` for a nonzero constant `λ_M`.
    Projective,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub passed: bool,
    /// Index into the matrices checked.
    pub first_failure: Option<usize>,
    /// Projective mode: the scalar `λ_M` per matrix, up to the first failure.
    pub scalars: Vec<CycNum>,
}

/// Checks `φ` against each matrix in `mats`.
pub fn verify_equivariance(
    mats: &[Mat],
    phi1: &Form,
    phi2: &Form,
    mode: EquivarianceMode,
) -> Result<EquivarianceReport> {
    if phi1.degree() != phi2.degree() {
        return Err(Error::DegreeMismatch(phi1.degree(), phi2.degree()));
    }
    let phi = [phi1.clone(), phi2.clone()];
    let mut scalars = Vec::new();
    for (i, m) in mats.iter().enumerate() {
        let lhs: FormMap = phi.iter().map(|f| f.substitute(m)).collect::<Result<_>>()?;
        let rhs = apply_matrix_to_map(m, &phi)?;
        let ok = match mode {
            EquivarianceMode::Linear => {
                scalars.push(CycNum::one(phi1.field()));
                lhs == rhs
            }
            EquivarianceMode::Projective => match proportionality(&lhs, &rhs) {
                Some(l) => {
                    scalars.push(l);
                    true
                }
                None => false,
            },
        };
        if !ok {
            return Ok(EquivarianceReport {
                passed: false,
                first_failure: Some(i),
                scalars,
            });
        }
    }
    Ok(EquivarianceReport {
        passed: true,
        first_failure: None,
        scalars,
    })
}

/// `λ ≠ 0` with `lhs = λ·rhs`, if it exists.
fn proportionality(lhs: &[Form], rhs: &[Form]) -> Option<CycNum> {
    let pairs = || lhs.iter().zip(rhs).flat_map(|(a, b)| a.coeffs().iter().zip(b.coeffs()));
    let (a, b) = pairs().find(|(a, b)| !a.is_zero() || !b.is_zero())?;
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let l = a / b;
    pairs().all(|(x, y)| *x == &l * y).then_some(l)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentReport {
    pub gcd: Form,
    pub gcd_degree: u32,
    pub descent_degree: u32,
    /// `descent_degree ≥ 2`.
    pub nontrivial: bool,
    /// Per `γ ∈ [χ]`: `φ1, φ2 ∈ span(A(γ)_(d-1)·A_1)`.
    pub contained: Vec<bool>,
    /// Per `γ ∈ [χ]`: `span(φ1, φ2) = s·A_1` for some `s ∈ A(γ)_(d-1)`.
    pub semi_invariant_factor: Vec<bool>,
    /// The gcd verdict agrees with the semi-invariant factor verdict.
    pub criteria_agree: bool,
}

/// Semi-invariant data for repeated descent checks at one degree.
pub struct DescentContext {
    d: u32,
    chars: usize,
    semi: SemiInvariantData,
}

impl DescentContext {
    pub fn new(group: &MatrixGroup, d: u32) -> Result<DescentContext> {
        let ambient_owned;
        let ambient = match group.kind() {
            GroupKind::Cyclic(l) => {
                ambient_owned = build_group(&GroupKind::BinaryDihedral(*l))?;
                &ambient_owned
            }
            _ => group,
        };
        let chars = chi_stabilizer_characters(ambient)?;
        Ok(DescentContext {
            d,
            chars: chars.len(),
            semi: SemiInvariantData::new(&chars, ambient, d),
        })
    }

    /// Descent degree of `φ` and both triviality criteria.
    pub fn check(&self, phi1: &Form, phi2: &Form) -> Result<DescentReport> {
        if phi1.is_zero() || phi2.is_zero() {
            return Err(Error::ZeroForm);
        }
        if phi1.degree() != phi2.degree() {
            return Err(Error::DegreeMismatch(phi1.degree(), phi2.degree()));
        }
        if phi1.degree() != self.d {
            return Err(Error::DegreeMismatch(phi1.degree(), self.d));
        }
        let gcd = form_gcd(phi1, phi2)?;
        let gcd_degree = gcd.degree();
        let descent_degree = self.d - gcd_degree;
        let nontrivial = descent_degree >= 2;
        let contained = self.semi.contained(phi1, phi2);
        let semi_invariant_factor = if independent(phi1, phi2) {
            self.semi.exact_factor(phi1, phi2)
        } else {
            vec![false; self.chars]
        };
        let criteria_agree = nontrivial != semi_invariant_factor.iter().any(|&b| b);
        Ok(DescentReport {
            gcd,
            gcd_degree,
            descent_degree,
            nontrivial,
            contained,
            semi_invariant_factor,
            criteria_agree,
        })
    }
}

/// Descent degree of `φ` and both triviality criteria.
pub fn verify_descent(group: &MatrixGroup, phi1: &Form, phi2: &Form) -> Result<DescentReport> {
    if phi1.is_zero() || phi2.is_zero() {
        return Err(Error::ZeroForm);
    }
    DescentContext::new(group, phi1.degree())?.check(phi1, phi2)
}

/// `z ↦ (az + b)/(cz + e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moebius {
    pub a: CycNum,
    pub b: CycNum,
    pub c: CycNum,
    pub e: CycNum,
}

impl Moebius {
    pub fn new(a: CycNum, b: CycNum, c: CycNum, e: CycNum) -> Result<Moebius> {
        if (&(&a * &e) - &(&b * &c)).is_zero() {
            return Err(Error::InvalidInput(String::from("singular fractional-linear map")));
        }
        Ok(Moebius { a, b, c, e })
    }

    /// The homogeneous lift `[[a, b], [c, e]]`.
    pub fn matrix(&self) -> Mat {
        Matrix::from_rows(
            self.a.field(),
            vec![
                vec![self.a.clone(), self.b.clone()],
                vec![self.c.clone(), self.e.clone()],
            ],
        )
        .expect("entries share a field")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalEquationReport {
    /// Per generator.
    pub passed: Vec<bool>,
    pub degree: u32,
    pub nontrivial: bool,
}

impl FunctionalEquationReport {
    pub fn all_passed(&self) -> bool {
        self.passed.iter().all(|&b| b)
    }
}

/// `Σ p_k u^k v^(D-k)` with `u = az + b`, `v = cz + e`.
fn homogeneous_compose(p: &UniPoly, deg: usize, u: &UniPoly, v: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::zero(p.field());
    let mut upow = vec![UniPoly::constant(CycNum::one(p.field()))];
    let mut vpow = vec![UniPoly::constant(CycNum::one(p.field()))];
    for k in 1..=deg {
        upow.push(upow[k - 1].mul(u));
        vpow.push(vpow[k - 1].mul(v));
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&upow[k].mul(&vpow[deg - k]).scale(c));
        }
    }
    acc
}

/// Checks `f(g(z)) = g(f(z))` for `f = p/q` and each generator `g`, as the
/// polynomial identity `P̂(u, v)·(c p + e q) = Q̂(u, v)·(a p + b q)` where
/// `P̂, Q̂` are `p, q` homogenized to the common degree.
pub fn verify_functional_equation(
    p: &UniPoly,
    q: &UniPoly,
    gens: &[Moebius],
) -> Result<FunctionalEquationReport> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let g = p.gcd(q)?;
    let (pr, _) = p.divrem(&g)?;
    let (qr, _) = q.divrem(&g)?;
    let degree = pr.degree().unwrap_or(0).max(qr.degree().unwrap_or(0)) as u32;
    let deg = p.degree().unwrap_or(0).max(q.degree().unwrap_or(0));
    let field = q.field();
    let passed = gens
        .iter()
        .map(|m| {
            let u = UniPoly::new(field, vec![m.b.clone(), m.a.clone()]);
            let v = UniPoly::new(field, vec![m.e.clone(), m.c.clone()]);
            let ph = homogeneous_compose(p, deg, &u, &v);
            let qh = homogeneous_compose(q, deg, &u, &v);
            let den = q.scale(&m.e).add(&p.scale(&m.c));
            let num = p.scale(&m.a).add(&q.scale(&m.b));
            ph.mul(&den) == qh.mul(&num)
        })
        .collect();
    Ok(FunctionalEquationReport {
        passed,
        degree,
        nontrivial: degree >= 2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantRoute {
    Reynolds,
    OrbitProduct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantForm {
    pub form: Form,
    pub route: InvariantRoute,
}

/// Whether `f∘M = f` for every element; generators suffice.
pub fn is_invariant(group: &MatrixGroup, f: &Form) -> Result<bool> {
    for m in group.generators() {
        if f.substitute(m)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(Π_g g·x1)^(d/|G|)`, a nonzero invariant whenever `|G|` divides `d`.
pub fn orbit_product_invariant(group: &MatrixGroup, d: u32) -> Result<Option<Form>> {
    let order = group.order() as u32;
    if !d.is_multiple_of(order) {
        return Ok(None);
    }
    let field = group.field();
    let x1 = Form::var(field, group.dim(), 0);
    let mut prod = Form::monomial(field, &vec![0; group.dim()], CycNum::one(field));
    for gi in 0..group.order() {
        let inv = group.element(group.inverse_index(gi));
        prod = prod.mul(&x1.substitute(inv)?);
    }
    let mut out = Form::monomial(field, &vec![0; group.dim()], CycNum::one(field));
    for _ in 0..d / order {
        out = out.mul(&prod);
    }
    Ok(Some(out))
}

/// A nonzero invariant form of degree `d`, or `None` when there is none.
pub fn invariant_form(group: &MatrixGroup, d: u32) -> Result<Option<InvariantForm>> {
    if let Some(form) = isotypic_basis(group, None, d).into_iter().next() {
        return Ok(Some(InvariantForm {
            form,
            route: InvariantRoute::Reynolds,
        }));
    }
    match orbit_product_invariant(group, d)? {
        Some(form) if !form.is_zero() && is_invariant(group, &form)? => Ok(Some(InvariantForm {
            form,
            route: InvariantRoute::OrbitProduct,
        })),
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSelfMap {
    pub invariant: Form,
    /// `f·x_i`, of degree `d + 1`.
    pub components: FormMap,
    pub equivariant: bool,
}

/// `v ↦ f(v)·v` for an invariant form `f`.
pub fn linear_self_compression(group: &MatrixGroup, f: &Form) -> Result<LinearSelfMap> {
    if !is_invariant(group, f)? {
        return Err(Error::NotInvariant);
    }
    let components: FormMap = (0..group.dim()).map(|i| f.mul_var(i)).collect();
    let equivariant = first_equivariance_failure(group, &components)?.is_none();
    Ok(LinearSelfMap {
        invariant: f.clone(),
        components,
        equivariant,
    })
}

/// `φ(t·a)` as polynomials in `t`, one per component.
pub fn restrict_to_line(components: &[Form], a: &[CycNum]) -> Vec<UniPoly> {
    let field = components[0].field();
    let n = a.len();
    let t = MPoly::var(field, 1, 0);
    let subs: Vec<MPoly> = a
        .iter()
        .map(|ai| t.scale(ai))
        .collect();
    components
        .iter()
        .map(|c| {
            let mp = c.to_mpoly();
            debug_assert_eq!(mp.nvars(), n);
            let r = compose_into(&mp, &subs);
            let deg = r.total_degree().unwrap_or(0).max(0) as usize;
            UniPoly::new(
                field,
                (0..=deg).map(|k| r.coeff(&[k as i32])).collect(),
            )
        })
        .collect()
}

/// Substitutes polynomials in a different number of variables.
fn compose_into(p: &MPoly, subs: &[MPoly]) -> MPoly {
    let field = p.field();
    let m = subs[0].nvars();
    let mut out = MPoly::zero(field, m);
    for (e, c) in p.terms() {
        let mut term = MPoly::constant(field, m, c.clone());
        for (s, &k) in subs.iter().zip(e) {
            term = term.mul(&s.pow(k as u32));
        }
        out = out.add(&term);
    }
    out
}

/// The line test: at `a` with `f(a) ≠ 0`, `φ(ta) = f(a) t^(d+1) a`, so the
/// restriction to the line through `a` has degree `d + 1`.
pub fn line_degree(map: &LinearSelfMap, a: &[CycNum]) -> Option<u32> {
    let fa = map.invariant.eval(a);
    if fa.is_zero() {
        return None;
    }
    let d1 = map.invariant.degree() + 1;
    let restricted = restrict_to_line(&map.components, a);
    for (r, ai) in restricted.iter().zip(a) {
        for (k, c) in r.coeffs().iter().enumerate() {
            let expected = if k as u32 == d1 { &fa * ai } else { CycNum::zero(fa.field()) };
            if *c != expected {
                return None;
            }
        }
    }
    Some(d1)
}

/// A point of small integer height off the zero set of `f`.
pub fn point_off_zero_set(f: &Form) -> Option<Vec<CycNum>> {
    let n = f.nvars();
    let field = f.field();
    for cand in alpha_candidates(n, 6) {
        let p: Vec<CycNum> = cand.iter().map(|&x| CycNum::from_int(field, x)).collect();
        if !f.eval(&p).is_zero() {
            return Some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::tn_group;

    fn icosa_pair(f: &Arc<CycField>) -> (Form, Form) {
        let mut p = vec![0i64; 12];
        p[0] = 1;
        p[5] = 66;
        p[10] = -11;
        let mut q = vec![0i64; 12];
        q[1] = -11;
        q[6] = -66;
        q[11] = 1;
        (
            Form::from_ints(f, 2, 11, &p).unwrap(),
            Form::from_ints(f, 2, 11, &q).unwrap(),
        )
    }

    #[test]
    fn series_examples() {
        let s = series(&GroupKind::BinaryTetrahedral, SeriesKind::S, 12).unwrap();
        let nz: Vec<(usize, i64)> = s.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
        assert_eq!(nz, vec![(5, 1), (7, 1), (11, 2)]);
        for l in 2..=6 {
            let s = series(&GroupKind::BinaryDihedral(l), SeriesKind::S, 40).unwrap();
            for d in 0..=40u32 {
                let expect = i64::from(d >= 2 * l - 1 && (d + 1) % (2 * l) == 0);
                assert_eq!(s.coeff(d), expect);
            }
        }
        let p1 = series(&GroupKind::BinaryDihedral(2), SeriesKind::P1, 8).unwrap();
        assert_eq!(p1.coeff(4), 2);
        assert!(matches!(
            series(&GroupKind::BinaryIcosahedral, SeriesKind::PTheta, 8),
            Err(Error::UnknownKind(_))
        ));
        assert_eq!(
            series(&GroupKind::BinaryOctahedral, SeriesKind::S, 20).unwrap().first_nonzero(),
            Some(7)
        );
        assert_eq!(
            series(&GroupKind::BinaryIcosahedral, SeriesKind::S, 20).unwrap().first_nonzero(),
            Some(11)
        );
    }

    #[test]
    fn alpha_order() {
        let v: Vec<Vec<i64>> = alpha_candidates(2, 1).collect();
        assert_eq!(
            v,
            vec![
                vec![0, 1],
                vec![0, -1],
                vec![1, 0],
                vec![1, 1],
                vec![1, -1],
                vec![-1, 0],
                vec![-1, 1],
                vec![-1, -1]
            ]
        );
        assert_eq!(alpha_candidates(1, 3).collect::<Vec<_>>(), vec![vec![1], vec![-1], vec![2], vec![-2], vec![3], vec![-3]]);
    }

    #[test]
    fn consistency_small() {
        for k in [GroupKind::BinaryTetrahedral, GroupKind::BinaryDihedral(3), GroupKind::BinaryDihedral(2)] {
            let g = build_group(&k).unwrap();
            let r = series_consistency(&g, 20).unwrap();
            assert!(r.inequality_holds);
            if k == GroupKind::BinaryDihedral(2) {
                assert_eq!(r.theta_series_equal, Some(true));
            }
            if k == GroupKind::BinaryDihedral(3) {
                let row = &r.rows[4];
                assert_eq!((row.d, row.s_d), (5, 1));
                assert_eq!(row.mult_chi - row.dims_prev[0] - row.dims_prev[1], 1);
            }
        }
    }

    #[test]
    fn quaternion_degree_three() {
        let g = build_group(&GroupKind::BinaryDihedral(2)).unwrap();
        let c = construct_self_compression(&g, 3, 8).unwrap();
        assert!(c.all_checks_pass());
        assert_eq!((c.gcd_degree, c.descent_degree), (0, 3));
        let f = g.field();
        let target = [
            Form::from_ints(f, 2, 3, &[0, 0, 0, 1]).unwrap(),
            Form::from_ints(f, 2, 3, &[-1, 0, 0, 0]).unwrap(),
        ];
        let vecs: Vec<Vec<CycNum>> = [&c.phi1, &c.phi2, &target[0], &target[1]]
            .iter()
            .map(|x| x.coeffs().to_vec())
            .collect();
        assert_eq!(span_rank(f, 4, &vecs), 2);
        let r = verify_descent(&g, &c.phi1, &c.phi2).unwrap();
        assert!(r.contained.iter().all(|&b| !b));
        assert_eq!(r.contained.len(), 4);
    }

    #[test]
    fn cyclic_reroute() {
        let g = build_group(&GroupKind::Cyclic(2)).unwrap();
        let c = construct_self_compression(&g, 3, 8).unwrap();
        assert!(c.all_checks_pass());
        assert_eq!(c.descent_degree, 3);
        // the cyclic-only map (x2^3, x1^3), i.e. z ↦ z^-3
        let f = g.field();
        let p = Form::from_ints(f, 2, 3, &[0, 0, 0, 1]).unwrap();
        let q = Form::from_ints(f, 2, 3, &[1, 0, 0, 0]).unwrap();
        let r = verify_equivariance(g.elements(), &p, &q, EquivarianceMode::Linear).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn infeasible_degree() {
        let g = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        assert_eq!(construct_self_compression(&g, 6, 8).unwrap_err(), Error::InfeasibleDegree { d: 6 });
        let c = construct_self_compression(&g, 5, 8).unwrap();
        assert!(c.all_checks_pass());
    }

    #[test]
    fn equivariance_modes() {
        let g = build_group(&GroupKind::BinaryDihedral(2)).unwrap();
        let f = g.field();
        let x = Form::var(f, 2, 0);
        let y = Form::var(f, 2, 1);
        assert!(verify_equivariance(g.elements(), &x, &y, EquivarianceMode::Linear).unwrap().passed);
        let a = Form::from_ints(f, 2, 3, &[1, 0, 0, 0]).unwrap();
        let b = Form::from_ints(f, 2, 3, &[0, 0, 0, 1]).unwrap();
        let lin = verify_equivariance(g.elements(), &a, &b, EquivarianceMode::Linear).unwrap();
        assert!(!lin.passed);
        let i = CycNum::zeta(f);
        assert_eq!(g.element(lin.first_failure.unwrap()), &Matrix::diagonal(f, &[i.clone(), -&i]));
        assert!(verify_equivariance(g.elements(), &a, &b, EquivarianceMode::Projective).unwrap().passed);
        assert_eq!(
            verify_equivariance(g.elements(), &a, &x, EquivarianceMode::Linear).unwrap_err(),
            Error::DegreeMismatch(3, 1)
        );
    }

    #[test]
    fn icosahedral_pair_of_degree_eleven() {
        let f = CycField::new(5);
        let (p, q) = icosa_pair(&f);
        let w = CycNum::zeta(&f);
        let c = &w + &w.inv().unwrap();
        let zero = CycNum::zero(&f);
        let one = CycNum::one(&f);
        let g1 = Moebius::new(w.clone(), zero.clone(), zero.clone(), one.clone()).unwrap();
        let g2 = Moebius::new(c.clone(), one.clone(), one.clone(), -&c).unwrap();
        let mats = [g1.matrix(), g2.matrix()];
        let r = verify_equivariance(&mats, &p, &q, EquivarianceMode::Projective).unwrap();
        assert!(r.passed);
        assert_eq!(form_gcd(&p, &q).unwrap().degree(), 0);
        let fe = verify_functional_equation(&p.dehomogenize(), &q.dehomogenize(), &[g1, g2]).unwrap();
        assert!(fe.all_passed());
        assert_eq!(fe.degree, 11);
    }

    #[test]
    fn functional_equation_examples() {
        let f = CycField::new(1);
        let id = Moebius::new(CycNum::one(&f), CycNum::zero(&f), CycNum::zero(&f), CycNum::one(&f)).unwrap();
        let neg = Moebius::new(CycNum::from_int(&f, -1), CycNum::zero(&f), CycNum::zero(&f), CycNum::one(&f)).unwrap();
        let one = UniPoly::from_ints(&f, &[1]);
        let cube = UniPoly::from_ints(&f, &[0, 0, 0, 1]);
        let r = verify_functional_equation(&cube, &one, &[id.clone(), neg.clone()]).unwrap();
        assert!(r.all_passed() && r.degree == 3 && r.nontrivial);
        let shift = UniPoly::from_ints(&f, &[1, 1]);
        let r = verify_functional_equation(&shift, &one, &[id, neg.clone()]).unwrap();
        assert_eq!(r.passed, vec![true, false]);
        assert_eq!(
            verify_functional_equation(&shift, &UniPoly::zero(&f), &[neg]).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn trivial_descent_detected() {
        let g = build_group(&GroupKind::BinaryDihedral(2)).unwrap();
        let f = g.field();
        let a = Form::from_ints(f, 2, 3, &[0, 1, 0, 0]).unwrap();
        let b = Form::from_ints(f, 2, 3, &[0, 0, 1, 0]).unwrap();
        let r = verify_descent(&g, &a, &b).unwrap();
        assert_eq!(r.gcd_degree, 2);
        assert!(!r.nontrivial);
        assert!(r.criteria_agree);
        assert_eq!(verify_descent(&g, &a, &Form::zero(f, 2, 3)).unwrap_err(), Error::ZeroForm);
    }

    #[test]
    fn invariant_forms() {
        let trivial = tn_group(1, &[]).unwrap();
        let x = invariant_form(&trivial, 1).unwrap().unwrap();
        assert_eq!(x.form, Form::var(trivial.field(), 1, 0));
        let sign = tn_group(1, &[2]).unwrap();
        assert!(invariant_form(&sign, 1).unwrap().is_none());
        let sq = invariant_form(&sign, 2).unwrap().unwrap().form;
        assert_eq!(sq, Form::from_ints(sign.field(), 1, 2, &[1]).unwrap());
        let m = linear_self_compression(&sign, &sq).unwrap();
        assert!(m.equivariant);
        assert_eq!(m.components[0], Form::from_ints(sign.field(), 1, 3, &[1]).unwrap());
        assert_eq!(
            linear_self_compression(&sign, &Form::var(sign.field(), 1, 0)).unwrap_err(),
            Error::NotInvariant
        );

        let t22 = tn_group(2, &[2, 2]).unwrap();
        let f = Form::from_ints(t22.field(), 2, 4, &[0, 0, 1, 0, 0]).unwrap();
        let m = linear_self_compression(&t22, &f).unwrap();
        assert!(m.equivariant);
        let a = point_off_zero_set(&f).unwrap();
        assert_eq!(line_degree(&m, &a), Some(5));
        let orbit = orbit_product_invariant(&t22, 4).unwrap().unwrap();
        assert!(is_invariant(&t22, &orbit).unwrap());
    }
}
