//! Homogeneous forms as modules over a matrix group.
//!
//! Monomials of a fixed degree are ordered degree-lex with `x1 > x2 > …`;
//! for two variables index `i` is `x1^(d-i) x2^i`.
//!
//! `f∘M` denotes substitution `f(M x)`. It is a right action
//! (`(f∘M)∘N = f∘(NM)`); the module action is `g·f = f∘M_g⁻¹`.
//!
//! Group averages are factored through the subgroup `H` of diagonal
//! elements: on monomials `H` acts by scalars, so its projector keeps a
//! subset of the monomial basis, and the full average is a sum over right
//! coset representatives of `H` applied to that subset.

use alloc::{collections::BTreeMap, format, string::String, sync::Arc, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::groups::{LinearCharacter, Mat, MatrixGroup};
use crate::linalg::{row_basis, Matrix};
use crate::poly::{MPoly, UniPoly};
use crate::scalars::{CycField, CycNum};

/// Exponent vectors of degree `d` in `n` variables, degree-lex descending.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> usize {
    // binomial(d + n - 1, n - 1)
    let mut c: u128 = 1;
    for i in 0..n.saturating_sub(1) as u128 {
        c = c * (d as u128 + 1 + i) / (i + 1);
    }
    if n == 0 {
        return usize::from(d == 0);
    }
    c as usize
}

fn monomial_index_map(n: usize, d: u32) -> BTreeMap<Vec<u32>, usize> {
    monomials(n, d)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    field: Arc<CycField>,
    nvars: usize,
    degree: u32,
    coeffs: Vec<CycNum>,
}

impl Form {
    pub fn new(field: &Arc<CycField>, nvars: usize, degree: u32, coeffs: Vec<CycNum>) -> Result<Form> {
        let expected = monomial_count(nvars, degree);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch(coeffs.len(), expected));
        }
        if let Some(c) = coeffs.iter().find(|c| c.conductor() != field.conductor()) {
            return Err(Error::ConductorMismatch {
                left: field.conductor(),
                right: c.conductor(),
            });
        }
        Ok(Form {
            field: field.clone(),
            nvars,
            degree,
            coeffs,
        })
    }

    pub fn zero(field: &Arc<CycField>, nvars: usize, degree: u32) -> Form {
        Form {
            field: field.clone(),
            nvars,
            degree,
            coeffs: vec![CycNum::zero(field); monomial_count(nvars, degree)],
        }
    }

    /// Binary form from small integer coefficients in degree-lex order.
    pub fn from_ints(field: &Arc<CycField>, nvars: usize, degree: u32, coeffs: &[i64]) -> Result<Form> {
        Form::new(
            field,
            nvars,
            degree,
            coeffs.iter().map(|&c| CycNum::from_int(field, c)).collect(),
        )
    }

    pub fn monomial(field: &Arc<CycField>, exps: &[u32], c: CycNum) -> Form {
        let d = exps.iter().sum();
        let mut f = Form::zero(field, exps.len(), d);
        let i = f.index_of(exps);
        f.coeffs[i] = c;
        f
    }

    /// The coordinate form `x_i`.
    pub fn var(field: &Arc<CycField>, nvars: usize, i: usize) -> Form {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Form::monomial(field, &e, CycNum::one(field))
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    /// Position of a monomial in the coefficient vector.
    pub fn index_of(&self, exps: &[u32]) -> usize {
        debug_assert_eq!(exps.iter().sum::<u32>(), self.degree);
        if self.nvars == 2 {
            return exps[1] as usize;
        }
        // count monomials preceding `exps` in degree-lex order
        let mut idx = 0;
        let mut rem = self.degree;
        for (k, &e) in exps.iter().enumerate().take(self.nvars.saturating_sub(1)) {
            for bigger in e + 1..=rem {
                idx += monomial_count(self.nvars - k - 1, rem - bigger);
            }
            rem -= e;
        }
        idx
    }

    pub fn coeff(&self, exps: &[u32]) -> &CycNum {
        &self.coeffs[self.index_of(exps)]
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &CycNum)> {
        monomials(self.nvars, self.degree)
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
    }

    fn check_shape(&self, other: &Form) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(self.nvars, other.nvars));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Form { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.check_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Form { coeffs, ..self.clone() })
    }

    pub fn scale(&self, s: &CycNum) -> Form {
        Form {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Form) -> Form {
        assert_eq!(self.nvars, other.nvars);
        let degree = self.degree + other.degree;
        let mut out = Form::zero(&self.field, self.nvars, degree);
        if self.nvars == 2 {
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.coeffs.iter().enumerate() {
                    if !b.is_zero() {
                        out.coeffs[i + j].add_mul(a, b);
                    }
                }
            }
            return out;
        }
        let index = monomial_index_map(self.nvars, degree);
        for (ea, a) in self.terms() {
            for (eb, b) in other.terms() {
                let e: Vec<u32> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
                out.coeffs[index[&e]].add_mul(a, b);
            }
        }
        out
    }

    /// `f(M x)`.
    pub fn substitute(&self, m: &Mat) -> Result<Form> {
        if m.field().conductor() != self.field.conductor() {
            return Err(Error::ConductorMismatch {
                left: self.field.conductor(),
                right: m.field().conductor(),
            });
        }
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::DimensionMismatch(m.rows(), self.nvars));
        }
        Ok(LinearSubstitution::new(m, self.degree).apply(self))
    }

    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero(&self.field);
        for (e, c) in self.terms() {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e) {
                for _ in 0..k {
                    t = &t * x;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Partial derivative; the derivative of a constant is the zero form of degree 0.
    pub fn derivative(&self, var: usize) -> Form {
        if self.degree == 0 {
            return Form::zero(&self.field, self.nvars, 0);
        }
        let mut out = Form::zero(&self.field, self.nvars, self.degree - 1);
        for (mut e, c) in self.terms() {
            if e[var] == 0 {
                continue;
            }
            let k = CycNum::from_int(&self.field, e[var] as i64);
            e[var] -= 1;
            let i = out.index_of(&e);
            out.coeffs[i] = c * &k;
        }
        out
    }

    /// Multiplies by `x_var`.
    pub fn mul_var(&self, var: usize) -> Form {
        self.mul(&Form::var(&self.field, self.nvars, var))
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars,
            self.terms()
                .map(|(e, c)| (e.iter().map(|&k| k as i32).collect(), c.clone())),
        )
    }

    /// Largest power of the last variable dividing a binary form.
    fn x2_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `f(z, 1)` for a binary form, as a polynomial in `z`.
    pub fn dehomogenize(&self) -> UniPoly {
        assert_eq!(self.nvars, 2);
        let d = self.degree as usize;
        UniPoly::new(
            &self.field,
            (0..=d).map(|k| self.coeffs[d - k].clone()).collect(),
        )
    }

    /// `y^d p(x/y)`; `p` must have degree at most `d`.
    pub fn homogenize(p: &UniPoly, d: u32) -> Form {
        let mut f = Form::zero(p.field(), 2, d);
        for (k, c) in p.coeffs().iter().enumerate() {
            f.coeffs[d as usize - k] = c.clone();
        }
        f
    }

    /// Exact quotient `self / other` of binary forms, if it exists.
    pub fn divide(&self, other: &Form) -> Option<Form> {
        assert_eq!(self.nvars, 2);
        if other.is_zero() || other.degree > self.degree {
            return None;
        }
        if self.is_zero() {
            return Some(Form::zero(&self.field, 2, self.degree - other.degree));
        }
        let vs = self.x2_valuation()?;
        let vo = other.x2_valuation()?;
        if vs < vo {
            return None;
        }
        let (q, r) = self.dehomogenize().divrem(&other.dehomogenize()).ok()?;
        if !r.is_zero() {
            return None;
        }
        Some(Form::homogenize(&q, self.degree - other.degree))
    }

    /// Leading coefficient in degree-lex order.
    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Cached powers of the linear forms `L_i = Σ_j M_ij x_j`.
pub struct LinearSubstitution {
    matrix: Mat,
    diagonal: bool,
    powers: Vec<Vec<Form>>,
}

impl LinearSubstitution {
    pub fn new(m: &Mat, max_degree: u32) -> LinearSubstitution {
        let n = m.rows();
        let field = m.field();
        let diagonal = m.is_diagonal();
        let powers = if diagonal {
            Vec::new()
        } else {
            (0..n)
                .map(|i| {
                    let lin = Form::new(field, n, 1, m.row(i).to_vec()).expect("row of a square matrix");
                    let mut p = vec![Form::monomial(field, &vec![0; n], CycNum::one(field))];
                    for k in 1..=max_degree as usize {
                        let next = p[k - 1].mul(&lin);
                        p.push(next);
                    }
                    p
                })
                .collect()
        };
        LinearSubstitution {
            matrix: m.clone(),
            diagonal,
            powers,
        }
    }

    /// `f(M x)`.
    pub fn apply(&self, f: &Form) -> Form {
        let field = &f.field;
        let n = f.nvars;
        if self.diagonal {
            let diag: Vec<&CycNum> = (0..n).map(|i| self.matrix.get(i, i)).collect();
            let coeffs = monomials(n, f.degree)
                .iter()
                .zip(&f.coeffs)
                .map(|(e, c)| {
                    if c.is_zero() {
                        return c.clone();
                    }
                    let mut t = c.clone();
                    for (x, &k) in diag.iter().zip(e) {
                        if k > 0 {
                            t = &t * &x.pow(k as i64).expect("invertible diagonal");
                        }
                    }
                    t
                })
                .collect();
            return Form { coeffs, ..f.clone() };
        }
        if n == 2 {
            // r_k = c_k L1^(d-k) + L2 r_(k+1)
            let d = f.degree as usize;
            let mut r = Form::monomial(field, &[0, 0], f.coeffs[d].clone());
            for k in (0..d).rev() {
                let mut next = r.mul(&self.powers[1][1]);
                if !f.coeffs[k].is_zero() {
                    let t = self.powers[0][d - k].scale(&f.coeffs[k]);
                    next = next.add(&t).expect("same degree");
                }
                r = next;
            }
            return r;
        }
        let mut out = Form::zero(field, n, f.degree);
        for (e, c) in f.terms() {
            out = out.add(&self.monomial_image(&e).scale(c)).expect("same degree");
        }
        out
    }

    /// `m(M x)` for the monomial with exponents `e`.
    pub fn monomial_image(&self, e: &[u32]) -> Form {
        let field = self.matrix.field();
        let n = e.len();
        if self.diagonal {
            let mut t = CycNum::one(field);
            for (i, &k) in e.iter().enumerate() {
                t = &t * &self.matrix.get(i, i).pow(k as i64).expect("invertible diagonal");
            }
            return Form::monomial(field, e, t);
        }
        let mut acc = Form::monomial(field, &vec![0; n], CycNum::one(field));
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                acc = acc.mul(&self.powers[i][k as usize]);
            }
        }
        acc
    }
}

/// Matrix of `f ↦ f∘g⁻¹` on the monomial basis of degree `d`.
pub fn action_matrix(g: &Mat, d: u32) -> Result<Matrix> {
    let n = g.rows();
    let ginv = g.inverse()?;
    let sub = LinearSubstitution::new(&ginv, d);
    let basis = monomials(n, d);
    let mut m = Matrix::zeros(g.field(), basis.len(), basis.len());
    for (j, e) in basis.iter().enumerate() {
        let img = sub.monomial_image(e);
        for (i, c) in img.coeffs.iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

/// `ψ_d(g) = tr(g | A_d)` for every element and every `d ≤ max_d`,
/// indexed `[g][d]`. For 2×2 groups this uses the recurrence
/// `ψ_d = tr(M⁻¹) ψ_(d-1) − det(M⁻¹) ψ_(d-2)`.
pub fn action_traces(group: &MatrixGroup, max_d: u32) -> Result<Vec<Vec<CycNum>>> {
    let field = group.field();
    (0..group.order())
        .map(|gi| {
            let g = group.element(gi);
            if group.dim() == 2 {
                let inv = group.element(group.inverse_index(gi));
                let e1 = inv.trace();
                let e2 = inv.det()?;
                let mut psi = vec![CycNum::one(field)];
                if max_d >= 1 {
                    psi.push(e1.clone());
                }
                for d in 2..=max_d as usize {
                    let next = &(&e1 * &psi[d - 1]) - &(&e2 * &psi[d - 2]);
                    psi.push(next);
                }
                Ok(psi)
            } else {
                (0..=max_d).map(|d| Ok(action_matrix(g, d)?.trace())).collect()
            }
        })
        .collect()
}

fn average_to_integer(sum: CycNum, order: usize) -> i64 {
    let v = &sum / &CycNum::from_int(sum.field(), order as i64);
    v.to_integer().expect("character inner product is an integer")
}

/// `⟨χ, χ⟩ = 1` for the defining character.
pub fn chi_is_irreducible(group: &MatrixGroup) -> bool {
    let traces = group.traces();
    let mut s = CycNum::zero(group.field());
    for (gi, t) in traces.iter().enumerate() {
        s.add_mul(t, &traces[group.inverse_index(gi)]);
    }
    average_to_integer(s, group.order()) == 1
}

/// Multiplicities of `χ` in `A_d` for `d = 0..=max_d`.
pub fn multiplicities_chi(group: &MatrixGroup, max_d: u32) -> Result<Vec<usize>> {
    if !chi_is_irreducible(group) {
        return Err(Error::ReducibleChi);
    }
    let psi = action_traces(group, max_d)?;
    Ok((0..=max_d as usize)
        .map(|d| {
            let mut s = CycNum::zero(group.field());
            for row in &psi {
                // χ(g⁻¹) = tr(M_g⁻¹) = ψ_1(g)
                s.add_mul(&row[d], &row[1]);
            }
            average_to_integer(s, group.order()) as usize
        })
        .collect())
}

/// `mult_χ(A_d)`.
pub fn multiplicity_chi(group: &MatrixGroup, d: u32) -> Result<usize> {
    Ok(multiplicities_chi(group, d.max(1))?[d as usize])
}

/// `dim A(γ)_d` for `d = 0..=max_d` by the character inner product.
pub fn isotypic_dims(group: &MatrixGroup, gamma: &LinearCharacter, max_d: u32) -> Result<Vec<usize>> {
    let psi = action_traces(group, max_d)?;
    let conj: Vec<CycNum> = gamma.values().iter().map(CycNum::inv_conj).collect();
    Ok((0..=max_d as usize)
        .map(|d| {
            let mut s = CycNum::zero(group.field());
            for (row, c) in psi.iter().zip(&conj) {
                s.add_mul(&row[d], c);
            }
            average_to_integer(s, group.order()) as usize
        })
        .collect())
}

struct CosetData {
    diagonal: Vec<usize>,
    reps: Vec<usize>,
}

fn coset_data(group: &MatrixGroup) -> CosetData {
    let diagonal = group.diagonal_subgroup();
    let reps = group.right_coset_reps(&diagonal);
    CosetData { diagonal, reps }
}

/// `Π λ_i^{e_i}` for a diagonal matrix.
fn diagonal_eigenvalue(m: &Mat, e: &[u32]) -> CycNum {
    let mut t = CycNum::one(m.field());
    for (i, &k) in e.iter().enumerate() {
        if k > 0 {
            t = &t * &m.get(i, i).pow(k as i64).expect("invertible");
        }
    }
    t
}

/// Basis (reduced echelon) of `A(γ)_d = {f : g·f = γ(g) f}`, the image of
/// `P_γ = |G|⁻¹ Σ_g γ(g) (f ↦ f∘M_g)`. `None` means the trivial character.
pub fn isotypic_basis(group: &MatrixGroup, gamma: Option<&LinearCharacter>, d: u32) -> Vec<Form> {
    let field = group.field();
    let n = group.dim();
    let cd = coset_data(group);
    let gamma_val = |i: usize| match gamma {
        Some(g) => g.value(i).clone(),
        None => CycNum::one(field),
    };
    // f∘M_h = γ(h)⁻¹ f on the H-part of the image
    let targets: Vec<(usize, CycNum)> = cd
        .diagonal
        .iter()
        .map(|&h| (h, gamma_val(h).inv().expect("root of unity")))
        .collect();
    let basis = monomials(n, d);
    let kept: Vec<&Vec<u32>> = basis
        .iter()
        .filter(|e| {
            targets
                .iter()
                .all(|(h, t)| diagonal_eigenvalue(group.element(*h), e) == *t)
        })
        .collect();
    if kept.is_empty() {
        return Vec::new();
    }
    let subs: Vec<(CycNum, LinearSubstitution)> = cd
        .reps
        .iter()
        .map(|&c| (gamma_val(c), LinearSubstitution::new(group.element(c), d)))
        .collect();
    let images: Vec<Vec<CycNum>> = kept
        .iter()
        .map(|e| {
            let mut acc = Form::zero(field, n, d);
            for (w, s) in &subs {
                let img = s.monomial_image(e).scale(w);
                acc = acc.add(&img).expect("same degree");
            }
            acc.coeffs
        })
        .collect();
    row_basis(field, basis.len(), &images)
        .into_iter()
        .map(|coeffs| Form {
            field: field.clone(),
            nvars: n,
            degree: d,
            coeffs,
        })
        .collect()
}

/// `(dim A(γ)_d, basis)`.
pub fn isotypic_dim_and_basis(
    group: &MatrixGroup,
    gamma: &LinearCharacter,
    d: u32,
) -> (usize, Vec<Form>) {
    let b = isotypic_basis(group, Some(gamma), d);
    (b.len(), b)
}

/// An `n`-tuple of degree-`d` forms defining a homogeneous map.
pub type FormMap = Vec<Form>;

/// Basis of the equivariant maps `A_1 → A_d`, i.e. tuples `φ` with
/// `φ(Mv) = Mφ(v)` for all group elements, as the image of the average of
/// `φ ↦ M⁻¹ φ(M x)`.
pub fn equivariant_basis(group: &MatrixGroup, d: u32) -> Result<Vec<FormMap>> {
    let field = group.field();
    let n = group.dim();
    let cd = coset_data(group);
    let basis = monomials(n, d);
    let len = basis.len();
    // unit vectors (component j, monomial e) fixed by the diagonal subgroup
    let mut kept = Vec::new();
    for j in 0..n {
        for (k, e) in basis.iter().enumerate() {
            let fixed = cd.diagonal.iter().all(|&h| {
                let m = group.element(h);
                let lambda = m.get(j, j);
                diagonal_eigenvalue(m, e) == *lambda
            });
            if fixed {
                kept.push((j, k));
            }
        }
    }
    if kept.is_empty() {
        return Ok(Vec::new());
    }
    let subs: Vec<(Mat, LinearSubstitution)> = cd
        .reps
        .iter()
        .map(|&c| {
            let m = group.element(c);
            Ok((m.inverse()?, LinearSubstitution::new(m, d)))
        })
        .collect::<Result<_>>()?;
    let images: Vec<Vec<CycNum>> = kept
        .iter()
        .map(|&(j, k)| {
            let mut acc = vec![CycNum::zero(field); n * len];
            for (minv, s) in &subs {
                let img = s.monomial_image(&basis[k]);
                for i in 0..n {
                    let w = minv.get(i, j);
                    if w.is_zero() {
                        continue;
                    }
                    for (t, c) in img.coeffs.iter().enumerate() {
                        if !c.is_zero() {
                            acc[i * len + t].add_mul(w, c);
                        }
                    }
                }
            }
            acc
        })
        .collect();
    Ok(row_basis(field, n * len, &images)
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|i| Form {
                    field: field.clone(),
                    nvars: n,
                    degree: d,
                    coeffs: v[i * len..(i + 1) * len].to_vec(),
                })
                .collect()
        })
        .collect())
}

/// `Σ_j M_ij φ_j` for each `i`.
pub fn apply_matrix_to_map(m: &Mat, phi: &[Form]) -> Result<FormMap> {
    (0..m.rows())
        .map(|i| {
            let mut acc = Form::zero(phi[0].field(), phi[0].nvars(), phi[0].degree());
            for (j, f) in phi.iter().enumerate() {
                acc = acc.add(&f.scale(m.get(i, j)))?;
            }
            Ok(acc)
        })
        .collect()
}

/// First element index `g` with `φ(M_g x) ≠ M_g φ(x)`, if any.
pub fn first_equivariance_failure(group: &MatrixGroup, phi: &[Form]) -> Result<Option<usize>> {
    for gi in 0..group.order() {
        let m = group.element(gi);
        let lhs: FormMap = phi.iter().map(|f| f.substitute(m)).collect::<Result<_>>()?;
        if lhs != apply_matrix_to_map(m, phi)? {
            return Ok(Some(gi));
        }
    }
    Ok(None)
}

/// Monic gcd of two binary forms (leading degree-lex coefficient 1).
pub fn form_gcd(f: &Form, g: &Form) -> Result<Form> {
    if f.nvars != 2 || g.nvars != 2 {
        return Err(Error::InvalidInput(String::from("gcd needs binary forms")));
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) => return Ok(normalize(g)),
        (false, true) => return Ok(normalize(f)),
        _ => {}
    }
    let vf = f.x2_valuation().expect("nonzero");
    let vg = g.x2_valuation().expect("nonzero");
    // dehomogenizing at x2 = 1 drops exactly the x2-power
    let h = f.dehomogenize().gcd(&g.dehomogenize())?;
    let dh = h.degree().expect("nonzero gcd") as u32;
    let k = vf.min(vg) as u32;
    let x2k = Form::monomial(&f.field, &[0, k], CycNum::one(&f.field));
    Ok(Form::homogenize(&h, dh).mul(&x2k))
}

fn normalize(f: &Form) -> Form {
    let lead = f.leading().expect("nonzero").inv().expect("nonzero");
    f.scale(&lead)
}

/// The Jacobian determinant `∂(φ1, φ2)/∂(x1, x2)`.
pub fn jacobian(phi1: &Form, phi2: &Form) -> Form {
    let a = phi1.derivative(0).mul(&phi2.derivative(1));
    let b = phi1.derivative(1).mul(&phi2.derivative(0));
    a.sub(&b).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, chi_stabilizer_characters, linear_characters, GroupKind};

    fn q8() -> MatrixGroup {
        build_group(&GroupKind::BinaryDihedral(2)).unwrap()
    }

    fn mat(f: &Arc<CycField>, e: [[i64; 2]; 2]) -> Mat {
        Matrix::from_rows(
            f,
            e.iter()
                .map(|r| r.iter().map(|&x| CycNum::from_int(f, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let m3 = monomials(3, 2);
        assert_eq!(m3.len(), 6);
        assert_eq!(m3[0], vec![2, 0, 0]);
        assert_eq!(m3[5], vec![0, 0, 2]);
        let f = Form::zero(&CycField::new(1), 3, 4);
        for (i, e) in monomials(3, 4).iter().enumerate() {
            assert_eq!(f.index_of(e), i);
        }
    }

    #[test]
    fn substitution_examples() {
        let f1 = CycField::new(4);
        let f = Form::from_ints(&f1, 2, 3, &[0, 1, 0, 0]).unwrap(); // x1^2 x2
        assert_eq!(f.substitute(&Matrix::identity(&f1, 2)).unwrap(), f);
        let t = CycNum::zeta(&f1);
        let tt = Matrix::diagonal(&f1, &[t.clone(), t.clone()]);
        assert_eq!(f.substitute(&tt).unwrap(), f.scale(&t.pow(3).unwrap()));
        let s = mat(&f1, [[0, 1], [-1, 0]]);
        assert_eq!(
            f.substitute(&s).unwrap(),
            Form::from_ints(&f1, 2, 3, &[0, 0, -1, 0]).unwrap()
        );
    }

    #[test]
    fn substitution_matches_generic_expansion() {
        let f1 = CycField::new(12);
        let z = CycNum::zeta(&f1);
        let m = Matrix::from_rows(
            &f1,
            vec![vec![z.clone(), CycNum::from_int(&f1, 2)], vec![-&z, &z * &z]],
        )
        .unwrap();
        let f = Form::from_ints(&f1, 2, 5, &[1, -2, 0, 3, 0, 7]).unwrap();
        let fast = f.substitute(&m).unwrap();
        let sub = LinearSubstitution::new(&m, 5);
        let mut slow = Form::zero(&f1, 2, 5);
        for (e, c) in f.terms() {
            slow = slow.add(&sub.monomial_image(&e).scale(c)).unwrap();
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn action_matrix_examples() {
        let g = q8();
        let f = g.field().clone();
        assert!(action_matrix(&Matrix::identity(&f, 2), 4).unwrap().is_identity());
        let minus = Matrix::identity(&f, 2).scale(&CycNum::from_int(&f, -1));
        let m = action_matrix(&minus, 3).unwrap();
        assert!(m.scale(&CycNum::from_int(&f, -1)).is_identity());
        let i = CycNum::zeta(&f);
        let d = Matrix::diagonal(&f, &[i.clone(), -&i]);
        assert!(action_matrix(&d, 3).unwrap().trace().is_zero());
    }

    #[test]
    fn action_is_a_homomorphism() {
        let g = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        for a in [1, 5, 9] {
            for b in [2, 7, 20] {
                let ab = g.element(a).mul(g.element(b));
                let lhs = action_matrix(&ab, 3).unwrap();
                let rhs = action_matrix(g.element(a), 3)
                    .unwrap()
                    .mul(&action_matrix(g.element(b), 3).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trace_recurrence_matches_matrices() {
        let g = build_group(&GroupKind::BinaryOctahedral).unwrap();
        let psi = action_traces(&g, 6).unwrap();
        for gi in [0, 3, 11, 30, 47] {
            for (d, tr) in psi[gi].iter().enumerate() {
                assert_eq!(*tr, action_matrix(g.element(gi), d as u32).unwrap().trace());
            }
        }
    }

    #[test]
    fn multiplicities() {
        let t = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        assert_eq!(multiplicity_chi(&t, 5).unwrap(), 1);
        assert_eq!(multiplicity_chi(&t, 1).unwrap(), 1);
        assert_eq!(multiplicity_chi(&t, 2).unwrap(), 0);
        assert_eq!(multiplicity_chi(&q8(), 3).unwrap(), 2);
        let c = build_group(&GroupKind::Cyclic(3)).unwrap();
        assert_eq!(multiplicity_chi(&c, 3), Err(Error::ReducibleChi));
    }

    #[test]
    fn equivariant_bases() {
        let t = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        let b1 = equivariant_basis(&t, 1).unwrap();
        assert_eq!(b1.len(), 1);
        let f = t.field();
        assert_eq!(b1[0], vec![Form::var(f, 2, 0), Form::var(f, 2, 1)]);
        assert!(equivariant_basis(&t, 2).unwrap().is_empty());

        let g = q8();
        let b3 = equivariant_basis(&g, 3).unwrap();
        assert_eq!(b3.len(), 2);
        let f = g.field();
        let target = vec![
            Form::from_ints(f, 2, 3, &[0, 0, 0, 1]).unwrap(),
            Form::from_ints(f, 2, 3, &[-1, 0, 0, 0]).unwrap(),
        ];
        assert_eq!(first_equivariance_failure(&g, &target).unwrap(), None);
        // target lies in the span of the basis
        let vecs: Vec<Vec<CycNum>> = b3
            .iter()
            .chain(core::iter::once(&target))
            .map(|m| m.iter().flat_map(|f| f.coeffs().to_vec()).collect())
            .collect();
        assert_eq!(crate::linalg::span_rank(f, 8, &vecs), 2);
        for m in &b3 {
            assert_eq!(first_equivariance_failure(&g, m).unwrap(), None);
        }
    }

    #[test]
    fn equivariant_rank_matches_multiplicity() {
        for k in [
            GroupKind::BinaryDihedral(3),
            GroupKind::BinaryTetrahedral,
            GroupKind::BinaryOctahedral,
            GroupKind::BinaryIcosahedral,
        ] {
            let g = build_group(&k).unwrap();
            let mult = multiplicities_chi(&g, 13).unwrap();
            for d in 1..=13 {
                assert_eq!(equivariant_basis(&g, d).unwrap().len(), mult[d as usize], "{k:?} {d}");
            }
        }
    }

    #[test]
    fn isotypic_examples() {
        let g = q8();
        let one = crate::groups::LinearCharacter::trivial(&g);
        let (dim, basis) = isotypic_dim_and_basis(&g, &one, 4);
        assert_eq!(dim, 2);
        let f = g.field();
        let expected = [
            Form::from_ints(f, 2, 4, &[1, 0, 0, 0, 1]).unwrap(),
            Form::from_ints(f, 2, 4, &[0, 0, 1, 0, 0]).unwrap(),
        ];
        let vecs: Vec<Vec<CycNum>> = basis
            .iter()
            .chain(expected.iter())
            .map(|f| f.coeffs().to_vec())
            .collect();
        assert_eq!(crate::linalg::span_rank(f, 5, &vecs), 2);

        let t = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        let one_t = crate::groups::LinearCharacter::trivial(&t);
        assert_eq!(isotypic_dim_and_basis(&t, &one_t, 4).0, 0);
        assert_eq!(isotypic_dim_and_basis(&t, &one_t, 0).0, 1);
    }

    #[test]
    fn isotypic_dims_agree_with_projector() {
        for k in [GroupKind::BinaryDihedral(2), GroupKind::BinaryTetrahedral, GroupKind::BinaryDihedral(3)] {
            let g = build_group(&k).unwrap();
            for gamma in linear_characters(&g).unwrap() {
                let dims = isotypic_dims(&g, &gamma, 12).unwrap();
                for d in 0..=12u32 {
                    let b = isotypic_basis(&g, Some(&gamma), d);
                    assert_eq!(b.len(), dims[d as usize], "{k:?} d={d}");
                    for f in &b {
                        for gi in 0..g.order() {
                            // f∘M_g = γ(g)⁻¹ f
                            let lhs = f.substitute(g.element(gi)).unwrap();
                            assert_eq!(lhs, f.scale(&gamma.value(gi).inv().unwrap()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_parts_fit() {
        let g = q8();
        let chars = linear_characters(&g).unwrap();
        for d in 0..=40u32 {
            let total: usize = chars
                .iter()
                .map(|c| isotypic_dims(&g, c, d).unwrap()[d as usize])
                .sum();
            assert!(total <= d as usize + 1);
        }
        assert_eq!(chi_stabilizer_characters(&g).unwrap().len(), 4);
    }

    #[test]
    fn gcd_examples() {
        let f = CycField::new(1);
        let a = Form::from_ints(&f, 2, 3, &[0, 1, 0, 0]).unwrap();
        let b = Form::from_ints(&f, 2, 3, &[0, 0, 1, 0]).unwrap();
        assert_eq!(form_gcd(&a, &b).unwrap(), Form::from_ints(&f, 2, 2, &[0, 1, 0]).unwrap());
        let a = Form::from_ints(&f, 2, 2, &[1, 0, -1]).unwrap();
        let b = Form::from_ints(&f, 2, 1, &[1, -1]).unwrap();
        assert_eq!(form_gcd(&a, &b).unwrap(), b);
        // x1*x2^5 and x2^6 share x2^5
        let a = Form::from_ints(&f, 2, 6, &[0, 0, 0, 0, 0, 1, 0]).unwrap();
        let b = Form::from_ints(&f, 2, 6, &[0, 0, 0, 0, 0, 0, 1]).unwrap();
        let g = form_gcd(&a, &b).unwrap();
        assert_eq!(g, Form::from_ints(&f, 2, 5, &[0, 0, 0, 0, 0, 1]).unwrap());
        assert_eq!(a.divide(&g).unwrap(), Form::var(&f, 2, 0));
        let mut p = vec![0i64; 12];
        p[0] = 1;
        p[5] = 66;
        p[10] = -11;
        let mut q = vec![0i64; 12];
        q[1] = -11;
        q[6] = -66;
        q[11] = 1;
        let p = Form::from_ints(&f, 2, 11, &p).unwrap();
        let q = Form::from_ints(&f, 2, 11, &q).unwrap();
        assert_eq!(form_gcd(&p, &q).unwrap().degree(), 0);
        assert_eq!(
            form_gcd(&Form::zero(&f, 2, 2), &Form::zero(&f, 2, 3)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn jacobian_of_identity() {
        let f = CycField::new(1);
        let j = jacobian(&Form::var(&f, 2, 0), &Form::var(&f, 2, 1));
        assert_eq!(j, Form::from_ints(&f, 2, 0, &[1]).unwrap());
    }
}
