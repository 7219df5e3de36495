//! Univariate polynomials and sparse multivariate (Laurent) polynomials
//! over a cyclotomic field.

use alloc::{collections::BTreeMap, sync::Arc, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::scalars::{CycField, CycNum};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Arc<CycField>,
    coeffs: Vec<CycNum>,
}

impl UniPoly {
    pub fn new(field: &Arc<CycField>, mut coeffs: Vec<CycNum>) -> UniPoly {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<CycField>) -> UniPoly {
        UniPoly::new(field, vec![])
    }

    pub fn constant(c: CycNum) -> UniPoly {
        let field = c.field().clone();
        UniPoly::new(&field, vec![c])
    }

    /// `Σ c_i z^i` from small integers.
    pub fn from_ints(field: &Arc<CycField>, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(
            field,
            coeffs.iter().map(|&c| CycNum::from_int(field, c)).collect(),
        )
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> CycNum {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::new(&self.field, v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        UniPoly::new(&self.field, v)
    }

    pub fn scale(&self, s: &CycNum) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut out = vec![CycNum::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        UniPoly::new(&self.field, out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(CycNum::one(&self.field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let inv_lead = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![CycNum::zero(&self.field); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(&self.field, quot), UniPoly::new(&self.field, rem)))
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    pub fn eval(&self, z: &CycNum) -> CycNum {
        let mut acc = CycNum::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*t^{i}")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `nvars` variables. Exponents are signed so that a
/// formal parameter may carry Laurent powers; variables that get
/// substituted must only occur with nonnegative exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Arc<CycField>,
    nvars: usize,
    terms: BTreeMap<Vec<i32>, CycNum>,
}

impl MPoly {
    pub fn zero(field: &Arc<CycField>, nvars: usize) -> MPoly {
        MPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Arc<CycField>, nvars: usize, c: CycNum) -> MPoly {
        MPoly::monomial(field, nvars, vec![0; nvars], c)
    }

    pub fn one(field: &Arc<CycField>, nvars: usize) -> MPoly {
        MPoly::constant(field, nvars, CycNum::one(field))
    }

    pub fn var(field: &Arc<CycField>, nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(field, nvars, e, CycNum::one(field))
    }

    pub fn monomial(field: &Arc<CycField>, nvars: usize, exps: Vec<i32>, c: CycNum) -> MPoly {
        assert_eq!(exps.len(), nvars);
        let mut p = MPoly::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(
        field: &Arc<CycField>,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i32>, CycNum)>,
    ) -> MPoly {
        let mut p = MPoly::zero(field, nvars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &CycNum)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> CycNum {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        assert_eq!(exps.len(), self.nvars);
        match self.terms.get_mut(&exps) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c);
        }
        p
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), &-c);
        }
        p
    }

    pub fn scale(&self, s: &CycNum) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), c * s)),
        )
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut p = MPoly::zero(&self.field, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, &(ca * cb));
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree over the first `k` variables (`None` for zero).
    pub fn degree_in(&self, k: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[..k].iter().sum()).max()
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.degree_in(self.nvars)
    }

    /// Part of total degree exactly `d` in the first `k` variables.
    pub fn homogeneous_part(&self, k: usize, d: i32) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e[..k].iter().sum::<i32>() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Drops every term of degree greater than `max` in the first `k` variables.
    pub fn truncate(&self, k: usize, max: i32) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e[..k].iter().sum::<i32>() <= max)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] != 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * &CycNum::from_int(&self.field, e[i] as i64))
            }),
        )
    }

    /// Substitutes `subs[i]` for variable `i` for every `i < subs.len()`;
    /// the remaining variables are carried through unchanged. All
    /// polynomials must have the same number of variables.
    pub fn compose(&self, subs: &[MPoly]) -> MPoly {
        let k = subs.len();
        let mut powers: Vec<Vec<MPoly>> = subs
            .iter()
            .map(|s| vec![MPoly::one(&self.field, s.nvars)])
            .collect();
        let mut out = MPoly::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            let mut rest = vec![0; self.nvars];
            rest[k..].copy_from_slice(&e[k..]);
            let mut term = MPoly::monomial(&self.field, self.nvars, rest, c.clone());
            for i in 0..k {
                assert!(e[i] >= 0, "negative exponent in a substituted variable");
                let ei = e[i] as usize;
                while powers[i].len() <= ei {
                    let next = powers[i].last().unwrap().mul(&subs[i]);
                    powers[i].push(next);
                }
                if ei > 0 {
                    term = term.mul(&powers[i][ei]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at a point with all exponents nonnegative.
    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero(&self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t = &t * &x.pow(k as i64).expect("evaluation at zero with negative power");
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes the value `v` for variable `i` and removes that variable.
    pub fn specialize(&self, i: usize, v: &CycNum) -> Result<MPoly> {
        let mut out = MPoly::zero(&self.field, self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i);
            out.add_term(e2, &(c * &v.pow(k as i64)?));
        }
        Ok(out)
    }

    /// Appends `extra` new variables (exponent zero) at the end.
    pub fn extend_vars(&self, extra: usize) -> MPoly {
        MPoly::from_terms(
            &self.field,
            self.nvars + extra,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(self.nvars + extra, 0);
                (e2, c.clone())
            }),
        )
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (v, k) in e.iter().enumerate() {
                if *k != 0 {
                    write!(f, "*x{}^{}", v + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_gcd() {
        let f = CycField::new(1);
        // (z-1)(z+2) and (z-1)(z-3)
        let a = UniPoly::from_ints(&f, &[-2, 1, 1]);
        let b = UniPoly::from_ints(&f, &[3, -4, 1]);
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::from_ints(&f, &[-1, 1]));
        assert_eq!(
            UniPoly::zero(&f).gcd(&UniPoly::zero(&f)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn divrem_reconstructs() {
        let f = CycField::new(4);
        let i = CycNum::zeta(&f);
        let a = UniPoly::new(
            &f,
            vec![i.clone(), CycNum::from_int(&f, 3), i.clone(), CycNum::one(&f)],
        );
        let b = UniPoly::new(&f, vec![CycNum::from_int(&f, 2), i.clone()]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn compose_keeps_parameter_variable() {
        let f = CycField::new(1);
        // p(x, t) = t^-1 * x ; substitute x := t*x + t^2 x^2
        let x = MPoly::var(&f, 2, 0);
        let t = MPoly::var(&f, 2, 1);
        let p = MPoly::monomial(&f, 2, vec![1, -1], CycNum::one(&f));
        let inner = t.mul(&x).add(&t.pow(2).mul(&x.pow(2)));
        let r = p.compose(&[inner]);
        let expected = x.add(&t.mul(&x.pow(2)));
        assert_eq!(r, expected);
    }
}
