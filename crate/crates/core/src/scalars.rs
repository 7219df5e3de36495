//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(φ(n)-1)` reduced
//! modulo the cyclotomic polynomial `Φ_n`, with integer numerators over a
//! single positive common denominator. The representation is canonical:
//! the content of the numerators is coprime to the denominator, so two
//! elements of the same conductor are equal iff their fields are equal.

use alloc::{sync::Arc, vec, vec::Vec};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn totient(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact quotient of integer polynomials (constant term first) by a monic divisor.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The cyclotomic polynomial `Φ_n`, constant term first.
///
/// Obtained by dividing `x^n - 1` by every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_poly needs n >= 1");
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut table: Vec<(u32, Vec<BigInt>)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        for (e, phi_e) in &table {
            if d % e == 0 {
                p = div_exact_monic(&p, phi_e);
            }
        }
        table.push((d, p));
    }
    table.pop().map(|(_, p)| p).unwrap_or_default()
}

/// A cyclotomic field `Q(ζ_n)` together with its reduction data.
#[derive(Debug)]
pub struct CycField {
    n: u32,
    phi: usize,
    // Φ_n, constant term first; monic of degree `phi`.
    modulus: Vec<i64>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &CycField) -> bool {
        self.n == other.n
    }
}

impl Eq for CycField {}

impl CycField {
    pub fn new(n: u32) -> Arc<CycField> {
        let modulus = cyclotomic_poly(n)
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient out of range"))
            .collect::<Vec<_>>();
        Arc::new(CycField {
            n,
            phi: modulus.len() - 1,
            modulus,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Reduce an integer polynomial in `ζ` modulo `Φ_n`.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        if v.len() > phi {
            for i in (phi..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let c = core::mem::take(&mut v[i]);
                for j in 0..phi {
                    let m = self.modulus[j];
                    if m != 0 {
                        v[i - phi + j] -= &c * m;
                    }
                }
            }
        }
        v.resize(phi, BigInt::zero());
        v
    }
}

/// An element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn from_parts(field: &Arc<CycField>, num: Vec<BigInt>, den: BigInt) -> CycNum {
        let mut x = CycNum {
            field: field.clone(),
            num,
            den,
        };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(field: &Arc<CycField>) -> CycNum {
        CycNum {
            field: field.clone(),
            num: vec![BigInt::zero(); field.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycField>) -> CycNum {
        CycNum::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycField>, k: i64) -> CycNum {
        let mut x = CycNum::zero(field);
        x.num[0] = BigInt::from(k);
        x
    }

    pub fn from_rational(field: &Arc<CycField>, q: &Rational) -> CycNum {
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = q.numer().clone();
        CycNum::from_parts(field, num, q.denom().clone())
    }

    /// Element `Σ coeffs[i] ζ^i`; any length is accepted and reduced mod `Φ_n`.
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[Rational]) -> CycNum {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let raw = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect::<Vec<_>>();
        CycNum::from_parts(field, field.reduce(raw), den)
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn root_of_unity(field: &Arc<CycField>, k: i64) -> CycNum {
        let n = field.n as i64;
        let e = k.rem_euclid(n) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        CycNum::from_parts(field, field.reduce(raw), BigInt::one())
    }

    pub fn zeta(field: &Arc<CycField>) -> CycNum {
        CycNum::root_of_unity(field, 1)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// Power-basis coordinates, length `φ(n)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    fn is_rational_raw(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational_raw()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<i64> {
        if self.den.is_one() && self.is_rational_raw() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    fn check(&self, other: &CycNum) -> Result<()> {
        if self.field.n == other.field.n {
            Ok(())
        } else {
            Err(Error::ConductorMismatch {
                left: self.field.n,
                right: other.field.n,
            })
        }
    }

    fn add_signed(&self, other: &CycNum, negate: bool) -> CycNum {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let den = self.den.lcm(&other.den);
            let fa = &den / &self.den;
            let fb = &den / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &fa, b * &fb);
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, den)
        };
        CycNum::from_parts(&self.field, num, den)
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        Ok(self.add_signed(other, false))
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        Ok(self.add_signed(other, true))
    }

    fn mul_unchecked(&self, other: &CycNum) -> CycNum {
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(&self.field);
        }
        let phi = self.field.phi;
        let den = &self.den * &other.den;
        if self.is_rational_raw() || other.is_rational_raw() {
            let (s, v) = if self.is_rational_raw() {
                (&self.num[0], &other.num)
            } else {
                (&other.num[0], &self.num)
            };
            let num = v.iter().map(|c| c * s).collect();
            return CycNum::from_parts(&self.field, num, den);
        }
        let mut raw = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycNum::from_parts(&self.field, self.field.reduce(raw), den)
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// the numerator polynomial and `Φ_n`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = &self.field;
        let to_q = |v: &[BigInt]| -> Vec<Rational> {
            v.iter().map(|c| Rational::from_integer(c.clone())).collect()
        };
        let mut r0 = to_q(
            &field
                .modulus
                .iter()
                .map(|&c| BigInt::from(c))
                .collect::<Vec<_>>(),
        );
        let mut r1 = to_q(&self.num);
        qpoly_trim(&mut r1);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_n is irreducible.
        let c = r1[0].clone();
        let mut coeffs: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
        // multiply back the common denominator of `self`
        let den = Rational::from_integer(self.den.clone());
        for x in &mut coeffs {
            *x *= &den;
        }
        Ok(CycNum::from_coeffs(field, &coeffs))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycNum::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// Lift into `Q(ζ_m)` via `ζ_n = ζ_m^(m/n)`.
    pub fn embed_into(&self, target: &Arc<CycField>) -> Result<CycNum> {
        let (n, m) = (self.field.n, target.n);
        if m % n != 0 {
            return Err(Error::NotADivisor { n, m });
        }
        if n == m {
            return Ok(CycNum {
                field: target.clone(),
                num: self.num.clone(),
                den: self.den.clone(),
            });
        }
        let k = (m / n) as usize;
        let mut raw = vec![BigInt::zero(); (self.num.len() - 1) * k + 1];
        for (i, c) in self.num.iter().enumerate() {
            raw[i * k] = c.clone();
        }
        Ok(CycNum::from_parts(target, target.reduce(raw), self.den.clone()))
    }

    pub fn embed(&self, m: u32) -> Result<CycNum> {
        if !m.is_multiple_of(self.field.n) {
            return Err(Error::NotADivisor {
                n: self.field.n,
                m,
            });
        }
        self.embed_into(&CycField::new(m))
    }

    /// The automorphism `ζ ↦ ζ^(-1)` (complex conjugation).
    pub fn inv_conj(&self) -> CycNum {
        let n = self.field.n as usize;
        let mut raw = vec![BigInt::zero(); n.max(1)];
        for (i, c) in self.num.iter().enumerate() {
            raw[(n - i) % n] += c;
        }
        CycNum::from_parts(&self.field, self.field.reduce(raw), self.den.clone())
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &CycNum, b: &CycNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_signed(&a.mul_unchecked(b), false);
    }
}

fn qpoly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(&mut out);
    out
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qpoly_trim(&mut out);
    out
}

fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    qpoly_trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    qpoly_trim(&mut rem);
    qpoly_trim(&mut quot);
    (quot, rem)
}

/// The four field operations, dispatched by tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(op: ArithOp, a: &CycNum, b: &CycNum) -> Result<CycNum> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .n
            .cmp(&other.field.n)
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den.cmp(&other.den))
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.field.n, self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (_, true) => {}
                (_, false) => write!(f, "{}*", mag)?,
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{}", i)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                let f: fn(&CycNum, &CycNum) -> Result<CycNum> = $body;
                f(self, rhs).expect(concat!("CycNum ", stringify!($method)))
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.checked_add(b));
forward_binop!(Sub, sub, |a, b| a.checked_sub(b));
forward_binop!(Mul, mul, |a, b| a.checked_mul(b));
forward_binop!(Div, div, |a, b| a.checked_div(b));

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in &mut self.num {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}
