//! Jordan-type invariants of finite groups given by multiplication tables.

use alloc::{collections::BTreeMap, string::String, vec, vec::Vec};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::{direct_product, GroupTable};
use crate::scalars::Rational;

/// Default bound on table order for subgroup enumeration.
pub const SUBGROUP_ORDER_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Mask(Vec<u64>);

impl Mask {
    fn new(n: usize) -> Mask {
        Mask(vec![0; n.div_ceil(64)])
    }

    fn from_bools(b: &[bool]) -> Mask {
        let mut m = Mask::new(b.len());
        for (i, _) in b.iter().enumerate().filter(|(_, &x)| x) {
            m.0[i / 64] |= 1 << (i % 64);
        }
        m
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &Mask) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    /// Sorted element indices.
    pub elements: Vec<usize>,
    /// A generating set.
    pub generators: Vec<usize>,
    pub abelian: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupList {
    pub parent: GroupTable,
    /// Sorted by order, then by elements.
    pub subgroups: Vec<Subgroup>,
    masks: Vec<Mask>,
}

fn check_cap(t: &GroupTable, cap: usize) -> Result<()> {
    if t.order() > cap {
        return Err(Error::OrderCapExceeded {
            order: t.order(),
            cap,
        });
    }
    Ok(())
}

fn commute_all(t: &GroupTable, elems: &[usize]) -> bool {
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
}

pub fn subgroups(t: &GroupTable) -> Result<SubgroupList> {
    subgroups_with_cap(t, SUBGROUP_ORDER_CAP)
}

/// All subgroups, built bottom-up: cyclic subgroups first, then joins of
/// known subgroups with cyclic ones until nothing new appears.
pub fn subgroups_with_cap(t: &GroupTable, cap: usize) -> Result<SubgroupList> {
    check_cap(t, cap)?;
    let n = t.order();
    let mut found: BTreeMap<Mask, Vec<usize>> = BTreeMap::new();
    let mut cyclic: Vec<(Mask, usize)> = Vec::new();
    for x in 0..n {
        let m = Mask::from_bools(&t.closure(&[x]));
        if !found.contains_key(&m) {
            found.insert(m.clone(), vec![x]);
            cyclic.push((m, x));
        }
    }
    let mut frontier: Vec<Mask> = found.keys().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let gens = found[h].clone();
            for (c, x) in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let mut g = gens.clone();
                g.push(*x);
                let m = Mask::from_bools(&t.closure(&g));
                if !found.contains_key(&m) {
                    found.insert(m.clone(), g);
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    let mut list: Vec<(Subgroup, Mask)> = found
        .into_iter()
        .map(|(m, generators)| {
            let elements: Vec<usize> = (0..n).filter(|&i| m.contains(i)).collect();
            let abelian = commute_all(t, &generators);
            (
                Subgroup {
                    elements,
                    generators,
                    abelian,
                },
                m,
            )
        })
        .collect();
    list.sort_by(|a, b| (a.0.order(), &a.0.elements).cmp(&(b.0.order(), &b.0.elements)));
    let (subgroups, masks) = list.into_iter().unzip();
    Ok(SubgroupList {
        parent: t.clone(),
        subgroups,
        masks,
    })
}

impl SubgroupList {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    fn normal_in(&self, s: usize, f: usize) -> bool {
        let t = &self.parent;
        let m = &self.masks[s];
        self.subgroups[f].generators.iter().all(|&g| {
            self.subgroups[s]
                .generators
                .iter()
                .all(|&x| m.contains(t.mul(t.mul(g, x), t.inv(g))))
        })
    }

    /// `(m_F, witness)` for the subgroup at index `f`.
    fn m_of_index(&self, f: usize) -> (usize, usize) {
        let fo = self.subgroups[f].order();
        (0..self.len())
            .filter(|&s| {
                self.subgroups[s].abelian
                    && self.masks[s].is_subset(&self.masks[f])
                    && self.normal_in(s, f)
            })
            .map(|s| (fo / self.subgroups[s].order(), s))
            .min()
            .expect("the trivial subgroup is normal and abelian")
    }

    fn min_abelian_index(&self, f: usize) -> usize {
        let fo = self.subgroups[f].order();
        (0..self.len())
            .filter(|&s| self.subgroups[s].abelian && self.masks[s].is_subset(&self.masks[f]))
            .map(|s| fo / self.subgroups[s].order())
            .min()
            .expect("the trivial subgroup is abelian")
    }

    fn full(&self) -> usize {
        self.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanReport {
    pub m: usize,
    pub big_j: usize,
    pub small_j: usize,
    /// A normal abelian subgroup of index `m`.
    pub witness_subgroup: Vec<usize>,
}

/// Minimal index of a normal abelian subgroup, with a witness.
pub fn m_of(t: &GroupTable) -> Result<(usize, Vec<usize>)> {
    m_of_with_cap(t, SUBGROUP_ORDER_CAP)
}

pub fn m_of_with_cap(t: &GroupTable, cap: usize) -> Result<(usize, Vec<usize>)> {
    let list = subgroups_with_cap(t, cap)?;
    let (m, w) = list.m_of_index(list.full());
    Ok((m, list.subgroups[w].elements.clone()))
}

/// `(J, j)`: the maxima over subgroups `F` of `m_F` and of the minimal
/// index of an abelian subgroup of `F`.
pub fn jordan_constants(t: &GroupTable) -> Result<(usize, usize)> {
    let r = jordan_report(t)?;
    Ok((r.big_j, r.small_j))
}

pub fn jordan_report(t: &GroupTable) -> Result<JordanReport> {
    jordan_report_with_cap(t, SUBGROUP_ORDER_CAP)
}

pub fn jordan_report_with_cap(t: &GroupTable, cap: usize) -> Result<JordanReport> {
    let list = subgroups_with_cap(t, cap)?;
    let (m, w) = list.m_of_index(list.full());
    let big_j = (0..list.len()).map(|f| list.m_of_index(f).0).max().unwrap_or(1);
    let small_j = (0..list.len()).map(|f| list.min_abelian_index(f)).max().unwrap_or(1);
    Ok(JordanReport {
        m,
        big_j,
        small_j,
        witness_subgroup: list.subgroups[w].elements.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub a: JordanReport,
    pub b: JordanReport,
    pub product: JordanReport,
    /// `m_(a×b) ≥ m_a·m_b`.
    pub m_holds: bool,
    /// `J_(a×b) ≥ J_a·J_b`.
    pub big_j_holds: bool,
    /// `j_(a×b) ≥ j_a·j_b`.
    pub small_j_holds: bool,
}

impl ProductReport {
    pub fn holds(&self) -> bool {
        self.m_holds && self.big_j_holds && self.small_j_holds
    }
}

pub fn product_inequality_check(a: &GroupTable, b: &GroupTable) -> Result<ProductReport> {
    product_inequality_check_with_cap(a, b, SUBGROUP_ORDER_CAP)
}

pub fn product_inequality_check_with_cap(
    a: &GroupTable,
    b: &GroupTable,
    cap: usize,
) -> Result<ProductReport> {
    let order = a.order() * b.order();
    if order > cap {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    let ra = jordan_report_with_cap(a, cap)?;
    let rb = jordan_report_with_cap(b, cap)?;
    let rp = jordan_report_with_cap(&direct_product(a, b), cap)?;
    Ok(ProductReport {
        m_holds: rp.m >= ra.m * rb.m,
        big_j_holds: rp.big_j >= ra.big_j * rb.big_j,
        small_j_holds: rp.small_j >= ra.small_j * rb.small_j,
        a: ra,
        b: rb,
        product: rp,
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Largest `r` with `(Z/p)^r` a subgroup.
pub fn p_rank(t: &GroupTable, p: u64) -> Result<u32> {
    p_rank_with_cap(t, p, SUBGROUP_ORDER_CAP)
}

pub fn p_rank_with_cap(t: &GroupTable, p: u64, cap: usize) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let list = subgroups_with_cap(t, cap)?;
    let p = p as usize;
    let best = list
        .subgroups
        .iter()
        .filter(|s| {
            s.abelian
                && s.elements
                    .iter()
                    .all(|&x| x == t.id() || t.element_order(x) == p)
        })
        .map(|s| s.order())
        .max()
        .unwrap_or(1);
    let mut r = 0;
    let mut q = 1;
    while q < best {
        q *= p;
        r += 1;
    }
    Ok(r)
}

/// `floor(log2 J_P)`: products of more than this many groups with
/// non-abelian finite subgroups do not embed.
pub fn nonembeddability_threshold(j_p: u64) -> Result<u32> {
    if j_p == 0 {
        return Err(Error::InvalidInput(String::from("J_P must be positive")));
    }
    Ok(63 - j_p.leading_zeros())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomeoBound {
    pub n: u64,
    pub betti_sum: u64,
    /// `lower ≤ bound ≤ upper`, equal when the bound is rational.
    pub lower: Rational,
    pub upper: Rational,
    pub exact: bool,
    /// Least integer strictly above the bound.
    pub minimal_d: u64,
}

/// `[⌊√N·2^k⌋, ⌈√N·2^k⌉] / 2^k`.
fn sqrt_bracket(n: &BigInt, k: u32) -> (Rational, Rational, bool) {
    let scale = BigInt::one() << k;
    let scaled = n * &scale * &scale;
    let r = scaled.sqrt();
    let exact = &r * &r == scaled;
    let lo = Rational::new(r.clone(), scale.clone());
    let hi = if exact { lo.clone() } else { Rational::new(r + 1, scale) };
    (lo, hi, exact)
}

/// `[a, a+1] / 2^k` with `a = ⌊2^k log2 B⌋`.
fn log2_bracket(b: u64, k: u32) -> (Rational, Rational, bool) {
    if b.is_power_of_two() {
        let v = Rational::from_integer(BigInt::from(b.trailing_zeros()));
        return (v.clone(), v, true);
    }
    // bitlength(B^(2^k)) − 1 = ⌊2^k log2 B⌋
    let mut x = BigInt::from(b);
    for _ in 0..k {
        x = &x * &x;
    }
    let a = BigInt::from(x.bits() - 1);
    let den = BigInt::one() << k;
    (
        Rational::new(a.clone(), den.clone()),
        Rational::new(a + 1, den),
        false,
    )
}

/// Certified evaluation of `(√(n² + 4n(n+1)B) + n)/2 + log2 B`.
pub fn homeo_bound(n: u64, betti_sum: u64) -> Result<HomeoBound> {
    if n == 0 || betti_sum == 0 {
        return Err(Error::InvalidInput(String::from("n and B_M must be positive")));
    }
    let big_n = BigInt::from(n) * n + BigInt::from(4u64) * n * (n + 1) * betti_sum;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let nq = Rational::from_integer(BigInt::from(n));
    let mut k = 10;
    loop {
        let (slo, shi, sx) = sqrt_bracket(&big_n, k);
        let (llo, lhi, lx) = log2_bracket(betti_sum, k);
        let lower = (slo + &nq) * &half + llo;
        let upper = (shi + &nq) * &half + lhi;
        let exact = sx && lx;
        let width_ok = &upper - &lower < Rational::new(BigInt::one(), BigInt::from(100));
        let floor_lo = lower.floor().to_integer();
        // an inexact bound is irrational, so it is never an integer
        let settled = exact || (floor_lo == upper.floor().to_integer() && !upper.is_integer());
        if width_ok && settled {
            let minimal_d = u64::try_from(floor_lo + 1).map_err(|_| {
                Error::InvalidInput(String::from("bound out of range"))
            })?;
            return Ok(HomeoBound {
                n,
                betti_sum,
                lower,
                upper,
                exact,
                minimal_d,
            });
        }
        k += 8;
        debug_assert!(!(&upper - &lower).is_zero());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternion() -> GroupTable {
        // ±1, ±i, ±j, ±k as (sign, unit) with unit 0..4 = 1, i, j, k
        let units = [[(0, 0), (0, 1), (0, 2), (0, 3)], [(0, 1), (1, 0), (0, 3), (1, 2)], [(0, 2), (1, 3), (1, 0), (0, 1)], [(0, 3), (0, 2), (1, 1), (1, 0)]];
        let mul = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (s, u) = units[a % 4][b % 4];
                        ((a / 4 + b / 4 + s) % 2) * 4 + u
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_mul(mul, None).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups(&GroupTable::cyclic(4)).unwrap().len(), 3);
        assert_eq!(subgroups(&quaternion()).unwrap().len(), 6);
        assert_eq!(subgroups(&GroupTable::symmetric(3)).unwrap().len(), 6);
        assert_eq!(subgroups(&GroupTable::symmetric(4)).unwrap().len(), 30);
        assert_eq!(
            subgroups(&GroupTable::cyclic(300)).unwrap_err(),
            Error::OrderCapExceeded { order: 300, cap: 256 }
        );
    }

    #[test]
    fn jordan_values() {
        assert_eq!(m_of(&quaternion()).unwrap().0, 2);
        let (m, w) = m_of(&GroupTable::symmetric(4)).unwrap();
        assert_eq!((m, w.len()), (6, 4));
        assert_eq!(m_of(&GroupTable::elementary_abelian(2, 3)).unwrap().0, 1);
        assert_eq!(jordan_constants(&quaternion()).unwrap(), (2, 2));
        assert_eq!(jordan_constants(&GroupTable::symmetric(4)).unwrap(), (6, 6));
        assert_eq!(jordan_constants(&GroupTable::cyclic(12)).unwrap(), (1, 1));
    }

    #[test]
    fn products() {
        let s3 = GroupTable::symmetric(3);
        let r = product_inequality_check(&s3, &s3).unwrap();
        assert_eq!((r.product.m, r.a.m, r.b.m), (4, 2, 2));
        assert!(r.holds());
        let r = product_inequality_check(&GroupTable::cyclic(2), &quaternion()).unwrap();
        assert_eq!(r.product.m, 2);
        assert!(r.holds());
    }

    #[test]
    fn p_ranks() {
        assert_eq!(p_rank(&GroupTable::elementary_abelian(2, 3), 2).unwrap(), 3);
        assert_eq!(p_rank(&quaternion(), 2).unwrap(), 1);
        assert_eq!(p_rank(&GroupTable::symmetric(3), 3).unwrap(), 1);
        assert_eq!(p_rank(&GroupTable::symmetric(3), 5).unwrap(), 0);
        assert_eq!(p_rank(&quaternion(), 4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn thresholds() {
        assert_eq!(nonembeddability_threshold(288).unwrap(), 8);
        assert_eq!(nonembeddability_threshold(1).unwrap(), 0);
        assert_eq!(nonembeddability_threshold(10368).unwrap(), 13);
    }

    #[test]
    fn homeo() {
        let h = homeo_bound(2, 2).unwrap();
        assert_eq!(h.minimal_d, 6);
        let lo = Rational::new(BigInt::from(560), BigInt::from(100));
        let hi = Rational::new(BigInt::from(561), BigInt::from(100));
        assert!(h.lower > lo && h.upper < hi);
        let h = homeo_bound(1, 1).unwrap();
        assert!(h.exact);
        assert_eq!(h.lower, Rational::from_integer(BigInt::from(2)));
        assert_eq!(h.minimal_d, 3);
        let h = homeo_bound(3, 5).unwrap();
        assert!(&h.upper - &h.lower < Rational::new(BigInt::one(), BigInt::from(100)));
    }
}
