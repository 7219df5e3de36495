//! Finite matrix groups over cyclotomic fields, their linear characters,
//! and abstract multiplication tables.
//!
//! The binary polyhedral groups are realized in `SL_2` by fixed generator
//! matrices and enumerated by closure. Catalog conductors are the smallest
//! that contain both the matrix entries and the values of every linear
//! character, so `Q(ζ_12)` for the binary tetrahedral group (ζ_3 values
//! on its abelianization), `Q(ζ_8)` for the binary octahedral group and
//! `Q(ζ_5)` for the binary icosahedral group.

use alloc::{
    collections::{BTreeMap, BTreeSet, VecDeque},
    format,
    string::String,
    sync::Arc,
    vec,
    vec::Vec,
};
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{CycField, CycNum, Rational};

pub type Mat = Matrix;

/// Closure stops once this many elements have been produced.
pub const CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// Cyclic of order `2ℓ` generated by `diag(ζ_2ℓ, ζ_2ℓ⁻¹)`.
    Cyclic(u32),
    /// Binary dihedral of order `4ℓ`.
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Custom,
}

impl GroupKind {
    pub fn expected_order(&self) -> Option<usize> {
        match *self {
            GroupKind::Cyclic(l) => Some(2 * l as usize),
            GroupKind::BinaryDihedral(l) => Some(4 * l as usize),
            GroupKind::BinaryTetrahedral => Some(24),
            GroupKind::BinaryOctahedral => Some(48),
            GroupKind::BinaryIcosahedral => Some(120),
            GroupKind::Custom => None,
        }
    }

    pub fn ell(&self) -> Option<u32> {
        match *self {
            GroupKind::Cyclic(l) | GroupKind::BinaryDihedral(l) => Some(l),
            _ => None,
        }
    }

    /// Tag without parameter.
    pub fn tag(&self) -> &'static str {
        match self {
            GroupKind::Cyclic(_) => "cyclic",
            GroupKind::BinaryDihedral(_) => "binary-dihedral",
            GroupKind::BinaryTetrahedral => "binary-tetrahedral",
            GroupKind::BinaryOctahedral => "binary-octahedral",
            GroupKind::BinaryIcosahedral => "binary-icosahedral",
            GroupKind::Custom => "custom",
        }
    }

    /// Tag with `:ell=` suffix where a parameter applies.
    pub fn name(&self) -> String {
        match self.ell() {
            Some(l) => format!("{}:ell={}", self.tag(), l),
            None => String::from(self.tag()),
        }
    }

    /// The `a` of the primitive series (3, 4, 6), `None` otherwise.
    pub fn primitive_a(&self) -> Option<u32> {
        match self {
            GroupKind::BinaryTetrahedral => Some(3),
            GroupKind::BinaryOctahedral => Some(4),
            GroupKind::BinaryIcosahedral => Some(6),
            _ => None,
        }
    }

    /// Conductor used by [`build_group`].
    pub fn catalog_conductor(&self) -> Option<u32> {
        match *self {
            GroupKind::Cyclic(l) | GroupKind::BinaryDihedral(l) => Some(4u32.lcm(&(2 * l))),
            GroupKind::BinaryTetrahedral => Some(12),
            GroupKind::BinaryOctahedral => Some(8),
            GroupKind::BinaryIcosahedral => Some(5),
            GroupKind::Custom => None,
        }
    }
}

/// A finite group of invertible `dim × dim` matrices, fully enumerated.
/// Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    kind: GroupKind,
    field: Arc<CycField>,
    dim: usize,
    generators: Vec<Mat>,
    elements: Vec<Mat>,
    index: BTreeMap<Mat, usize>,
    inverse: Vec<usize>,
}

impl MatrixGroup {
    /// Enumerates the group generated by `generators` breadth-first.
    pub fn from_generators(
        kind: GroupKind,
        field: &Arc<CycField>,
        dim: usize,
        generators: Vec<Mat>,
    ) -> Result<MatrixGroup> {
        for g in &generators {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch(g.rows(), dim));
            }
            if g.field().conductor() != field.conductor() {
                return Err(Error::ConductorMismatch {
                    left: field.conductor(),
                    right: g.field().conductor(),
                });
            }
            if g.det()?.is_zero() {
                return Err(Error::InvalidInput(String::from("singular generator")));
            }
        }
        let id = Matrix::identity(field, dim);
        let mut elements = vec![id.clone()];
        let mut index = BTreeMap::new();
        index.insert(id, 0);
        let mut next = 0;
        while next < elements.len() {
            for g in &generators {
                let h = elements[next].mul(g);
                if !index.contains_key(&h) {
                    if elements.len() >= CLOSURE_CAP {
                        return Err(Error::ClosureExplosion { cap: CLOSURE_CAP });
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            next += 1;
        }
        let mut group = MatrixGroup {
            kind,
            field: field.clone(),
            dim,
            generators,
            elements,
            index,
            inverse: Vec::new(),
        };
        group.inverse = (0..group.order())
            .map(|i| {
                // g^-1 = g^(k-1) for g of order k; cheaper than inversion.
                let mut x = i;
                loop {
                    let y = group.product_index(x, i);
                    if y == 0 {
                        return x;
                    }
                    x = y;
                }
            })
            .collect();
        Ok(group)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn product_index(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].mul(&self.elements[j]);
        self.index[&p]
    }

    pub fn traces(&self) -> Vec<CycNum> {
        self.elements.iter().map(Matrix::trace).collect()
    }

    pub fn contains_minus_identity(&self) -> bool {
        let m = Matrix::identity(&self.field, self.dim).scale(&CycNum::from_int(&self.field, -1));
        self.index.contains_key(&m)
    }

    /// Indices of the diagonal elements (a subgroup).
    pub fn diagonal_subgroup(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].is_diagonal())
            .collect()
    }

    /// Representatives `c` of the right cosets `Hc` of the subgroup `h`.
    pub fn right_coset_reps(&self, h: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in h {
                covered[self.product_index(x, g)] = true;
            }
        }
        reps
    }

    /// Closure of a set of element indices under multiplication.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.product_index(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Multiplication table in the enumeration order of the elements.
    pub fn to_table(&self) -> GroupTable {
        let n = self.order();
        let mul = (0..n)
            .map(|i| (0..n).map(|j| self.product_index(i, j)).collect())
            .collect();
        let names = (0..n).map(|i| format!("g{i}")).collect();
        GroupTable {
            mul,
            inv: self.inverse.clone(),
            id: 0,
            names,
        }
    }

    /// Checks the invariants every catalog group must satisfy.
    pub fn check_catalog_invariants(&self) -> Result<()> {
        if let Some(expected) = self.kind.expected_order() {
            if expected != self.order() {
                return Err(Error::InvalidInput(format!(
                    "{} has order {} instead of {}",
                    self.kind.name(),
                    self.order(),
                    expected
                )));
            }
        }
        for g in &self.elements {
            if !g.det()?.is_one() {
                return Err(Error::InvalidInput(String::from("determinant is not 1")));
            }
        }
        if !self.contains_minus_identity() {
            return Err(Error::InvalidInput(String::from("-I is missing")));
        }
        Ok(())
    }
}

/// `ζ_k^j` inside `field`, when the field contains the `k`-th roots of unity.
pub fn root_of_unity_of_order(field: &Arc<CycField>, k: u32, j: i64) -> Result<CycNum> {
    let n = field.conductor();
    if n.is_multiple_of(k) {
        return Ok(CycNum::root_of_unity(field, (n / k) as i64 * j));
    }
    if n % 2 == 1 && (2 * n).is_multiple_of(k) {
        // ζ_2n = -ζ_n^((n+1)/2)
        let z2n = -CycNum::root_of_unity(field, (n as i64 + 1) / 2);
        return z2n.pow((2 * n / k) as i64 * j);
    }
    Err(Error::ConductorTooSmall {
        conductor: n,
        needed: k,
    })
}

fn cyc(field: &Arc<CycField>, q: (i64, i64)) -> CycNum {
    CycNum::from_rational(field, &Rational::new(q.0.into(), q.1.into()))
}

fn mat2(field: &Arc<CycField>, a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Mat {
    Matrix::from_rows(field, vec![vec![a, b], vec![c, d]]).expect("2x2 entries share the field")
}

fn quaternion_generators(field: &Arc<CycField>, two_ell: u32) -> Vec<Mat> {
    let z = root_of_unity_of_order(field, two_ell, 1).expect("catalog conductor");
    let zi = z.inv().expect("root of unity");
    let zero = CycNum::zero(field);
    let one = CycNum::one(field);
    vec![
        mat2(field, z, zero.clone(), zero.clone(), zi),
        mat2(field, zero.clone(), one.clone(), -&one, zero),
    ]
}

/// Builds the catalog group of the given kind and verifies its order,
/// determinant and centre invariants.
pub fn build_group(kind: &GroupKind) -> Result<MatrixGroup> {
    let conductor = kind
        .catalog_conductor()
        .ok_or_else(|| Error::InvalidInput(String::from("custom groups need generators")))?;
    if let Some(l) = kind.ell() {
        if l < 2 {
            return Err(Error::InvalidInput(format!("ell must be at least 2, got {l}")));
        }
    }
    let f = CycField::new(conductor);
    let zero = CycNum::zero(&f);
    let gens = match *kind {
        GroupKind::Cyclic(l) => {
            let mut g = quaternion_generators(&f, 2 * l);
            g.truncate(1);
            g
        }
        GroupKind::BinaryDihedral(l) => quaternion_generators(&f, 2 * l),
        GroupKind::BinaryTetrahedral | GroupKind::BinaryOctahedral => {
            let mut g = quaternion_generators(&f, 4);
            let i = root_of_unity_of_order(&f, 4, 1)?;
            let half = cyc(&f, (1, 2));
            let m1 = &cyc(&f, (-1, 1)) * &half;
            let p1 = &half;
            let ih = &i * &half;
            // ½[[-1+i, 1+i], [-1+i, -1-i]], of order 3
            g.push(mat2(
                &f,
                &m1 + &ih,
                p1 + &ih,
                &m1 + &ih,
                &m1 - &ih,
            ));
            if *kind == GroupKind::BinaryOctahedral {
                let z8 = root_of_unity_of_order(&f, 8, 1)?;
                let z8i = z8.inv()?;
                g.push(mat2(&f, z8, zero.clone(), zero.clone(), z8i));
            }
            g
        }
        GroupKind::BinaryIcosahedral => {
            let z = |k: i64| CycNum::root_of_unity(&f, k);
            let sigma = mat2(&f, -z(3), zero.clone(), zero.clone(), -z(2));
            let sqrt5 = &(&(&z(1) - &z(2)) - &z(3)) + &z(4);
            let s = sqrt5.inv()?;
            let a = &z(1) - &z(4);
            let b = &z(2) - &z(3);
            let tau = mat2(&f, -&(&a * &s), &b * &s, &b * &s, &a * &s);
            vec![sigma, tau]
        }
        GroupKind::Custom => unreachable!(),
    };
    let g = MatrixGroup::from_generators(kind.clone(), &f, 2, gens)?;
    g.check_catalog_invariants()?;
    Ok(g)
}

/// The diagonal group `T_n(m_1, …, m_r)`: `diag(t_1, …, t_r, 1, …, 1)`
/// with `t_i^{m_i} = 1`.
pub fn tn_group(n: usize, factors: &[u32]) -> Result<MatrixGroup> {
    if n == 0 {
        return Err(Error::InvalidInput(String::from("dimension must be positive")));
    }
    if factors.len() > n {
        return Err(Error::RankExceedsDimension {
            rank: factors.len(),
            dim: n,
        });
    }
    if factors.iter().any(|&m| m < 2) || factors.windows(2).any(|w| w[1] % w[0] != 0) {
        return Err(Error::NotDividing);
    }
    let conductor = factors.iter().fold(1u32, |acc, &m| acc.lcm(&m));
    let f = CycField::new(conductor);
    let gens = factors
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let mut d = vec![CycNum::one(&f); n];
            d[i] = root_of_unity_of_order(&f, m, 1)?;
            Ok(Matrix::diagonal(&f, &d))
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixGroup::from_generators(GroupKind::Custom, &f, n, gens)
}

/// A one-dimensional character, indexed like the elements of its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    values: Vec<CycNum>,
}

impl LinearCharacter {
    pub fn trivial(group: &MatrixGroup) -> LinearCharacter {
        LinearCharacter {
            values: vec![CycNum::one(group.field()); group.order()],
        }
    }

    pub fn from_values(values: Vec<CycNum>) -> LinearCharacter {
        LinearCharacter { values }
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &CycNum {
        &self.values[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(CycNum::is_one)
    }

    pub fn is_multiplicative(&self, group: &MatrixGroup) -> bool {
        let n = group.order();
        self.values[0].is_one()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    self.values[group.product_index(i, j)] == &self.values[i] * &self.values[j]
                })
            })
    }
}

/// The characters `γ` with `γχ = χ` for the trace character `χ`.
///
/// `γχ = χ` holds iff `γ(g) = 1` wherever `tr(g) ≠ 0`, so these are the
/// characters of `G/N` with `N` generated by the trace support.
pub fn chi_stabilizer_characters(group: &MatrixGroup) -> Result<Vec<LinearCharacter>> {
    let support: Vec<usize> = group
        .traces()
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_zero())
        .map(|(i, _)| i)
        .collect();
    let n = group.generated_subgroup(&support);
    quotient_characters(group, &n)
}

/// All linear characters, as characters of the abelianization.
pub fn linear_characters(group: &MatrixGroup) -> Result<Vec<LinearCharacter>> {
    let mut comm = Vec::new();
    for a in 0..group.order() {
        for b in 0..group.order() {
            let ab = group.product_index(a, b);
            let ai_bi = group.product_index(group.inverse_index(a), group.inverse_index(b));
            comm.push(group.product_index(ab, ai_bi));
        }
    }
    comm.sort_unstable();
    comm.dedup();
    let n = group.generated_subgroup(&comm);
    quotient_characters(group, &n)
}

/// Characters of `G/N` for a normal subgroup `N`, lifted to `G`. The
/// trivial character comes first.
pub fn quotient_characters(group: &MatrixGroup, normal: &[usize]) -> Result<Vec<LinearCharacter>> {
    let order = group.order();
    // coset labels
    let mut label = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for g in 0..order {
        if label[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &x in normal {
            label[group.product_index(g, x)] = id;
        }
    }
    let q = reps.len();
    let qmul: Vec<Vec<usize>> = (0..q)
        .map(|a| {
            (0..q)
                .map(|b| label[group.product_index(reps[a], reps[b])])
                .collect()
        })
        .collect();
    if (0..q).any(|a| (0..q).any(|b| qmul[a][b] != qmul[b][a])) {
        return Err(Error::NonAbelianQuotient);
    }
    let qid = label[0];
    let span = |gens: &[usize]| -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([qid]);
        let mut queue = VecDeque::from([qid]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                if seen.insert(qmul[x][g]) {
                    queue.push_back(qmul[x][g]);
                }
            }
        }
        seen
    };
    let mut gens = Vec::new();
    let mut covered = span(&gens);
    for x in 0..q {
        if !covered.contains(&x) {
            gens.push(x);
            covered = span(&gens);
        }
    }
    let orders: Vec<u32> = gens
        .iter()
        .map(|&g| {
            let mut k = 1;
            let mut y = g;
            while y != qid {
                y = qmul[y][g];
                k += 1;
            }
            k
        })
        .collect();
    let field = group.field();
    let roots: Vec<Vec<CycNum>> = orders
        .iter()
        .map(|&k| {
            (0..k as i64)
                .map(|j| root_of_unity_of_order(field, k, j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut chars = Vec::new();
    let mut exps = vec![0usize; gens.len()];
    loop {
        let mut val: Vec<Option<CycNum>> = vec![None; q];
        val[qid] = Some(CycNum::one(field));
        let mut queue = VecDeque::from([qid]);
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop_front() {
            let vx = val[x].clone().unwrap();
            for (gi, &g) in gens.iter().enumerate() {
                let y = qmul[x][g];
                let vy = &vx * &roots[gi][exps[gi]];
                match &val[y] {
                    Some(v) if *v != vy => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        val[y] = Some(vy);
                        queue.push_back(y);
                    }
                }
            }
        }
        if ok {
            let values = (0..order)
                .map(|g| val[label[g]].clone().unwrap())
                .collect();
            chars.push(LinearCharacter { values });
        }
        // odometer
        let mut i = 0;
        loop {
            if i == exps.len() {
                debug_assert_eq!(chars.len(), q);
                return Ok(chars);
            }
            exps[i] += 1;
            if exps[i] < orders[i] as usize {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// An abstract finite group as a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    id: usize,
    names: Vec<String>,
}

impl GroupTable {
    /// Validates a table: an identity, inverses and associativity. For
    /// orders above 64 associativity is checked against a generating set,
    /// which suffices by Light's criterion.
    pub fn from_mul(mul: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<GroupTable> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidInput(String::from("empty table")));
        }
        if mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput(String::from("table is not square")));
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidInput(String::from("no identity")))?;
        let inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| mul[x][y] == id && mul[y][x] == id)
                    .ok_or_else(|| Error::InvalidInput(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(Error::DimensionMismatch(v.len(), n)),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let t = GroupTable {
            mul,
            inv,
            id,
            names,
        };
        let checks: Vec<usize> = if n <= 64 {
            (0..n).collect()
        } else {
            t.generating_set()
        };
        for a in 0..n {
            for b in 0..n {
                let ab = t.mul[a][b];
                for &c in &checks {
                    if t.mul[ab][c] != t.mul[a][t.mul[b][c]] {
                        return Err(Error::InvalidInput(String::from("not associative")));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    /// `Z/n`, element `k` is `a^k`.
    pub fn cyclic(n: usize) -> GroupTable {
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let names = (0..n).map(|k| format!("a^{k}")).collect();
        GroupTable {
            mul,
            inv: (0..n).map(|a| (n - a) % n).collect(),
            id: 0,
            names,
        }
    }

    /// `(Z/p)^r`.
    pub fn elementary_abelian(p: usize, r: u32) -> GroupTable {
        let mut t = GroupTable::trivial();
        for _ in 0..r {
            t = direct_product(&t, &GroupTable::cyclic(p));
        }
        t
    }

    /// Dihedral group of order `2n`: `r^k` is `k`, `s r^k` is `n + k`.
    pub fn dihedral(n: usize) -> GroupTable {
        let elem = |x: usize| (x / n, x % n);
        let code = |s: usize, k: usize| s * n + k % n;
        let mul = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let (s1, k1) = elem(a);
                        let (s2, k2) = elem(b);
                        // s^s1 r^k1 s^s2 r^k2 = s^(s1+s2) r^(±k1 + k2)
                        let k = if s2 == 0 { k1 + k2 } else { n - k1 + k2 };
                        code((s1 + s2) % 2, k)
                    })
                    .collect()
            })
            .collect();
        let names = (0..2 * n)
            .map(|x| {
                let (s, k) = elem(x);
                if s == 0 {
                    format!("r^{k}")
                } else {
                    format!("s r^{k}")
                }
            })
            .collect();
        GroupTable::from_mul(mul, Some(names)).expect("dihedral table")
    }

    /// Symmetric group on `n` points; elements are permutations in
    /// lexicographic order, composed as `(ab)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> GroupTable {
        let perms = permutations(n);
        let index: BTreeMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                        index[&c]
                    })
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|x| format!("{}", x + 1)).collect();
                format!("[{}]", s.join(" "))
            })
            .collect();
        GroupTable::from_mul(mul, Some(names)).expect("symmetric table")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.id {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
            .collect()
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Greedy generating set in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = self.closure(&gens);
        for x in 0..self.order() {
            if !covered[x] {
                gens.push(x);
                covered = self.closure(&gens);
            }
        }
        gens
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.id] = true;
        let mut queue = VecDeque::from([self.id]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// `a × b`; the pair `(x, y)` has index `x·|b| + y`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let nb = b.order();
    let n = a.order() * nb;
    let mul = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| a.mul[p / nb][q / nb] * nb + b.mul[p % nb][q % nb])
                .collect()
        })
        .collect();
    let inv = (0..n).map(|p| a.inv[p / nb] * nb + b.inv[p % nb]).collect();
    let names = (0..n)
        .map(|p| format!("({}, {})", a.names[p / nb], b.names[p % nb]))
        .collect();
    GroupTable {
        mul,
        inv,
        id: a.id * nb + b.id,
        names,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_kinds() -> Vec<GroupKind> {
        vec![
            GroupKind::Cyclic(2),
            GroupKind::Cyclic(3),
            GroupKind::BinaryDihedral(2),
            GroupKind::BinaryDihedral(3),
            GroupKind::BinaryDihedral(5),
            GroupKind::BinaryTetrahedral,
            GroupKind::BinaryOctahedral,
            GroupKind::BinaryIcosahedral,
        ]
    }

    #[test]
    fn catalog_orders_and_invariants() {
        for k in all_kinds() {
            let g = build_group(&k).unwrap();
            assert_eq!(Some(g.order()), k.expected_order(), "{k:?}");
            g.check_catalog_invariants().unwrap();
        }
    }

    #[test]
    fn quaternion_elements() {
        let g = build_group(&GroupKind::BinaryDihedral(2)).unwrap();
        let f = g.field().clone();
        let i = CycNum::zeta(&f);
        let z = CycNum::zero(&f);
        let o = CycNum::one(&f);
        let base = [
            mat2(&f, o.clone(), z.clone(), z.clone(), o.clone()),
            mat2(&f, i.clone(), z.clone(), z.clone(), -&i),
            mat2(&f, z.clone(), o.clone(), -&o, z.clone()),
            mat2(&f, z.clone(), i.clone(), i.clone(), z.clone()),
        ];
        let minus = CycNum::from_int(&f, -1);
        for m in &base {
            assert!(g.index_of(m).is_some());
            assert!(g.index_of(&m.scale(&minus)).is_some());
        }
    }

    #[test]
    fn reclosing_adds_nothing() {
        let g = build_group(&GroupKind::BinaryTetrahedral).unwrap();
        let again =
            MatrixGroup::from_generators(GroupKind::Custom, g.field(), 2, g.elements().to_vec())
                .unwrap();
        assert_eq!(again.order(), g.order());
    }

    #[test]
    fn inverses_are_correct() {
        let g = build_group(&GroupKind::BinaryOctahedral).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.product_index(i, g.inverse_index(i)), 0);
        }
    }

    #[test]
    fn stabilizer_sizes() {
        let expect = [
            (GroupKind::BinaryTetrahedral, 1),
            (GroupKind::BinaryOctahedral, 1),
            (GroupKind::BinaryIcosahedral, 1),
            (GroupKind::BinaryDihedral(2), 4),
            (GroupKind::BinaryDihedral(3), 2),
            (GroupKind::BinaryDihedral(4), 2),
        ];
        for (k, n) in expect {
            let g = build_group(&k).unwrap();
            let chars = chi_stabilizer_characters(&g).unwrap();
            assert_eq!(chars.len(), n, "{k:?}");
            assert!(chars[0].is_trivial());
            let traces = g.traces();
            for c in &chars {
                assert!(c.is_multiplicative(&g));
                for (v, t) in c.values().iter().zip(&traces) {
                    assert_eq!(&(v * t), t);
                }
            }
        }
    }

    #[test]
    fn abelianization_sizes() {
        for (k, n) in [
            (GroupKind::BinaryTetrahedral, 3),
            (GroupKind::BinaryOctahedral, 2),
            (GroupKind::BinaryIcosahedral, 1),
            (GroupKind::BinaryDihedral(3), 4),
            (GroupKind::BinaryDihedral(2), 4),
        ] {
            let g = build_group(&k).unwrap();
            assert_eq!(linear_characters(&g).unwrap().len(), n, "{k:?}");
        }
    }

    #[test]
    fn diagonal_groups() {
        assert_eq!(tn_group(2, &[2, 2]).unwrap().order(), 4);
        assert_eq!(tn_group(1, &[7]).unwrap().order(), 7);
        let g = tn_group(3, &[2, 4]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.elements().iter().all(|m| m.get(2, 2).is_one()));
        assert_eq!(
            tn_group(1, &[2, 2]).unwrap_err(),
            Error::RankExceedsDimension { rank: 2, dim: 1 }
        );
        assert_eq!(tn_group(2, &[2, 3]).unwrap_err(), Error::NotDividing);
        assert_eq!(tn_group(2, &[1]).unwrap_err(), Error::NotDividing);
    }

    #[test]
    fn closure_cap() {
        // diag(2, 1) has infinite order
        let f = CycField::new(1);
        let m = Matrix::diagonal(&f, &[CycNum::from_int(&f, 2), CycNum::one(&f)]);
        assert_eq!(
            MatrixGroup::from_generators(GroupKind::Custom, &f, 2, vec![m]).unwrap_err(),
            Error::ClosureExplosion { cap: CLOSURE_CAP }
        );
    }

    #[test]
    fn tables() {
        let z4 = build_group(&GroupKind::Cyclic(2)).unwrap().to_table();
        assert_eq!(z4.order(), 4);
        assert!(z4.is_abelian());
        let q8 = build_group(&GroupKind::BinaryDihedral(2)).unwrap().to_table();
        assert_eq!(q8.order_profile(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        let t = build_group(&GroupKind::BinaryTetrahedral).unwrap().to_table();
        assert_eq!(t.center().len(), 2);
        GroupTable::from_mul(t.mul_table().to_vec(), None).unwrap();

        let klein = direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
        assert_eq!(klein.order_profile(), vec![1, 2, 2, 2]);
        let s3 = GroupTable::symmetric(3);
        assert_eq!(direct_product(&s3, &s3).order(), 36);
        let p = direct_product(&q8, &GroupTable::cyclic(3));
        assert_eq!(p.order(), 24);
        assert_eq!(p.center().len(), 6);
        assert_eq!(GroupTable::dihedral(3).order_profile(), s3.order_profile());
    }

    #[test]
    fn quotient_by_minus_identity() {
        let g = build_group(&GroupKind::BinaryIcosahedral).unwrap();
        let t = g.to_table();
        let minus = (0..g.order())
            .find(|&i| i != 0 && t.center().contains(&i))
            .unwrap();
        let mut classes = BTreeSet::new();
        for x in 0..g.order() {
            let y = t.mul(x, minus);
            classes.insert((x.min(y), x.max(y)));
        }
        assert_eq!(classes.len(), 60);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(GroupTable::from_mul(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(GroupTable::from_mul(vec![vec![0, 1]], None).is_err());
    }
}
