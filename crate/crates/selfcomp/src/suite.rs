//! The acceptance battery: eight criteria, run concurrently and reported
//! in declaration order.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selfcomp_core::compress::{
    combine, construct_self_compression, invariant_form, is_invariant, line_degree,
    linear_self_compression, orbit_product_invariant, point_off_zero_set, series,
    series_consistency, verify_descent, verify_equivariance, verify_functional_equation,
    DescentContext, EquivarianceMode, Moebius, SeriesKind,
};
use selfcomp_core::connect::{
    check_origin_conditions, evaluate_path, evaluate_path_with_inverse, factor_through_origin,
    find_etale_point, path_family, reassemble, verify_conjugation_identity,
};
use selfcomp_core::forms::{equivariant_basis, form_gcd, isotypic_basis, isotypic_dims, multiplicities_chi, Form};
use selfcomp_core::groups::{build_group, chi_stabilizer_characters, tn_group, GroupKind, GroupTable, MatrixGroup};
use selfcomp_core::jordan::{
    homeo_bound, jordan_report_with_cap, m_of_with_cap, nonembeddability_threshold,
    p_rank_with_cap, product_inequality_check_with_cap,
};
use selfcomp_core::{CycField, CycNum, Error};

use crate::config::Config;
use crate::error::{AppError, AppResult};
use crate::resolve::group_table;
use crate::sample::{random_general_map, random_normalized_map, random_triangular_pair};

/// Seed for every randomized criterion.
pub const SUITE_SEED: u64 = 0x5e1f_c0de;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {} {:>7.2}s {}: {}",
            self.id,
            self.status,
            self.elapsed.as_secs_f64(),
            self.title,
            self.detail
        )
    }
}

/// Accumulates failures and skipped sub-checks of one criterion.
#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    skipped: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn result<T>(&mut self, r: Result<T, impl fmt::Display>, what: &str) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    fn finish(self) -> (Status, String) {
        if !self.failures.is_empty() {
            let mut s = self.failures[..self.failures.len().min(5)].join("; ");
            if self.failures.len() > 5 {
                s.push_str(&format!("; and {} more", self.failures.len() - 5));
            }
            return (Status::Fail, s);
        }
        let mut detail = self.notes.join("; ");
        if !self.skipped.is_empty() {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&format!("skipped {}", self.skipped.join(", ")));
            return (Status::Skip, detail);
        }
        (Status::Pass, detail)
    }
}

type Criterion = fn(&Config) -> Tally;

/// Id, title, check, wall-time budget in milliseconds.
const CRITERIA: [(u32, &str, Criterion, u64); 8] = [
    (1, "minimal self-compression degrees", minimal_degrees, 60_000),
    (2, "explicit icosahedral map", icosahedral_map, 5_000),
    (3, "series consistency", series_check, 300_000),
    (4, "certificates up to degree 40", certificates, 600_000),
    (5, "invariant forms and linear self-maps", invariants, 120_000),
    (6, "Jordan brute force", jordan_checks, 60_000),
    (7, "connectedness path", path_checks, 60_000),
    (8, "homeomorphism-group bound", homeo_checks, 1_000),
];

/// Runs the selected criteria (all when `only` is empty) concurrently.
pub fn run_suite(cfg: &Config, only: &[u32]) -> Vec<Outcome> {
    let selected: Vec<_> = CRITERIA
        .iter()
        .filter(|(id, _, _, _)| only.is_empty() || only.contains(id))
        .collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&&(id, title, f, budget_ms)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let (mut status, mut detail) = f(cfg).finish();
                    let elapsed = start.elapsed();
                    if status != Status::Fail && elapsed > Duration::from_millis(budget_ms) {
                        status = Status::Fail;
                        detail = format!("over the {budget_ms} ms budget; {detail}");
                    }
                    Outcome {
                        id,
                        title,
                        status,
                        detail,
                        elapsed,
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    })
}

/// 0 when nothing failed.
pub fn suite_exit_code(outcomes: &[Outcome]) -> i32 {
    i32::from(outcomes.iter().any(|o| o.status == Status::Fail))
}

fn catalog_kinds(cyclic: bool) -> Vec<GroupKind> {
    let mut v = Vec::new();
    if cyclic {
        v.extend((2..=8).map(GroupKind::Cyclic));
    }
    v.extend((2..=8).map(GroupKind::BinaryDihedral));
    v.extend([
        GroupKind::BinaryTetrahedral,
        GroupKind::BinaryOctahedral,
        GroupKind::BinaryIcosahedral,
    ]);
    v
}

fn minimal_degrees(cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let mut cases = vec![
        (GroupKind::BinaryTetrahedral, 5),
        (GroupKind::BinaryOctahedral, 7),
        (GroupKind::BinaryIcosahedral, 11),
    ];
    for l in 2..=6 {
        cases.push((GroupKind::BinaryDihedral(l), 2 * l - 1));
        cases.push((GroupKind::Cyclic(l), 2 * l - 1));
    }
    for (kind, dmin) in cases {
        let name = kind.name();
        if dmin > cfg.series_upto {
            t.skipped.push(format!("{name} (needs upto {dmin})"));
            continue;
        }
        let Some(s) = t.result(series(&kind, SeriesKind::S, cfg.series_upto), &name) else {
            continue;
        };
        t.check(s.first_nonzero() == Some(dmin), || {
            format!("{name}: first nonzero s_d at {:?}, expected {dmin}", s.first_nonzero())
        });
        let Some(g) = t.result(build_group(&kind), &name) else {
            continue;
        };
        for d in 2..dmin {
            let r = construct_self_compression(&g, d, cfg.alpha_norm_bound);
            t.check(r == Err(Error::InfeasibleDegree { d }), || {
                format!("{name}: construct at d={d} did not report infeasible")
            });
        }
        if let Some(c) = t.result(construct_self_compression(&g, dmin, cfg.alpha_norm_bound), &name) {
            t.check(c.all_checks_pass(), || format!("{name} d={dmin}: certificate checks fail"));
        }
    }
    t.notes.push("2T/2O/2I at 5/7/11, dihedral and cyclic at 2l-1".into());
    t
}

/// `x^11 + 66x^6y^5 − 11xy^10` and `−11x^10y − 66x^5y^6 + y^11`.
pub fn icosahedral_pair(field: &std::sync::Arc<CycField>) -> (Form, Form) {
    let mut p = vec![0i64; 12];
    p[0] = 1;
    p[5] = 66;
    p[10] = -11;
    let mut q = vec![0i64; 12];
    q[1] = -11;
    q[6] = -66;
    q[11] = 1;
    (
        Form::from_ints(field, 2, 11, &p).expect("12 coefficients"),
        Form::from_ints(field, 2, 11, &q).expect("12 coefficients"),
    )
}

/// `z ↦ ωz` and `z ↦ ((ω+ω⁻¹)z + 1)/(z − (ω+ω⁻¹))` over `Q(ω)`, `ω⁵ = 1`.
pub fn icosahedral_generators(field: &std::sync::Arc<CycField>) -> AppResult<Vec<Moebius>> {
    let w = CycNum::zeta(field);
    let c = &w + &w.inv()?;
    let zero = CycNum::zero(field);
    let one = CycNum::one(field);
    Ok(vec![
        Moebius::new(w, zero.clone(), zero, one.clone())?,
        Moebius::new(c.clone(), one.clone(), one, -&c)?,
    ])
}

fn icosahedral_map(_cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let f = CycField::new(5);
    let (p, q) = icosahedral_pair(&f);
    let Some(gens) = t.result(icosahedral_generators(&f), "generators") else {
        return t;
    };
    let mats: Vec<_> = gens.iter().map(Moebius::matrix).collect();
    if let Some(r) = t.result(verify_equivariance(&mats, &p, &q, EquivarianceMode::Projective), "equivariance") {
        t.check(r.passed, || format!("projective equivariance fails at generator {:?}", r.first_failure));
    }
    if let Some(g) = t.result(form_gcd(&p, &q), "gcd") {
        t.check(g.degree() == 0, || format!("gcd degree {}", g.degree()));
    }
    if let Some(r) = t.result(
        verify_functional_equation(&p.dehomogenize(), &q.dehomogenize(), &gens),
        "functional equation",
    ) {
        t.check(r.all_passed(), || format!("functional equation fails: {:?}", r.passed));
        t.check(r.degree == 11, || format!("deg f = {}", r.degree));
    }
    t.notes.push("projective equivariance for both generators, coprime, functional equation of degree 11".into());
    t
}

fn series_check(cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let upto = cfg.series_upto.min(40);
    if upto < 40 {
        t.skipped.push(format!("degrees {}..40", upto + 1));
    }
    for kind in catalog_kinds(false) {
        let name = kind.name();
        let Some(g) = t.result(build_group(&kind), &name) else {
            continue;
        };
        if let Some(r) = t.result(series_consistency(&g, upto), &name) {
            if matches!(kind, GroupKind::BinaryDihedral(_)) {
                t.check(r.inequality_holds, || format!("{name}: s_d inequality fails"));
            }
            if kind == GroupKind::BinaryDihedral(2) {
                t.check(r.theta_series_equal == Some(true), || "three theta series differ".into());
            }
        }
        // projector ranks against character dimensions
        let low = upto.min(12);
        let Some(chars) = t.result(chi_stabilizer_characters(&g), &name) else {
            continue;
        };
        for c in &chars {
            if let Some(dims) = t.result(isotypic_dims(&g, c, low), &name) {
                for d in 0..=low {
                    let rank = isotypic_basis(&g, Some(c), d).len();
                    t.check(rank == dims[d as usize], || {
                        format!("{name} d={d}: projector rank {rank}, character {}", dims[d as usize])
                    });
                }
            }
        }
        if let Some(mult) = t.result(multiplicities_chi(&g, low), &name) {
            for d in 1..=low {
                if let Some(b) = t.result(equivariant_basis(&g, d), &name) {
                    t.check(b.len() == mult[d as usize], || format!("{name} d={d}: equivariant rank"));
                }
            }
        }
    }
    t.notes.push(format!("all noncyclic kinds with l <= 8, d <= {upto}"));
    t
}

fn certificates(cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let upto = cfg.series_upto.min(40);
    if upto < 40 {
        t.skipped.push(format!("degrees {}..40", upto + 1));
    }
    let mut count = 0;
    for kind in catalog_kinds(true) {
        let name = kind.name();
        let Some(g) = t.result(build_group(&kind), &name) else {
            continue;
        };
        let Some(s) = t.result(series(&kind, SeriesKind::S, upto), &name) else {
            continue;
        };
        for d in 2..=upto {
            if s.coeff(d) == 0 {
                continue;
            }
            let Some(c) = t.result(construct_self_compression(&g, d, cfg.alpha_norm_bound), &name) else {
                continue;
            };
            count += 1;
            t.check(c.all_checks_pass(), || format!("{name} d={d}: {:?}", c.checks));
            if let Some(r) = t.result(
                verify_equivariance(g.elements(), &c.phi1, &c.phi2, EquivarianceMode::Linear),
                &name,
            ) {
                t.check(r.passed, || format!("{name} d={d}: not equivariant"));
            }
            if let Some(r) = t.result(verify_descent(&g, &c.phi1, &c.phi2), &name) {
                t.check(r.criteria_agree && r.nontrivial, || format!("{name} d={d}: descent verdicts"));
            }
        }
    }
    // random equivariant maps, including sparse ones that are often trivial
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let samples = [
        (GroupKind::BinaryDihedral(2), vec![3, 5, 7]),
        (GroupKind::BinaryDihedral(3), vec![5, 7, 11]),
        (GroupKind::BinaryTetrahedral, vec![5, 7, 9]),
        (GroupKind::BinaryOctahedral, vec![7, 9]),
        (GroupKind::BinaryIcosahedral, vec![11, 13]),
    ];
    for (kind, degrees) in samples {
        let name = kind.name();
        let Some(g) = t.result(build_group(&kind), &name) else {
            continue;
        };
        let mut ctx = Vec::new();
        for d in degrees {
            let (Some(b), Some(c)) = (
                t.result(equivariant_basis(&g, d), &name),
                t.result(DescentContext::new(&g, d), &name),
            ) else {
                continue;
            };
            ctx.push((d, b, c));
        }
        let (mut trivial, mut nontrivial) = (0, 0);
        while trivial + nontrivial < 100 && !ctx.is_empty() {
            let (d, basis, c) = &ctx[rng.gen_range(0..ctx.len())];
            let alpha: Vec<i64> = (0..basis.len())
                .map(|_| if rng.gen_ratio(3, 5) { 0 } else { rng.gen_range(-4..=4) })
                .collect();
            if alpha.iter().all(|&a| a == 0) {
                continue;
            }
            let phi = combine(g.field(), basis, &alpha, *d);
            if let Some(r) = t.result(c.check(&phi[0], &phi[1]), &name) {
                t.check(r.criteria_agree, || format!("{name} d={d} alpha={alpha:?}: verdicts differ"));
                if r.nontrivial {
                    nontrivial += 1;
                } else {
                    trivial += 1;
                }
            }
        }
        t.notes.push(format!("{name}: {nontrivial} nontrivial/{trivial} trivial samples agree"));
    }
    t.notes.insert(0, format!("{count} certificates"));
    t
}

fn invariants(_cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let groups: Vec<(&str, AppResult<MatrixGroup>, u32)> = vec![
        ("T2(2,2)", tn_group(2, &[2, 2]).map_err(AppError::from), 2),
        ("Q8", build_group(&GroupKind::BinaryDihedral(2)).map_err(AppError::from), 4),
        ("2T", build_group(&GroupKind::BinaryTetrahedral).map_err(AppError::from), 6),
        ("2I", build_group(&GroupKind::BinaryIcosahedral).map_err(AppError::from), 12),
    ];
    for (name, g, expected_first) in groups {
        let Some(g) = t.result(g, name) else {
            continue;
        };
        let trivial = selfcomp_core::groups::LinearCharacter::trivial(&g);
        let Some(dims) = t.result(isotypic_dims(&g, &trivial, expected_first), name) else {
            continue;
        };
        let oracle_first = (1..=expected_first).find(|&d| dims[d as usize] > 0);
        t.check(oracle_first == Some(expected_first), || {
            format!("{name}: character oracle gives first invariant degree {oracle_first:?}")
        });
        for d in 1..expected_first {
            if let Some(r) = t.result(invariant_form(&g, d), name) {
                t.check(r.is_none(), || format!("{name}: invariant found at d={d}"));
            }
        }
        let Some(Some(f)) = t.result(invariant_form(&g, expected_first), name) else {
            t.failures.push(format!("{name}: no invariant at d={expected_first}"));
            continue;
        };
        if let Some(m) = t.result(linear_self_compression(&g, &f.form), name) {
            t.check(m.equivariant, || format!("{name}: f*x not equivariant"));
            let deg = point_off_zero_set(&f.form).and_then(|a| line_degree(&m, &a));
            t.check(deg == Some(expected_first + 1), || format!("{name}: line degree {deg:?}"));
        }
        let order = g.order() as u32;
        if let Some(r) = t.result(invariant_form(&g, order), name) {
            t.check(r.is_some(), || format!("{name}: no invariant at d=|G|={order}"));
        }
        if let Some(o) = t.result(orbit_product_invariant(&g, order), name) {
            let ok = o.as_ref().is_some_and(|o| !o.is_zero() && is_invariant(&g, o).unwrap_or(false));
            t.check(ok, || format!("{name}: orbit product at d={order} is not a nonzero invariant"));
        }
        t.notes.push(format!("{name}: first invariant at {expected_first}"));
    }
    t
}

fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = (0..n).map(|y| g.mul(g.mul(y, x), g.inv(y))).collect();
        c.sort_unstable();
        c.dedup();
        for &y in &c {
            seen[y] = true;
        }
        classes.push(c);
    }
    classes
}

/// `m` by brute force over unions of conjugacy classes: every normal
/// subgroup is such a union.
pub fn m_by_class_unions(g: &GroupTable) -> usize {
    let classes = conjugacy_classes(g);
    let n = g.order();
    let mut best = n;
    for mask in 0u64..(1 << classes.len()) {
        let set: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        if !set.contains(&g.id()) {
            continue;
        }
        let mut member = vec![false; n];
        for &x in &set {
            member[x] = true;
        }
        let closed = set.iter().all(|&a| set.iter().all(|&b| member[g.mul(a, b)]));
        let abelian = set.iter().all(|&a| set.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
        if closed && abelian {
            best = best.min(n / set.len());
        }
    }
    best
}

fn jordan_checks(cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let cap = cfg.subgroup_order_cap;
    for (name, expected) in [("S4", 6), ("Q8", 2), ("Z6", 1), ("E2^3", 1), ("Z2xZ4", 1), ("S3xS3", 4)] {
        let Some(g) = t.result(group_table(name), name) else {
            continue;
        };
        if let Some((m, w)) = t.result(m_of_with_cap(&g, cap), name) {
            t.check(m == expected, || format!("m({name}) = {m}, expected {expected}"));
            t.check(m * w.len() == g.order(), || format!("{name}: witness index"));
            let oracle = m_by_class_unions(&g);
            t.check(m == oracle, || format!("m({name}) = {m}, class-union oracle {oracle}"));
        }
    }
    for (name, jj) in [("Q8", (2, 2)), ("S4", (6, 6))] {
        if let Some(r) = t.result(group_table(name).and_then(|g| Ok(jordan_report_with_cap(&g, cap)?)), name) {
            t.check((r.big_j, r.small_j) == jj, || format!("{name}: (J, j) = ({}, {})", r.big_j, r.small_j));
        }
    }
    let pairs = [
        ("S3", "S3"),
        ("Z2", "Q8"),
        ("Z2", "Z3"),
        ("S3", "Z4"),
        ("Q8", "Z3"),
        ("D4", "Z2"),
        ("S3", "D4"),
        ("S4", "Z2"),
        ("Q8", "S3"),
        ("D5", "S3"),
    ];
    for (a, b) in pairs {
        let label = format!("{a}x{b}");
        let (Some(ta), Some(tb)) = (t.result(group_table(a), a), t.result(group_table(b), b)) else {
            continue;
        };
        if let Some(r) = t.result(product_inequality_check_with_cap(&ta, &tb, cap), &label) {
            t.check(r.holds(), || format!("{label}: product inequality violated"));
            t.check(r.product.small_j <= r.product.big_j, || format!("{label}: j > J"));
            if (a, b) == ("S3", "S3") {
                t.check(r.product.m == 4 && r.a.m * r.b.m == 4, || format!("S3xS3: m = {}", r.product.m));
            }
        }
    }
    for (name, p, expected) in [("Q8", 2, 1), ("E2^3", 2, 3), ("S3", 3, 1)] {
        if let Some(r) = t.result(group_table(name).and_then(|g| Ok(p_rank_with_cap(&g, p, cap)?)), name) {
            t.check(r == expected, || format!("p_rank({name}, {p}) = {r}"));
        }
    }
    for (j, expected) in [(288, 8), (10368, 13), (1, 0)] {
        if let Some(r) = t.result(nonembeddability_threshold(j), "threshold") {
            t.check(r == expected, || format!("threshold({j}) = {r}"));
        }
    }
    t.notes.push("m(S4)=6, m(Q8)=2, m(S3xS3)=4, 10 product pairs, thresholds 288->8 and 10368->13".into());
    t
}

fn path_checks(_cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let field = CycField::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ 7);
    let zero = CycNum::zero(&field);
    let one = CycNum::one(&field);
    for k in 0..25 {
        let n = 1 + k % 3;
        let theta = random_normalized_map(&mut rng, &field, n, 5);
        t.check(check_origin_conditions(&theta).passes(), || format!("map {k}: conditions"));
        if let Some(r) = t.result(verify_conjugation_identity(&theta), "conjugation") {
            t.check(r.holds && r.no_negative_powers, || format!("map {k}: conjugation identity"));
        }
        if let Some(fam) = t.result(path_family(&theta), "family") {
            let at0 = evaluate_path(&fam, &zero).map(|m| m.is_identity());
            let at1 = evaluate_path(&fam, &one).map(|m| m == theta);
            t.check(at0 == Ok(true) && at1 == Ok(true), || format!("map {k}: endpoints"));
        }
    }
    let t0s = [
        CycNum::one(&field),
        CycNum::from_int(&field, 2),
        CycNum::from_int(&field, -1),
        CycNum::zeta(&field),
    ];
    for k in 0..8 {
        let (theta, inv) = random_triangular_pair(&mut rng, &field, 1 + k % 3, 4);
        if let Some(fam) = t.result(path_family(&theta), "family") {
            for t0 in &t0s {
                if let Some(r) = t.result(evaluate_path_with_inverse(&fam, t0, &inv), "inverse") {
                    t.check(r.verified, || format!("triangular map {k}: inverse at t0={t0}"));
                }
            }
        }
    }
    let mut factored = 0;
    while factored < 10 {
        let n = 1 + factored % 3;
        let sigma = random_general_map(&mut rng, &field, n, 3);
        let Some(s) = find_etale_point(&sigma, 3) else {
            continue;
        };
        if let Some(f) = t.result(factor_through_origin(&sigma, &s), "factor") {
            t.check(reassemble(&f).map(|m| m == sigma) == Ok(true), || format!("sigma {factored}: reassembly"));
            t.check(check_origin_conditions(&f.theta).passes(), || format!("sigma {factored}: theta"));
        }
        factored += 1;
    }
    t.notes.push("25 random maps, 10 factorizations, 8 inverse families".into());
    t
}

fn homeo_checks(_cfg: &Config) -> Tally {
    let mut t = Tally::default();
    let hundredth = selfcomp_core::Rational::new(1.into(), 100.into());
    for (n, b, expected) in [(2, 2, 6), (1, 1, 3)] {
        if let Some(h) = t.result(homeo_bound(n, b), "homeo_bound") {
            t.check(h.minimal_d == expected, || format!("(n={n}, B={b}): d = {}", h.minimal_d));
            t.check(&h.upper - &h.lower < hundredth, || format!("(n={n}, B={b}): enclosure too wide"));
            t.notes.push(format!("(n={n}, B={b}) -> d={}", h.minimal_d));
        }
    }
    t
}
