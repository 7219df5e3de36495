//! The `selfcomp` command line.
//!
//! Every command prints one JSON document (or a short text rendering with
//! `--format text`) on stdout or to `--out`. Failures print
//! `{"error": …}` on stderr. Exit codes: 0 success, 1 a verification
//! returned false, 2 invalid input, 3 nothing to construct.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use selfcomp_core::compress::{
    construct_self_compression, invariant_form, line_degree, linear_self_compression,
    point_off_zero_set, series, series_consistency, verify_descent, verify_equivariance,
    verify_functional_equation, EquivarianceMode, InvariantRoute, Moebius, SeriesKind,
};
use selfcomp_core::connect::{
    check_origin_conditions, evaluate_path, factor_through_origin, find_etale_point, path_family,
    verify_conjugation_identity, verify_conjugation_truncated, AffineMap, PolyMap,
};
use selfcomp_core::forms::Form;
use selfcomp_core::groups::{chi_stabilizer_characters, linear_characters, LinearCharacter, MatrixGroup};
use selfcomp_core::jordan::{
    homeo_bound, jordan_report_with_cap, m_of_with_cap, nonembeddability_threshold, p_rank_with_cap,
    product_inequality_check_with_cap,
};
use selfcomp_core::{CycField, CycNum};

use crate::config::{Config, OutputFormat};
use crate::error::{AppError, AppResult};
use crate::json::{
    decode_form_pair, encode_matrix, rational_to_string, to_pretty, CertificateJson, CycNumJson, FormJson,
    GroupTableJson, JordanJson, MatrixGroupJson, PathFamilyJson, PolyMapJson, SeriesJson,
};
use crate::resolve::{group_kind, group_table, matrix_group};
use crate::suite::{icosahedral_generators, icosahedral_pair, run_suite, suite_exit_code, Status};

#[derive(Parser, Debug)]
#[command(name = "selfcomp", version, about = "Equivariant self-compressions of binary forms and related checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct GlobalArgs {
    /// `key = value` configuration file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// `json` or `text`.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub upto: Option<u32>,
    #[arg(long = "alpha-bound", global = true)]
    pub alpha_bound: Option<u32>,
    #[arg(long = "subgroup-cap", global = true)]
    pub subgroup_cap: Option<usize>,
    #[arg(long, global = true)]
    pub truncation: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Catalog and diagonal matrix groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Coefficients of a generating series.
    Series {
        #[command(flatten)]
        group: GroupArg,
        /// `S`, `P_chi`, `P_1` or `P_theta`.
        #[arg(long, default_value = "S")]
        kind: String,
    },
    /// Homogeneous self-compressions.
    #[command(subcommand)]
    Compress(CompressCmd),
    /// A nonzero invariant form of the given degree.
    Invariant {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: u32,
    },
    /// The self-map `x ↦ f(x)·x` for an invariant `f`.
    Linmap {
        #[command(flatten)]
        group: GroupArg,
        /// Degree of the invariant found automatically.
        #[arg(long)]
        degree: Option<u32>,
        /// A form file `{"nvars", "degree", "coeffs"}` used instead.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Brute-force Jordan constants of finite tables.
    #[command(subcommand)]
    Jordan(JordanCmd),
    /// The path joining a normalized polynomial map to the identity.
    #[command(subcommand)]
    Path(PathCmd),
    /// Runs the acceptance battery.
    Suite {
        /// Comma-separated criterion ids; all when absent.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    /// Catalog name (`binary-dihedral:ell=3`, `tetrahedral`, `Q8`), `T2(2,2)`,
    /// or a generator JSON file.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub ell: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// Generators, conductor and optionally all elements.
    Build {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        elements: bool,
    },
    /// Multiplication table of a matrix group or table descriptor.
    Table {
        /// Matrix group; exclusive with `--table`.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        /// Table descriptor such as `S4`, `S3xZ2`, or a JSON file.
        #[arg(long)]
        table: Option<String>,
    },
    /// Linear characters, and those that stabilize the defining one.
    Chars {
        #[command(flatten)]
        group: GroupArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum CompressCmd {
    /// Builds a certificate for a catalog group in the given degree.
    Construct {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: u32,
    },
    /// Checks equivariance and descent of a pair of forms.
    VerifyMap {
        /// Required with `--input`; the icosahedral example otherwise.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        /// JSON with a `phi` pair (a certificate works).
        #[arg(long)]
        input: Option<PathBuf>,
        /// `linear` or `projective`.
        #[arg(long, default_value = "linear")]
        mode: String,
    },
    /// Checks the functional equation of the descended rational function.
    VerifyFueq {
        /// JSON with a `phi` pair and `generators`, each a list
        /// `[a, b, c, e]` of numbers; the icosahedral example otherwise.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Closed-form series against character computations.
    Consistency {
        #[command(flatten)]
        group: GroupArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum JordanCmd {
    /// Minimal index of a normal abelian subgroup.
    M {
        #[arg(long)]
        table: String,
    },
    /// `m`, `J` and `j` together.
    Constants {
        #[arg(long)]
        table: String,
    },
    /// The product inequalities for `A × B`; pass `--table` twice.
    Product {
        #[arg(long, num_args = 1, required = true)]
        table: Vec<String>,
    },
    /// Largest rank of an elementary abelian `p`-subgroup.
    Prank {
        #[arg(long)]
        table: String,
        #[arg(long)]
        p: u64,
    },
    /// `floor(log2 j)`, the largest product length that may still embed.
    Threshold {
        #[arg(long)]
        j: u64,
    },
    /// Certified enclosure and minimal integer for the homeomorphism bound.
    HomeoBound {
        #[arg(long)]
        n: u64,
        /// Sum of Betti numbers.
        #[arg(long)]
        betti: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum PathCmd {
    /// Writes a map as affine ∘ normalized ∘ affine.
    Factor {
        #[arg(long)]
        input: PathBuf,
        /// Height bound for the search of a point with invertible Jacobian.
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
    /// The polynomial family in `t`.
    Family {
        #[arg(long)]
        input: PathBuf,
    },
    /// Conjugation identity and endpoints of the family.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Compare only up to the configured truncation order.
        #[arg(long)]
        truncated: bool,
    },
}

/// A command's result: JSON, a text rendering and the exit code.
struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Report {
        Report { json, text: text.into(), code: 0 }
    }

    fn verdict(json: Value, text: impl Into<String>, passed: bool) -> Report {
        Report { json, text: text.into(), code: if passed { 0 } else { 1 } }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            e.exit_code()
        }
    }
}

fn load_config(g: &GlobalArgs) -> AppResult<Config> {
    let mut cfg = match &g.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let mut set = |k: &str, v: Option<String>| v.map_or(Ok(()), |v| cfg.set(k, &v));
    set("series_upto", g.upto.map(|x| x.to_string()))?;
    set("alpha_norm_bound", g.alpha_bound.map(|x| x.to_string()))?;
    set("subgroup_order_cap", g.subgroup_cap.map(|x| x.to_string()))?;
    set("truncation_order", g.truncation.map(|x| x.to_string()))?;
    set("output", g.format.clone())?;
    Ok(cfg)
}

fn execute(cli: &Cli) -> AppResult<i32> {
    let cfg = load_config(&cli.global)?;
    let report = match &cli.command {
        Command::Group(c) => group_cmd(c)?,
        Command::Series { group, kind } => series_cmd(&cfg, group, kind)?,
        Command::Compress(c) => compress_cmd(&cfg, c)?,
        Command::Invariant { group, degree } => invariant_cmd(group, *degree)?,
        Command::Linmap { group, degree, input } => linmap_cmd(group, *degree, input.as_ref())?,
        Command::Jordan(c) => jordan_cmd(&cfg, c)?,
        Command::Path(c) => path_cmd(&cfg, c)?,
        Command::Suite { only } => suite_cmd(&cfg, only),
    };
    let body = match cfg.output {
        OutputFormat::Json => to_pretty(&report.json),
        OutputFormat::Text => report.text,
    };
    match &cli.global.out {
        Some(p) => std::fs::write(p, body + "\n")?,
        None => println!("{body}"),
    }
    Ok(report.code)
}

fn load_group(g: &GroupArg) -> AppResult<MatrixGroup> {
    matrix_group(&g.group, g.ell)
}

fn read_json(path: &PathBuf) -> AppResult<Value> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn character_json(c: &LinearCharacter) -> Value {
    json!(c.values().iter().map(CycNumJson::encode).collect::<Vec<_>>())
}

fn group_cmd(c: &GroupCmd) -> AppResult<Report> {
    Ok(match c {
        GroupCmd::Build { group, elements } => {
            let g = load_group(group)?;
            let text = format!("{} of order {} over Q(zeta_{})", g.kind().name(), g.order(), g.conductor());
            Report::ok(serde_json::to_value(MatrixGroupJson::encode(&g, *elements))?, text)
        }
        GroupCmd::Table { group, ell, table } => {
            let t = match (group, table) {
                (Some(g), None) => matrix_group(g, *ell)?.to_table(),
                (None, Some(t)) => group_table(t)?,
                _ => return Err(AppError::Invalid("give exactly one of --group and --table".into())),
            };
            let text = format!("table of order {}", t.order());
            Report::ok(serde_json::to_value(GroupTableJson::encode(&t))?, text)
        }
        GroupCmd::Chars { group } => {
            let g = load_group(group)?;
            let all = linear_characters(&g)?;
            let stab = chi_stabilizer_characters(&g)?;
            let text = format!("{} linear characters, {} stabilize chi", all.len(), stab.len());
            Report::ok(
                json!({
                    "linear": all.iter().map(character_json).collect::<Vec<_>>(),
                    "chi_stabilizer": stab.iter().map(character_json).collect::<Vec<_>>(),
                }),
                text,
            )
        }
    })
}

fn series_cmd(cfg: &Config, group: &GroupArg, kind: &str) -> AppResult<Report> {
    let k = SeriesKind::parse(kind).ok_or_else(|| AppError::Invalid(format!("unknown series kind {kind:?}")))?;
    let s = series(&group_kind(&group.group, group.ell)?, k, cfg.series_upto)?;
    let text = s
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, c)| format!("{c}*t^{d}"))
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(Report::ok(serde_json::to_value(SeriesJson::encode(&s))?, text))
}

fn parse_mode(s: &str) -> AppResult<EquivarianceMode> {
    match s {
        "linear" => Ok(EquivarianceMode::Linear),
        "projective" => Ok(EquivarianceMode::Projective),
        _ => Err(AppError::Invalid(format!("unknown mode {s:?}"))),
    }
}

fn compress_cmd(cfg: &Config, c: &CompressCmd) -> AppResult<Report> {
    match c {
        CompressCmd::Construct { group, degree } => {
            let g = build_catalog(group)?;
            let cert = construct_self_compression(&g, *degree, cfg.alpha_norm_bound)?;
            let text = format!(
                "{} d={}: alpha={:?}, descent degree {}, checks {}\nphi1 = {}\nphi2 = {}",
                cert.group.name(),
                cert.d,
                cert.alpha,
                cert.descent_degree,
                if cert.all_checks_pass() { "pass" } else { "FAIL" },
                cert.phi1,
                cert.phi2
            );
            let passed = cert.all_checks_pass();
            Ok(Report::verdict(serde_json::to_value(CertificateJson::encode(&cert))?, text, passed))
        }
        CompressCmd::VerifyMap { group, ell, input, mode } => verify_map(group.as_deref(), *ell, input.as_ref(), mode),
        CompressCmd::VerifyFueq { input } => verify_fueq(input.as_ref()),
        CompressCmd::Consistency { group } => {
            let g = build_catalog(group)?;
            let r = series_consistency(&g, cfg.series_upto)?;
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| json!({ "d": row.d, "s_d": row.s_d, "mult_chi": row.mult_chi, "dims_prev": row.dims_prev }))
                .collect();
            let text = format!(
                "{}: closed forms agree up to {}; inequality {}; theta series {:?}",
                r.group.name(),
                cfg.series_upto,
                r.inequality_holds,
                r.theta_series_equal
            );
            let passed = r.inequality_holds && r.theta_series_equal != Some(false);
            Ok(Report::verdict(
                json!({
                    "group": r.group.name(),
                    "rows": rows,
                    "inequality_holds": r.inequality_holds,
                    "theta_series_equal": r.theta_series_equal,
                }),
                text,
                passed,
            ))
        }
    }
}

/// Catalog groups only: the series and certificates are indexed by kind.
fn build_catalog(group: &GroupArg) -> AppResult<MatrixGroup> {
    Ok(selfcomp_core::groups::build_group(&group_kind(&group.group, group.ell)?)?)
}

fn verify_map(group: Option<&str>, ell: Option<u32>, input: Option<&PathBuf>, mode: &str) -> AppResult<Report> {
    let mode = parse_mode(mode)?;
    let Some(path) = input else {
        // the icosahedral example, projectively against its two Möbius generators
        let f = CycField::new(5);
        let (p, q) = icosahedral_pair(&f);
        let mats: Vec<_> = icosahedral_generators(&f)?.iter().map(Moebius::matrix).collect();
        let r = verify_equivariance(&mats, &p, &q, EquivarianceMode::Projective)?;
        let text = format!("icosahedral example: projective equivariance {}", r.passed);
        return Ok(Report::verdict(
            json!({ "equivariant": r.passed, "first_failure": r.first_failure, "mode": "projective" }),
            text,
            r.passed,
        ));
    };
    let name = group.ok_or_else(|| AppError::Invalid("--input needs --group".into()))?;
    let g = matrix_group(name, ell)?;
    let (p, q) = decode_form_pair(&read_json(path)?, g.field())?;
    let r = verify_equivariance(g.elements(), &p, &q, mode)?;
    let mut out = json!({ "equivariant": r.passed, "first_failure": r.first_failure });
    let mut passed = r.passed;
    if mode == EquivarianceMode::Linear && g.kind().expected_order().is_some() {
        let kind = g.kind().clone();
        let catalog = selfcomp_core::groups::build_group(&kind)?;
        let d = verify_descent(&catalog, &p, &q)?;
        out["descent"] = json!({
            "gcd": FormJson::encode(&d.gcd),
            "gcd_degree": d.gcd_degree,
            "descent_degree": d.descent_degree,
            "nontrivial": d.nontrivial,
            "criteria_agree": d.criteria_agree,
        });
        passed &= d.nontrivial && d.criteria_agree;
    }
    let text = format!("equivariant {}; {}", r.passed, out.get("descent").map_or("no descent check".into(), |d| d.to_string()));
    Ok(Report::verdict(out, text, passed))
}

fn decode_moebius(v: &Value, field: &std::sync::Arc<CycField>) -> AppResult<Vec<Moebius>> {
    let gens: Vec<[CycNumJson; 4]> = serde_json::from_value(v.clone())?;
    gens.iter()
        .map(|[a, b, c, e]| {
            Ok(Moebius::new(
                a.decode_into(field)?,
                b.decode_into(field)?,
                c.decode_into(field)?,
                e.decode_into(field)?,
            )?)
        })
        .collect()
}

fn verify_fueq(input: Option<&PathBuf>) -> AppResult<Report> {
    let (p, q, gens) = match input {
        None => {
            let f = CycField::new(5);
            let (p, q) = icosahedral_pair(&f);
            (p, q, icosahedral_generators(&f)?)
        }
        Some(path) => {
            let v = read_json(path)?;
            let pair: [FormJson; 2] = serde_json::from_value(
                v.get("phi").cloned().ok_or_else(|| AppError::Invalid("expected a \"phi\" field".into()))?,
            )?;
            let mut conductor = pair[0].conductor().max(1);
            conductor = num_integer::lcm(conductor, pair[1].conductor().max(1));
            if let Some(gs) = v.get("generators") {
                let gs: Vec<Vec<CycNumJson>> = serde_json::from_value(gs.clone())?;
                for c in gs.iter().flatten() {
                    conductor = num_integer::lcm(conductor, c.conductor.max(1));
                }
            }
            let field = CycField::new(conductor);
            let (p, q) = (pair[0].decode_into(&field)?, pair[1].decode_into(&field)?);
            let gens = match v.get("generators") {
                Some(gs) => decode_moebius(gs, &field)?,
                None => return Err(AppError::Invalid("expected a \"generators\" field".into())),
            };
            (p, q, gens)
        }
    };
    if p.nvars() != 2 || q.nvars() != 2 {
        return Err(AppError::Invalid("need binary forms".into()));
    }
    let r = verify_functional_equation(&p.dehomogenize(), &q.dehomogenize(), &gens)?;
    let text = format!("functional equation {:?}, degree {}", r.passed, r.degree);
    Ok(Report::verdict(
        json!({ "passed": r.passed, "degree": r.degree, "nontrivial": r.nontrivial }),
        text,
        r.all_passed(),
    ))
}

fn route_name(r: InvariantRoute) -> &'static str {
    match r {
        InvariantRoute::Reynolds => "reynolds",
        InvariantRoute::OrbitProduct => "orbit-product",
    }
}

fn invariant_cmd(group: &GroupArg, degree: u32) -> AppResult<Report> {
    let g = load_group(group)?;
    let f = invariant_form(&g, degree)?
        .ok_or_else(|| AppError::Infeasible(format!("no nonzero invariant of degree {degree}")))?;
    let text = format!("{} (via {})", f.form, route_name(f.route));
    Ok(Report::ok(json!({ "form": FormJson::encode(&f.form), "route": route_name(f.route) }), text))
}

fn linmap_cmd(group: &GroupArg, degree: Option<u32>, input: Option<&PathBuf>) -> AppResult<Report> {
    let g = load_group(group)?;
    let f: Form = match (degree, input) {
        (Some(d), None) => {
            invariant_form(&g, d)?
                .ok_or_else(|| AppError::Infeasible(format!("no nonzero invariant of degree {d}")))?
                .form
        }
        (None, Some(p)) => {
            let j: FormJson = serde_json::from_value(read_json(p)?)?;
            j.decode_into(g.field())?
        }
        _ => return Err(AppError::Invalid("give exactly one of --degree and --input".into())),
    };
    let m = linear_self_compression(&g, &f)?;
    let line = point_off_zero_set(&f).and_then(|a| line_degree(&m, &a));
    let passed = m.equivariant && line == Some(f.degree() + 1);
    let text = format!("x -> ({})*x: equivariant {}, line degree {:?}", f, m.equivariant, line);
    Ok(Report::verdict(
        json!({
            "invariant": FormJson::encode(&m.invariant),
            "components": m.components.iter().map(FormJson::encode).collect::<Vec<_>>(),
            "equivariant": m.equivariant,
            "line_degree": line,
        }),
        text,
        passed,
    ))
}

fn jordan_cmd(cfg: &Config, c: &JordanCmd) -> AppResult<Report> {
    let cap = cfg.subgroup_order_cap;
    Ok(match c {
        JordanCmd::M { table } => {
            let (m, w) = m_of_with_cap(&group_table(table)?, cap)?;
            Report::ok(json!({ "m": m, "witness_subgroup": w }), format!("m = {m}"))
        }
        JordanCmd::Constants { table } => {
            let r = jordan_report_with_cap(&group_table(table)?, cap)?;
            let text = format!("m = {}, J = {}, j = {}", r.m, r.big_j, r.small_j);
            Report::ok(serde_json::to_value(JordanJson::encode(&r))?, text)
        }
        JordanCmd::Product { table } => {
            let [a, b] = table.as_slice() else {
                return Err(AppError::Invalid("product needs exactly two --table values".into()));
            };
            let r = product_inequality_check_with_cap(&group_table(a)?, &group_table(b)?, cap)?;
            let text = format!(
                "m {} <= {}*{}, J {} <= {}*{}, j {} <= {}*{}",
                r.product.m, r.a.m, r.b.m, r.product.big_j, r.a.big_j, r.b.big_j, r.product.small_j, r.a.small_j, r.b.small_j
            );
            Report::verdict(
                json!({
                    "a": JordanJson::encode(&r.a),
                    "b": JordanJson::encode(&r.b),
                    "product": JordanJson::encode(&r.product),
                    "m_holds": r.m_holds,
                    "J_holds": r.big_j_holds,
                    "j_holds": r.small_j_holds,
                }),
                text,
                r.holds(),
            )
        }
        JordanCmd::Prank { table, p } => {
            let r = p_rank_with_cap(&group_table(table)?, *p, cap)?;
            Report::ok(json!({ "p": p, "rank": r }), format!("{p}-rank {r}"))
        }
        JordanCmd::Threshold { j } => {
            let r = nonembeddability_threshold(*j)?;
            Report::ok(json!({ "j": j, "threshold": r }), format!("threshold {r}"))
        }
        JordanCmd::HomeoBound { n, betti } => {
            let h = homeo_bound(*n, *betti)?;
            let text = format!("{} < bound < {}, minimal d = {}", h.lower, h.upper, h.minimal_d);
            Report::ok(
                json!({
                    "n": h.n,
                    "betti_sum": h.betti_sum,
                    "lower": rational_to_string(&h.lower),
                    "upper": rational_to_string(&h.upper),
                    "exact": h.exact,
                    "minimal_d": h.minimal_d,
                }),
                text,
            )
        }
    })
}

fn load_map(path: &PathBuf) -> AppResult<PolyMap> {
    let j: PolyMapJson = serde_json::from_value(read_json(path)?)?;
    j.decode()
}

fn affine_json(a: &AffineMap) -> Value {
    json!({
        "linear": encode_matrix(&a.linear),
        "translation": a.translation.iter().map(CycNumJson::encode).collect::<Vec<_>>(),
    })
}

fn path_cmd(cfg: &Config, c: &PathCmd) -> AppResult<Report> {
    match c {
        PathCmd::Factor { input, height } => {
            let sigma = load_map(input)?;
            let s = find_etale_point(&sigma, *height)
                .ok_or_else(|| AppError::Infeasible(format!("no point of height <= {height} with invertible Jacobian")))?;
            let f = factor_through_origin(&sigma, &s)?;
            let text = format!("factored at {:?}", s.iter().map(ToString::to_string).collect::<Vec<_>>());
            Ok(Report::ok(
                json!({
                    "point": s.iter().map(CycNumJson::encode).collect::<Vec<_>>(),
                    "alpha": affine_json(&f.alpha),
                    "theta": PolyMapJson::encode(&f.theta),
                    "tau": affine_json(&f.tau),
                }),
                text,
            ))
        }
        PathCmd::Family { input } => {
            let fam = path_family(&load_map(input)?)?;
            let text = format!("family of {} components in t", fam.components.len());
            Ok(Report::ok(serde_json::to_value(PathFamilyJson::encode(&fam))?, text))
        }
        PathCmd::Check { input, truncated } => {
            let theta = load_map(input)?;
            let origin = check_origin_conditions(&theta);
            if !origin.passes() {
                return Ok(Report::verdict(
                    json!({
                        "defined": origin.defined,
                        "fixes_origin": origin.fixes_origin,
                        "identity_differential": origin.identity_differential,
                    }),
                    "origin conditions fail",
                    false,
                ));
            }
            let r = if *truncated {
                verify_conjugation_truncated(&theta, cfg.truncation_order)?
            } else {
                verify_conjugation_identity(&theta)?
            };
            let fam = path_family(&theta)?;
            let field = theta.field().clone();
            let at0 = evaluate_path(&fam, &CycNum::zero(&field))?.is_identity();
            let at1 = evaluate_path(&fam, &CycNum::one(&field))? == theta;
            let passed = r.holds && r.no_negative_powers && at0 && at1;
            let text = format!(
                "conjugation identity {}, polynomial in t {}, rho(0) = id {}, rho(1) = theta {}",
                r.holds, r.no_negative_powers, at0, at1
            );
            Ok(Report::verdict(
                json!({
                    "conjugation_holds": r.holds,
                    "no_negative_powers": r.no_negative_powers,
                    "start_is_identity": at0,
                    "end_is_theta": at1,
                }),
                text,
                passed,
            ))
        }
    }
}

fn suite_cmd(cfg: &Config, only: &[u32]) -> Report {
    let outcomes = run_suite(cfg, only);
    let text = outcomes.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    let json = json!({
        "criteria": outcomes
            .iter()
            .map(|o| json!({
                "id": o.id,
                "title": o.title,
                "status": o.status.to_string(),
                "detail": o.detail,
                "seconds": o.elapsed.as_secs_f64(),
            }))
            .collect::<Vec<_>>(),
        "all_passed": outcomes.iter().all(|o| o.status != Status::Fail),
    });
    Report { json, text, code: suite_exit_code(&outcomes) }
}
