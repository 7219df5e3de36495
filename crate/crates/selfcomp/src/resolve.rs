//! Group descriptors given on the command line: catalog names, `T2(2,2)`
//! diagonal groups, abstract table names, or JSON files.

use std::path::Path;

use selfcomp_core::groups::{build_group, direct_product, tn_group, GroupKind, GroupTable, MatrixGroup};

use crate::error::{AppError, AppResult};
use crate::json::{parse_kind, parse_kind_name, GroupTableJson, MatrixGroupJson};

fn invalid<T>(msg: String) -> AppResult<T> {
    Err(AppError::Invalid(msg))
}

fn looks_like_file(s: &str) -> bool {
    s.ends_with(".json") || Path::new(s).is_file()
}

/// `T<n>(<m_1>,…,<m_r>)`.
fn parse_tn(s: &str) -> Option<AppResult<MatrixGroup>> {
    let rest = s.strip_prefix('T')?;
    let (n, factors) = rest.split_once('(')?;
    let factors = factors.strip_suffix(')')?;
    let n: usize = n.parse().ok()?;
    let factors: Option<Vec<u32>> = if factors.trim().is_empty() {
        Some(Vec::new())
    } else {
        factors.split(',').map(|x| x.trim().parse().ok()).collect()
    };
    Some(factors.map_or_else(
        || invalid(format!("bad factor list in {s:?}")),
        |f| tn_group(n, &f).map_err(AppError::from),
    ))
}

/// Resolves `--group` (with an optional separate `--ell`) to a kind.
pub fn group_kind(name: &str, ell: Option<u32>) -> AppResult<GroupKind> {
    match name {
        "Q8" | "quaternion" => return Ok(GroupKind::BinaryDihedral(2)),
        "2T" => return Ok(GroupKind::BinaryTetrahedral),
        "2O" => return Ok(GroupKind::BinaryOctahedral),
        "2I" => return Ok(GroupKind::BinaryIcosahedral),
        _ => {}
    }
    if name.contains(':') {
        if ell.is_some() {
            return invalid(format!("--ell given twice for {name:?}"));
        }
        return parse_kind_name(name);
    }
    parse_kind(name, ell)
}

pub fn matrix_group(name: &str, ell: Option<u32>) -> AppResult<MatrixGroup> {
    if looks_like_file(name) {
        let j: MatrixGroupJson = serde_json::from_str(&std::fs::read_to_string(name)?)?;
        return j.decode();
    }
    if let Some(g) = parse_tn(name) {
        return g;
    }
    Ok(build_group(&group_kind(name, ell)?)?)
}

fn table_atom(s: &str) -> AppResult<GroupTable> {
    let num = |p: &str| -> Option<usize> { s.strip_prefix(p)?.parse().ok() };
    if let Some(n) = num("S").filter(|&n| (1..=6).contains(&n)) {
        return Ok(GroupTable::symmetric(n));
    }
    if let Some(n) = num("Z").or_else(|| num("C")).filter(|&n| n >= 1) {
        return Ok(GroupTable::cyclic(n));
    }
    if let Some(n) = num("D").filter(|&n| n >= 1) {
        return Ok(GroupTable::dihedral(n));
    }
    if let Some((p, r)) = s.strip_prefix('E').and_then(|r| r.split_once('^')) {
        if let (Ok(p), Ok(r)) = (p.parse::<usize>(), r.parse::<u32>()) {
            if p >= 2 {
                return Ok(GroupTable::elementary_abelian(p, r));
            }
        }
    }
    match matrix_group(s, None) {
        Ok(g) => Ok(g.to_table()),
        Err(_) => invalid(format!("unknown table {s:?}")),
    }
}

/// A multiplication table: a JSON file, or atoms such as `S4`, `Z6`, `D4`
/// (order 8), `E2^3`, `Q8`, `icosahedral`, joined by `x` for products.
pub fn group_table(desc: &str) -> AppResult<GroupTable> {
    if looks_like_file(desc) {
        let j: GroupTableJson = serde_json::from_str(&std::fs::read_to_string(desc)?)?;
        return j.decode();
    }
    let mut parts = desc.split('x');
    let first = table_atom(parts.next().unwrap_or(""))?;
    parts.try_fold(first, |acc, p| Ok(direct_product(&acc, &table_atom(p)?)))
}
