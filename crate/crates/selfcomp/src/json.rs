//! JSON encodings of the core types.
//!
//! Each encoded type has a serde data-transfer struct plus `encode`/`decode`
//! conversions; decoding validates against the core invariants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use selfcomp_core::compress::{CertificateChecks, CompressionCertificate, SeriesKind, SeriesTable};
use selfcomp_core::connect::{PathFamily, PolyMap};
use selfcomp_core::forms::Form;
use selfcomp_core::groups::{GroupKind, GroupTable, Mat, MatrixGroup};
use selfcomp_core::jordan::JordanReport;
use selfcomp_core::linalg::Matrix;
use selfcomp_core::poly::MPoly;
use selfcomp_core::{CycField, CycNum, Rational};

use crate::error::{AppError, AppResult};

fn invalid<T>(msg: impl Into<String>) -> AppResult<T> {
    Err(AppError::Invalid(msg.into()))
}

pub fn rational_to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> AppResult<Rational> {
    let q: Rational = s
        .trim()
        .parse()
        .map_err(|_| AppError::Invalid(format!("bad rational {s:?}")))?;
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycNumJson {
    pub conductor: u32,
    pub coeffs: Vec<String>,
}

impl CycNumJson {
    pub fn encode(x: &CycNum) -> CycNumJson {
        CycNumJson {
            conductor: x.conductor(),
            coeffs: x.coeffs().iter().map(rational_to_string).collect(),
        }
    }

    /// Decodes into `field`, embedding from a subfield when needed.
    pub fn decode_into(&self, field: &Arc<CycField>) -> AppResult<CycNum> {
        if self.conductor == 0 {
            return invalid("conductor must be positive");
        }
        let own = CycField::new(self.conductor);
        if self.coeffs.len() != own.degree() {
            return invalid(format!(
                "conductor {} needs {} coefficients, got {}",
                self.conductor,
                own.degree(),
                self.coeffs.len()
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<AppResult<Vec<_>>>()?;
        let x = CycNum::from_coeffs(&own, &coeffs);
        if own.conductor() == field.conductor() {
            return Ok(CycNum::from_coeffs(field, &coeffs));
        }
        Ok(x.embed_into(field)?)
    }

    pub fn decode(&self) -> AppResult<CycNum> {
        self.decode_into(&CycField::new(self.conductor.max(1)))
    }
}

fn lcm_conductor(nums: &[&CycNumJson]) -> u32 {
    use num_integer::Integer;
    nums.iter().fold(1u32, |acc, x| acc.lcm(&x.conductor.max(1)))
}

pub type MatrixJson = Vec<Vec<CycNumJson>>;

pub fn encode_matrix(m: &Mat) -> MatrixJson {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(CycNumJson::encode).collect())
        .collect()
}

pub fn decode_matrix(m: &MatrixJson, field: &Arc<CycField>) -> AppResult<Mat> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|x| x.decode_into(field)).collect::<AppResult<Vec<_>>>())
        .collect::<AppResult<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, rows)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixGroupJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    pub conductor: u32,
    pub generators: Vec<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<MatrixJson>>,
}

pub fn parse_kind(tag: &str, ell: Option<u32>) -> AppResult<GroupKind> {
    let need_ell = || ell.ok_or_else(|| AppError::Invalid(format!("{tag} needs ell")));
    Ok(match tag {
        "cyclic" => GroupKind::Cyclic(need_ell()?),
        "binary-dihedral" | "dihedral" => GroupKind::BinaryDihedral(need_ell()?),
        "binary-tetrahedral" | "tetrahedral" => GroupKind::BinaryTetrahedral,
        "binary-octahedral" | "octahedral" => GroupKind::BinaryOctahedral,
        "binary-icosahedral" | "icosahedral" => GroupKind::BinaryIcosahedral,
        "custom" => GroupKind::Custom,
        _ => return invalid(format!("unknown group kind {tag:?}")),
    })
}

impl MatrixGroupJson {
    pub fn encode(g: &MatrixGroup, with_elements: bool) -> MatrixGroupJson {
        MatrixGroupJson {
            kind: g.kind().tag().to_string(),
            ell: g.kind().ell(),
            conductor: g.conductor(),
            generators: g.generators().iter().map(encode_matrix).collect(),
            elements: with_elements.then(|| g.elements().iter().map(encode_matrix).collect()),
        }
    }

    /// Re-enumerates the group from its generators; a supplied element
    /// list must match the enumeration as a set.
    pub fn decode(&self) -> AppResult<MatrixGroup> {
        let kind = parse_kind(&self.kind, self.ell)?;
        if self.conductor == 0 {
            return invalid("conductor must be positive");
        }
        let field = CycField::new(self.conductor);
        let gens = self
            .generators
            .iter()
            .map(|m| decode_matrix(m, &field))
            .collect::<AppResult<Vec<_>>>()?;
        let dim = gens.first().map_or(0, |g| g.rows());
        if dim == 0 {
            return invalid("a group needs at least one generator");
        }
        let g = MatrixGroup::from_generators(kind, &field, dim, gens)?;
        if let Some(els) = &self.elements {
            let mut listed = els
                .iter()
                .map(|m| decode_matrix(m, &field))
                .collect::<AppResult<Vec<_>>>()?;
            listed.sort();
            let mut ours = g.elements().to_vec();
            ours.sort();
            if listed != ours {
                return invalid("element list does not match the generated group");
            }
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTableJson {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    /// Element labels; indices are used when absent.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

impl GroupTableJson {
    pub fn encode(t: &GroupTable) -> GroupTableJson {
        GroupTableJson {
            order: t.order(),
            mul: t.mul_table().to_vec(),
            names: t.names().to_vec(),
        }
    }

    pub fn decode(&self) -> AppResult<GroupTable> {
        if self.mul.len() != self.order {
            return invalid("order does not match the table");
        }
        let names = (!self.names.is_empty()).then(|| self.names.clone());
        Ok(GroupTable::from_mul(self.mul.clone(), names)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub nvars: usize,
    pub degree: u32,
    pub coeffs: Vec<CycNumJson>,
}

impl FormJson {
    pub fn encode(f: &Form) -> FormJson {
        FormJson {
            nvars: f.nvars(),
            degree: f.degree(),
            coeffs: f.coeffs().iter().map(CycNumJson::encode).collect(),
        }
    }

    pub fn conductor(&self) -> u32 {
        lcm_conductor(&self.coeffs.iter().collect::<Vec<_>>())
    }

    pub fn decode_into(&self, field: &Arc<CycField>) -> AppResult<Form> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.decode_into(field))
            .collect::<AppResult<Vec<_>>>()?;
        Ok(Form::new(field, self.nvars, self.degree, coeffs)?)
    }

    pub fn decode(&self) -> AppResult<Form> {
        self.decode_into(&CycField::new(self.conductor()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub equivariant: bool,
    pub jacobian_nonzero: bool,
    pub descent_nontrivial: bool,
    pub no_semi_invariant_factor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub group: String,
    pub d: u32,
    pub phi: [FormJson; 2],
    pub alpha: Vec<i64>,
    pub gcd_degree: u32,
    pub descent_degree: u32,
    pub checks: ChecksJson,
}

/// Parses `binary-dihedral:ell=3`, `cyclic:ell=4`, `tetrahedral`, …
pub fn parse_kind_name(name: &str) -> AppResult<GroupKind> {
    let (tag, rest) = match name.split_once(':') {
        Some((t, r)) => (t, Some(r)),
        None => (name, None),
    };
    let ell = match rest {
        None => None,
        Some(r) => {
            let v = r.strip_prefix("ell=").unwrap_or(r);
            Some(v.parse::<u32>().map_err(|_| AppError::Invalid(format!("bad ell in {name:?}")))?)
        }
    };
    parse_kind(tag, ell)
}

impl CertificateJson {
    pub fn encode(c: &CompressionCertificate) -> CertificateJson {
        CertificateJson {
            group: c.group.name(),
            d: c.d,
            phi: [FormJson::encode(&c.phi1), FormJson::encode(&c.phi2)],
            alpha: c.alpha.clone(),
            gcd_degree: c.gcd_degree,
            descent_degree: c.descent_degree,
            checks: ChecksJson {
                equivariant: c.checks.equivariant,
                jacobian_nonzero: c.checks.jacobian_nonzero,
                descent_nontrivial: c.checks.descent_nontrivial,
                no_semi_invariant_factor: c.checks.no_semi_invariant_factor,
            },
        }
    }

    pub fn decode(&self) -> AppResult<CompressionCertificate> {
        let group = parse_kind_name(&self.group)?;
        let conductor = match group.catalog_conductor() {
            Some(c) => c,
            None => self.phi[0].conductor(),
        };
        let field = CycField::new(conductor);
        let phi1 = self.phi[0].decode_into(&field)?;
        let phi2 = self.phi[1].decode_into(&field)?;
        if phi1.degree() != self.d || phi2.degree() != self.d {
            return invalid("form degree differs from d");
        }
        if self.gcd_degree + self.descent_degree != self.d {
            return invalid("gcd_degree + descent_degree must equal d");
        }
        Ok(CompressionCertificate {
            group,
            d: self.d,
            phi1,
            phi2,
            alpha: self.alpha.clone(),
            gcd_degree: self.gcd_degree,
            descent_degree: self.descent_degree,
            checks: CertificateChecks {
                equivariant: self.checks.equivariant,
                jacobian_nonzero: self.checks.jacobian_nonzero,
                descent_nontrivial: self.checks.descent_nontrivial,
                no_semi_invariant_factor: self.checks.no_semi_invariant_factor,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub kind: String,
    pub group: String,
    pub coeffs: Vec<i64>,
}

impl SeriesJson {
    pub fn encode(s: &SeriesTable) -> SeriesJson {
        SeriesJson {
            kind: s.kind.name().to_string(),
            group: s.group.name(),
            coeffs: s.coeffs.clone(),
        }
    }

    pub fn decode(&self) -> AppResult<SeriesTable> {
        let kind = SeriesKind::parse(&self.kind)
            .ok_or_else(|| AppError::Invalid(format!("unknown series kind {:?}", self.kind)))?;
        Ok(SeriesTable {
            kind,
            group: parse_kind_name(&self.group)?,
            coeffs: self.coeffs.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanJson {
    pub m: usize,
    #[serde(rename = "J")]
    pub big_j: usize,
    #[serde(rename = "j")]
    pub small_j: usize,
    pub witness_subgroup: Vec<usize>,
}

impl JordanJson {
    pub fn encode(r: &JordanReport) -> JordanJson {
        JordanJson {
            m: r.m,
            big_j: r.big_j,
            small_j: r.small_j,
            witness_subgroup: r.witness_subgroup.clone(),
        }
    }

    pub fn decode(&self) -> AppResult<JordanReport> {
        if self.m == 0 || self.small_j > self.big_j {
            return invalid("need m >= 1 and j <= J");
        }
        Ok(JordanReport {
            m: self.m,
            big_j: self.big_j,
            small_j: self.small_j,
            witness_subgroup: self.witness_subgroup.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exps: Vec<u32>,
    /// Power of the path parameter; absent outside path families.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i32>,
    pub coeff: CycNumJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub monomials: Vec<MonomialJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMapJson {
    pub n: usize,
    pub components: Vec<ComponentJson>,
}

fn encode_component(p: &MPoly, n: usize) -> ComponentJson {
    ComponentJson {
        monomials: p
            .terms()
            .map(|(e, c)| MonomialJson {
                exps: e[..n].iter().map(|&k| k as u32).collect(),
                t: (e.len() > n).then(|| e[n]),
                coeff: CycNumJson::encode(c),
            })
            .collect(),
    }
}

fn component_conductor(cs: &[ComponentJson]) -> u32 {
    lcm_conductor(
        &cs.iter()
            .flat_map(|c| c.monomials.iter().map(|m| &m.coeff))
            .collect::<Vec<_>>(),
    )
}

fn decode_component(
    c: &ComponentJson,
    n: usize,
    with_t: bool,
    field: &Arc<CycField>,
) -> AppResult<MPoly> {
    let nvars = n + usize::from(with_t);
    let mut p = MPoly::zero(field, nvars);
    for m in &c.monomials {
        if m.exps.len() != n {
            return invalid(format!("monomial has {} exponents, expected {n}", m.exps.len()));
        }
        let mut e: Vec<i32> = m.exps.iter().map(|&k| k as i32).collect();
        match (with_t, m.t) {
            (true, t) => e.push(t.unwrap_or(0)),
            (false, Some(_)) => return invalid("\"t\" is reserved for path families"),
            (false, None) => {}
        }
        p.add_term(e, &m.coeff.decode_into(field)?);
    }
    Ok(p)
}

impl PolyMapJson {
    pub fn encode(m: &PolyMap) -> PolyMapJson {
        PolyMapJson {
            n: m.n(),
            components: m.components().iter().map(|c| encode_component(c, m.n())).collect(),
        }
    }

    pub fn decode(&self) -> AppResult<PolyMap> {
        if self.components.len() != self.n {
            return invalid("a map on n-space needs n components");
        }
        let field = CycField::new(component_conductor(&self.components));
        let comps = self
            .components
            .iter()
            .map(|c| decode_component(c, self.n, false, &field))
            .collect::<AppResult<Vec<_>>>()?;
        Ok(PolyMap::new(comps)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamilyJson {
    pub base: PolyMapJson,
    /// Name of the path parameter, always `"t"`.
    pub parameter: String,
    pub components: Vec<ComponentJson>,
}

impl PathFamilyJson {
    pub fn encode(f: &PathFamily) -> PathFamilyJson {
        let n = f.base.n();
        PathFamilyJson {
            base: PolyMapJson::encode(&f.base),
            parameter: "t".to_string(),
            components: f.components.iter().map(|c| encode_component(c, n)).collect(),
        }
    }

    pub fn decode(&self) -> AppResult<PathFamily> {
        if self.parameter != "t" {
            return invalid("the path parameter must be named \"t\"");
        }
        let base = self.base.decode()?;
        let n = base.n();
        if self.components.len() != n {
            return invalid("component count differs from the base map");
        }
        let field = base.field().clone();
        let components = self
            .components
            .iter()
            .map(|c| decode_component(c, n, true, &field))
            .collect::<AppResult<Vec<_>>>()?;
        Ok(PathFamily { base, components })
    }
}

/// A pair of forms, as accepted by `compress verify-map`: either
/// `{"phi": [Form, Form]}` or a full certificate.
pub fn decode_form_pair(v: &Value, field: &Arc<CycField>) -> AppResult<(Form, Form)> {
    let phi = v
        .get("phi")
        .ok_or_else(|| AppError::Invalid("expected a \"phi\" field".into()))?;
    let pair: [FormJson; 2] = serde_json::from_value(phi.clone())?;
    Ok((pair[0].decode_into(field)?, pair[1].decode_into(field)?))
}

pub fn to_pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use selfcomp_core::groups::build_group;

    #[test]
    fn rational_strings() {
        let q = parse_rational("-3/6").unwrap();
        assert_eq!(rational_to_string(&q), "-1/2");
        assert_eq!(rational_to_string(&parse_rational("4").unwrap()), "4");
        assert!(parse_rational("1/0").is_err() || parse_rational("x").is_err());
    }

    #[test]
    fn cycnum_roundtrip_and_length() {
        let f = CycField::new(12);
        let x = &CycNum::zeta(&f) + &CycNum::from_int(&f, 3);
        let j = CycNumJson::encode(&x);
        assert_eq!(j.coeffs.len(), 4);
        assert_eq!(j.decode().unwrap(), x);
        let bad = CycNumJson {
            conductor: 12,
            coeffs: vec!["1".into()],
        };
        assert!(bad.decode().is_err());
    }

    #[test]
    fn group_roundtrip() {
        let g = build_group(&GroupKind::BinaryDihedral(3)).unwrap();
        let j = MatrixGroupJson::encode(&g, true);
        let text = to_pretty(&j);
        let back: MatrixGroupJson = serde_json::from_str(&text).unwrap();
        let h = back.decode().unwrap();
        assert_eq!(h.kind(), g.kind());
        assert_eq!(h.elements(), g.elements());
        assert_eq!(MatrixGroupJson::encode(&h, true), j);
    }

    #[test]
    fn names() {
        assert_eq!(parse_kind_name("binary-dihedral:ell=3").unwrap(), GroupKind::BinaryDihedral(3));
        assert_eq!(parse_kind_name("tetrahedral").unwrap(), GroupKind::BinaryTetrahedral);
        assert!(parse_kind_name("cyclic").is_err());
        assert!(parse_kind_name("nonsense").is_err());
    }
}
