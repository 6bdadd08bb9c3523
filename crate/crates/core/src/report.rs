//! JSON documents read and written by the command-line tool.
//!
//! Rationals are strings `"p/q"` (`"p"` when `q = 1`); points are `[x, y]`;
//! vectors `[x, y, z]`. No floating-point value is ever emitted.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arrangement::{ArrangementError, LabeledArrangement};
use crate::certificate::{CertificateReport, Checks, Coherence, DegenerationSample, LevelRecord};
use crate::construction::{build, ConfigurationFamily, ConstructionError, Seed};
use crate::geometry::{PlanePoint, Rational, Vector3};
use crate::grassmann::{GrassmannError, Subspace, VectorFamily};
use crate::label::Label;
use crate::oriented_matroid::{OmError, OrientedMatroid, SignVector};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("cannot parse rational {0:?}")]
    RationalParse(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Om(#[from] OmError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn schema(path: &str, message: impl Into<String>) -> ReportError {
    ReportError::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ReportError> {
    let err = || ReportError::RationalParse(s.to_string());
    let integer = |t: &str, allow_sign: bool| -> Result<BigInt, ReportError> {
        let digits = if allow_sign {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.parse().map_err(|_| err())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(integer(s, true)?)),
        Some((p, q)) => {
            let (p, q) = (integer(p, true)?, integer(q, false)?);
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

fn rational_at(v: &Value, path: &str) -> Result<Rational, ReportError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(Rational::from_integer(
            n.to_string().parse().expect("integer literal"),
        )),
        _ => Err(schema(path, "expected a rational string \"p/q\"")),
    }
}

fn array_at<'a>(
    v: &'a Value,
    path: &str,
    len: Option<usize>,
) -> Result<&'a Vec<Value>, ReportError> {
    let arr = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array"))?;
    if let Some(n) = len {
        if arr.len() != n {
            return Err(schema(
                path,
                format!("expected {n} entries, found {}", arr.len()),
            ));
        }
    }
    Ok(arr)
}

fn field<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value, ReportError> {
    v.get(key)
        .ok_or_else(|| schema(path, format!("missing field {key:?}")))
}

fn label_at(v: &Value, path: &str) -> Result<Label, ReportError> {
    let s = v
        .as_str()
        .ok_or_else(|| schema(path, "expected a label string"))?;
    s.parse().map_err(|e| schema(path, format!("{e}")))
}

fn rationals_at(v: &Value, path: &str, len: Option<usize>) -> Result<Vec<Rational>, ReportError> {
    array_at(v, path, len)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational_at(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn point_json(p: &PlanePoint) -> Value {
    json!([format_rational(&p.x), format_rational(&p.y)])
}

pub fn vector_json(v: &Vector3) -> Value {
    json!([
        format_rational(&v.x),
        format_rational(&v.y),
        format_rational(&v.z)
    ])
}

fn point_at(v: &Value, path: &str) -> Result<PlanePoint, ReportError> {
    let [x, y]: [Rational; 2] = rationals_at(v, path, Some(2))?
        .try_into()
        .expect("length checked");
    Ok(PlanePoint::new(x, y))
}

fn vector_at(v: &Value, path: &str) -> Result<Vector3, ReportError> {
    let [x, y, z]: [Rational; 3] = rationals_at(v, path, Some(3))?
        .try_into()
        .expect("length checked");
    Ok(Vector3::new(x, y, z))
}

pub fn parse_json(text: &str) -> Result<Value, ReportError> {
    serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))
}

fn labeled_entries<T>(
    v: &Value,
    path: &str,
    mut item: impl FnMut(&Value, &str) -> Result<T, ReportError>,
) -> Result<Vec<(Label, T)>, ReportError> {
    let mut seen = BTreeSet::new();
    array_at(v, path, None)?
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            let p = format!("{path}[{i}]");
            let pair = array_at(entry, &p, Some(2))?;
            let label = label_at(&pair[0], &format!("{p}[0]"))?;
            if !seen.insert(label) {
                return Err(schema(&p, format!("duplicate label {}", label.ascii())));
            }
            Ok((label, item(&pair[1], &format!("{p}[1]"))?))
        })
        .collect()
}

/// Arrangement document: `[[label, [x, y, z]], …]`, or
/// `{"non_spanning": true, "elements": [...]}` for rank-deficient input.
pub fn parse_arrangement(v: &Value) -> Result<LabeledArrangement, ReportError> {
    let (elements, non_spanning) = match v {
        Value::Object(_) => {
            let flag = match v.get("non_spanning") {
                None => false,
                Some(b) => b
                    .as_bool()
                    .ok_or_else(|| schema("$.non_spanning", "expected a boolean"))?,
            };
            (field(v, "$", "elements")?, flag)
        }
        _ => (v, false),
    };
    let path = if v.is_object() { "$.elements" } else { "$" };
    let entries = labeled_entries(elements, path, vector_at)?;
    let arr = LabeledArrangement::new(entries)?;
    Ok(if non_spanning {
        arr.non_spanning()
    } else {
        arr
    })
}

pub fn render_arrangement(arr: &LabeledArrangement) -> Value {
    let elements: Vec<Value> = arr
        .elements()
        .iter()
        .map(|(l, v)| json!([l.ascii(), vector_json(v)]))
        .collect();
    if arr.allows_non_spanning() {
        json!({ "non_spanning": true, "elements": elements })
    } else {
        Value::Array(elements)
    }
}

/// Subspace document: `{"ambient": n, "basis": [[…], […], […]]}`.
pub fn parse_subspace(v: &Value) -> Result<Subspace, ReportError> {
    let ambient = field(v, "$", "ambient")?
        .as_u64()
        .ok_or_else(|| schema("$.ambient", "expected a non-negative integer"))?
        as usize;
    let rows = array_at(field(v, "$", "basis")?, "$.basis", Some(3))?;
    let mut basis = Vec::with_capacity(3);
    for (i, row) in rows.iter().enumerate() {
        basis.push(rationals_at(row, &format!("$.basis[{i}]"), Some(ambient))?);
    }
    let basis: [Vec<Rational>; 3] = basis.try_into().expect("three rows");
    Ok(Subspace::new(basis)?)
}

pub fn render_subspace(v: &Subspace) -> Value {
    let basis: Vec<Value> = v
        .basis()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|r| Value::String(format_rational(r)))
                    .collect(),
            )
        })
        .collect();
    json!({ "ambient": v.ambient(), "basis": basis })
}

/// Vector family document: `[[label, [v₁, …, vₙ]], …]`.
pub fn parse_vector_family(v: &Value) -> Result<VectorFamily, ReportError> {
    let entries = labeled_entries(v, "$", |x, p| rationals_at(x, p, None))?;
    Ok(VectorFamily::new(entries)?)
}

pub fn render_vector_family(f: &VectorFamily) -> Value {
    Value::Array(
        f.elements()
            .iter()
            .map(|(l, v)| {
                let coords: Vec<Value> = v
                    .iter()
                    .map(|r| Value::String(format_rational(r)))
                    .collect();
                json!([l.ascii(), coords])
            })
            .collect(),
    )
}

/// Oriented matroid document `{"ground_set": […], "cocircuits": […]}`.
pub fn parse_om(v: &Value) -> Result<OrientedMatroid, ReportError> {
    let ground = array_at(field(v, "$", "ground_set")?, "$.ground_set", None)?
        .iter()
        .enumerate()
        .map(|(i, l)| label_at(l, &format!("$.ground_set[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let cocircuits = array_at(field(v, "$", "cocircuits")?, "$.cocircuits", None)?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let p = format!("$.cocircuits[{i}]");
            c.as_str()
                .ok_or_else(|| schema(&p, "expected a sign string"))?
                .parse::<SignVector>()
                .map_err(|e| schema(&p, e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrientedMatroid::from_cocircuits(ground, cocircuits)?)
}

pub fn render_om(om: &OrientedMatroid) -> Value {
    parse_json(&om.canonical_json()).expect("canonical JSON is valid")
}

/// Either an arrangement document or an oriented-matroid document.
pub fn parse_om_or_arrangement(v: &Value) -> Result<OrientedMatroid, ReportError> {
    if v.get("cocircuits").is_some() {
        parse_om(v)
    } else {
        Ok(crate::oriented_matroid::m_of(&parse_arrangement(v)?)?)
    }
}

const SEED_FIELDS: [(&str, Label); 7] = [
    ("alpha", Label::Alpha),
    ("beta", Label::Beta),
    ("gamma", Label::Gamma),
    ("omega", Label::Omega),
    ("nu", Label::Nu),
    ("a", Label::A),
    ("b1", Label::B(1)),
];

pub fn parse_seed(v: &Value) -> Result<Seed, ReportError> {
    if !v.is_object() {
        return Err(schema("$", "expected a seed object"));
    }
    let get = |key: &str| point_at(field(v, "$", key)?, &format!("$.{key}"));
    Ok(Seed {
        alpha: get("alpha")?,
        beta: get("beta")?,
        gamma: get("gamma")?,
        omega: get("omega")?,
        nu: get("nu")?,
        a: get("a")?,
        b1: get("b1")?,
    })
}

pub fn render_seed(seed: &Seed) -> Value {
    let mut map = serde_json::Map::new();
    for ((key, _), (_, p)) in SEED_FIELDS.iter().zip(seed.points()) {
        map.insert(key.to_string(), point_json(p));
    }
    Value::Object(map)
}

/// Family document: seed, depth and every point of `A_depth`.
pub fn render_family(family: &ConfigurationFamily) -> Value {
    let points: Vec<Value> = family
        .points()
        .iter()
        .map(|(l, p)| json!([l.ascii(), point_json(p)]))
        .collect();
    json!({
        "depth": family.depth(),
        "seed": render_seed(family.seed()),
        "points": points,
    })
}

/// Rebuilds the family from its seed and checks the listed points agree.
pub fn parse_family(v: &Value) -> Result<ConfigurationFamily, ReportError> {
    let depth = field(v, "$", "depth")?
        .as_u64()
        .and_then(|d| u32::try_from(d).ok())
        .ok_or_else(|| schema("$.depth", "expected a non-negative integer"))?;
    let seed = parse_seed(field(v, "$", "seed")?).map_err(|e| match e {
        ReportError::Schema { path, message } => ReportError::Schema {
            path: path.replacen('$', "$.seed", 1),
            message,
        },
        other => other,
    })?;
    let family = build(&seed, depth)?;
    let listed = labeled_entries(field(v, "$", "points")?, "$.points", point_at)?;
    let mut listed = listed;
    listed.sort_by_key(|a| a.0);
    if listed != family.points() {
        return Err(schema(
            "$.points",
            "points disagree with the construction from the seed",
        ));
    }
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SampleWire {
    n: u64,
    fingerprint: String,
    matches_level: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct LevelWire {
    i: u32,
    c: [String; 2],
    cross_ratio: String,
    mi_fingerprint: String,
    limit_fingerprint: String,
    limit_cross_ratio: String,
    weak_map_to_limit: bool,
    degeneration: Vec<SampleWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ChecksWire {
    c_distinct: bool,
    cr_distinct: bool,
    degeneration_constant: bool,
    limits_equal: bool,
    separation: bool,
    weak_maps: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CoherenceWire {
    incidences: bool,
    scaled_members_equivalent: bool,
    affine_equivariance: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct OmWire {
    ground_set: Vec<String>,
    cocircuits: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ReportWire {
    tool: String,
    version: String,
    schema_version: u32,
    input_digest: String,
    pass: bool,
    first_failure: Option<String>,
    seed: Value,
    depth: u32,
    samples: Vec<u64>,
    checks: ChecksWire,
    coherence: CoherenceWire,
    limit_om: Option<OmWire>,
    limit_fingerprint: Option<String>,
    levels: Vec<LevelWire>,
    summary: Vec<String>,
}

/// Rendered certificate: payload plus provenance and summary lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    /// SHA-256 of the canonical seed document and run parameters.
    pub input_digest: String,
    pub report: CertificateReport,
    pub summary: Vec<String>,
}

impl ReportDocument {
    fn wire(&self) -> ReportWire {
        let r = &self.report;
        let c = &r.checks;
        ReportWire {
            tool: self.tool.clone(),
            version: self.version.clone(),
            schema_version: REPORT_SCHEMA_VERSION,
            input_digest: self.input_digest.clone(),
            pass: r.pass,
            first_failure: r.first_failure().map(str::to_string),
            seed: render_seed(&r.seed),
            depth: r.depth,
            samples: r.samples.clone(),
            checks: ChecksWire {
                c_distinct: c.c_distinct,
                cr_distinct: c.cr_distinct,
                degeneration_constant: c.degeneration_constant,
                limits_equal: c.limits_equal,
                separation: c.separation,
                weak_maps: c.weak_maps,
            },
            coherence: CoherenceWire {
                incidences: r.coherence.incidences,
                scaled_members_equivalent: r.coherence.scaled_members_equivalent,
                affine_equivariance: r.coherence.affine_equivariance,
            },
            limit_om: r.limit_om.as_ref().map(|om| OmWire {
                ground_set: om.ground_set().iter().map(Label::ascii).collect(),
                cocircuits: om.cocircuits().iter().map(ToString::to_string).collect(),
            }),
            limit_fingerprint: r.limit_om.as_ref().map(OrientedMatroid::fingerprint),
            levels: r
                .levels
                .iter()
                .map(|l| LevelWire {
                    i: l.index,
                    c: [format_rational(&l.c.x), format_rational(&l.c.y)],
                    cross_ratio: format_rational(&l.cross_ratio),
                    mi_fingerprint: l.mi_fingerprint.clone(),
                    limit_fingerprint: l.limit_fingerprint.clone(),
                    limit_cross_ratio: format_rational(&l.limit_cross_ratio),
                    weak_map_to_limit: l.weak_map_to_limit,
                    degeneration: l
                        .degeneration
                        .iter()
                        .map(|d| SampleWire {
                            n: d.n,
                            fingerprint: d.fingerprint.clone(),
                            matches_level: d.matches_level,
                        })
                        .collect(),
                })
                .collect(),
            summary: self.summary.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.wire()).expect("report serializes");
        s.push('\n');
        s
    }

    /// SHA-256 of [`ReportDocument::to_json`].
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

pub fn input_digest(seed: &Seed, depth: u32, samples: &[u64]) -> String {
    let doc = json!({ "seed": render_seed(seed), "depth": depth, "samples": samples });
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

fn summary_lines(r: &CertificateReport) -> Vec<String> {
    let mut lines = vec![format!(
        "depth {} with degeneration samples {:?}",
        r.depth, r.samples
    )];
    for (name, ok) in r.checks.named() {
        lines.push(format!("{name}: {}", if ok { "pass" } else { "FAIL" }));
    }
    for l in &r.levels {
        lines.push(format!(
            "level {}: c = {}, cr = {}",
            l.index,
            l.c,
            format_rational(&l.cross_ratio)
        ));
    }
    lines.push(match r.first_failure() {
        None => "certificate: pass".to_string(),
        Some(name) => format!("certificate: FAIL (first failed check: {name})"),
    });
    lines
}

pub fn render_report(report: &CertificateReport) -> ReportDocument {
    ReportDocument {
        tool: "omstrata".to_string(),
        version: crate::VERSION.to_string(),
        input_digest: input_digest(&report.seed, report.depth, &report.samples),
        summary: summary_lines(report),
        report: report.clone(),
    }
}

pub fn parse_report(text: &str) -> Result<ReportDocument, ReportError> {
    let wire: ReportWire =
        serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))?;
    let rat = |s: &str| parse_rational(s);
    let levels = wire
        .levels
        .iter()
        .map(|l| {
            Ok(LevelRecord {
                index: l.i,
                c: PlanePoint::new(rat(&l.c[0])?, rat(&l.c[1])?),
                cross_ratio: rat(&l.cross_ratio)?,
                mi_fingerprint: l.mi_fingerprint.clone(),
                limit_fingerprint: l.limit_fingerprint.clone(),
                limit_cross_ratio: rat(&l.limit_cross_ratio)?,
                degeneration: l
                    .degeneration
                    .iter()
                    .map(|d| DegenerationSample {
                        n: d.n,
                        fingerprint: d.fingerprint.clone(),
                        matches_level: d.matches_level,
                    })
                    .collect(),
                weak_map_to_limit: l.weak_map_to_limit,
            })
        })
        .collect::<Result<Vec<_>, ReportError>>()?;
    let limit_om = wire
        .limit_om
        .as_ref()
        .map(|om| parse_om(&json!({ "ground_set": om.ground_set, "cocircuits": om.cocircuits })))
        .transpose()?;
    let c = &wire.checks;
    let report = CertificateReport {
        seed: parse_seed(&wire.seed)?,
        depth: wire.depth,
        samples: wire.samples.clone(),
        levels,
        limit_om,
        checks: Checks {
            c_distinct: c.c_distinct,
            cr_distinct: c.cr_distinct,
            degeneration_constant: c.degeneration_constant,
            limits_equal: c.limits_equal,
            separation: c.separation,
            weak_maps: c.weak_maps,
        },
        coherence: Coherence {
            incidences: wire.coherence.incidences,
            scaled_members_equivalent: wire.coherence.scaled_members_equivalent,
            affine_equivariance: wire.coherence.affine_equivariance,
        },
        pass: wire.pass,
    };
    Ok(ReportDocument {
        tool: wire.tool,
        version: wire.version,
        input_digest: wire.input_digest,
        report,
        summary: wire.summary,
    })
}

/// True when no JSON number in `v` is a float.
pub fn is_float_free(v: &Value) -> bool {
    match v {
        Value::Number(n) => !n.is_f64(),
        Value::Array(items) => items.iter().all(is_float_free),
        Value::Object(map) => map.values().all(is_float_free),
        _ => true,
    }
}

/// Sign of a rational as `-1`, `0` or `1`, for summary output.
pub fn signum(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rat(3, 1)), "3");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        for bad in ["1/0", "", "1/", "/2", "1.5", "1/-2", "+3", "a/b", "1/2/3"] {
            assert_eq!(
                parse_rational(bad).unwrap_err(),
                ReportError::RationalParse(bad.to_string()),
                "{bad}"
            );
        }
    }

    #[test]
    fn arrangement_document() {
        let v = parse_json(r#"[["a", ["1/2", "0", "1"]]]"#).unwrap();
        let arr = parse_arrangement(&v).unwrap();
        assert_eq!(
            arr.get(Label::A).unwrap(),
            &Vector3::new(rat(1, 2), int(0), int(1))
        );
        assert_eq!(render_arrangement(&arr), v);

        let bad = parse_json(r#"[["a", ["1/0", "0", "1"]]]"#).unwrap();
        assert_eq!(
            parse_arrangement(&bad).unwrap_err(),
            ReportError::RationalParse("1/0".into())
        );

        let dup = parse_json(r#"[["a", ["1", "0", "1"]], ["a", ["0", "1", "1"]]]"#).unwrap();
        match parse_arrangement(&dup).unwrap_err() {
            ReportError::Schema { path, .. } => assert_eq!(path, "$[1]"),
            other => panic!("unexpected {other:?}"),
        }

        let short = parse_json(r#"[["a", ["1", "0"]]]"#).unwrap();
        match parse_arrangement(&short).unwrap_err() {
            ReportError::Schema { path, .. } => assert_eq!(path, "$[0][1]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn flagged_arrangement_round_trip() {
        let arr = LabeledArrangement::indexed([Vector3::from_ints(1, 0, 0)]).non_spanning();
        let doc = render_arrangement(&arr);
        assert_eq!(parse_arrangement(&doc).unwrap(), arr);
    }

    #[test]
    fn subspace_document() {
        let v = parse_json(r#"{"ambient": 4, "basis": [["1","0","0","-1"],["0","1","0","-1"],["0","0","1","-1"]]}"#)
            .unwrap();
        let s = parse_subspace(&v).unwrap();
        assert_eq!(s.ambient(), 4);
        assert_eq!(render_subspace(&s), v);
        let wrong =
            parse_json(r#"{"ambient": 3, "basis": [["1","0"],["0","1"],["0","0"]]}"#).unwrap();
        assert!(matches!(
            parse_subspace(&wrong),
            Err(ReportError::Schema { .. })
        ));
    }

    #[test]
    fn seed_and_family_documents() {
        let seed = crate::construction::default_seed();
        let doc = render_seed(&seed);
        assert_eq!(parse_seed(&doc).unwrap(), seed);
        let family = build(&seed, 3).unwrap();
        let doc = render_family(&family);
        assert!(is_float_free(&doc));
        assert_eq!(parse_family(&doc).unwrap(), family);

        let mut tampered = doc.clone();
        tampered["points"][0][1][0] = json!("1/3");
        assert!(matches!(
            parse_family(&tampered),
            Err(ReportError::Schema { .. })
        ));
    }

    #[test]
    fn om_document_round_trip() {
        let arr = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
            Vector3::from_ints(1, -1, 2),
        ]);
        let om = crate::oriented_matroid::m_of(&arr).unwrap();
        let doc = render_om(&om);
        assert_eq!(doc.to_string(), om.canonical_json());
        assert_eq!(parse_om(&doc).unwrap(), om);
        assert_eq!(
            parse_om_or_arrangement(&render_arrangement(&arr)).unwrap(),
            om
        );
    }

    #[test]
    fn report_document_round_trip() {
        let report =
            crate::certificate::certificate(&crate::construction::default_seed(), 2, &[1, 3])
                .unwrap();
        let doc = render_report(&report);
        let text = doc.to_json();
        assert!(text.contains("\"pass\": true"));
        assert!(is_float_free(&parse_json(&text).unwrap()));
        let parsed = parse_report(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_json(), text);
        assert_eq!(render_report(&report).to_json(), text);
    }

    #[test]
    fn failing_report_names_first_failure() {
        let mut report =
            crate::certificate::certificate(&crate::construction::default_seed(), 2, &[1]).unwrap();
        report.checks.limits_equal = false;
        report.checks.weak_maps = false;
        report.pass = false;
        let text = render_report(&report).to_json();
        assert!(text.contains("\"first_failure\": \"limits_equal\""));
        assert!(text.contains("\"pass\": false"));
    }
}
