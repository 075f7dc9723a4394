//! Output documents. Every command produces an [`OutputDocument`]; the JSON
//! format is the document itself, the table and CSV formats are views of it.
//!
//! Rationals are strings in lowest terms (`"15/2"`, `"14"`), never floats.
//! Object keys are sorted, so documents are byte-stable for fixed inputs.

use std::fmt::Write as _;

use acm_core::bott::{CohomologyRow, OracleReport};
use acm_core::classify::{ClassificationResult, FixtureReport};
use acm_core::parabolic::{AcmVerdict, BundleSpec, Certificate, ParabolicData};
use acm_core::rootsys::WeightCoeffs;
use acm_core::{AmbientVector, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Format;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub payload: Value,
}

impl OutputDocument {
    pub fn new(command: &str, inputs: Value, payload: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            payload,
        }
    }
}

pub fn rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

fn vector(v: &AmbientVector) -> Vec<String> {
    v.coords().iter().map(rational).collect()
}

fn paren(items: &[String]) -> String {
    format!("({})", items.join(", "))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MFormOut {
    pub coeffs: Vec<String>,
    pub constant: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfoPayload {
    pub dynkin: String,
    pub k: usize,
    pub rank: usize,
    pub positive_roots: usize,
    pub dim: usize,
    pub parabolic_roots: usize,
    /// `M` as an affine form in `a`, when one entry of `T` dominates all others.
    pub m_form: Option<MFormOut>,
}

impl InfoPayload {
    pub fn new(pd: &ParabolicData) -> Self {
        let rs = pd.root_system();
        Self {
            dynkin: rs.dynkin().to_string(),
            k: pd.k(),
            rank: rs.rank(),
            positive_roots: rs.positive_roots().len(),
            dim: pd.dim(),
            parabolic_roots: pd.roots().len(),
            m_form: pd.m_form().map(|f| MFormOut {
                coeffs: f.coeffs.iter().map(rational).collect(),
                constant: rational(&f.constant),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryOut {
    pub root: Vec<String>,
    pub c: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TProfilePayload {
    /// The initialized weight the profile was computed for.
    pub weight: Vec<i64>,
    pub twist: i64,
    pub notice: Option<String>,
    pub entries: Vec<EntryOut>,
    pub m_max: String,
    /// `[l, n_l]` for every integer `l` occurring in `T`.
    pub n: Vec<[i64; 2]>,
    /// The 5x5 layout for `E6/P_2`: `eps_i + eps_j` above the diagonal,
    /// `alpha_{i,j,6,7}` below it, `alpha_{6,7}` in the corner.
    pub matrix: Option<Vec<Vec<Option<String>>>>,
}

impl TProfilePayload {
    pub fn new(pd: &ParabolicData, lambda: &WeightCoeffs) -> acm_core::Result<Self> {
        let spec = BundleSpec::new(pd, lambda.clone())?;
        let (init, twist) = spec.normalize();
        let profile = init.t_profile()?;
        let notice = (twist != 0).then(|| {
            format!(
                "a_{} = {twist} was removed: the profile is that of the initialized weight (a twist by {twist})",
                pd.k()
            )
        });
        let entries: Vec<EntryOut> = profile
            .entries
            .iter()
            .map(|e| EntryOut {
                root: vector(&e.root),
                c: rational(&e.c),
                value: rational(&e.value),
            })
            .collect();
        let matrix = pd.display_matrix().map(|m| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| cell.map(|i| entries[i].value.clone()))
                        .collect()
                })
                .collect()
        });
        Ok(Self {
            weight: init.lambda().coeffs().to_vec(),
            twist,
            notice,
            entries,
            m_max: rational(&profile.m_max),
            n: profile.n.iter().map(|(&l, &c)| [l, c as i64]).collect(),
            matrix,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateOut {
    /// `covered`, `missing` or `out_of_range`.
    pub kind: String,
    pub l: Option<i64>,
    /// `[l, n_l]` for `l = 1..=floor(M)` when covered.
    pub coverage: Option<Vec<[i64; 2]>>,
}

impl From<&Certificate> for CertificateOut {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::Covered(list) => Self {
                kind: "covered".into(),
                l: None,
                coverage: Some(list.iter().map(|&(l, n)| [l, n as i64]).collect()),
            },
            Certificate::Missing(l) => Self {
                kind: "missing".into(),
                l: Some(*l),
                coverage: None,
            },
            Certificate::OutOfRange(l) => Self {
                kind: "out_of_range".into(),
                l: Some(*l),
                coverage: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistOut {
    pub twist: i64,
    /// Chamber index of `lambda + rho - t w_k`; `null` when singular.
    pub index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleOut {
    pub acm: bool,
    pub failing_twist: Option<i64>,
    pub rows: Vec<TwistOut>,
}

impl From<&OracleReport> for OracleOut {
    fn from(r: &OracleReport) -> Self {
        Self {
            acm: r.acm,
            failing_twist: r.failing_twist,
            rows: r
                .rows
                .iter()
                .map(|row| TwistOut {
                    twist: row.twist,
                    index: row.index,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsAcmPayload {
    pub weight: Vec<i64>,
    pub twist: i64,
    pub dim: usize,
    pub acm: bool,
    pub m_max: String,
    pub certificate: CertificateOut,
    /// Present with `--oracle`; its verdict always equals `acm`.
    pub oracle: Option<OracleOut>,
}

impl IsAcmPayload {
    pub fn new(
        pd: &ParabolicData,
        lambda: &WeightCoeffs,
        verdict: &AcmVerdict,
        oracle: Option<&OracleReport>,
    ) -> Self {
        let mut weight = lambda.coeffs().to_vec();
        weight[pd.k() - 1] = 0;
        Self {
            weight,
            twist: verdict.twist,
            dim: pd.dim(),
            acm: verdict.acm,
            m_max: rational(&verdict.m_max),
            certificate: (&verdict.certificate).into(),
            oracle: oracle.map(OracleOut::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyOut {
    pub twist: i64,
    pub vanishes: bool,
    pub degree: Option<usize>,
    pub highest_weight: Option<Vec<i64>>,
    pub dimension: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyPayload {
    pub weight: Vec<i64>,
    pub dim: usize,
    pub rows: Vec<CohomologyOut>,
}

impl CohomologyPayload {
    pub fn new(pd: &ParabolicData, lambda: &WeightCoeffs, rows: &[CohomologyRow]) -> Self {
        Self {
            weight: lambda.coeffs().to_vec(),
            dim: pd.dim(),
            rows: rows
                .iter()
                .map(|r| CohomologyOut {
                    twist: r.twist,
                    vanishes: r.degree.is_none(),
                    degree: r.degree,
                    highest_weight: r.highest_weight.as_ref().map(|w| w.coeffs().to_vec()),
                    dimension: r.dimension.as_ref().map(|d| d.to_string()),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyPayload {
    pub dynkin: String,
    pub k: usize,
    pub count: usize,
    pub acm_weights: Vec<Vec<i64>>,
    pub candidates_scanned: usize,
    pub bound_used: usize,
    pub oracle_used: bool,
}

impl ClassifyPayload {
    pub fn new(r: &ClassificationResult) -> Self {
        Self {
            dynkin: r.dynkin.to_string(),
            k: r.k,
            count: r.acm_weights.len(),
            acm_weights: r.acm_weights.iter().map(|w| w.coeffs().to_vec()).collect(),
            candidates_scanned: r.candidates_scanned,
            bound_used: r.bound_used,
            oracle_used: r.oracle_used,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureOut {
    pub name: String,
    pub passed: bool,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixturesPayload {
    pub passed: usize,
    pub total: usize,
    pub fixtures: Vec<FixtureOut>,
}

impl FixturesPayload {
    pub fn new(report: &FixtureReport) -> Self {
        Self {
            passed: report.passed(),
            total: report.outcomes.len(),
            fixtures: report
                .outcomes
                .iter()
                .map(|o| FixtureOut {
                    name: o.name.clone(),
                    passed: o.passed,
                    missing: o.missing.clone(),
                    unexpected: o.unexpected.clone(),
                })
                .collect(),
        }
    }
}

fn weight_str(a: &[i64]) -> String {
    paren(&a.iter().map(i64::to_string).collect::<Vec<_>>())
}

/// Renders a document in the requested format. Output always ends in a newline.
pub fn render(doc: &OutputDocument, format: Format) -> anyhow::Result<String> {
    if format == Format::Json {
        let mut s = serde_json::to_string_pretty(doc)?;
        s.push('\n');
        return Ok(s);
    }
    let payload = doc.payload.clone();
    let csv = format == Format::Csv;
    let mut out = String::new();
    match doc.command.as_str() {
        "info" => {
            let p: InfoPayload = serde_json::from_value(payload)?;
            let form = p.m_form.as_ref().map(|f| {
                let terms: Vec<String> = f
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.as_str() != "0")
                    .map(|(i, c)| {
                        if c == "1" {
                            format!("a{}", i + 1)
                        } else {
                            format!("{c}*a{}", i + 1)
                        }
                    })
                    .collect();
                format!("{} + {}", terms.join(" + "), f.constant)
            });
            if csv {
                writeln!(out, "field,value")?;
                writeln!(out, "type,{}", p.dynkin)?;
                writeln!(out, "k,{}", p.k)?;
                writeln!(out, "rank,{}", p.rank)?;
                writeln!(out, "positive_roots,{}", p.positive_roots)?;
                writeln!(out, "dim,{}", p.dim)?;
                writeln!(out, "parabolic_roots,{}", p.parabolic_roots)?;
                if let Some(f) = &p.m_form {
                    writeln!(out, "m_form,{} {}", f.coeffs.join(" "), f.constant)?;
                }
            } else {
                writeln!(out, "{}/P{}", p.dynkin, p.k)?;
                writeln!(out, "  rank             {}", p.rank)?;
                writeln!(out, "  positive roots   {}", p.positive_roots)?;
                writeln!(out, "  dim G/P_k        {}", p.dim)?;
                writeln!(out, "  |Phi+_k|         {}", p.parabolic_roots)?;
                match form {
                    Some(f) => writeln!(out, "  M                {f}")?,
                    None => writeln!(out, "  M                (no single dominating entry)")?,
                }
            }
        }
        "tprofile" => {
            let p: TProfilePayload = serde_json::from_value(payload)?;
            if csv {
                writeln!(out, "root,c,value")?;
                for e in &p.entries {
                    writeln!(out, "{},{},{}", e.root.join(" "), e.c, e.value)?;
                }
            } else {
                if let Some(n) = &p.notice {
                    writeln!(out, "note: {n}")?;
                }
                writeln!(out, "weight {}   M = {}", weight_str(&p.weight), p.m_max)?;
                if let Some(m) = &p.matrix {
                    let cells: Vec<Vec<String>> = m
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|c| c.clone().unwrap_or_else(|| ".".into()))
                                .collect()
                        })
                        .collect();
                    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
                    for row in cells {
                        let line: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
                        writeln!(out, "  {}", line.join("  "))?;
                    }
                } else {
                    let w = p
                        .entries
                        .iter()
                        .map(|e| paren(&e.root).len())
                        .max()
                        .unwrap_or(0);
                    for e in &p.entries {
                        writeln!(out, "  {:<w$}  c = {:<4} {}", paren(&e.root), e.c, e.value)?;
                    }
                }
                let n: Vec<String> = p.n.iter().map(|[l, c]| format!("{l}:{c}")).collect();
                writeln!(out, "n_l  {}", n.join(" "))?;
            }
        }
        "is-acm" => {
            let p: IsAcmPayload = serde_json::from_value(payload)?;
            let cert = match (p.certificate.kind.as_str(), p.certificate.l) {
                ("missing", Some(l)) => format!("n_{l} = 0"),
                ("out_of_range", Some(l)) => format!("integer {l} lies outside [1, M]"),
                _ => "n_l >= 1 for every integer l in [1, M]".to_string(),
            };
            if csv {
                writeln!(out, "field,value")?;
                writeln!(out, "weight,{}", weight_str(&p.weight))?;
                writeln!(out, "twist,{}", p.twist)?;
                writeln!(out, "acm,{}", p.acm)?;
                writeln!(out, "m_max,{}", p.m_max)?;
                writeln!(out, "certificate,{}", p.certificate.kind)?;
                if let Some(l) = p.certificate.l {
                    writeln!(out, "l,{l}")?;
                }
                if let Some(o) = &p.oracle {
                    writeln!(out, "oracle_acm,{}", o.acm)?;
                }
            } else {
                let verdict = if p.acm { "ACM" } else { "not ACM" };
                writeln!(
                    out,
                    "{verdict}: weight {} (twist {}), M = {}",
                    weight_str(&p.weight),
                    p.twist,
                    p.m_max
                )?;
                writeln!(out, "  {cert}")?;
                if let Some(o) = &p.oracle {
                    match o.failing_twist {
                        Some(t) => {
                            writeln!(out, "  oracle agrees: t = {t} has intermediate cohomology")?
                        }
                        None => writeln!(
                            out,
                            "  oracle agrees: no intermediate cohomology for any twist"
                        )?,
                    }
                }
            }
        }
        "cohomology" => {
            let p: CohomologyPayload = serde_json::from_value(payload)?;
            if csv {
                writeln!(out, "twist,degree,highest_weight,dimension")?;
                for r in &p.rows {
                    writeln!(
                        out,
                        "{},{},{},{}",
                        r.twist,
                        r.degree.map(|d| d.to_string()).unwrap_or_default(),
                        r.highest_weight
                            .as_deref()
                            .map(|w| weight_str(w).replace(", ", " "))
                            .unwrap_or_default(),
                        r.dimension.clone().unwrap_or_default()
                    )?;
                }
            } else {
                writeln!(
                    out,
                    "weight {}, dim G/P_k = {}",
                    weight_str(&p.weight),
                    p.dim
                )?;
                for r in &p.rows {
                    match (&r.degree, &r.highest_weight, &r.dimension) {
                        (Some(d), Some(hw), Some(dim)) => writeln!(
                            out,
                            "  t = {:>4}   H^{d} = V{}   dim {dim}",
                            r.twist,
                            weight_str(hw)
                        )?,
                        _ => writeln!(out, "  t = {:>4}   vanishes", r.twist)?,
                    }
                }
            }
        }
        "classify" => {
            let p: ClassifyPayload = serde_json::from_value(payload)?;
            if csv {
                let header: Vec<String> = (1..=p.acm_weights.first().map_or(0, Vec::len))
                    .map(|i| format!("a{i}"))
                    .collect();
                writeln!(out, "{}", header.join(","))?;
                for w in &p.acm_weights {
                    let row: Vec<String> = w.iter().map(i64::to_string).collect();
                    writeln!(out, "{}", row.join(","))?;
                }
            } else {
                writeln!(
                    out,
                    "{}/P{}: {} initialized ACM bundles ({} candidates with M <= {}, oracle {})",
                    p.dynkin,
                    p.k,
                    p.count,
                    p.candidates_scanned,
                    p.bound_used,
                    if p.oracle_used { "on" } else { "off" }
                )?;
                for w in &p.acm_weights {
                    writeln!(out, "  {}", weight_str(w))?;
                }
            }
        }
        "verify-fixtures" => {
            let p: FixturesPayload = serde_json::from_value(payload)?;
            if csv {
                writeln!(out, "fixture,passed")?;
                for f in &p.fixtures {
                    writeln!(out, "{},{}", f.name, f.passed)?;
                }
            } else {
                for f in &p.fixtures {
                    writeln!(
                        out,
                        "{}  {}",
                        if f.passed { "PASS" } else { "FAIL" },
                        f.name
                    )?;
                    for m in &f.missing {
                        writeln!(out, "      missing    {m}")?;
                    }
                    for u in &f.unexpected {
                        writeln!(out, "      unexpected {u}")?;
                    }
                }
                writeln!(out, "{}/{} fixtures pass", p.passed, p.total)?;
            }
        }
        other => anyhow::bail!("unknown command `{other}`"),
    }
    Ok(out)
}
