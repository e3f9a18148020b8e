//! JSON input/report formats and the `validate`, `check` and `verify`
//! commands. Commands write to the supplied sinks and return the process
//! exit code, so they can be driven from tests.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::coloredfan::{complete_faces, validate_fan, ColorTable, ColoredFan};
use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{parse_rat, Rat, RatMat, RatVec};
use crate::hartogs::{
    self, Certificate, Combination, HartogsReport, NotApplicable, Options, Term, DEFAULT_MAX_RANK,
};
use crate::horospherical::{
    self, build_fan_input, homogeneous_fan, ConeSpec, FanInput, HorosphericalDatum, RootDatum,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NO_HARTOGS: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;

pub const REPORT_FORMAT: &str = "hartogs-report/1";

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarDoc {
    Int(i64),
    Str(String),
}

type VecDoc = Vec<ScalarDoc>;

#[derive(Deserialize)]
#[serde(untagged)]
enum ValuationConeDoc {
    Keyword(String),
    Generators { generators: Vec<VecDoc> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColorDoc {
    name: String,
    point: VecDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeDoc {
    #[serde(default, rename = "generators_from_V")]
    generators_from_v: Vec<VecDoc>,
    #[serde(default)]
    colors: Vec<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct OptionsDoc {
    #[serde(default)]
    auto_complete_faces: bool,
    #[serde(default)]
    max_rank: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanDoc {
    rank: usize,
    valuation_cone: ValuationConeDoc,
    #[serde(default)]
    colors: Vec<ColorDoc>,
    #[serde(default)]
    cones: Vec<ConeDoc>,
    #[serde(default)]
    options: OptionsDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HoroDoc {
    torus_rank: usize,
    #[serde(default)]
    simple_roots: Vec<VecDoc>,
    #[serde(default)]
    simple_coroots: Vec<VecDoc>,
    #[serde(default)]
    root_names: Option<Vec<String>>,
    #[serde(default, rename = "I")]
    parabolic: Vec<usize>,
    #[serde(default, rename = "M_basis")]
    m_basis: Option<Vec<VecDoc>>,
    #[serde(default)]
    cones: Vec<ConeDoc>,
    #[serde(default)]
    options: OptionsDoc,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum InputDoc {
    ColoredFan(FanDoc),
    Horospherical(HoroDoc),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    Fan(ColoredFan),
    Horospherical {
        datum: HorosphericalDatum,
        cones: Vec<ConeSpec>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub problem: Problem,
    pub auto_complete_faces: bool,
    pub max_rank: Option<usize>,
}

fn scalar(s: &ScalarDoc) -> Result<Rat> {
    match s {
        ScalarDoc::Int(n) => Ok(crate::exactlin::int(*n)),
        ScalarDoc::Str(t) => parse_rat(t),
    }
}

fn vector(v: &VecDoc) -> Result<RatVec> {
    Ok(RatVec::new(v.iter().map(scalar).collect::<Result<_>>()?))
}

fn vectors(vs: &[VecDoc]) -> Result<Vec<RatVec>> {
    vs.iter().map(vector).collect()
}

fn cone_specs(cones: &[ConeDoc]) -> Result<Vec<ConeSpec>> {
    cones
        .iter()
        .map(|c| {
            Ok(ConeSpec {
                v_generators: vectors(&c.generators_from_v)?,
                colors: c.colors.clone(),
            })
        })
        .collect()
}

pub fn parse_input(text: &str) -> Result<Input> {
    let doc: InputDoc =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    match doc {
        InputDoc::ColoredFan(f) => {
            let v = match &f.valuation_cone {
                ValuationConeDoc::Keyword(k) if k == "whole_space" => Cone::whole_space(f.rank),
                ValuationConeDoc::Keyword(k) => {
                    return Err(Error::InvalidInput(format!(
                        "unknown valuation cone keyword `{k}`"
                    )))
                }
                ValuationConeDoc::Generators { generators } => {
                    Cone::from_generators(f.rank, &vectors(generators)?)?
                }
            };
            let table = ColorTable::new(
                f.rank,
                f.colors
                    .iter()
                    .map(|c| Ok((c.name.clone(), vector(&c.point)?)))
                    .collect::<Result<_>>()?,
            )?;
            let cones = horospherical::resolve_cones(f.rank, &table, &cone_specs(&f.cones)?)?;
            Ok(Input {
                problem: Problem::Fan(ColoredFan::new(f.rank, v, table, cones)?),
                auto_complete_faces: f.options.auto_complete_faces,
                max_rank: f.options.max_rank,
            })
        }
        InputDoc::Horospherical(h) => {
            let roots = vectors(&h.simple_roots)?;
            let coroots = vectors(&h.simple_coroots)?;
            let rd = match h.root_names {
                Some(names) => RootDatum::with_names(h.torus_rank, roots, coroots, names)?,
                None => RootDatum::new(h.torus_rank, roots, coroots)?,
            };
            let m = match &h.m_basis {
                Some(rows) => RatMat::new(h.torus_rank, vectors(rows)?)?,
                None => RatMat::identity(h.torus_rank),
            };
            let parabolic: BTreeSet<usize> = h.parabolic.iter().copied().collect();
            let datum = HorosphericalDatum::new(rd, parabolic, m)?;
            let cones = cone_specs(&h.cones)?;
            // Resolve colors now so that bad names surface as input errors.
            build_fan_input(&datum, &cones)?;
            Ok(Input {
                problem: Problem::Horospherical { datum, cones },
                auto_complete_faces: h.options.auto_complete_faces,
                max_rank: h.options.max_rank,
            })
        }
    }
}

pub fn load_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

impl Input {
    /// The fan the checks run on; the open orbit's `{(0, ∅)}` for a
    /// horospherical input without cones.
    pub fn fan(&self) -> Result<ColoredFan> {
        let fan = match &self.problem {
            Problem::Fan(f) => f.clone(),
            Problem::Horospherical { datum, cones } => match build_fan_input(datum, cones)? {
                FanInput::Embedding(f) => f,
                FanInput::Homogeneous => homogeneous_fan(datum),
            },
        };
        if self.auto_complete_faces {
            complete_faces(&fan)
        } else {
            Ok(fan)
        }
    }

    pub fn report(&self, opts: &Options) -> Result<HartogsReport> {
        match &self.problem {
            Problem::Horospherical { datum, cones } if cones.is_empty() => {
                horospherical::homogeneous_verdict(datum)
            }
            _ => hartogs::check_hartogs(&self.fan()?, opts),
        }
    }
}

fn rat_json(q: &Rat) -> Value {
    if q.is_integer() {
        if let Ok(n) = i64::try_from(q.to_integer()) {
            return json!(n);
        }
    }
    json!(q.to_string())
}

fn vec_json(v: &RatVec) -> Value {
    Value::Array(v.coords().iter().map(rat_json).collect())
}

fn cone_json(c: &Cone) -> Value {
    json!({
        "generators": c.generators().iter().map(vec_json).collect::<Vec<_>>(),
        "inequalities": c.inequalities().iter().map(vec_json).collect::<Vec<_>>(),
    })
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::NonzeroFunctional(l) => json!({
            "type": "nonzero_functional",
            "lambda": vec_json(l),
        }),
        Certificate::WholeSpaceWitness(combos) => json!({
            "type": "whole_space_witness",
            "combinations": combos.iter().map(|c| json!({
                "target": vec_json(&c.target),
                "terms": c.terms.iter().map(|t| json!({
                    "generator": vec_json(&t.generator),
                    "coefficient": rat_json(&t.coefficient),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }),
        Certificate::RankOneTrivialColors => json!({ "type": "rank_one_trivial_colors" }),
    }
}

pub fn verdict_str(r: &HartogsReport) -> &'static str {
    match r.hartogs {
        Some(true) => "yes",
        Some(false) => "no",
        None => "not_applicable",
    }
}

fn reason_str(r: NotApplicable) -> &'static str {
    match r {
        NotApplicable::InvalidFan => "invalid_fan",
        NotApplicable::Compact => "compact",
        NotApplicable::GapDisconnected => "gap_disconnected",
    }
}

/// Report as JSON. Object keys come out sorted, so the rendering is
/// byte-deterministic.
pub fn report_json(r: &HartogsReport, explain: bool) -> Value {
    let mut v = json!({
        "format": REPORT_FORMAT,
        "rank": r.rank,
        "fan_valid": r.fan_valid,
        "violations": r.violations,
        "complete": r.complete,
        "compactifiable_10": r.compactifiable_10,
        "gap_components": r.gap_components,
        "hartogs": r.hartogs,
        "verdict": verdict_str(r),
        "reason": r.not_applicable.map(reason_str),
        "hartogs_cone": r.hartogs_cone.as_ref().map(cone_json),
        "weight_cone": r.weight_cone.as_ref().map(cone_json),
        "certificate": r.certificate.as_ref().map(certificate_json),
        "interpretation": r.interpretation,
        "notes": r.notes,
    });
    if explain {
        v["gap_cells"] = Value::Array(r.gap_cells.iter().map(cone_json).collect());
    }
    v
}

fn json_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(crate::exactlin::int)
            .ok_or_else(|| Error::InvalidInput(format!("non-integer number {n}"))),
        Value::String(s) => parse_rat(s),
        other => Err(Error::InvalidInput(format!(
            "expected a rational, got {other}"
        ))),
    }
}

fn json_vec(v: &Value) -> Result<RatVec> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("expected a vector, got {v}")))?;
    Ok(RatVec::new(
        arr.iter().map(json_rat).collect::<Result<_>>()?,
    ))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::InvalidInput(format!("missing field `{key}`")))
}

fn json_certificate(v: &Value) -> Result<Certificate> {
    let kind = field(v, "type")?.as_str().unwrap_or_default();
    match kind {
        "nonzero_functional" => Ok(Certificate::NonzeroFunctional(json_vec(field(
            v, "lambda",
        )?)?)),
        "rank_one_trivial_colors" => Ok(Certificate::RankOneTrivialColors),
        "whole_space_witness" => {
            let combos = field(v, "combinations")?
                .as_array()
                .ok_or_else(|| Error::InvalidInput("`combinations` must be an array".into()))?;
            let mut out = Vec::with_capacity(combos.len());
            for c in combos {
                let terms = field(c, "terms")?
                    .as_array()
                    .ok_or_else(|| Error::InvalidInput("`terms` must be an array".into()))?
                    .iter()
                    .map(|t| {
                        Ok(Term {
                            generator: json_vec(field(t, "generator")?)?,
                            coefficient: json_rat(field(t, "coefficient")?)?,
                        })
                    })
                    .collect::<Result<_>>()?;
                out.push(Combination {
                    target: json_vec(field(c, "target")?)?,
                    terms,
                });
            }
            Ok(Certificate::WholeSpaceWitness(out))
        }
        other => Err(Error::InvalidInput(format!(
            "unknown certificate type `{other}`"
        ))),
    }
}

/// Reads back the parts of a JSON report that certificate checking needs.
pub fn parse_report(text: &str) -> Result<HartogsReport> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let rank = field(&v, "rank")?
        .as_u64()
        .ok_or_else(|| Error::InvalidInput("`rank` must be a nonnegative integer".into()))?
        as usize;
    let hartogs = match field(&v, "hartogs")? {
        Value::Bool(b) => Some(*b),
        Value::Null => None,
        other => return Err(Error::InvalidInput(format!("bad `hartogs` value {other}"))),
    };
    let certificate = match v.get("certificate") {
        None | Some(Value::Null) => None,
        Some(c) => Some(json_certificate(c)?),
    };
    Ok(HartogsReport {
        rank,
        fan_valid: v.get("fan_valid").and_then(Value::as_bool).unwrap_or(false),
        violations: Vec::new(),
        complete: v.get("complete").and_then(Value::as_bool),
        compactifiable_10: v.get("compactifiable_10").and_then(Value::as_bool),
        gap_components: v
            .get("gap_components")
            .and_then(Value::as_u64)
            .map(|n| n as usize),
        hartogs,
        not_applicable: None,
        gap_cells: Vec::new(),
        hartogs_cone: None,
        weight_cone: None,
        certificate,
        interpretation: Vec::new(),
        notes: Vec::new(),
    })
}

fn join_vecs(vs: &[RatVec]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn headline(r: &HartogsReport) -> String {
    match (r.hartogs, r.not_applicable) {
        (Some(true), _) => "HARTOGS: yes".to_string(),
        (Some(false), _) => "HARTOGS: no".to_string(),
        (None, Some(NotApplicable::Compact)) => {
            "HARTOGS: not applicable: complete fan (compact variety)".to_string()
        }
        (None, Some(NotApplicable::InvalidFan)) => {
            "HARTOGS: not applicable: invalid colored fan".to_string()
        }
        (None, Some(NotApplicable::GapDisconnected)) => format!(
            "HARTOGS: not applicable: V \\ |Σ| is not connected ({} components)",
            r.gap_components.unwrap_or(0)
        ),
        (None, None) => "HARTOGS: not applicable".to_string(),
    }
}

pub fn report_text(r: &HartogsReport, explain: bool) -> String {
    let mut s = String::new();
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(s, "{}", headline(r)).unwrap();
    writeln!(s, "rank: {}", r.rank).unwrap();
    writeln!(s, "colored fan valid: {}", yn(r.fan_valid)).unwrap();
    for v in &r.violations {
        writeln!(s, "  violation: {v}").unwrap();
    }
    if let Some(c) = r.complete {
        writeln!(s, "complete: {}", yn(c)).unwrap();
    }
    if let Some(c) = r.compactifiable_10 {
        writeln!(s, "(1,0)-compactifiable: {}", yn(c)).unwrap();
    }
    match &r.certificate {
        Some(Certificate::NonzeroFunctional(l)) => {
            writeln!(s, "certificate: nonzero weight λ = {l} in L").unwrap()
        }
        Some(Certificate::WholeSpaceWitness(c)) => writeln!(
            s,
            "certificate: {} nonnegative combinations reaching ±e_i",
            c.len()
        )
        .unwrap(),
        Some(Certificate::RankOneTrivialColors) => {
            writeln!(s, "certificate: rank one, every color point is zero").unwrap()
        }
        None => {}
    }
    for line in &r.interpretation {
        writeln!(s, "  {line}").unwrap();
    }
    for line in &r.notes {
        writeln!(s, "note: {line}").unwrap();
    }
    if explain {
        writeln!(s, "gap cells ({}):", r.gap_cells.len()).unwrap();
        for c in &r.gap_cells {
            writeln!(s, "  {c}").unwrap();
        }
        if let Some(c) = &r.hartogs_cone {
            writeln!(s, "C generators: {}", join_vecs(c.generators())).unwrap();
        }
        if let Some(l) = &r.weight_cone {
            writeln!(s, "L generators: {}", join_vecs(l.generators())).unwrap();
        }
        if let Some(Certificate::WholeSpaceWitness(combos)) = &r.certificate {
            for c in combos {
                let terms: Vec<String> = c
                    .terms
                    .iter()
                    .map(|t| format!("{}·{}", t.coefficient, t.generator))
                    .collect();
                writeln!(s, "  {} = {}", c.target, terms.join(" + ")).unwrap();
            }
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn exit_code(r: &HartogsReport) -> i32 {
    match r.hartogs {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_NO_HARTOGS,
        None => EXIT_NOT_APPLICABLE,
    }
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let fan = match load_input(path).and_then(|i| i.fan()) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    match validate_fan(&fan) {
        Ok(viols) if viols.is_empty() => {
            let _ = writeln!(out, "valid colored fan ({} cones)", fan.cones().len());
            EXIT_OK
        }
        Ok(viols) => {
            for v in &viols {
                let _ = writeln!(out, "{v}");
            }
            EXIT_INVALID
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PARSE
        }
    }
}

/// `max_rank` from the command line or environment wins over the input's
/// own option.
pub fn cmd_check(
    path: &Path,
    format: Format,
    explain: bool,
    max_rank: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let input = match load_input(path) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let opts = Options {
        max_rank: max_rank.or(input.max_rank).unwrap_or(DEFAULT_MAX_RANK),
    };
    let report = match input.report(&opts) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let _ = match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report_json(&report, explain)).expect("plain JSON")
        ),
        Format::Text => write!(out, "{}", report_text(&report, explain)),
    };
    exit_code(&report)
}

pub fn cmd_verify(
    report_path: &Path,
    input_path: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report = std::fs::read_to_string(report_path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", report_path.display())))
        .and_then(|t| parse_report(&t));
    let fan = load_input(input_path).and_then(|i| i.fan());
    let (report, fan) = match (report, fan) {
        (Ok(r), Ok(f)) => (r, f),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    if hartogs::verify_certificate(&report, &fan) {
        let _ = writeln!(out, "certificate verified");
        EXIT_OK
    } else {
        let _ = writeln!(out, "certificate does NOT verify against this input");
        EXIT_INVALID
    }
}
