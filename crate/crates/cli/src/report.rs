//! Run reports and their JSON, CSV and text encodings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ffsums::cyclo::CycloNumber;
use ffsums::gf::{FieldElement, FieldSpec};
use ffsums::verify::Check;
use serde_json::{json, Map, Value as Json};

/// A result or parameter value.
#[derive(Clone, Debug)]
pub enum Val {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
    Cyclo(CycloNumber),
    List(Vec<Val>),
    Map(BTreeMap<String, Val>),
}

impl Val {
    pub fn map<K: Into<String>>(entries: impl IntoIterator<Item = (K, Val)>) -> Val {
        Val::Map(entries.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn list<T: Into<Val>>(items: impl IntoIterator<Item = T>) -> Val {
        Val::List(items.into_iter().map(Into::into).collect())
    }
}

impl From<i64> for Val {
    fn from(v: i64) -> Self {
        Val::Int(v)
    }
}

impl From<u64> for Val {
    fn from(v: u64) -> Self {
        i64::try_from(v).map_or_else(|_| Val::Text(v.to_string()), Val::Int)
    }
}

impl From<u32> for Val {
    fn from(v: u32) -> Self {
        Val::Int(v.into())
    }
}

impl From<usize> for Val {
    fn from(v: usize) -> Self {
        Val::from(v as u64)
    }
}

impl From<f64> for Val {
    fn from(v: f64) -> Self {
        Val::Float(v)
    }
}

impl From<bool> for Val {
    fn from(v: bool) -> Self {
        Val::Bool(v)
    }
}

impl From<&str> for Val {
    fn from(v: &str) -> Self {
        Val::Text(v.to_string())
    }
}

impl From<String> for Val {
    fn from(v: String) -> Self {
        Val::Text(v)
    }
}

impl From<CycloNumber> for Val {
    fn from(v: CycloNumber) -> Self {
        Val::Cyclo(v)
    }
}

impl From<&CycloNumber> for Val {
    fn from(v: &CycloNumber) -> Self {
        Val::Cyclo(v.clone())
    }
}

impl From<&FieldElement> for Val {
    fn from(v: &FieldElement) -> Self {
        Val::Text(v.to_string())
    }
}

impl From<FieldElement> for Val {
    fn from(v: FieldElement) -> Self {
        Val::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub tolerance: Option<f64>,
}

impl From<Check> for Verdict {
    fn from(c: Check) -> Self {
        Verdict {
            name: c.name,
            passed: c.passed,
            detail: c.detail,
            tolerance: c.tolerance,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FieldInfo {
    pub p: u32,
    pub e: usize,
    pub modulus: Vec<u32>,
}

impl From<&FieldSpec> for FieldInfo {
    fn from(f: &FieldSpec) -> Self {
        FieldInfo {
            p: f.p(),
            e: f.degree(),
            modulus: f.modulus().to_vec(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub field: Option<FieldInfo>,
    pub parameters: BTreeMap<String, Val>,
    pub results: BTreeMap<String, Val>,
    pub verdicts: Vec<Verdict>,
    /// Wall-clock seconds, only recorded on request so default output is reproducible.
    pub duration_secs: Option<f64>,
}

impl RunReport {
    pub fn new(command: &[String]) -> Self {
        RunReport {
            command: command.to_vec(),
            field: None,
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            verdicts: Vec::new(),
            duration_secs: None,
        }
    }

    pub fn field(&mut self, f: &FieldSpec) {
        self.field = Some(f.into());
    }

    pub fn param(&mut self, key: &str, v: impl Into<Val>) {
        self.parameters.insert(key.to_string(), v.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Val>) {
        self.results.insert(key.to_string(), v.into());
    }

    pub fn exact(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.verdicts.push(Check::exact(name, passed, detail).into());
    }

    pub fn approx(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>, tol: f64) {
        self.verdicts.push(Check::approx(name, passed, detail, tol).into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit(report: &RunReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&to_json(report)).expect("report serializes");
            out.push('\n');
            out.into_bytes()
        }
        Format::Csv => to_csv(report),
        Format::Text => to_text(report).into_bytes(),
    }
}

fn rational_pair(r: &num_rational::BigRational) -> Json {
    json!([r.numer().to_string(), r.denom().to_string()])
}

fn val_json(v: &Val) -> Json {
    match v {
        Val::Int(n) => json!(n),
        Val::Float(x) => json!(x),
        Val::Bool(b) => json!(b),
        Val::Text(s) => json!(s),
        Val::Cyclo(c) => {
            let z = c.embed_complex();
            json!({
                "order": c.order(),
                "coeffs": c.coeffs().iter().map(rational_pair).collect::<Vec<_>>(),
                "approx": [clean(z.re), clean(z.im)],
            })
        }
        Val::List(items) => Json::Array(items.iter().map(val_json).collect()),
        Val::Map(m) => Json::Object(m.iter().map(|(k, v)| (k.clone(), val_json(v))).collect()),
    }
}

fn map_json(m: &BTreeMap<String, Val>) -> Json {
    Json::Object(m.iter().map(|(k, v)| (k.clone(), val_json(v))).collect())
}

pub fn to_json(r: &RunReport) -> Json {
    let mut out = Map::new();
    out.insert("command".into(), json!(r.command));
    out.insert(
        "field".into(),
        r.field
            .as_ref()
            .map_or(Json::Null, |f| json!({"p": f.p, "e": f.e, "modulus": f.modulus})),
    );
    out.insert("parameters".into(), map_json(&r.parameters));
    out.insert("results".into(), map_json(&r.results));
    out.insert(
        "verdicts".into(),
        Json::Array(
            r.verdicts
                .iter()
                .map(|v| json!({"name": v.name, "passed": v.passed, "detail": v.detail, "tolerance": v.tolerance}))
                .collect(),
        ),
    );
    out.insert("passed".into(), json!(r.passed()));
    if let Some(d) = r.duration_secs {
        out.insert("duration_secs".into(), json!(d));
    }
    Json::Object(out)
}

/// Rounds away sub-1e-9 noise so `-0.000000000` never appears.
fn clean(x: f64) -> f64 {
    if x.abs() < 5e-10 {
        0.0
    } else {
        x
    }
}

fn approx_text(c: &CycloNumber) -> String {
    let z = c.embed_complex();
    format!("{:.9}{:+.9}i", clean(z.re), clean(z.im))
}

fn val_text(v: &Val) -> String {
    match v {
        Val::Int(n) => n.to_string(),
        Val::Float(x) => format!("{:.9}", clean(*x)),
        Val::Bool(b) => b.to_string(),
        Val::Text(s) => s.clone(),
        Val::Cyclo(c) => match c.as_rational() {
            Some(_) => c.to_string(),
            None => format!("{c} (~ {})", approx_text(c)),
        },
        Val::List(items) => format!("[{}]", items.iter().map(val_text).collect::<Vec<_>>().join(", ")),
        Val::Map(m) => format!(
            "{{{}}}",
            m.iter()
                .map(|(k, v)| format!("{k}: {}", val_text(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

fn modulus_text(m: &[u32]) -> String {
    m.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn tol_text(t: Option<f64>) -> String {
    t.map_or(String::new(), |t| format!("{t:e}"))
}

pub fn to_text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command.join(" "));
    if let Some(f) = &r.field {
        let _ = writeln!(out, "field: GF({}^{}), modulus {}", f.p, f.e, modulus_text(&f.modulus));
    }
    for (title, m) in [("parameters", &r.parameters), ("results", &r.results)] {
        if m.is_empty() {
            continue;
        }
        let _ = writeln!(out, "{title}:");
        for (k, v) in m {
            let _ = writeln!(out, "  {k}: {}", val_text(v));
        }
    }
    let _ = writeln!(out, "verdicts:");
    for v in &r.verdicts {
        let tol = v.tolerance.map_or(String::new(), |t| format!(" [tol {t:e}]"));
        let _ = writeln!(
            out,
            "  [{}] {}: {}{tol}",
            if v.passed { "PASS" } else { "FAIL" },
            v.name,
            v.detail
        );
    }
    let failed = r.verdicts.iter().filter(|v| !v.passed).count();
    let _ = writeln!(
        out,
        "status: {} ({} verdicts, {failed} failed)",
        if failed == 0 { "PASS" } else { "FAIL" },
        r.verdicts.len()
    );
    if let Some(d) = r.duration_secs {
        let _ = writeln!(out, "duration: {d:.3}s");
    }
    out
}

fn flatten(prefix: &str, v: &Val, rows: &mut Vec<(String, String, String)>) {
    match v {
        Val::List(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, rows);
            }
        }
        Val::Map(m) => {
            for (k, item) in m {
                flatten(&format!("{prefix}.{k}"), item, rows);
            }
        }
        Val::Cyclo(c) => rows.push((prefix.to_string(), c.to_string(), approx_text(c))),
        other => rows.push((prefix.to_string(), val_text(other), String::new())),
    }
}

/// Columns `section,key,value,detail,tolerance`; nested values flatten to `key[i].sub`.
pub fn to_csv(r: &RunReport) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |cells: [&str; 5]| w.write_record(cells).expect("in-memory write");
    row(["section", "key", "value", "detail", "tolerance"]);
    row(["command", "argv", &r.command.join(" "), "", ""]);
    if let Some(f) = &r.field {
        row(["field", "p", &f.p.to_string(), "", ""]);
        row(["field", "e", &f.e.to_string(), "", ""]);
        row(["field", "modulus", &modulus_text(&f.modulus), "", ""]);
    }
    for (section, m) in [("parameter", &r.parameters), ("result", &r.results)] {
        for (k, v) in m {
            let mut rows = Vec::new();
            flatten(k, v, &mut rows);
            for (key, value, detail) in rows {
                row([section, &key, &value, &detail, ""]);
            }
        }
    }
    for v in &r.verdicts {
        row([
            "verdict",
            &v.name,
            if v.passed { "pass" } else { "fail" },
            &v.detail,
            &tol_text(v.tolerance),
        ]);
    }
    row(["status", "passed", &r.passed().to_string(), "", ""]);
    if let Some(d) = r.duration_secs {
        row(["status", "duration_secs", &format!("{d:.6}"), "", ""]);
    }
    w.into_inner().expect("in-memory flush")
}
