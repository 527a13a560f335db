use serde_json::{json, Map, Value};

use crate::{CliError, JobSpec};

/// What a command computed, before it is wrapped in the report envelope.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    /// Field specification(s) the computation ran over.
    pub field: Value,
    pub result: Value,
    /// Computed verdicts that contradict a published claim.
    pub discrepancies: Vec<Value>,
    pub warnings: Vec<String>,
    pub verified: bool,
}

impl Outcome {
    pub fn new(field: Value, result: Value) -> Self {
        Outcome { field, result, discrepancies: Vec::new(), warnings: Vec::new(), verified: true }
    }
}

fn header(job: Option<&JobSpec>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("skewcodes"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    if let Some(job) = job {
        m.insert("command".into(), json!(job.command.name()));
        m.insert("seed".into(), json!(job.seed));
        m.insert("budget".into(), json!(job.budget));
        m.insert("trials".into(), json!(job.trials));
    } else {
        m.insert("command".into(), Value::Null);
        m.insert("seed".into(), Value::Null);
    }
    m
}

pub(crate) fn envelope(job: &JobSpec, outcome: &Outcome, code: i32) -> Value {
    let mut m = header(Some(job));
    m.insert("field".into(), outcome.field.clone());
    m.insert("status".into(), json!(if code == 0 { "ok" } else { "verification_failed" }));
    m.insert("exit_code".into(), json!(code));
    m.insert("result".into(), outcome.result.clone());
    m.insert("discrepancies".into(), Value::Array(outcome.discrepancies.clone()));
    m.insert("warnings".into(), json!(outcome.warnings));
    Value::Object(m)
}

pub(crate) fn error_report(job: Option<&JobSpec>, err: &CliError) -> String {
    let mut m = header(job);
    m.insert("field".into(), Value::Null);
    m.insert("status".into(), json!("error"));
    m.insert("exit_code".into(), json!(crate::EXIT_INPUT));
    let kind = match err {
        CliError::Parse(_) => "ParseError".to_string(),
        CliError::UnknownSuite(_) => "UnknownSuite".to_string(),
        CliError::Input(skewcodes::Error::HypothesisViolated(_)) => "HypothesisViolated".to_string(),
        CliError::Input(e) => format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or_default().to_string(),
    };
    m.insert("error".into(), json!({ "kind": kind, "message": err.to_string() }));
    to_json(&Value::Object(m))
}

pub(crate) fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let scalar_array = |a: &[Value]| a.iter().all(|x| !x.is_object() && !x.is_array());
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if !a.is_empty() && !scalar_array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        _ => out.push((prefix.to_string(), v.to_string())),
    }
}

/// Two columns: the dotted path of each leaf and its value.
pub fn render_table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
}
