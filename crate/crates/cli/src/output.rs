use plethyra::relations::RelationReport;
use plethyra::SchurVector;
use serde_json::Value;

use crate::config::OutputFormat;

pub fn schur(v: &SchurVector, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => v.to_json().to_string(),
        OutputFormat::Table => {
            let rows: Vec<(String, String)> = v
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| (l.to_string(), c.to_string()))
                .collect();
            table(&["lambda", "mult"], &rows)
        }
    }
}

pub fn report(r: &RelationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => r.to_json().to_string(),
        OutputFormat::Table => {
            let mut out = table(
                &["relation", r.relation.as_str()],
                &[
                    ("status".into(), r.status().as_str().into()),
                    ("checked".into(), r.checked.to_string()),
                    ("skipped".into(), r.skipped.to_string()),
                    ("failures".into(), r.failures.len().to_string()),
                ],
            );
            for f in &r.failures {
                out.push('\n');
                out.push_str(&f.to_json().to_string());
            }
            out
        }
    }
}

/// Renders a JSON value that has no dedicated table form as `key  value` lines.
pub fn generic(v: &Value, format: OutputFormat) -> String {
    match (format, v) {
        (OutputFormat::Table, Value::Object(map)) => {
            let rows: Vec<(String, String)> = map
                .iter()
                .map(|(k, v)| {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        Value::Array(a) => a.len().to_string(),
                        other => other.to_string(),
                    };
                    (k.clone(), shown)
                })
                .collect();
            table(&["key", "value"], &rows)
        }
        _ => v.to_string(),
    }
}

/// Two-column table; the second column is right-aligned.
pub fn table(header: &[&str; 2], rows: &[(String, String)]) -> String {
    let w0 = rows.iter().map(|r| r.0.len()).chain([header[0].len()]).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.len()).chain([header[1].len()]).max().unwrap_or(0);
    let mut lines = vec![format!("{:<w0$}  {:>w1$}", header[0], header[1])];
    lines.extend(rows.iter().map(|(a, b)| format!("{a:<w0$}  {b:>w1$}")));
    lines.join("\n")
}
