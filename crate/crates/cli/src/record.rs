//! One structured record per invocation, rendered as JSON, CSV or text.
//!
//! Integers are always stored as decimal strings so no consumer loses
//! precision. Field order is insertion order.

use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Poly,
    Coeffs,
    Triangle,
    SumCheck,
    Fpoly,
    Conjecture,
    Grs,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Poly => "poly",
            Kind::Coeffs => "coeffs",
            Kind::Triangle => "triangle",
            Kind::SumCheck => "sum_check",
            Kind::Fpoly => "fpoly",
            Kind::Conjecture => "conjecture",
            Kind::Grs => "grs",
        }
    }
}

pub fn num<T: Display>(v: T) -> Value {
    Value::String(v.to_string())
}

pub fn nums<T: Display>(vs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(vs.into_iter().map(num).collect())
}

#[derive(Clone, Debug)]
pub struct OutputRecord {
    kind: Kind,
    fields: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(kind: Kind) -> Self {
        OutputRecord {
            kind,
            fields: Map::new(),
        }
    }

    pub fn field(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::String(self.kind.as_str().into()));
        obj.extend(self.fields.clone());
        Value::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.to_json().to_string();
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for (path, value) in self.flatten() {
                    out.push_str(&path);
                    out.push_str(": ");
                    out.push_str(&value);
                    out.push('\n');
                }
                out
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["field", "value"]).expect("in-memory write");
                for (path, value) in self.flatten() {
                    w.write_record([path.as_str(), value.as_str()])
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
            }
        }
    }

    /// `(path, scalar)` pairs in field order, e.g. `rows[2][0]` or `checks[1].name`.
    fn flatten(&self) -> Vec<(String, String)> {
        let mut out = vec![("kind".to_string(), self.kind.as_str().to_string())];
        for (key, value) in &self.fields {
            flatten_into(key.clone(), value, &mut out);
        }
        out
    }
}

fn flatten_into(path: String, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Array(items) if !items.is_empty() => {
            for (i, item) in items.iter().enumerate() {
                flatten_into(format!("{path}[{i}]"), item, out);
            }
        }
        Value::Array(_) => out.push((path, "[]".into())),
        Value::Object(map) => {
            for (k, v) in map {
                flatten_into(format!("{path}.{k}"), v, out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        Value::Null => out.push((path, String::new())),
        other => out.push((path, other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        OutputRecord::new(Kind::Poly)
            .field("k", num(2))
            .field("coefficients", nums([0, -1, 2]))
            .field("display", Value::String("2*n^2 - n".into()))
            .field("ok", Value::Bool(true))
    }

    #[test]
    fn json_is_ordered_and_newline_terminated() {
        let s = sample().render(Format::Json);
        assert_eq!(
            s,
            "{\"kind\":\"poly\",\"k\":\"2\",\"coefficients\":[\"0\",\"-1\",\"2\"],\"display\":\"2*n^2 - n\",\"ok\":true}\n"
        );
    }

    #[test]
    fn text_flattens_paths() {
        let s = sample().render(Format::Text);
        assert_eq!(
            s,
            "kind: poly\nk: 2\ncoefficients[0]: 0\ncoefficients[1]: -1\ncoefficients[2]: 2\ndisplay: 2*n^2 - n\nok: true\n"
        );
    }

    #[test]
    fn csv_has_header() {
        let s = sample().render(Format::Csv);
        assert!(s.starts_with("field,value\nkind,poly\nk,2\ncoefficients[0],0\n"));
        assert!(s.ends_with("ok,true\n"));
    }

    #[test]
    fn nested_objects_flatten() {
        let rec = OutputRecord::new(Kind::Grs).field(
            "checked",
            Value::Array(vec![serde_json::json!({"k": "2", "ok": true})]),
        );
        let s = rec.render(Format::Text);
        assert!(s.contains("checked[0].k: 2\nchecked[0].ok: true\n"));
    }
}
