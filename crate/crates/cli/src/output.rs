use serde_json::{Map, Value};

/// One output row: ordered `(field, value)` pairs.
pub type Record = Vec<(&'static str, Value)>;

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(text_value).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Text mode: a single-field record prints its bare value, anything else
/// prints `key=value` pairs separated by spaces.
pub fn text(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        if let [(_, v)] = r.as_slice() {
            out.push_str(&text_value(v));
        } else {
            let fields: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            out.push_str(&fields.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn json_lines(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        let obj: Map<String, Value> = r.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        out.push_str(&Value::Object(obj).to_string());
        out.push('\n');
    }
    out
}

/// Header from the first record's fields; values are never quoted, so
/// callers keep commas out of them.
pub fn csv(records: &[Record]) -> String {
    let mut out = String::new();
    if let Some(first) = records.first() {
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for r in records {
        let row: Vec<String> = r.iter().map(|(_, v)| text_value(v).replace(',', " ")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
