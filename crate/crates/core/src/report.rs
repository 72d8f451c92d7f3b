//! Report rendering.
//!
//! Every report is serialized once to a JSON value; the text form is a
//! line-oriented projection of that value, so both carry the same data.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Text,
}

pub fn render<T: Serialize>(value: &T, format: Format) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("values print"),
        Format::Text => {
            let mut out = String::new();
            text(&value, 0, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(v, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        let mut inner = String::new();
                        text(item, indent + 1, &mut inner);
                        let trimmed = inner.trim_start();
                        out.push_str(&format!("{pad}- {trimmed}"));
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        name: &'static str,
        ok: bool,
        ids: Vec<u32>,
    }

    #[test]
    fn text_carries_every_json_leaf() {
        let rows = vec![
            Row {
                name: "Z4",
                ok: true,
                ids: vec![1, 3],
            },
            Row {
                name: "Z6",
                ok: false,
                ids: vec![],
            },
        ];
        let t = render(&rows, Format::Text);
        assert!(t.contains("name: Z4"));
        assert!(t.contains("- ids: [1, 3]"));
        assert!(t.contains("ids: [1, 3]"));
        assert!(t.contains("ok: false"));
        let j: Value = serde_json::from_str(&render(&rows, Format::Json)).unwrap();
        assert_eq!(j[1]["name"], "Z6");
    }
}
