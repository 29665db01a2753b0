//! Human-readable rendering of result documents.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let inner: Option<Vec<String>> = items.iter().map(scalar).collect();
            inner.map(|v| format!("[{}]", v.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_documents() {
        let v = json!({"d": "-1", "etale": true, "ring": {"kind": "rational"}, "matrix": [["0", "-1"], ["1", "0"]]});
        assert_eq!(
            render(&v),
            "d: -1\netale: yes\nmatrix: [[0, -1], [1, 0]]\nring:\n  kind: rational\n"
        );
    }
}
