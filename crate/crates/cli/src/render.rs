//! Text rendering of the JSON reports.

use serde_json::{Map, Value};

/// Render a report: scalars as `key: value`, arrays of objects as tables.
pub fn text(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => object(map, &mut out),
        Value::Array(items) if items.iter().all(Value::is_object) => table(items, &mut out),
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}

fn object(map: &Map<String, Value>, out: &mut String) {
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut tables = Vec::new();
    for (k, v) in map {
        match v {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => tables.push((k, items)),
            _ => out.push_str(&format!("{k:<width$}  {}\n", cell(v))),
        }
    }
    for (k, items) in tables {
        out.push_str(&format!("\n{k}:\n"));
        table(items, out);
    }
}

fn table(items: &[Value], out: &mut String) {
    let mut columns: Vec<&str> = Vec::new();
    for item in items {
        for k in item.as_object().into_iter().flat_map(Map::keys) {
            if !columns.contains(&k.as_str()) {
                columns.push(k);
            }
        }
    }
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|item| {
            columns
                .iter()
                .map(|c| item.get(*c).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(columns.iter().map(|c| c.to_string()).collect()));
    for r in rows {
        out.push_str(&line(r));
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn scalars_and_tables() {
        let v = json!({"kind": "hecke", "results": [{"name": "a", "holds": true}, {"name": "bb", "holds": false}]});
        assert_eq!(
            text(&v),
            "kind     hecke\n\nresults:\nname  holds\na     true\nbb    false\n"
        );
    }

    #[test]
    fn nested_cells() {
        let v = json!([{"r": 3, "bound": {"bound": 12, "within": true}, "t": null}]);
        assert_eq!(text(&v), "r  bound                 t\n3  bound=12 within=true  -\n");
    }
}
