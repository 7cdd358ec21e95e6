//! JSON/CSV emission. The two formats encode the same records: CSV rows are
//! the flat per-record projection of the JSON payload.

use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub fn emit(format: Format, payload: &Value, columns: &[&str], rows: &[Value]) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(payload).expect("payload serializes")
        ),
        Format::Csv => {
            println!("{}", columns.join(","));
            for row in rows {
                let cells: Vec<String> = columns.iter().map(|c| csv_cell(&row[*c])).collect();
                println!("{}", cells.join(","));
            }
        }
    }
}

fn csv_cell(v: &Value) -> String {
    let raw = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}
