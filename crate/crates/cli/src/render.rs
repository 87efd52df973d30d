//! Text tables, CSV and JSON output.

use linrec::{LinRecSeq, Poly, Value};
use serde_json::{json, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn value_text(v: &Value) -> String {
    if v.len() == 1 {
        v[0].to_string()
    } else {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(","))
    }
}

pub fn value_json(v: &Value) -> Json {
    if v.len() == 1 {
        json!(v[0].to_string())
    } else {
        Json::Array(v.iter().map(|x| json!(x.to_string())).collect())
    }
}

/// A labelled row of values over a shared index row.
pub struct Row {
    pub label: String,
    pub values: Vec<Value>,
}

/// Horizontal table in the layout `| n | 0 | 1 | ... |`, one row per series.
pub fn table(index_label: &str, indices: &[i64], rows: &[Row]) -> String {
    let mut grid: Vec<Vec<String>> = vec![std::iter::once(index_label.to_string())
        .chain(indices.iter().map(ToString::to_string))
        .collect()];
    for r in rows {
        grid.push(std::iter::once(r.label.clone()).chain(r.values.iter().map(value_text)).collect());
    }
    let cols = grid[0].len();
    let widths: Vec<usize> =
        (0..cols).map(|c| grid.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &grid {
        out.push('|');
        for (c, cell) in row.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                out.push_str(&format!(" {cell}{} |", " ".repeat(pad)));
            } else {
                out.push_str(&format!(" {}{cell} |", " ".repeat(pad)));
            }
        }
        out.push('\n');
    }
    out
}

/// One line per index: `n,label_1,label_2,...`.
pub fn csv(index_label: &str, indices: &[i64], rows: &[Row]) -> String {
    let mut out = String::new();
    let header: Vec<&str> = std::iter::once(index_label).chain(rows.iter().map(|r| r.label.as_str())).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for (k, n) in indices.iter().enumerate() {
        let mut line = vec![n.to_string()];
        for r in rows {
            let v = value_text(&r.values[k]);
            line.push(if v.contains(',') { format!("\"{v}\"") } else { v });
        }
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn series_json(index_label: &str, indices: &[i64], rows: &[Row]) -> Json {
    json!({
        "index": index_label,
        "indices": indices,
        "rows": rows
            .iter()
            .map(|r| json!({"label": r.label, "values": r.values.iter().map(value_json).collect::<Vec<_>>()}))
            .collect::<Vec<_>>(),
    })
}

pub fn series(format: Format, index_label: &str, indices: &[i64], rows: &[Row]) -> String {
    match format {
        Format::Table => table(index_label, indices, rows),
        Format::Csv => csv(index_label, indices, rows),
        Format::Json => pretty(&series_json(index_label, indices, rows)),
    }
}

pub fn pretty(j: &Json) -> String {
    let mut s = serde_json::to_string_pretty(j).expect("json serializes");
    s.push('\n');
    s
}

/// `charpoly: ...` / `init: (...)` summary of a sequence.
pub fn seq_summary(label: &str, f: &Poly, init: &[Value]) -> String {
    let init: Vec<String> = init.iter().map(value_text).collect();
    format!("{label}charpoly: {f}\n{label}init: ({})\n", init.join(", "))
}

pub fn seq_csv(f: &Poly, init: &[Value]) -> String {
    let init: Vec<String> = init.iter().map(value_text).collect();
    format!("charpoly,{f}\ninit,{}\n", init.join(","))
}

pub fn linrec_summary(label: &str, u: &LinRecSeq) -> String {
    seq_summary(label, u.charpoly(), u.init())
}
