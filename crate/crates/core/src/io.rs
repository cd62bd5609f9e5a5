//! Exact text formats for matrices and vectors.
//!
//! JSON: `{"cols": c, "entries": [["n/d", ...], ...], "rows": r}` (keys are
//! emitted sorted). CSV: one matrix row per line of `n/d` tokens.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::math::{format_scalar, parse_scalar, DenseMatrix, ExactScalar};

pub fn vector_to_json(v: &[ExactScalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

pub fn matrix_to_json(m: &DenseMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| vector_to_json(m.row(i))).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn scalar_from_json(v: &Value, position: impl Fn() -> String) -> Result<ExactScalar> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| Error::parse(position(), e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(ExactScalar::from_integer(n.as_i64().unwrap().into())),
        other => Err(Error::parse(position(), format!("expected rational string, got {other}"))),
    }
}

pub fn vector_from_json(v: &Value) -> Result<Vec<ExactScalar>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse("vector", "expected a JSON array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, || format!("item {}", i + 1)))
        .collect()
}

pub fn matrix_from_json(v: &Value) -> Result<DenseMatrix> {
    let field = |name: &str| {
        v.get(name)
            .ok_or_else(|| Error::parse("matrix", format!("missing field {name:?}")))
    };
    let rows = field("rows")?
        .as_u64()
        .ok_or_else(|| Error::parse("matrix.rows", "expected a nonnegative integer"))? as usize;
    let cols = field("cols")?
        .as_u64()
        .ok_or_else(|| Error::parse("matrix.cols", "expected a nonnegative integer"))? as usize;
    let entry_rows = field("entries")?
        .as_array()
        .ok_or_else(|| Error::parse("matrix.entries", "expected an array of rows"))?;
    if entry_rows.len() != rows {
        return Err(Error::parse(
            "matrix.entries",
            format!("declared {rows} rows, found {}", entry_rows.len()),
        ));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in entry_rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("row {}", i + 1), "expected an array"))?;
        if row.len() != cols {
            return Err(Error::parse(
                format!("row {}", i + 1),
                format!("declared {cols} columns, found {}", row.len()),
            ));
        }
        for (j, x) in row.iter().enumerate() {
            entries.push(scalar_from_json(x, || format!("row {}, column {}", i + 1, j + 1))?);
        }
    }
    DenseMatrix::new(rows, cols, entries)
}

pub fn matrix_from_json_str(text: &str) -> Result<DenseMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    matrix_from_json(&v)
}

pub fn matrix_to_csv(m: &DenseMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_scalar).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn csv_records(text: &str) -> Result<Vec<Vec<String>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::parse(format!("line {}", i + 1), e.to_string()))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        rows.push(rec.iter().map(str::to_owned).collect());
    }
    Ok(rows)
}

pub fn matrix_from_csv(text: &str) -> Result<DenseMatrix> {
    let records = csv_records(text)?;
    let mut rows = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        let row = rec
            .iter()
            .enumerate()
            .map(|(j, tok)| {
                parse_scalar(tok).map_err(|e| {
                    Error::parse(format!("row {}, column {}", i + 1, j + 1), e.to_string())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    DenseMatrix::from_rows(rows)
}

/// Integer CSV, e.g. generator matrices or code words. Rows may not be ragged.
pub fn int_rows_from_csv(text: &str) -> Result<Vec<Vec<i64>>> {
    let records = csv_records(text)?;
    let width = records.first().map_or(0, Vec::len);
    records
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            if rec.len() != width {
                return Err(Error::parse(
                    format!("row {}", i + 1),
                    format!("expected {width} fields, found {}", rec.len()),
                ));
            }
            rec.iter()
                .enumerate()
                .map(|(j, tok)| {
                    tok.parse::<i64>().map_err(|e| {
                        Error::parse(format!("row {}, column {}", i + 1, j + 1), format!("{tok:?}: {e}"))
                    })
                })
                .collect()
        })
        .collect()
}

/// Load a matrix from JSON or CSV, picking by the first non-blank byte.
pub fn matrix_from_text(text: &str) -> Result<DenseMatrix> {
    if text.trim_start().starts_with('{') {
        matrix_from_json_str(text)
    } else {
        matrix_from_csv(text)
    }
}
