//! Flag and file parsing: exact rationals, partitions, and JSON matrices
//! with string-rational or float entries.

use serde_json::Value;

use zonal_core::linalg::RMatrix;
use zonal_core::partition::Partition;
use zonal_core::rational::{parse_rat, rat_from_f64, Rat};

pub struct CliError {
    pub message: String,
}

impl CliError {
    pub fn new(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_rational_flag(flag: &str, value: &str) -> CliResult<Rat> {
    parse_rat(value).map_err(|_| CliError::new(format!("--{flag}: cannot parse rational {value:?}")))
}

pub fn parse_partition_flag(flag: &str, value: &str) -> CliResult<Partition> {
    value
        .parse()
        .map_err(|_| CliError::new(format!("--{flag}: cannot parse partition {value:?}")))
}

pub fn parse_rational_list(flag: &str, value: &str) -> CliResult<Vec<Rat>> {
    value
        .split(',')
        .map(|tok| parse_rational_flag(flag, tok.trim()))
        .collect()
}

/// A parsed matrix file: exact entries, plus whether any entry arrived as a
/// float (tolerance-dependent downstream behavior).
pub struct MatrixInput {
    pub matrix: RMatrix,
    pub float_entries: bool,
    pub float_rows: Vec<Vec<f64>>,
}

/// Read `{"m": k, "entries": [[...], ...]}`; entries are strings ("p/q",
/// decimals) or JSON numbers. Numbers are converted exactly but flagged.
pub fn read_matrix_file(flag: &str, path: &str) -> CliResult<MatrixInput> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(format!("--{flag}: cannot read {path}: {e}")))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::new(format!("--{flag}: invalid JSON in {path}: {e}")))?;
    let m = value
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::new(format!("--{flag}: {path} needs an integer field \"m\"")))?
        as usize;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::new(format!("--{flag}: {path} needs an \"entries\" array")))?;
    if entries.len() != m {
        return Err(CliError::new(format!(
            "--{flag}: expected {m} rows, found {}",
            entries.len()
        )));
    }
    let mut float_entries = false;
    let mut rows = Vec::with_capacity(m);
    let mut float_rows = Vec::with_capacity(m);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::new(format!("--{flag}: rows must be arrays")))?;
        if row.len() != m {
            return Err(CliError::new(format!(
                "--{flag}: expected {m} columns, found {}",
                row.len()
            )));
        }
        let mut exact_row = Vec::with_capacity(m);
        let mut float_row = Vec::with_capacity(m);
        for cell in row {
            let rat = match cell {
                Value::String(s) => parse_rat(s)
                    .map_err(|_| CliError::new(format!("--{flag}: bad rational {s:?}")))?,
                Value::Number(n) => {
                    let f = n
                        .as_f64()
                        .ok_or_else(|| CliError::new(format!("--{flag}: bad number {n}")))?;
                    float_entries = true;
                    rat_from_f64(f)
                        .map_err(|_| CliError::new(format!("--{flag}: non-finite number {n}")))?
                }
                other => {
                    return Err(CliError::new(format!(
                        "--{flag}: entries must be strings or numbers, found {other}"
                    )))
                }
            };
            float_row.push(zonal_core::rational::rat_to_f64(&rat));
            exact_row.push(rat);
        }
        rows.push(exact_row);
        float_rows.push(float_row);
    }
    let matrix = RMatrix::from_rows(rows).map_err(|e| CliError::new(e.to_string()))?;
    Ok(MatrixInput {
        matrix,
        float_entries,
        float_rows,
    })
}

pub fn partition_json(p: &Partition) -> Value {
    Value::Array(
        p.parts()
            .iter()
            .map(|&x| Value::Number(serde_json::Number::from(x)))
            .collect(),
    )
}

pub fn rat_string(x: &Rat) -> Value {
    Value::String(x.to_string())
}
