//! Matrix argument resolution: inline text, file path, or standard
//! input, with the JSON array-of-arrays alternative auto-detected.

use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::Value;
use tropcomm_core::{FiniteMat2, TropMatrix, TropScalar};

use crate::CliError;

/// Resolves a matrix argument to its text: `-` reads standard input,
/// an existing file path reads that file, anything else is taken as
/// the matrix itself.
pub fn read_source(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    if Path::new(arg).is_file() {
        return fs::read_to_string(arg).map_err(|e| CliError::Input(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_string())
}

/// Parses matrix text in either accepted syntax: rows separated by `;`
/// or newlines with `-inf` for bottom (`0.166 0.861; -0.62 -0.76`), or
/// a JSON array of arrays with `null` for bottom.
pub fn parse_matrix(text: &str) -> Result<TropMatrix, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        parse_json_matrix(trimmed)
    } else {
        trimmed
            .parse()
            .map_err(|e| CliError::Input(format!("{e}")))
    }
}

fn parse_json_matrix(text: &str) -> Result<TropMatrix, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| CliError::Input(String::from("JSON matrix must be an array of rows")))?;
    let mut grid = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| {
            CliError::Input(format!("row {}: expected an array of entries", i + 1))
        })?;
        let mut entries = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            let scalar = match cell {
                Value::Null => TropScalar::Bottom,
                Value::Number(n) => {
                    let v = n.as_f64().ok_or_else(|| {
                        CliError::Input(format!("row {}, entry {}: not a float", i + 1, j + 1))
                    })?;
                    TropScalar::try_finite(v).map_err(|_| {
                        CliError::Input(format!("row {}, entry {}: {v} is not finite", i + 1, j + 1))
                    })?
                }
                other => {
                    return Err(CliError::Input(format!(
                        "row {}, entry {}: expected a number or null, found {other}",
                        i + 1,
                        j + 1
                    )))
                }
            };
            entries.push(scalar);
        }
        grid.push(entries);
    }
    TropMatrix::from_rows(&grid).map_err(|e| CliError::Input(format!("{e}")))
}

/// Resolves and parses a 2×2 matrix that may contain bottom entries.
pub fn matrix_2x2(arg: &str) -> Result<TropMatrix, CliError> {
    let m = parse_matrix(&read_source(arg)?)?;
    if m.shape() != (2, 2) {
        return Err(CliError::Input(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// Resolves and parses a 2×2 matrix with all entries finite.
pub fn finite_2x2(arg: &str) -> Result<FiniteMat2, CliError> {
    let m = matrix_2x2(arg)?;
    FiniteMat2::from_matrix(&m).map_err(|e| CliError::Input(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_text_parses() {
        let m = matrix_2x2("0.166 0.861; -0.62 -0.76").unwrap();
        assert_eq!(m.get(0, 1), TropScalar::finite(0.861));
    }

    #[test]
    fn json_with_null_parses_to_bottom() {
        let m = matrix_2x2("[[0, null], [null, 0]]").unwrap();
        assert!(m.get(0, 1).is_bottom());
        assert_eq!(m.get(1, 1), TropScalar::finite(0.0));
    }

    #[test]
    fn file_sources_are_read() {
        let dir = std::env::temp_dir().join("tropcomm-input-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("a.txt");
        fs::write(&path, "1 2\n3 4\n").unwrap();
        let m = matrix_2x2(path.to_str().unwrap()).unwrap();
        assert_eq!(m.get(1, 0), TropScalar::finite(3.0));
    }

    #[test]
    fn errors_carry_positions() {
        let err = matrix_2x2("0.1 x; 2 3").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(format!("{err}").contains("row 1"));

        let err = matrix_2x2("[[0, \"x\"], [1, 2]]").unwrap_err();
        assert!(format!("{err}").contains("row 1, entry 2"));
    }

    #[test]
    fn shape_and_finiteness_are_enforced() {
        assert!(matrix_2x2("1 2 3; 4 5 6").is_err());
        assert!(finite_2x2("1 -inf; 0 0").is_err());
        assert!(finite_2x2("1 2; 3 4").is_ok());
    }
}
