//! Data files: one real number per line, ASCII, with blank lines and `#`
//! comment lines skipped. Values must be finite and nonzero; violations are
//! reported with their line number.

use std::path::Path;

use crate::{CliError, Result};

/// Parses the text of a data file. `path` is only used in error messages.
pub fn parse_values(text: &str, path: &Path) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let value: f64 = body.parse().map_err(|_| CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("not a number: {body:?}"),
        })?;
        if !value.is_finite() {
            return Err(CliError::Parse {
                path: path.to_path_buf(),
                line,
                message: format!("value is not finite: {body:?}"),
            });
        }
        if value == 0.0 {
            return Err(CliError::Parse {
                path: path.to_path_buf(),
                line,
                message: "value is zero; the estimator needs nonzero data".into(),
            });
        }
        values.push(value);
    }
    Ok(values)
}

pub fn read_values(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_values(&text, path)
}

/// Renders a data file: `#`-prefixed header lines, then one value per line
/// in the shortest decimal form that parses back to the same float. No
/// trailing newline; callers add one when writing.
pub fn format_data_file(header: &[String], values: &[f64]) -> String {
    let mut lines: Vec<String> = header.iter().map(|h| format!("# {h}")).collect();
    lines.extend(values.iter().map(|v| v.to_string()));
    lines.join("\n")
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
