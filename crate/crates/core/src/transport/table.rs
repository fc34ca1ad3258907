use std::path::Path;

use crate::{Error, Result};

/// Parses whitespace-separated `time displacement` rows. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_table(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Table {
                line: i + 1,
                reason: format!("expected 2 columns, found {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|e| Error::Table { line: i + 1, reason: format!("`{s}`: {e}") })
        };
        rows.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(rows)
}

pub fn read_table(path: impl AsRef<Path>) -> Result<Vec<(f64, f64)>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}
