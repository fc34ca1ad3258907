use std::io::{self, Write};

use serde::Serialize;

/// Rows of numbers under a `# config:` line and a header.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub trailer: Vec<(String, f64)>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Self { columns, rows: Vec::new(), trailer: Vec::new() }
    }

    pub fn write<C: Serialize>(&self, command: &str, config: &C, out: &mut dyn Write) -> io::Result<()> {
        let meta = serde_json::json!({ "command": command, "params": config });
        writeln!(out, "# config: {meta}")?;
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| number(v)).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        for (name, value) in &self.trailer {
            writeln!(out, "# {name},{}", number(*value))?;
        }
        Ok(())
    }
}

/// Twelve significant digits.
pub fn number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.11e}")
    } else {
        format!("{v}")
    }
}
