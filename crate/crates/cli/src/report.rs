//! Rendering of command results as JSON, CSV or aligned text.

use std::io::Write;

use serde::Serialize;

use crate::Format;

/// A named scalar; `None` is an undefined value.
pub struct Row {
    pub name: String,
    pub value: Option<f64>,
}

impl Row {
    pub fn new(name: impl Into<String>, value: Option<f64>) -> Self {
        Self {
            name: name.into(),
            value,
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Prints `rows` as CSV (`name,value`, full precision) or aligned text
/// (6 decimals). JSON is handled by the caller's own document type.
pub fn rows(rows: &[Row], format: Format) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["name", "value"])?;
            for r in rows {
                let v = r.value.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([r.name.as_str(), v.as_str()])?;
            }
            w.flush()?;
        }
        Format::Text | Format::Json => {
            let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in rows {
                match r.value {
                    Some(v) => writeln!(out, "{:<width$}  {v:.6}", r.name)?,
                    None => writeln!(out, "{:<width$}  undefined", r.name)?,
                }
            }
        }
    }
    Ok(())
}
