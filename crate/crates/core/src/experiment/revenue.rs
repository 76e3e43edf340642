use std::io::Read;
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Revenues read from a CSV column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevenueTable {
    pub values: Vec<f64>,
    /// Rows whose entry was blank, non-numeric or not positive.
    pub skipped: usize,
}

pub fn load_revenues(path: &Path, column: &str) -> Result<RevenueTable> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Ingestion(format!("cannot open {}: {e}", path.display())))?;
    load_revenues_from_reader(file, column)
}

pub fn load_revenues_from_reader<R: Read>(reader: R, column: &str) -> Result<RevenueTable> {
    let mut rdr = csv::ReaderBuilder::new().flexible(true).from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| Error::Ingestion(format!("cannot read header row: {e}")))?;
    let idx = headers
        .iter()
        .position(|h| h.trim() == column)
        .ok_or_else(|| Error::Ingestion(format!("column {column:?} not found")))?;
    let mut values = Vec::new();
    let mut skipped = 0;
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Ingestion(e.to_string()))?;
        match record
            .get(idx)
            .map(str::trim)
            .and_then(|s| s.parse::<f64>().ok())
        {
            Some(v) if v.is_finite() && v > 0.0 => values.push(v),
            _ => skipped += 1,
        }
    }
    Ok(RevenueTable { values, skipped })
}

/// `n` draws from `pool` without replacement, in draw order.
pub fn sample_revenues<R: Rng + ?Sized>(pool: &[f64], n: usize, rng: &mut R) -> Result<Vec<f64>> {
    if pool.len() < n {
        return Err(Error::InsufficientData {
            needed: n,
            available: pool.len(),
        });
    }
    Ok(rand::seq::index::sample(rng, pool.len(), n)
        .into_iter()
        .map(|i| pool[i])
        .collect())
}
