use std::path::{Path, PathBuf};

use serde::Serialize;

use super::harness::{HeatmapGrid, HeatmapRun, RunMetadata};
use crate::error::{Error, Result};

/// First row is the `r_plus` axis behind a corner label, first column the
/// `r_c` axis; cells carry 6 decimals, undefined cells are empty.
pub fn grid_to_csv(grid: &HeatmapGrid) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["r_c\\r_plus".to_string()];
    header.extend(grid.r_plus_axis.iter().map(|x| x.to_string()));
    w.write_record(&header)?;
    for (r_c, row) in grid.r_c_axis.iter().zip(&grid.cells) {
        let mut rec = vec![r_c.to_string()];
        rec.extend(
            row.iter()
                .map(|c| c.map(|v| format!("{v:.6}")).unwrap_or_default()),
        );
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct GridDocument<'a> {
    #[serde(flatten)]
    grid: &'a HeatmapGrid,
    metadata: &'a RunMetadata,
}

/// The grid at full precision together with the run metadata.
pub fn grid_to_json(grid: &HeatmapGrid, metadata: &RunMetadata) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&GridDocument { grid, metadata })?;
    s.push('\n');
    Ok(s)
}

/// Correlations ×10 rounded to integers, highest `r_c` on top; `.` marks
/// undefined cells.
pub fn render_text(grid: &HeatmapGrid) -> String {
    let mut out = format!("{} (rows r_c, columns r_plus; values x10)\n", grid.metric);
    out.push_str(&format!("{:>6}", ""));
    for r in &grid.r_plus_axis {
        out.push_str(&format!("{r:>6}"));
    }
    out.push('\n');
    for (r_c, row) in grid.r_c_axis.iter().zip(&grid.cells).rev() {
        out.push_str(&format!("{r_c:>6}"));
        for c in row {
            match c {
                Some(v) => out.push_str(&format!("{:>6}", (v * 10.0).round() as i64)),
                None => out.push_str(&format!("{:>6}", ".")),
            }
        }
        out.push('\n');
    }
    out
}

/// Writes `<metric>.csv` and `<metric>.json` per grid into `dir`.
pub fn write_outputs(run: &HeatmapRun, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for grid in &run.grids {
        let stem = grid.metric.file_stem();
        let csv_path = dir.join(format!("{stem}.csv"));
        std::fs::write(&csv_path, grid_to_csv(grid)?)?;
        let json_path = dir.join(format!("{stem}.json"));
        std::fs::write(&json_path, grid_to_json(grid, &run.metadata)?)?;
        written.push(csv_path);
        written.push(json_path);
    }
    Ok(written)
}
