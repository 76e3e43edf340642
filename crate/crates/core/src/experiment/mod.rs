//! Monte-Carlo harness measuring how well each metric's ranking of random
//! classifiers agrees with their total classification cost.
//!
//! For every cell `(r_+, r_C)` of a grid, churn datasets of `n_tot`
//! customers are labeled at random with `round(n_tot·r_+)` churners, the
//! retention cost is tuned so that the average costs have UCC ratio `r_C`,
//! and one random classifier per predicted-positive count `0..=n_tot` is
//! drawn. Each metric's ranking of these classifiers is correlated with the
//! ranking by example-dependent TCC; the cell value is the mean correlation
//! over samples.

mod config;
mod harness;
mod output;
mod revenue;

pub use config::{ConfigOverrides, ExperimentConfig, HarnessMetric, RevenueSource};
pub use harness::{
    empirical_c_distribution, prepare_revenues, run_cell, run_heatmap, run_heatmap_with_workers,
    CDistribution, CellOutcome, CellSummary, HeatmapGrid, HeatmapRun, RunMetadata, RNG_ALGORITHM,
};
pub use output::{grid_to_csv, grid_to_json, render_text, write_outputs};
pub use revenue::{load_revenues, load_revenues_from_reader, sample_revenues, RevenueTable};
