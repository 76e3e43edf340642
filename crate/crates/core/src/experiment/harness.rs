use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::config::{ExperimentConfig, HarnessMetric, RevenueSource};
use super::revenue::{load_revenues, sample_revenues};
use crate::confusion::ConfusionMatrix;
use crate::costs::{churn_shifted_costs, ChurnScenario, CostContext};
use crate::error::{Error, Result};
use crate::metrics::{evaluate_with, MetricId, Orientation};
use crate::quadrature::{Density, QuadratureConfig};
use crate::ranking::{rank_values_with_tolerance, HARNESS_TIE_TOLERANCE};
use crate::weighting::beta_from_moments;

/// Identity of the random stream layout; part of every output's metadata.
pub const RNG_ALGORITHM: &str = "chacha20 (rand_chacha 0.9) seeded by seed_from_u64(seed); \
revenue stream 2^64-1; sample stream (cell_index << 32) | sample_index with \
cell_index = r_c_index * grid_len + r_plus_index; subsets by rand 0.9 seq::index::sample";

const REVENUE_STREAM: u64 = u64::MAX;
const C_EPSILON: f64 = 1e-6;

fn stream_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// First two moments of the per-churner cost ratio `c_a = M / (R_a·P_eff)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CDistribution {
    pub mean: f64,
    pub variance: f64,
    /// Ratios outside `(ε, 1 − ε)` that were clamped, `ε = 1e-6`.
    pub clamped: usize,
}

impl CDistribution {
    /// Moment-matched Beta density of `c`, or a point mass when the ratios
    /// are (numerically) all equal.
    pub fn density(&self) -> Result<Density> {
        if self.variance <= 1e-12 * self.mean * (1.0 - self.mean) {
            return Density::point(self.mean);
        }
        Ok(Density::Beta(beta_from_moments(self.mean, self.variance)?))
    }
}

/// `churner_revenues` are the revenues of the actual positives.
pub fn empirical_c_distribution(
    churner_revenues: &[f64],
    scenario: &ChurnScenario,
) -> Result<CDistribution> {
    if churner_revenues.is_empty() {
        return Err(Error::Degenerate(
            "no churners to build a cost-ratio distribution".into(),
        ));
    }
    let mut clamped = 0;
    let cs: Vec<f64> = churner_revenues
        .iter()
        .map(|r| {
            let c = scenario.retention_cost / (r * scenario.p_eff);
            if c <= C_EPSILON || c >= 1.0 - C_EPSILON {
                clamped += 1;
            }
            c.clamp(C_EPSILON, 1.0 - C_EPSILON)
        })
        .collect();
    let n = cs.len() as f64;
    let mean = cs.iter().sum::<f64>() / n;
    let variance = cs.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / n;
    Ok(CDistribution {
        mean,
        variance,
        clamped,
    })
}

/// Per-metric statistics of one cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    /// Mean correlation over samples with a defined correlation.
    pub mean: Option<f64>,
    pub defined_samples: usize,
    pub undefined_samples: usize,
    /// Outcomes dropped because the metric was undefined on them.
    pub dropped_values: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellOutcome {
    pub r_plus: f64,
    pub r_c: f64,
    pub positives: usize,
    /// `round(n_tot·r_+)` fell outside `[1, n_tot − 1]`.
    pub p_clamped: bool,
    /// Cost ratios clamped while building moment-matched densities.
    pub c_clamps: u64,
    /// One entry per configured metric, in order.
    pub summaries: Vec<CellSummary>,
    /// SHA-256 over the label and prediction draws of the cell.
    pub digest: [u8; 32],
}

fn positives_for(n_tot: usize, r_plus: f64) -> (usize, bool) {
    let raw = (n_tot as f64 * r_plus).round() as usize;
    let p = raw.clamp(1, n_tot - 1);
    (p, p != raw)
}

fn fill_mask(mask: &mut [bool], idx: &rand::seq::index::IndexVec, digest: &mut Sha256) {
    mask.iter_mut().for_each(|m| *m = false);
    for i in idx.iter() {
        mask[i] = true;
        digest.update((i as u32).to_le_bytes());
    }
}

/// One grid cell: `revenues` are the `n_tot` sampled customer revenues and
/// `cell_index` selects the cell's random streams.
pub fn run_cell(
    r_plus: f64,
    r_c: f64,
    cell_index: u64,
    config: &ExperimentConfig,
    revenues: &[f64],
) -> Result<CellOutcome> {
    let n_tot = config.n_tot;
    if revenues.len() != n_tot {
        return Err(Error::InsufficientData {
            needed: n_tot,
            available: revenues.len(),
        });
    }
    let (p, p_clamped) = positives_for(n_tot, r_plus);
    let scenario = ChurnScenario::tuned(r_c, config.p_eff, revenues.to_vec())?;
    let ctx = CostContext::new(churn_shifted_costs(&scenario)?);
    let quad = QuadratureConfig::default();
    let needs_c = config
        .metrics
        .iter()
        .any(HarnessMetric::uses_c_distribution);

    let mut digest = Sha256::new();
    let mut churners = vec![false; n_tot];
    let mut predicted = vec![false; n_tot];
    let mut c_clamps = 0u64;
    let mut correlations: Vec<Vec<Option<f64>>> = vec![Vec::new(); config.metrics.len()];
    let mut dropped = vec![0u64; config.metrics.len()];

    for sample in 0..config.n_samples {
        let mut rng = stream_rng(config.seed, (cell_index << 32) | sample as u64);
        let pos = rand::seq::index::sample(&mut rng, n_tot, p);
        fill_mask(&mut churners, &pos, &mut digest);

        let (c_density, w_density) = if needs_c {
            let churner_revenues: Vec<f64> = pos.iter().map(|i| revenues[i]).collect();
            let dist = empirical_c_distribution(&churner_revenues, &scenario)?;
            c_clamps += dist.clamped as u64;
            let d = dist.density()?;
            (Some(d.clone()), Some(d.reflected()))
        } else {
            (None, None)
        };

        let mut tccs = Vec::with_capacity(n_tot + 1);
        let mut values: Vec<Vec<Option<f64>>> =
            vec![Vec::with_capacity(n_tot + 1); config.metrics.len()];
        for pp in 0..=n_tot {
            let pred = rand::seq::index::sample(&mut rng, n_tot, pp);
            fill_mask(&mut predicted, &pred, &mut digest);
            let mut cm = ConfusionMatrix::default();
            for (&a, &b) in churners.iter().zip(&predicted) {
                match (a, b) {
                    (true, true) => cm.tp += 1,
                    (true, false) => cm.fn_ += 1,
                    (false, true) => cm.fp += 1,
                    (false, false) => cm.tn += 1,
                }
            }
            tccs.push(scenario.tcc(&churners, &predicted));
            for (m, out) in config.metrics.iter().zip(values.iter_mut()) {
                let v = match m {
                    HarnessMetric::Registry(MetricId::Ewa) => {
                        evaluate_with(&MetricId::Ewa, &cm, Some(&ctx), w_density.as_ref(), &quad)?
                    }
                    HarnessMetric::Registry(id) => evaluate_with(id, &cm, Some(&ctx), None, &quad)?,
                    HarnessMetric::HInformed => evaluate_with(
                        &MetricId::HMeasure,
                        &cm,
                        Some(&ctx),
                        c_density.as_ref(),
                        &quad,
                    )?,
                };
                out.push(v);
            }
        }

        for (k, m) in config.metrics.iter().enumerate() {
            let (mut t, mut v) = (Vec::new(), Vec::new());
            for (tcc, val) in tccs.iter().zip(&values[k]) {
                match val {
                    Some(x) => {
                        t.push(*tcc);
                        v.push(*x);
                    }
                    None => dropped[k] += 1,
                }
            }
            let corr = if v.len() < 2 {
                None
            } else {
                let rt = rank_values_with_tolerance(
                    &t,
                    Orientation::LowerIsBetter,
                    HARNESS_TIE_TOLERANCE,
                )?;
                let rm = rank_values_with_tolerance(&v, m.orientation(), HARNESS_TIE_TOLERANCE)?;
                config.correlation.correlate(&rt, &rm)?
            };
            correlations[k].push(corr);
        }
    }

    let summaries = correlations
        .iter()
        .zip(&dropped)
        .map(|(cs, &dropped_values)| {
            let defined: Vec<f64> = cs.iter().flatten().copied().collect();
            CellSummary {
                mean: (!defined.is_empty())
                    .then(|| defined.iter().sum::<f64>() / defined.len() as f64),
                defined_samples: defined.len(),
                undefined_samples: cs.len() - defined.len(),
                dropped_values,
            }
        })
        .collect();
    Ok(CellOutcome {
        r_plus,
        r_c,
        positives: p,
        p_clamped,
        c_clamps,
        summaries,
        digest: digest.finalize().into(),
    })
}

/// Mean correlation per cell for one metric; indexed `[r_c][r_plus]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeatmapGrid {
    pub metric: HarnessMetric,
    pub orientation: Orientation,
    pub r_plus_axis: Vec<f64>,
    pub r_c_axis: Vec<f64>,
    pub cells: Vec<Vec<Option<f64>>>,
    /// Samples whose correlation was undefined.
    pub undefined_correlations: Vec<Vec<usize>>,
    /// Outcomes dropped because the metric was undefined on them.
    pub dropped_values: Vec<Vec<u64>>,
}

impl HeatmapGrid {
    pub fn cell(&self, r_plus: f64, r_c: f64) -> Option<f64> {
        let i = self.r_c_axis.iter().position(|&x| x == r_c)?;
        let j = self.r_plus_axis.iter().position(|&x| x == r_plus)?;
        self.cells[i][j]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub seed: u64,
    pub rng_algorithm: String,
    pub config: ExperimentConfig,
    /// Mean of the `n_tot` sampled revenues.
    pub r_avg: f64,
    /// Usable revenues in the source (equals `n_tot` for synthetic sources).
    pub revenues_available: usize,
    pub revenues_skipped: usize,
    /// Churner count per `r_plus` grid value.
    pub positives: Vec<usize>,
    /// `r_plus` values whose churner count was clamped into `[1, n_tot − 1]`.
    pub clamped_r_plus: Vec<f64>,
    /// Clamped cost ratios per cell, indexed `[r_c][r_plus]`.
    pub c_clamps: Vec<Vec<u64>>,
    /// Cells that failed; their values are blank.
    pub cell_errors: Vec<String>,
    /// SHA-256 over all label and prediction draws, in cell order.
    pub draw_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeatmapRun {
    pub grids: Vec<HeatmapGrid>,
    pub metadata: RunMetadata,
}

impl HeatmapRun {
    pub fn grid(&self, metric: &str) -> Option<&HeatmapGrid> {
        self.grids.iter().find(|g| g.metric.name() == metric)
    }
}

/// The `n_tot` revenues of the experiment, plus (available, skipped) counts.
pub fn prepare_revenues(config: &ExperimentConfig) -> Result<(Vec<f64>, usize, usize)> {
    let mut rng = stream_rng(config.seed, REVENUE_STREAM);
    match &config.revenue {
        RevenueSource::Csv { path, column } => {
            let table = load_revenues(path, column)?;
            let sampled = sample_revenues(&table.values, config.n_tot, &mut rng)?;
            Ok((sampled, table.values.len(), table.skipped))
        }
        RevenueSource::Synthetic { low, high } => {
            let v = (0..config.n_tot)
                .map(|_| rng.random_range(*low..=*high))
                .collect();
            Ok((v, config.n_tot, 0))
        }
    }
}

pub fn run_heatmap(config: &ExperimentConfig) -> Result<HeatmapRun> {
    run_heatmap_with_workers(config, None)
}

/// Runs every cell, on `workers` threads when given. The result does not
/// depend on the number of workers.
pub fn run_heatmap_with_workers(
    config: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<HeatmapRun> {
    config.validate()?;
    if config.n_samples > u32::MAX as usize || config.grid.len().pow(2) > u32::MAX as usize {
        return Err(Error::Config("too many samples or grid cells".into()));
    }
    let (revenues, available, skipped) = prepare_revenues(config)?;
    let g = config.grid.len();
    let cells: Vec<(usize, usize)> = (0..g).flat_map(|i| (0..g).map(move |j| (i, j))).collect();
    let compute = || -> Vec<Result<CellOutcome>> {
        cells
            .par_iter()
            .map(|&(i, j)| {
                run_cell(
                    config.grid[j],
                    config.grid[i],
                    (i * g + j) as u64,
                    config,
                    &revenues,
                )
            })
            .collect()
    };
    let results = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?
            .install(compute),
        None => compute(),
    };

    let k = config.metrics.len();
    let mut grids: Vec<HeatmapGrid> = config
        .metrics
        .iter()
        .map(|m| HeatmapGrid {
            metric: *m,
            orientation: m.orientation(),
            r_plus_axis: config.grid.clone(),
            r_c_axis: config.grid.clone(),
            cells: vec![vec![None; g]; g],
            undefined_correlations: vec![vec![0; g]; g],
            dropped_values: vec![vec![0; g]; g],
        })
        .collect();
    let mut c_clamps = vec![vec![0; g]; g];
    let mut cell_errors = Vec::new();
    let mut all = Sha256::new();
    for (&(i, j), res) in cells.iter().zip(results) {
        match res {
            Ok(cell) => {
                all.update(cell.digest);
                c_clamps[i][j] = cell.c_clamps;
                for (grid, s) in grids.iter_mut().zip(&cell.summaries).take(k) {
                    grid.cells[i][j] = s.mean;
                    grid.undefined_correlations[i][j] = s.undefined_samples;
                    grid.dropped_values[i][j] = s.dropped_values;
                }
            }
            Err(e) => {
                cell_errors.push(format!(
                    "r_plus = {}, r_c = {}: {e}",
                    config.grid[j], config.grid[i]
                ));
                for grid in grids.iter_mut() {
                    grid.undefined_correlations[i][j] = config.n_samples;
                }
            }
        }
    }
    let positives: Vec<(usize, bool)> = config
        .grid
        .iter()
        .map(|&r| positives_for(config.n_tot, r))
        .collect();
    let metadata = RunMetadata {
        seed: config.seed,
        rng_algorithm: RNG_ALGORITHM.to_string(),
        config: config.clone(),
        r_avg: revenues.iter().sum::<f64>() / revenues.len() as f64,
        revenues_available: available,
        revenues_skipped: skipped,
        positives: positives.iter().map(|p| p.0).collect(),
        clamped_r_plus: config
            .grid
            .iter()
            .zip(&positives)
            .filter(|(_, p)| p.1)
            .map(|(r, _)| *r)
            .collect(),
        c_clamps,
        cell_errors,
        draw_digest: all.finalize().iter().map(|b| format!("{b:02x}")).collect(),
    };
    Ok(HeatmapRun { grids, metadata })
}
