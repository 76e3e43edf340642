//! End-to-end checks of the heatmap harness.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use costeval_core::costs::churn_shifted_costs;
use costeval_core::experiment::{
    grid_to_csv, grid_to_json, load_revenues, run_heatmap, run_heatmap_with_workers,
    ExperimentConfig, HarnessMetric, RevenueSource,
};
use costeval_core::{ChurnScenario, Error};

fn golden_config() -> ExperimentConfig {
    ExperimentConfig {
        n_tot: 10,
        n_samples: 1,
        grid: vec![0.3],
        metrics: ["wa", "accuracy", "precision", "ewa", "h_informed"]
            .iter()
            .map(|m| m.parse().unwrap())
            .collect(),
        seed: 42,
        ..ExperimentConfig::default()
    }
}

/// Set `UPDATE_GOLDEN=1` to rewrite the snapshot from the sequential path.
#[test]
fn golden_snapshot() {
    let run = run_heatmap_with_workers(&golden_config(), Some(1)).unwrap();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for grid in &run.grids {
        let stem = grid.metric.file_stem();
        let files = [
            (format!("{stem}.csv"), grid_to_csv(grid).unwrap()),
            (
                format!("{stem}.json"),
                grid_to_json(grid, &run.metadata).unwrap(),
            ),
        ];
        for (name, content) in files {
            let path = dir.join(&name);
            if std::env::var_os("UPDATE_GOLDEN").is_some() {
                std::fs::write(&path, &content).unwrap();
            }
            let expected = std::fs::read_to_string(&path).unwrap();
            assert_eq!(content, expected, "{name} differs from the snapshot");
        }
    }
}

#[test]
fn paired_draws_and_worker_independence() {
    let base = golden_config();
    let more = ExperimentConfig {
        metrics: HarnessMetric::defaults(),
        ..base.clone()
    };
    let a = run_heatmap_with_workers(&base, Some(1)).unwrap();
    let b = run_heatmap_with_workers(&more, Some(4)).unwrap();
    assert_eq!(a.metadata.draw_digest, b.metadata.draw_digest);
    assert_eq!(a.grid("wa").unwrap(), b.grid("wa").unwrap());
}

#[test]
fn clamped_positive_count_is_recorded() {
    let cfg = ExperimentConfig {
        n_tot: 20,
        n_samples: 2,
        grid: vec![0.01, 0.5],
        metrics: vec!["wa".parse().unwrap()],
        ..ExperimentConfig::default()
    };
    let run = run_heatmap(&cfg).unwrap();
    assert_eq!(run.metadata.positives, [1, 10]);
    assert_eq!(run.metadata.clamped_r_plus, [0.01]);
}

#[test]
fn default_shape() {
    let cfg = ExperimentConfig {
        n_tot: 12,
        n_samples: 1,
        ..ExperimentConfig::default()
    };
    let run = run_heatmap(&cfg).unwrap();
    assert_eq!(run.grids.len(), 24);
    for g in &run.grids {
        assert_eq!(g.cells.len(), 11);
        assert!(g.cells.iter().all(|row| row.len() == 11));
        for v in g.cells.iter().flatten().flatten() {
            assert!((-1.0..=1.0).contains(v), "{} {v}", g.metric);
        }
    }
}

#[test]
fn csv_revenue_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("customers.csv");
    let mut text = String::from("customerID,MonthlyCharges\n");
    for i in 0..60 {
        if i == 7 {
            text.push_str("x7, \n");
        } else {
            text.push_str(&format!("x{i},{}\n", 20.0 + f64::from(i)));
        }
    }
    std::fs::write(&path, text).unwrap();
    let table = load_revenues(&path, "MonthlyCharges").unwrap();
    assert_eq!((table.values.len(), table.skipped), (59, 1));

    let cfg = ExperimentConfig {
        n_tot: 40,
        n_samples: 2,
        grid: vec![0.2, 0.6],
        metrics: vec!["wa".parse().unwrap()],
        revenue: RevenueSource::Csv {
            path: path.clone(),
            column: "MonthlyCharges".into(),
        },
        ..ExperimentConfig::default()
    };
    let run = run_heatmap(&cfg).unwrap();
    assert_eq!(run.metadata.revenues_available, 59);
    assert_eq!(run.metadata.revenues_skipped, 1);
    assert!(run.metadata.r_avg > 20.0 && run.metadata.r_avg < 80.0);

    let too_many = ExperimentConfig { n_tot: 100, ..cfg };
    assert!(matches!(
        run_heatmap(&too_many),
        Err(Error::InsufficientData { .. })
    ));
}

/// Away from r_C = 1 − r_+ the example-dependent TCC is dominated by its
/// confusion-matrix term.
#[test]
fn fluctuation_is_small_off_the_diagonal() {
    use rand::seq::index::sample;
    use rand::Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n_tot = 400;
    let revenues: Vec<f64> = (0..n_tot)
        .map(|_| rng.random_range(18.25..=118.75))
        .collect();
    for (r_plus, r_c) in [(0.1, 0.1), (0.5, 0.1), (0.5, 0.9), (0.9, 0.9), (0.3, 0.5)] {
        let scenario = ChurnScenario::tuned(r_c, 0.25, revenues.clone()).unwrap();
        let costs = churn_shifted_costs(&scenario).unwrap();
        let p = (n_tot as f64 * r_plus).round() as usize;
        let mut churners = vec![false; n_tot];
        for i in sample(&mut rng, n_tot, p) {
            churners[i] = true;
        }
        let (mut full, mut mean) = (Vec::new(), Vec::new());
        for pp in 0..=n_tot {
            let mut predicted = vec![false; n_tot];
            for i in sample(&mut rng, n_tot, pp) {
                predicted[i] = true;
            }
            let (mut fn_, mut fp) = (0.0, 0.0);
            for (&c, &q) in churners.iter().zip(&predicted) {
                match (c, q) {
                    (true, false) => fn_ += 1.0,
                    (false, true) => fp += 1.0,
                    _ => {}
                }
            }
            full.push(scenario.tcc(&churners, &predicted));
            mean.push(costs.c_fn * fn_ + costs.c_fp * fp);
        }
        let corr = pearson(&full, &mean);
        assert!(corr > 0.95, "({r_plus}, {r_c}): {corr}");
    }
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let cov: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}
