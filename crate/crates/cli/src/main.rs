//! `costeval`: cost-sensitive evaluation of binary classifiers from the
//! command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Debug, Parser)]
#[command(
    name = "costeval",
    version,
    about = "Cost-sensitive metrics for binary classifiers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Counts {
    #[arg(long)]
    pub tp: u64,
    #[arg(long = "fn")]
    pub fn_: u64,
    #[arg(long)]
    pub fp: u64,
    #[arg(long)]
    pub tn: u64,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    /// Shifted unit cost of a false negative.
    #[arg(long, requires = "cfp")]
    pub cfn: Option<f64>,
    /// Shifted unit cost of a false positive.
    #[arg(long, requires = "cfn")]
    pub cfp: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every registry metric on one confusion matrix.
    Metrics(MetricsArgs),
    /// Weighted accuracy at a given weight or at the cost-derived weight.
    Wa(WaArgs),
    /// Estimate the WA weight from partial cost knowledge.
    EstimateWeight {
        #[command(subcommand)]
        mode: EstimateMode,
    },
    /// Rescale per-example weights to a target positive rate.
    Reweight(ReweightArgs),
    /// Run the metric/TCC correlation experiment over an (r_+, r_C) grid.
    Heatmap(HeatmapArgs),
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[command(flatten)]
    pub counts: Counts,
    #[command(flatten)]
    pub costs: CostArgs,
    /// Minimum total cost added to the cost-sensitive rows.
    #[arg(long, default_value_t = 0.0)]
    pub tcc_min: f64,
    /// Beta density parameters for EWA and H.
    #[arg(long, requires = "dist_beta")]
    pub dist_alpha: Option<f64>,
    #[arg(long, requires = "dist_alpha")]
    pub dist_beta: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub f_beta: f64,
    /// Comma-separated metric ids; missing context is then an error.
    #[arg(long, value_delimiter = ',')]
    pub only: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WaArgs {
    #[command(flatten)]
    pub counts: Counts,
    /// Weight of the positive class.
    #[arg(long, conflicts_with_all = ["cfn", "cfp"], required_unless_present = "cfn")]
    pub w: Option<f64>,
    #[command(flatten)]
    pub costs: CostArgs,
    #[arg(long, default_value_t = 0.0)]
    pub tcc_min: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum EstimateMode {
    /// From the cost ratio v = C_FN / C_FP.
    Ratio {
        #[arg(long)]
        v: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// From the business ranking of the emblematic classifiers.
    Ranking {
        /// Misclassified fraction of the imperfect models (≥ 0.5).
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct ReweightArgs {
    /// CSV with a header row.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "id")]
    pub id_column: String,
    /// Accepts 1/0, true/false, positive/negative, +/-.
    #[arg(long, default_value = "label")]
    pub label_column: String,
    /// Optional column of non-negative base weights.
    #[arg(long)]
    pub weight_column: Option<String>,
    #[arg(long)]
    pub r_plus_target: f64,
    #[command(flatten)]
    pub costs: CostArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HeatmapArgs {
    /// TOML file with flat keys; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory for per-metric CSV and JSON files.
    #[arg(long, default_value = "heatmaps")]
    pub out: PathBuf,
    #[arg(long)]
    pub n_tot: Option<usize>,
    #[arg(long)]
    pub n_samples: Option<usize>,
    #[arg(long)]
    pub p_eff: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    /// Metric ids (comma-separated or repeated), or `all`.
    #[arg(long, value_delimiter = ',')]
    pub metric: Option<Vec<String>>,
    #[arg(long, value_parser = ["standard", "weighted"])]
    pub correlation: Option<String>,
    #[arg(long)]
    pub n0: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, conflicts_with = "revenue_synthetic")]
    pub revenue_csv: Option<PathBuf>,
    #[arg(long)]
    pub revenue_column: Option<String>,
    /// `low,high` bounds of uniform synthetic revenues.
    #[arg(long, value_name = "LOW,HIGH", value_parser = parse_bounds)]
    pub revenue_synthetic: Option<[f64; 2]>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Print grids ×10 rounded, as integers.
    #[arg(long, value_parser = ["text"])]
    pub render: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Metrics(a) => commands::metrics(a),
        Command::Wa(a) => commands::wa(a),
        Command::EstimateWeight { mode } => commands::estimate_weight(mode),
        Command::Reweight(a) => commands::reweight(a),
        Command::Heatmap(a) => commands::heatmap(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e
                .downcast_ref::<costeval_core::Error>()
                .is_some_and(costeval_core::Error::is_usage);
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

fn parse_bounds(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [lo, hi] => {
            let num = |x: &str| x.parse::<f64>().map_err(|_| format!("not a number: {x:?}"));
            Ok([num(lo)?, num(hi)?])
        }
        _ => Err(format!("expected LOW,HIGH, got {s:?}")),
    }
}
