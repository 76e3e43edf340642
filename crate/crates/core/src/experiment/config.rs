use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{metric_registry, MetricId, Orientation};
use crate::ranking::CorrelationScheme;

/// What the harness ranks outcomes by: a registry metric, or the H measure
/// with a Beta cost density moment-matched to the sample's per-customer
/// cost ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HarnessMetric {
    Registry(MetricId),
    HInformed,
}

impl HarnessMetric {
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn orientation(&self) -> Orientation {
        match self {
            HarnessMetric::Registry(id) => id.orientation(),
            HarnessMetric::HInformed => Orientation::HigherIsBetter,
        }
    }

    /// File-system friendly name (`f_beta:2` becomes `f_beta_2`).
    pub fn file_stem(&self) -> String {
        self.to_string().replace(':', "_")
    }

    /// The 24 registry metrics with default parameters.
    pub fn defaults() -> Vec<HarnessMetric> {
        metric_registry()
            .into_iter()
            .map(|d| HarnessMetric::Registry(d.id))
            .collect()
    }

    pub(crate) fn uses_c_distribution(&self) -> bool {
        matches!(
            self,
            HarnessMetric::HInformed | HarnessMetric::Registry(MetricId::Ewa)
        )
    }
}

impl fmt::Display for HarnessMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessMetric::Registry(id) => write!(f, "{id}"),
            HarnessMetric::HInformed => f.write_str("h_informed"),
        }
    }
}

impl FromStr for HarnessMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "h_informed" {
            Ok(HarnessMetric::HInformed)
        } else {
            s.parse().map(HarnessMetric::Registry)
        }
    }
}

impl Serialize for HarnessMetric {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HarnessMetric {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Where customer revenues come from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RevenueSource {
    /// A CSV file with a header row; `column` holds monthly charges.
    Csv { path: PathBuf, column: String },
    /// `n_tot` independent uniform draws on `[low, high]`.
    Synthetic { low: f64, high: f64 },
}

impl RevenueSource {
    pub const DEFAULT_COLUMN: &'static str = "MonthlyCharges";

    /// Uniform over the range of monthly charges of a typical telecom
    /// customer base (18.25 to 118.75).
    pub fn default_synthetic() -> Self {
        RevenueSource::Synthetic {
            low: 18.25,
            high: 118.75,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n_tot: usize,
    pub n_samples: usize,
    pub p_eff: f64,
    /// Shared by both axes.
    pub grid: Vec<f64>,
    pub metrics: Vec<HarnessMetric>,
    pub correlation: CorrelationScheme,
    pub seed: u64,
    pub revenue: RevenueSource,
}

impl ExperimentConfig {
    pub const DEFAULT_SEED: u64 = 20_240_601;

    /// `{0.01, 0.1, 0.2, …, 0.9, 0.99}`.
    pub fn default_grid() -> Vec<f64> {
        let mut g = vec![0.01];
        g.extend((1..=9).map(|i| f64::from(i) / 10.0));
        g.push(0.99);
        g
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_tot < 2 {
            return Err(Error::Config(format!(
                "n_tot must be at least 2, got {}",
                self.n_tot
            )));
        }
        if u32::try_from(self.n_tot).is_err() {
            return Err(Error::Config(format!("n_tot {} is too large", self.n_tot)));
        }
        if self.n_samples == 0 {
            return Err(Error::Config("n_samples must be at least 1".into()));
        }
        if !(self.p_eff > 0.0 && self.p_eff <= 1.0) {
            return Err(Error::Config(format!(
                "p_eff must lie in (0, 1], got {}",
                self.p_eff
            )));
        }
        if self.grid.is_empty() {
            return Err(Error::Config("grid is empty".into()));
        }
        if let Some(g) = self.grid.iter().find(|g| !(**g > 0.0 && **g < 1.0)) {
            return Err(Error::Config(format!(
                "grid values must lie in (0, 1), got {g}"
            )));
        }
        if self.metrics.is_empty() {
            return Err(Error::Config("no metrics selected".into()));
        }
        if let CorrelationScheme::Weighted { n0 } = self.correlation {
            if !(n0.is_finite() && n0 > 0.0) {
                return Err(Error::Config(format!("n0 must be positive, got {n0}")));
            }
        }
        match &self.revenue {
            RevenueSource::Synthetic { low, high } if !(*low > 0.0 && low < high) => {
                Err(Error::Config(format!(
                    "synthetic revenues need 0 < low < high, got [{low}, {high}]"
                )))
            }
            _ => Ok(()),
        }
    }

    /// Reads a TOML file of flat keys on top of the defaults.
    pub fn from_path(path: &Path) -> Result<Self> {
        ConfigOverrides::from_path(path)?.apply(Self::default())
    }
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n_tot: 400,
            n_samples: 100,
            p_eff: 0.25,
            grid: Self::default_grid(),
            metrics: HarnessMetric::defaults(),
            correlation: CorrelationScheme::Standard,
            seed: Self::DEFAULT_SEED,
            revenue: RevenueSource::default_synthetic(),
        }
    }
}

/// Flat key set of the configuration file; every key is optional and
/// overrides the corresponding field when present.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    pub n_tot: Option<usize>,
    pub n_samples: Option<usize>,
    pub p_eff: Option<f64>,
    pub grid: Option<Vec<f64>>,
    pub metrics: Option<Vec<String>>,
    /// `"standard"` or `"weighted"`.
    pub correlation: Option<String>,
    pub n0: Option<f64>,
    pub seed: Option<u64>,
    pub revenue_csv: Option<PathBuf>,
    pub revenue_column: Option<String>,
    /// `[low, high]` for uniform synthetic revenues.
    pub revenue_synthetic: Option<[f64; 2]>,
}

impl ConfigOverrides {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Reads a TOML file; a relative `revenue_csv` is resolved against the
    /// file's directory.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut overrides = Self::from_toml_str(&text)?;
        if let (Some(csv), Some(dir)) = (&overrides.revenue_csv, path.parent()) {
            if csv.is_relative() {
                overrides.revenue_csv = Some(dir.join(csv));
            }
        }
        Ok(overrides)
    }

    /// Later values win: `self` on top of `base`.
    pub fn merged_over(self, base: ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            n_tot: self.n_tot.or(base.n_tot),
            n_samples: self.n_samples.or(base.n_samples),
            p_eff: self.p_eff.or(base.p_eff),
            grid: self.grid.or(base.grid),
            metrics: self.metrics.or(base.metrics),
            correlation: self.correlation.or(base.correlation),
            n0: self.n0.or(base.n0),
            seed: self.seed.or(base.seed),
            revenue_csv: self.revenue_csv.or(base.revenue_csv),
            revenue_column: self.revenue_column.or(base.revenue_column),
            revenue_synthetic: self.revenue_synthetic.or(base.revenue_synthetic),
        }
    }

    pub fn apply(self, mut cfg: ExperimentConfig) -> Result<ExperimentConfig> {
        if let Some(v) = self.n_tot {
            cfg.n_tot = v;
        }
        if let Some(v) = self.n_samples {
            cfg.n_samples = v;
        }
        if let Some(v) = self.p_eff {
            cfg.p_eff = v;
        }
        if let Some(v) = self.grid {
            cfg.grid = v;
        }
        if let Some(v) = self.metrics {
            cfg.metrics = if v.len() == 1 && v[0] == "all" {
                HarnessMetric::defaults()
            } else {
                v.iter().map(|m| m.parse()).collect::<Result<_>>()?
            };
        }
        let n0 = match (self.n0, cfg.correlation) {
            (Some(n0), _) => n0,
            (None, CorrelationScheme::Weighted { n0 }) => n0,
            (None, CorrelationScheme::Standard) => CorrelationScheme::DEFAULT_N0,
        };
        let kind = self
            .correlation
            .as_deref()
            .unwrap_or(cfg.correlation.name());
        cfg.correlation = match kind {
            "standard" => CorrelationScheme::Standard,
            "weighted" => CorrelationScheme::Weighted { n0 },
            other => {
                return Err(Error::Config(format!(
                    "correlation must be \"standard\" or \"weighted\", got {other:?}"
                )))
            }
        };
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if self.revenue_csv.is_some() && self.revenue_synthetic.is_some() {
            return Err(Error::Config(
                "revenue_csv and revenue_synthetic are mutually exclusive".into(),
            ));
        }
        if let Some([low, high]) = self.revenue_synthetic {
            cfg.revenue = RevenueSource::Synthetic { low, high };
        }
        if let Some(path) = self.revenue_csv {
            let column = self
                .revenue_column
                .clone()
                .unwrap_or_else(|| RevenueSource::DEFAULT_COLUMN.to_string());
            cfg.revenue = RevenueSource::Csv { path, column };
        } else if let Some(col) = self.revenue_column {
            match &mut cfg.revenue {
                RevenueSource::Csv { column, .. } => *column = col,
                RevenueSource::Synthetic { .. } => {
                    return Err(Error::Config(
                        "revenue_column given without revenue_csv".into(),
                    ))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
