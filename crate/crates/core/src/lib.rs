//! Cost-sensitive evaluation for binary classifiers.
//!
//! The crate is organised bottom-up:
//!
//! * [`dataset`] and [`confusion`]: labeled examples with per-example unit
//!   classification costs, classifier outcomes and 2×2 confusion matrices.
//! * [`costs`]: cost matrices, shifted unit costs, total classification cost
//!   (example-independent and example-dependent) and the churn cost model.
//! * [`weighting`]: Weighted Accuracy, weight transforms between development
//!   and target datasets, Expected Weighted Accuracy.
//! * [`quadrature`]: weight/cost densities and the adaptive integrator shared
//!   by EWA and the H measure.
//! * [`metrics`]: the registry of confusion-matrix metrics.
//! * [`estimation`]: estimating the WA weight from partial cost knowledge.
//! * [`ranking`]: average ranks, Spearman and top-weighted Spearman.
//! * [`experiment`]: the Monte-Carlo heatmap harness.

pub mod confusion;
pub mod costs;
pub mod dataset;
pub mod error;
pub mod estimation;
pub mod experiment;
pub mod metrics;
pub mod quadrature;
pub mod ranking;
pub mod weighting;

pub use confusion::{confusion_from_outcome, ConfusionMatrix};
pub use costs::{ChurnScenario, CostContext, CostMatrix, ShiftedCosts, TccDecomposition};
pub use dataset::{ClassificationOutcome, CostedDataset, Label, LabeledExample};
pub use error::{Error, Result};
pub use estimation::{EmblematicKind, EmblematicModel, WeightInterval};
pub use metrics::{MetricDescriptor, MetricId, Orientation};
pub use quadrature::{BetaParams, Density, QuadratureConfig};
pub use ranking::{CorrelationScheme, RankVector};
pub use weighting::{TargetProfile, WeightSpec};
