//! Weighted Accuracy and its weight transforms.
//!
//! `WA(w) = (w·TP + (1−w)·TN) / (w·P + (1−w)·N)`. With `w = r_C` it is the
//! affine image `1 − (TCC − TCC_min)/(TCC_max − TCC_min)` of the total
//! classification cost, so it ranks confusion matrices exactly as TCC does.

use serde::{Deserialize, Serialize};

use crate::confusion::ConfusionMatrix;
use crate::costs::{CostContext, ShiftedCosts};
use crate::dataset::CostedDataset;
use crate::error::{Error, Result};
use crate::quadrature::{BetaParams, Density, QuadratureConfig};

/// Weight of actual positives in WA; actual negatives get `1 − w`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSpec(f64);

impl WeightSpec {
    pub fn new(w: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::Domain(format!("weight must lie in [0, 1], got {w}")));
        }
        Ok(Self(w))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Weight for the label-swapped problem.
    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }
}

/// Positive rates of the development and target datasets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TargetProfile {
    pub r_plus_dev: f64,
    pub r_plus_target: f64,
}

impl TargetProfile {
    pub fn new(r_plus_dev: f64, r_plus_target: f64) -> Result<Self> {
        for (name, r) in [("development", r_plus_dev), ("target", r_plus_target)] {
            if !(r > 0.0 && r < 1.0) {
                return Err(Error::Domain(format!(
                    "{name} positive rate must lie in (0, 1), got {r}"
                )));
            }
        }
        Ok(Self {
            r_plus_dev,
            r_plus_target,
        })
    }
}

/// `None` when the weighted class total vanishes (w = 1 with P = 0, w = 0 with N = 0).
pub fn weighted_accuracy(cm: &ConfusionMatrix, w: WeightSpec) -> Option<f64> {
    let w = w.value();
    let den = w * cm.positives() as f64 + (1.0 - w) * cm.negatives() as f64;
    if den <= 0.0 {
        return None;
    }
    Some((w * cm.tp as f64 + (1.0 - w) * cm.tn as f64) / den)
}

/// `w = r_C = C_FN / (C_FN + C_FP)`.
pub fn weight_from_costs(costs: &ShiftedCosts) -> WeightSpec {
    WeightSpec(costs.r_c())
}

/// WA at `w = r_C` alongside the TCC quantities it is an affine image of.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaTcc {
    pub wa: f64,
    pub tcc: f64,
    pub tcc_min: f64,
    pub tcc_max: f64,
}

impl WaTcc {
    /// `1 − (TCC − TCC_min)/(TCC_max − TCC_min)`.
    pub fn wa_from_tcc(&self) -> f64 {
        1.0 - (self.tcc - self.tcc_min) / (self.tcc_max - self.tcc_min)
    }
}

/// Requires `P, N > 0`. `TCC_max = C_FN·P + C_FP·N + TCC_min`.
pub fn wa_tcc_affine(cm: &ConfusionMatrix, ctx: &CostContext) -> Result<WaTcc> {
    if cm.positives() == 0 || cm.negatives() == 0 {
        return Err(Error::Precondition(
            "WA/TCC relation needs P > 0 and N > 0".into(),
        ));
    }
    let wa = weighted_accuracy(cm, weight_from_costs(&ctx.costs)).expect("P, N > 0");
    Ok(WaTcc {
        wa,
        tcc: ctx.tcc(cm),
        tcc_min: ctx.tcc_min,
        tcc_max: ctx.tcc_max(cm),
    })
}

/// WA weight after rebalancing both classes to equal size:
/// `r_C·N / (r_C·N + (1 − r_C)·P)`.
pub fn balanced_weight(costs: &ShiftedCosts, positives: u64, negatives: u64) -> Result<WeightSpec> {
    balanced_weight_for_ratio(costs.r_c(), positives, negatives)
}

pub fn balanced_weight_for_ratio(r_c: f64, positives: u64, negatives: u64) -> Result<WeightSpec> {
    if positives == 0 || negatives == 0 {
        return Err(Error::Precondition(
            "balanced weight needs P > 0 and N > 0".into(),
        ));
    }
    let (p, n) = (positives as f64, negatives as f64);
    WeightSpec::new(r_c * n / (r_c * n + (1.0 - r_c) * p))
}

/// Rescale per-example weights so that positives carry total mass
/// proportional to `r_+^t` and negatives to `1 − r_+^t`; result sums to one.
pub fn rescale_example_weights(
    dataset: &CostedDataset,
    base_weights: &[f64],
    r_plus_target: f64,
) -> Result<Vec<f64>> {
    if base_weights.len() != dataset.len() {
        return Err(Error::InvalidDataset(format!(
            "{} weights for {} examples",
            base_weights.len(),
            dataset.len()
        )));
    }
    if !(0.0..=1.0).contains(&r_plus_target) {
        return Err(Error::Domain(format!(
            "target positive rate must lie in [0, 1], got {r_plus_target}"
        )));
    }
    let (p, n) = (dataset.positives(), dataset.negatives());
    if p == 0 || n == 0 {
        return Err(Error::Precondition(
            "rescaling needs both classes present".into(),
        ));
    }
    if base_weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
        return Err(Error::DegenerateWeights(
            "weights must be finite and non-negative".into(),
        ));
    }
    let pos_scale = r_plus_target / p as f64;
    let neg_scale = (1.0 - r_plus_target) / n as f64;
    let scaled: Vec<f64> = dataset
        .examples()
        .iter()
        .zip(base_weights)
        .map(|(ex, w)| {
            if ex.label.is_positive() {
                w * pos_scale
            } else {
                w * neg_scale
            }
        })
        .collect();
    let z: f64 = scaled.iter().sum();
    if z <= 0.0 {
        return Err(Error::DegenerateWeights(
            "all rescaled weights are zero".into(),
        ));
    }
    Ok(scaled.into_iter().map(|w| w / z).collect())
}

/// WA weight for a target dataset whose positive rate differs from the
/// development one.
pub fn target_weight(costs: &ShiftedCosts, profile: &TargetProfile) -> WeightSpec {
    target_weight_for_ratio(costs.r_c(), profile)
}

pub fn target_weight_for_ratio(r_c: f64, profile: &TargetProfile) -> WeightSpec {
    let (r, t) = (profile.r_plus_dev, profile.r_plus_target);
    let pos = r_c * t / r;
    let neg = (1.0 - r_c) * (1.0 - t) / (1.0 - r);
    WeightSpec(pos / (pos + neg))
}

/// Development positive rate at which plain accuracy already equals WA with
/// the target weight, i.e. `target_weight = 1/2`.
pub fn accuracy_equivalence_rplus(r_c: f64, r_plus_target: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r_c) || !(0.0..=1.0).contains(&r_plus_target) {
        return Err(Error::Domain("ratios must lie in [0, 1]".into()));
    }
    let den = 1.0 - r_plus_target - r_c + 2.0 * r_c * r_plus_target;
    if den == 0.0 {
        return Err(Error::NoSolution(format!(
            "no development positive rate for r_C = {r_c}, r_+^t = {r_plus_target}"
        )));
    }
    Ok(r_c * r_plus_target / den)
}

/// `∫₀¹ WA(w) u(w) dw`. Requires `P, N > 0`.
pub fn expected_weighted_accuracy(
    cm: &ConfusionMatrix,
    dist: &Density,
    quad: &QuadratureConfig,
) -> Result<f64> {
    let (p, n) = (cm.positives() as f64, cm.negatives() as f64);
    if p == 0.0 || n == 0.0 {
        return Err(Error::Precondition("EWA needs P > 0 and N > 0".into()));
    }
    let (tp, tn) = (cm.tp as f64, cm.tn as f64);
    // TP/P = TN/N makes WA constant in w.
    if tp * n == tn * p {
        return Ok(tp / p);
    }
    let wa = |w: f64| (w * tp + (1.0 - w) * tn) / (w * p + (1.0 - w) * n);
    Ok(dist.expect(wa, quad))
}

/// Beta distribution with the given mean and variance.
///
/// Requires `0 < mean < 1` and `0 < variance < mean·(1 − mean)`.
pub fn beta_from_moments(mean: f64, variance: f64) -> Result<BetaParams> {
    let bound = mean * (1.0 - mean);
    if !(mean > 0.0 && mean < 1.0 && variance > 0.0 && variance < bound) {
        return Err(Error::InfeasibleMoments { mean, variance });
    }
    let k = bound / variance - 1.0;
    BetaParams::new(mean * k, (1.0 - mean) * k)
}
