//! Estimating the WA weight when costs are only partially known.
//!
//! Two routes: a direct estimate of the cost ratio `v = C_FN / C_FP`, or a
//! business ranking of a handful of stylized ("emblematic") classifiers,
//! whose WA numerators bound `w` from both sides.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weighting::WeightSpec;

/// The stylized classifiers. Declaration order is the tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmblematicKind {
    /// Always predicts positive.
    MPlus,
    /// Always predicts negative.
    MMinus,
    /// Misclassifies a fraction α of both classes.
    MBad,
    /// Misclassifies a fraction α of negatives, perfect on positives.
    MBadMinus,
    /// Misclassifies a fraction α of positives, perfect on negatives.
    MBadPlus,
}

impl EmblematicKind {
    pub const ALL: [EmblematicKind; 5] = [
        EmblematicKind::MPlus,
        EmblematicKind::MMinus,
        EmblematicKind::MBad,
        EmblematicKind::MBadMinus,
        EmblematicKind::MBadPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EmblematicKind::MPlus => "M_plus",
            EmblematicKind::MMinus => "M_minus",
            EmblematicKind::MBad => "M_bad",
            EmblematicKind::MBadMinus => "M_bad_minus",
            EmblematicKind::MBadPlus => "M_bad_plus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmblematicModel {
    pub kind: EmblematicKind,
    /// Misclassified fraction; ignored by `MPlus` and `MMinus`.
    pub alpha: f64,
}

impl EmblematicModel {
    pub fn new(kind: EmblematicKind, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!("α must lie in (0, 1), got {alpha}")));
        }
        Ok(Self { kind, alpha })
    }

    /// All five models sharing one α.
    pub fn standard_set(alpha: f64) -> Result<Vec<Self>> {
        EmblematicKind::ALL
            .iter()
            .map(|&k| Self::new(k, alpha))
            .collect()
    }
}

/// Closed interval of admissible weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightInterval {
    pub w_min: f64,
    pub w_max: f64,
}

impl WeightInterval {
    pub fn new(w_min: f64, w_max: f64) -> Result<Self> {
        if !(0.0 <= w_min && w_min <= w_max && w_max <= 1.0) {
            return Err(Error::Domain(format!(
                "need 0 ≤ w_min ≤ w_max ≤ 1, got [{w_min}, {w_max}]"
            )));
        }
        Ok(Self { w_min, w_max })
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.w_min + self.w_max)
    }

    pub fn contains(&self, w: f64) -> bool {
        (self.w_min..=self.w_max).contains(&w)
    }
}

/// `w = v / (v + 1)` for a cost ratio `v = C_FN / C_FP > 0`.
pub fn weight_from_ucc_ratio(v: f64) -> Result<WeightSpec> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Domain(format!(
            "cost ratio must be positive, got {v}"
        )));
    }
    WeightSpec::new(v / (v + 1.0))
}

/// WA numerator `w·TP + (1−w)·TN` of an emblematic model on a dataset with
/// `P` positives and `N` negatives.
pub fn emblematic_numerator(model: &EmblematicModel, w: WeightSpec, p: u64, n: u64) -> Result<f64> {
    if p == 0 || n == 0 {
        return Err(Error::Precondition(
            "emblematic models need P > 0 and N > 0".into(),
        ));
    }
    let (w, p, n, a) = (w.value(), p as f64, n as f64, model.alpha);
    Ok(match model.kind {
        EmblematicKind::MPlus => w * p,
        EmblematicKind::MMinus => (1.0 - w) * n,
        EmblematicKind::MBad => (1.0 - a) * (w * p + (1.0 - w) * n),
        EmblematicKind::MBadMinus => w * p + (1.0 - a) * (1.0 - w) * n,
        EmblematicKind::MBadPlus => (1.0 - a) * w * p + (1.0 - w) * n,
    })
}

/// Bounds on `w` implied by the ranking
/// `M+ ≲ M_bad ≲ M− ≲ M_bad− ≲ M_bad+`.
///
/// The upper bound `[1 + αP/((1−α)N)]⁻¹` is where `M+` overtakes `M_bad`;
/// the lower bound `[1 + P/(αN)]⁻¹` is where `M−` overtakes `M_bad−`.
/// The two bounds are ordered only for `α² + α ≤ 1` (α ≤ 0.618…); beyond
/// that the ranking admits no weight and a [`Error::NoSolution`] is returned.
pub fn constraints_from_ranking(alpha: f64, p: u64, n: u64) -> Result<WeightInterval> {
    if !(0.5..1.0).contains(&alpha) {
        return Err(Error::Precondition(format!(
            "α must lie in [0.5, 1), got {alpha}"
        )));
    }
    if p == 0 || n == 0 {
        return Err(Error::Precondition(
            "ranking constraints need P > 0 and N > 0".into(),
        ));
    }
    let (w_min, w_max) = raw_bounds(alpha, p as f64, n as f64);
    if w_min > w_max {
        return Err(Error::NoSolution(format!(
            "ranking is inconsistent at α = {alpha}: lower bound {w_min:.6} exceeds upper bound {w_max:.6}"
        )));
    }
    WeightInterval::new(w_min, w_max)
}

pub(crate) fn raw_bounds(alpha: f64, p: f64, n: f64) -> (f64, f64) {
    let w_min = 1.0 / (1.0 + p / (alpha * n));
    let w_max = 1.0 / (1.0 + alpha * p / ((1.0 - alpha) * n));
    (w_min, w_max)
}

/// Models sorted best first by WA numerator; ties keep [`EmblematicKind`] order.
pub fn rank_emblematic(
    models: &[EmblematicModel],
    w: WeightSpec,
    p: u64,
    n: u64,
) -> Result<Vec<EmblematicModel>> {
    let mut scored = models
        .iter()
        .map(|m| Ok((emblematic_numerator(m, w, p, n)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.kind.cmp(&b.1.kind)));
    Ok(scored.into_iter().map(|(_, m)| m).collect())
}

/// True when `w` reproduces every link of the reference ranking
/// `M+ ≤ M_bad ≤ M− ≤ M_bad− ≤ M_bad+`, including the links that do not
/// enter [`constraints_from_ranking`].
pub fn reference_ranking_holds(alpha: f64, w: WeightSpec, p: u64, n: u64) -> Result<bool> {
    let chain = [
        EmblematicKind::MPlus,
        EmblematicKind::MBad,
        EmblematicKind::MMinus,
        EmblematicKind::MBadMinus,
        EmblematicKind::MBadPlus,
    ];
    let values = chain
        .iter()
        .map(|&k| emblematic_numerator(&EmblematicModel::new(k, alpha)?, w, p, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.windows(2).all(|v| v[0] <= v[1]))
}
