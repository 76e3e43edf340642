//! Confusion-matrix metrics: standard, recently proposed and cost-sensitive.
//!
//! Every metric is evaluated from a [`ConfusionMatrix`], plus average costs
//! for the cost-sensitive rows and a density for the integrated ones.
//! A vanishing denominator yields `Ok(None)` ("undefined"); asking for a
//! metric without the context it needs is an error.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::confusion::ConfusionMatrix;
use crate::costs::{CostContext, ShiftedCosts};
use crate::error::{Error, Result};
use crate::quadrature::{Density, QuadratureConfig};
use crate::weighting::{expected_weighted_accuracy, weighted_accuracy, WeightSpec};

/// Identifier of a metric. Parametric variants carry their parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricId {
    Accuracy,
    Recall,
    Precision,
    Specificity,
    Npv,
    /// F-measure with parameter β > 0.
    FBeta(f64),
    Informedness,
    Markedness,
    Mcc,
    Kappa,
    GMean,
    RocAucSingle,
    Cba,
    Iam,
    P4,
    BRocSingle,
    Wca,
    Wra,
    Acd,
    CScore,
    Msu,
    HMeasure,
    /// Weighted accuracy at a fixed weight, or at `w = r_C` when `None`.
    Wa(Option<f64>),
    Ewa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    HigherIsBetter,
    LowerIsBetter,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricDescriptor {
    pub id: MetricId,
    pub orientation: Orientation,
    pub needs_costs: bool,
    pub needs_distribution: bool,
}

impl MetricId {
    /// Stable lowercase name, without parameters.
    pub fn name(&self) -> &'static str {
        match self {
            MetricId::Accuracy => "accuracy",
            MetricId::Recall => "recall",
            MetricId::Precision => "precision",
            MetricId::Specificity => "specificity",
            MetricId::Npv => "npv",
            MetricId::FBeta(_) => "f_beta",
            MetricId::Informedness => "informedness",
            MetricId::Markedness => "markedness",
            MetricId::Mcc => "mcc",
            MetricId::Kappa => "kappa",
            MetricId::GMean => "g_mean",
            MetricId::RocAucSingle => "roc_auc_single",
            MetricId::Cba => "cba",
            MetricId::Iam => "iam",
            MetricId::P4 => "p4",
            MetricId::BRocSingle => "b_roc_single",
            MetricId::Wca => "wca",
            MetricId::Wra => "wra",
            MetricId::Acd => "acd",
            MetricId::CScore => "c_score",
            MetricId::Msu => "msu",
            MetricId::HMeasure => "h_measure",
            MetricId::Wa(_) => "wa",
            MetricId::Ewa => "ewa",
        }
    }

    pub fn orientation(&self) -> Orientation {
        match self {
            MetricId::Acd | MetricId::CScore => Orientation::LowerIsBetter,
            _ => Orientation::HigherIsBetter,
        }
    }

    pub fn needs_costs(&self) -> bool {
        matches!(
            self,
            MetricId::Wca
                | MetricId::Wra
                | MetricId::Acd
                | MetricId::CScore
                | MetricId::Msu
                | MetricId::HMeasure
                | MetricId::Wa(None)
        )
    }

    pub fn needs_distribution(&self) -> bool {
        matches!(self, MetricId::Ewa)
    }

    pub fn descriptor(&self) -> MetricDescriptor {
        MetricDescriptor {
            id: *self,
            orientation: self.orientation(),
            needs_costs: self.needs_costs(),
            needs_distribution: self.needs_distribution(),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            MetricId::FBeta(b) if !(b.is_finite() && b > 0.0) => Err(Error::Domain(format!(
                "F-measure β must be positive, got {b}"
            ))),
            MetricId::Wa(Some(w)) => WeightSpec::new(w).map(|_| ()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricId::FBeta(b) if *b != 1.0 => write!(f, "f_beta:{b}"),
            MetricId::Wa(Some(w)) => write!(f, "wa:{w}"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for MetricId {
    type Err = Error;

    /// Accepts the registry names; `f_beta:<β>` and `wa:<w>` set the parameter.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => {
                let v: f64 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownMetric(s.to_string()))?;
                (n.trim(), Some(v))
            }
            None => (s.trim(), None),
        };
        let id = match (name, param) {
            ("f_beta", p) => MetricId::FBeta(p.unwrap_or(1.0)),
            ("wa", p) => MetricId::Wa(p),
            (_, Some(_)) => return Err(Error::UnknownMetric(s.to_string())),
            (n, None) => metric_registry()
                .into_iter()
                .map(|d| d.id)
                .find(|id| id.name() == n)
                .ok_or_else(|| Error::UnknownMetric(s.to_string()))?,
        };
        id.validate()?;
        Ok(id)
    }
}

impl Serialize for MetricId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MetricId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One descriptor per metric, with default parameters (β = 1, `w = r_C`).
pub fn metric_registry() -> Vec<MetricDescriptor> {
    [
        MetricId::Accuracy,
        MetricId::Recall,
        MetricId::Precision,
        MetricId::Specificity,
        MetricId::Npv,
        MetricId::FBeta(1.0),
        MetricId::Informedness,
        MetricId::Markedness,
        MetricId::Mcc,
        MetricId::Kappa,
        MetricId::GMean,
        MetricId::RocAucSingle,
        MetricId::Cba,
        MetricId::Iam,
        MetricId::P4,
        MetricId::BRocSingle,
        MetricId::Wca,
        MetricId::Wra,
        MetricId::Acd,
        MetricId::CScore,
        MetricId::Msu,
        MetricId::HMeasure,
        MetricId::Wa(None),
        MetricId::Ewa,
    ]
    .iter()
    .map(MetricId::descriptor)
    .collect()
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    (den != 0.0).then(|| num / den)
}

/// Uninformed cost-ratio density used by the H measure when none is given.
pub fn default_h_density() -> Density {
    Density::beta(2.0, 2.0).expect("valid parameters")
}

/// Evaluate `id` on `cm` with the default quadrature tolerances.
pub fn evaluate(
    id: &MetricId,
    cm: &ConfusionMatrix,
    cost_ctx: Option<&CostContext>,
    dist_ctx: Option<&Density>,
) -> Result<Option<f64>> {
    evaluate_with(id, cm, cost_ctx, dist_ctx, &QuadratureConfig::default())
}

pub fn evaluate_with(
    id: &MetricId,
    cm: &ConfusionMatrix,
    cost_ctx: Option<&CostContext>,
    dist_ctx: Option<&Density>,
    quad: &QuadratureConfig,
) -> Result<Option<f64>> {
    id.validate()?;
    if id.needs_costs() && cost_ctx.is_none() {
        return Err(Error::MissingContext(format!("{id} needs costs")));
    }
    if id.needs_distribution() && dist_ctx.is_none() {
        return Err(Error::MissingContext(format!(
            "{id} needs a weight distribution"
        )));
    }
    if cm.total() == 0 {
        return Ok(None);
    }
    let (p, n) = (cm.positives(), cm.negatives());
    let value = match *id {
        MetricId::HMeasure => {
            if p == 0 || n == 0 {
                None
            } else {
                let default = default_h_density();
                let dist = dist_ctx.unwrap_or(&default);
                let costs = cost_ctx.expect("checked").costs;
                Some(h_measure_with(cm, &costs, dist, quad)?)
            }
        }
        MetricId::Ewa => {
            if p == 0 || n == 0 {
                None
            } else {
                Some(expected_weighted_accuracy(
                    cm,
                    dist_ctx.expect("checked"),
                    quad,
                )?)
            }
        }
        MetricId::Wa(w) => {
            let w = match w {
                Some(w) => WeightSpec::new(w)?,
                None => WeightSpec::new(cost_ctx.expect("checked").costs.r_c())?,
            };
            weighted_accuracy(cm, w)
        }
        other => closed_form(other, cm, cost_ctx),
    };
    Ok(value)
}

fn closed_form(id: MetricId, cm: &ConfusionMatrix, cost_ctx: Option<&CostContext>) -> Option<f64> {
    let tp = cm.tp as f64;
    let fn_ = cm.fn_ as f64;
    let fp = cm.fp as f64;
    let tn = cm.tn as f64;
    let p = tp + fn_;
    let n = tn + fp;
    let total = p + n;
    let pred_pos = tp + fp;
    let pred_neg = tn + fn_;
    let costs = cost_ctx.map(|c| c.costs);

    match id {
        MetricId::Accuracy => ratio(tp + tn, total),
        MetricId::Recall => ratio(tp, p),
        MetricId::Precision => ratio(tp, pred_pos),
        MetricId::Specificity => ratio(tn, n),
        MetricId::Npv => ratio(tn, pred_neg),
        MetricId::FBeta(beta) => {
            let b2 = beta * beta;
            ratio((1.0 + b2) * tp, tp + b2 * p + fp)
        }
        MetricId::Informedness => Some(ratio(tp, p)? - ratio(fp, n)?),
        MetricId::Markedness => Some(ratio(tp, pred_pos)? - ratio(fn_, pred_neg)?),
        MetricId::Mcc => {
            let den = pred_pos * p * n * pred_neg;
            ratio(tp * tn - fp * fn_, den.sqrt())
        }
        MetricId::Kappa => ratio(2.0 * (tp * tn - fn_ * fp), pred_pos * n + p * pred_neg),
        MetricId::GMean => ratio(tp * tn, p * n).map(f64::sqrt),
        MetricId::RocAucSingle => Some(0.5 * (ratio(tp, p)? + ratio(tn, n)?)),
        MetricId::Cba => Some(0.5 * (ratio(tp, p.max(pred_pos))? + ratio(tn, n.max(pred_neg))?)),
        MetricId::Iam => {
            let worst = fp.max(fn_);
            Some(
                ratio(tp - worst, 2.0 * p.max(pred_pos))?
                    + ratio(tn - worst, 2.0 * n.max(pred_neg))?,
            )
        }
        MetricId::P4 => ratio(4.0 * tp * tn, 4.0 * tp * tn + (tp + tn) * (fp + fn_)),
        MetricId::BRocSingle => Some(0.5 * (ratio(tp, p)? + ratio(tp, pred_pos)?)),
        MetricId::Wca => {
            let w = costs?.r_c();
            Some(w * ratio(tp, p)? + (1.0 - w) * ratio(tn, n)?)
        }
        MetricId::Wra => {
            let c = costs?;
            let k = ratio(n * c.c_fp, p * c.c_fn)?;
            let informedness = ratio(tp, p)? - ratio(fp, n)?;
            Some(4.0 * informedness * k / ((1.0 + k) * (1.0 + k)))
        }
        MetricId::Acd => {
            // Normalized with TCC_min = 0.
            let c = costs?;
            let err = 1.0 - (tp + tn) / total;
            let normalized = ratio(c.c_fn * fn_ + c.c_fp * fp, c.tcc_span(cm))?;
            Some(err.hypot(normalized))
        }
        MetricId::CScore => {
            let ctx = cost_ctx?;
            ratio(ctx.tcc(cm), p * ctx.costs.c_fp)
        }
        MetricId::Msu => {
            let ctx = cost_ctx?;
            ratio(ctx.tcc(cm) - ctx.tcc_min, ctx.tcc_max(cm)).map(|x| 1.0 - x)
        }
        MetricId::HMeasure | MetricId::Ewa | MetricId::Wa(_) => unreachable!("handled by caller"),
    }
}

/// H measure: `1 − ∫u(c)·TCC(c) dc / ∫u(c)·TCC_max(c) dc` with
/// `TCC(c) = b[c·FP + (1−c)·FN]`, `TCC_max(c) = b[c·N + (1−c)·P]` and
/// `b = C_FP + C_FN`. Requires `P, N > 0`.
pub fn h_measure(cm: &ConfusionMatrix, costs: &ShiftedCosts, dist: &Density) -> Result<f64> {
    h_measure_with(cm, costs, dist, &QuadratureConfig::default())
}

pub fn h_measure_with(
    cm: &ConfusionMatrix,
    _costs: &ShiftedCosts,
    dist: &Density,
    quad: &QuadratureConfig,
) -> Result<f64> {
    let (p, n) = (cm.positives() as f64, cm.negatives() as f64);
    if p == 0.0 || n == 0.0 {
        return Err(Error::Precondition(
            "H measure needs P > 0 and N > 0".into(),
        ));
    }
    let (fp, fn_) = (cm.fp as f64, cm.fn_ as f64);
    // Both integrands are linear in c, so only the mean of u enters; b cancels.
    let m = dist.mean(quad);
    let cost = m * fp + (1.0 - m) * fn_;
    let max_cost = m * n + (1.0 - m) * p;
    Ok(1.0 - cost / max_cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eval(id: MetricId, cm: ConfusionMatrix) -> Option<f64> {
        let ctx = CostContext::new(ShiftedCosts::new(1.0, 1.0).unwrap());
        let d = Density::beta(2.0, 3.0).unwrap();
        evaluate(&id, &cm, Some(&ctx), Some(&d)).unwrap()
    }

    fn all_ids() -> Vec<MetricId> {
        metric_registry().into_iter().map(|d| d.id).collect()
    }

    #[test]
    fn registry_shape() {
        let reg = metric_registry();
        assert_eq!(reg.len(), 24);
        for d in &reg {
            let lower = matches!(d.id, MetricId::Acd | MetricId::CScore);
            assert_eq!(
                d.orientation == Orientation::LowerIsBetter,
                lower,
                "{}",
                d.id
            );
            if d.needs_costs {
                assert!(
                    [
                        "wca",
                        "wra",
                        "acd",
                        "c_score",
                        "msu",
                        "h_measure",
                        "wa",
                        "ewa"
                    ]
                    .contains(&d.id.name()),
                    "{}",
                    d.id
                );
            }
        }
        let mut names: Vec<_> = reg.iter().map(|d| d.id.name()).collect();
        names.dedup();
        assert_eq!(names.len(), 24);
    }

    #[test]
    fn names_round_trip() {
        for id in all_ids() {
            assert_eq!(id.to_string().parse::<MetricId>().unwrap(), id);
        }
        assert_eq!(
            "f_beta:2".parse::<MetricId>().unwrap(),
            MetricId::FBeta(2.0)
        );
        assert_eq!(
            "wa:0.25".parse::<MetricId>().unwrap(),
            MetricId::Wa(Some(0.25))
        );
        assert!("wa:1.5".parse::<MetricId>().is_err());
        assert!("f_beta:0".parse::<MetricId>().is_err());
        assert!("accuracy:3".parse::<MetricId>().is_err());
        assert!("auc".parse::<MetricId>().is_err());
    }

    #[test]
    fn perfect_classifier_values() {
        let cm = ConfusionMatrix::new(50, 0, 0, 50);
        assert_eq!(eval(MetricId::Accuracy, cm), Some(1.0));
        assert_eq!(eval(MetricId::Mcc, cm), Some(1.0));
        assert_eq!(eval(MetricId::Msu, cm), Some(1.0));
        assert_eq!(eval(MetricId::Kappa, cm), Some(1.0));
        assert_eq!(eval(MetricId::Acd, cm), Some(0.0));
        assert_eq!(eval(MetricId::CScore, cm), Some(0.0));
        assert!((eval(MetricId::HMeasure, cm).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mcc_by_hand() {
        assert_eq!(
            eval(MetricId::Mcc, ConfusionMatrix::new(0, 7, 3, 0)),
            Some(-1.0)
        );
        let v = eval(MetricId::Mcc, ConfusionMatrix::new(30, 20, 10, 40)).unwrap();
        let expected = (30.0 * 40.0 - 10.0 * 20.0) / (40.0f64 * 50.0 * 50.0 * 60.0).sqrt();
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.4082).abs() < 1e-4);
    }

    #[test]
    fn mcc_undefined_with_zero_factor() {
        assert_eq!(eval(MetricId::Mcc, ConfusionMatrix::new(0, 5, 0, 5)), None);
        assert_eq!(
            eval(MetricId::Precision, ConfusionMatrix::new(0, 5, 0, 5)),
            None
        );
        assert_eq!(eval(MetricId::Npv, ConfusionMatrix::new(5, 0, 5, 0)), None);
    }

    #[test]
    fn wca_by_hand() {
        let v = eval(MetricId::Wca, ConfusionMatrix::new(30, 20, 10, 40)).unwrap();
        assert!((v - 0.7).abs() < 1e-15);
    }

    #[test]
    fn hand_values_for_remaining_rows() {
        let cm = ConfusionMatrix::new(30, 20, 10, 40);
        let checks: [(MetricId, f64); 13] = [
            (MetricId::Recall, 0.6),
            (MetricId::Precision, 0.75),
            (MetricId::Specificity, 0.8),
            (MetricId::Npv, 40.0 / 60.0),
            (MetricId::FBeta(1.0), 60.0 / 90.0),
            (MetricId::Informedness, 0.6 - 0.2),
            (MetricId::Markedness, 0.75 - 20.0 / 60.0),
            (
                MetricId::Kappa,
                2.0 * (1200.0 - 200.0) / (40.0 * 50.0 + 50.0 * 60.0),
            ),
            (MetricId::GMean, 0.48f64.sqrt()),
            (MetricId::RocAucSingle, 0.7),
            (MetricId::Cba, 0.5 * (30.0 / 50.0 + 40.0 / 60.0)),
            (MetricId::P4, 4800.0 / (4800.0 + 70.0 * 30.0)),
            (MetricId::BRocSingle, 0.5 * (0.6 + 0.75)),
        ];
        for (id, expected) in checks {
            let v = eval(id, cm).unwrap();
            assert!((v - expected).abs() < 1e-14, "{id}: {v} vs {expected}");
        }
        let iam = eval(MetricId::Iam, cm).unwrap();
        assert!((iam - ((30.0 - 20.0) / 100.0 + (40.0 - 20.0) / 120.0)).abs() < 1e-14);
    }

    #[test]
    fn cost_rows_by_hand() {
        let cm = ConfusionMatrix::new(30, 20, 10, 40);
        let ctx = CostContext::new(ShiftedCosts::new(2.0, 1.0).unwrap());
        let e = |id| evaluate(&id, &cm, Some(&ctx), None).unwrap().unwrap();
        // TCC = 2·20 + 1·10 = 50, TCC_max = 2·50 + 1·50 = 150
        assert!((e(MetricId::Msu) - (1.0 - 50.0 / 150.0)).abs() < 1e-15);
        assert!((e(MetricId::CScore) - 50.0 / 50.0).abs() < 1e-15);
        assert!(
            (e(MetricId::Acd) - (0.3f64.powi(2) + (1.0f64 / 3.0).powi(2)).sqrt()).abs() < 1e-15
        );
        let k: f64 = 50.0 * 1.0 / (50.0 * 2.0);
        assert!((e(MetricId::Wra) - 4.0 * 0.4 * k / (1.0 + k).powi(2)).abs() < 1e-15);
        assert!((e(MetricId::Wa(None)) - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn msu_lower_bound_with_baseline() {
        let cm = ConfusionMatrix::new(0, 10, 10, 0);
        let ctx = CostContext::with_tcc_min(ShiftedCosts::new(1.0, 1.0).unwrap(), 5.0);
        let v = evaluate(&MetricId::Msu, &cm, Some(&ctx), None)
            .unwrap()
            .unwrap();
        assert!((v - 5.0 / 25.0).abs() < 1e-15);
    }

    #[test]
    fn missing_context_is_an_error() {
        let cm = ConfusionMatrix::new(1, 1, 1, 1);
        for id in [
            MetricId::HMeasure,
            MetricId::Msu,
            MetricId::Wa(None),
            MetricId::Wca,
        ] {
            assert!(matches!(
                evaluate(&id, &cm, None, None),
                Err(Error::MissingContext(_))
            ));
        }
        assert!(matches!(
            evaluate(&MetricId::Ewa, &cm, None, None),
            Err(Error::MissingContext(_))
        ));
        assert!(evaluate(&MetricId::Wa(Some(0.3)), &cm, None, None)
            .unwrap()
            .is_some());
    }

    #[test]
    fn h_measure_extremes() {
        let costs = ShiftedCosts::new(3.0, 1.0).unwrap();
        let d = default_h_density();
        assert!(
            (h_measure(&ConfusionMatrix::new(7, 0, 0, 9), &costs, &d).unwrap() - 1.0).abs() < 1e-15
        );
        assert!(
            h_measure(&ConfusionMatrix::new(0, 7, 9, 0), &costs, &d)
                .unwrap()
                .abs()
                < 1e-12
        );
        assert!(h_measure(&ConfusionMatrix::new(0, 0, 9, 0), &costs, &d).is_err());
    }

    #[test]
    fn h_measure_depends_on_density_mean() {
        // TCC(c) is linear in c, so H only sees E[c].
        let cm = ConfusionMatrix::new(30, 20, 10, 40);
        let costs = ShiftedCosts::new(1.0, 1.0).unwrap();
        let d = Density::beta(2.0, 5.0).unwrap();
        let m = 2.0 / 7.0;
        let closed = 1.0 - (m * 10.0 + (1.0 - m) * 20.0) / (m * 50.0 + (1.0 - m) * 50.0);
        assert!((h_measure(&cm, &costs, &d).unwrap() - closed).abs() < 1e-9);
    }

    #[test]
    fn empty_matrix_is_undefined() {
        for id in all_ids() {
            assert_eq!(eval(id, ConfusionMatrix::default()), None, "{id}");
        }
    }

    fn cm_strategy() -> impl Strategy<Value = ConfusionMatrix> {
        (0u64..60, 0u64..60, 0u64..60, 0u64..60)
            .prop_map(|(a, b, c, d)| ConfusionMatrix::new(a, b, c, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn ranges(cm in cm_strategy()) {
            let unit = [
                MetricId::Accuracy, MetricId::Recall, MetricId::Precision, MetricId::Specificity,
                MetricId::Npv, MetricId::FBeta(1.0), MetricId::GMean, MetricId::Cba, MetricId::P4,
                MetricId::Wca, MetricId::Wa(None), MetricId::Wa(Some(0.3)),
            ];
            for id in unit {
                if let Some(v) = eval(id, cm) {
                    prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v), "{} = {}", id, v);
                }
            }
            for id in [MetricId::Informedness, MetricId::Markedness, MetricId::Mcc, MetricId::Kappa] {
                if let Some(v) = eval(id, cm) {
                    prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&v), "{} = {}", id, v);
                }
            }
        }

        #[test]
        fn roc_auc_is_mean_of_rates(cm in cm_strategy()) {
            let auc = eval(MetricId::RocAucSingle, cm);
            let rec = eval(MetricId::Recall, cm);
            let spec = eval(MetricId::Specificity, cm);
            match (auc, rec, spec) {
                (Some(a), Some(r), Some(s)) => prop_assert!((a - 0.5 * (r + s)).abs() <= 1e-15),
                (None, _, _) => prop_assert!(rec.is_none() || spec.is_none()),
                _ => prop_assert!(false),
            }
        }

        #[test]
        fn p4_label_symmetry(a in 0u64..100, b in 0u64..100) {
            let cm = ConfusionMatrix::new(a, b, b, a);
            prop_assert_eq!(eval(MetricId::P4, cm), eval(MetricId::P4, cm.swapped()));
        }
    }
}
