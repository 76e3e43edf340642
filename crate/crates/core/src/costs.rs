//! Unit classification costs and Total Classification Cost (TCC).
//!
//! Money is an abstract real quantity; no currency or rounding semantics.

use serde::{Deserialize, Serialize};

use crate::confusion::ConfusionMatrix;
use crate::dataset::{ClassificationOutcome, CostedDataset, Label, LabeledExample};
use crate::error::{Error, Result};

/// Example-independent unit classification costs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostMatrix {
    pub c_tp: f64,
    pub c_fn: f64,
    pub c_fp: f64,
    pub c_tn: f64,
}

impl CostMatrix {
    /// Requires `c_tp < c_fn` and `c_tn < c_fp`.
    pub fn new(c_tp: f64, c_fn: f64, c_fp: f64, c_tn: f64) -> Result<Self> {
        let m = Self {
            c_tp,
            c_fn,
            c_fp,
            c_tn,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let all_finite = [self.c_tp, self.c_fn, self.c_fp, self.c_tn]
            .iter()
            .all(|c| c.is_finite());
        if !all_finite {
            return Err(Error::IncoherentCosts("non-finite cost".into()));
        }
        if self.c_tp >= self.c_fn {
            return Err(Error::IncoherentCosts(format!(
                "c_tp ({}) must be below c_fn ({})",
                self.c_tp, self.c_fn
            )));
        }
        if self.c_tn >= self.c_fp {
            return Err(Error::IncoherentCosts(format!(
                "c_tn ({}) must be below c_fp ({})",
                self.c_tn, self.c_fp
            )));
        }
        Ok(())
    }

    /// Cost of perfect classification on a dataset with the totals of `cm`.
    pub fn tcc_min(&self, cm: &ConfusionMatrix) -> f64 {
        self.c_tp * cm.positives() as f64 + self.c_tn * cm.negatives() as f64
    }

    /// Direct four-term TCC, `c_tp·TP + c_fn·FN + c_fp·FP + c_tn·TN`.
    pub fn tcc(&self, cm: &ConfusionMatrix) -> f64 {
        self.c_tp * cm.tp as f64
            + self.c_fn * cm.fn_ as f64
            + self.c_fp * cm.fp as f64
            + self.c_tn * cm.tn as f64
    }
}

/// Shifted unit costs `C_FN = c_fn - c_tp` and `C_FP = c_fp - c_tn`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftedCosts {
    pub c_fn: f64,
    pub c_fp: f64,
}

impl ShiftedCosts {
    /// Both costs must be finite and strictly positive.
    pub fn new(c_fn: f64, c_fp: f64) -> Result<Self> {
        if !(c_fn.is_finite() && c_fp.is_finite() && c_fn > 0.0 && c_fp > 0.0) {
            return Err(Error::IncoherentCosts(format!(
                "shifted costs must be positive, got C_FN={c_fn}, C_FP={c_fp}"
            )));
        }
        Ok(Self { c_fn, c_fp })
    }

    /// UCC ratio `r_C = C_FN / (C_FN + C_FP)`.
    pub fn r_c(&self) -> f64 {
        self.c_fn / (self.c_fn + self.c_fp)
    }

    /// Cost ratio `v = C_FN / C_FP`: false positives equivalent to one false negative.
    pub fn ucc_ratio(&self) -> f64 {
        self.c_fn / self.c_fp
    }

    /// `TCC_max - TCC_min = C_FN·P + C_FP·N`.
    pub fn tcc_span(&self, cm: &ConfusionMatrix) -> f64 {
        self.c_fn * cm.positives() as f64 + self.c_fp * cm.negatives() as f64
    }
}

/// Average costs plus the perfect-classification baseline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostContext {
    pub costs: ShiftedCosts,
    pub tcc_min: f64,
}

impl CostContext {
    pub fn new(costs: ShiftedCosts) -> Self {
        Self {
            costs,
            tcc_min: 0.0,
        }
    }

    pub fn with_tcc_min(costs: ShiftedCosts, tcc_min: f64) -> Self {
        Self { costs, tcc_min }
    }

    pub fn tcc(&self, cm: &ConfusionMatrix) -> f64 {
        tcc_example_independent(cm, &self.costs, self.tcc_min)
    }

    /// Largest achievable TCC: every example misclassified.
    pub fn tcc_max(&self, cm: &ConfusionMatrix) -> f64 {
        self.costs.tcc_span(cm) + self.tcc_min
    }
}

pub fn shifted_from_matrix(matrix: &CostMatrix) -> Result<ShiftedCosts> {
    matrix.check()?;
    ShiftedCosts::new(matrix.c_fn - matrix.c_tp, matrix.c_fp - matrix.c_tn)
}

/// `C_FN·FN + C_FP·FP + TCC_min`.
pub fn tcc_example_independent(cm: &ConfusionMatrix, costs: &ShiftedCosts, tcc_min: f64) -> f64 {
    costs.c_fn * cm.fn_ as f64 + costs.c_fp * cm.fp as f64 + tcc_min
}

/// Total cost summed example by example over the outcome.
pub fn tcc_example_dependent(
    dataset: &CostedDataset,
    outcome: &ClassificationOutcome,
) -> Result<f64> {
    let mask = outcome.mask(dataset)?;
    Ok(dataset
        .examples()
        .iter()
        .zip(&mask)
        .map(|(ex, &pred)| {
            let correct = pred == ex.label.is_positive();
            if correct {
                ex.ucc_correct
            } else {
                ex.ucc_incorrect
            }
        })
        .sum())
}

/// TCC split into the confusion-matrix term, the perfect-classification
/// baseline and the deviation of the misclassified examples from the average
/// shifted costs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TccDecomposition {
    pub mean_term: f64,
    pub baseline: f64,
    pub fluctuation: f64,
    pub total: f64,
}

impl TccDecomposition {
    pub fn recomposed(&self) -> f64 {
        self.mean_term + self.baseline + self.fluctuation
    }
}

/// Decompose an example-dependent TCC around caller-supplied average costs.
///
/// `total` is the per-example sum; the other three fields are computed from
/// the confusion matrix and the deviations `δ_a = D_a^FN - C_FN`,
/// `ε_a = E_a^FP - C_FP`.
pub fn decompose_tcc(
    dataset: &CostedDataset,
    outcome: &ClassificationOutcome,
    costs: &ShiftedCosts,
) -> Result<TccDecomposition> {
    let mask = outcome.mask(dataset)?;
    let mut fn_count = 0u64;
    let mut fp_count = 0u64;
    let mut fluctuation = 0.0;
    for (ex, &pred) in dataset.examples().iter().zip(&mask) {
        match (ex.label, pred) {
            (Label::Positive, false) => {
                fn_count += 1;
                fluctuation += ex.shifted_cost() - costs.c_fn;
            }
            (Label::Negative, true) => {
                fp_count += 1;
                fluctuation += ex.shifted_cost() - costs.c_fp;
            }
            _ => {}
        }
    }
    Ok(TccDecomposition {
        mean_term: costs.c_fn * fn_count as f64 + costs.c_fp * fp_count as f64,
        baseline: dataset.tcc_min(),
        fluctuation,
        total: tcc_example_dependent(dataset, outcome)?,
    })
}

/// Churn-prediction cost model: retention measure of cost `M` with success
/// probability `P_eff`, and per-customer revenues `R_a`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChurnScenario {
    pub retention_cost: f64,
    pub p_eff: f64,
    revenues: Vec<f64>,
    r_avg: f64,
}

/// Per-example unit costs under the churn model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChurnExampleCosts {
    pub d_fn: f64,
    pub d_tp: f64,
    pub e_fp: f64,
    pub e_tn: f64,
}

impl ChurnScenario {
    pub fn new(retention_cost: f64, p_eff: f64, revenues: Vec<f64>) -> Result<Self> {
        if !(p_eff > 0.0 && p_eff <= 1.0) {
            return Err(Error::Domain(format!(
                "P_eff must lie in (0, 1], got {p_eff}"
            )));
        }
        if revenues.is_empty() {
            return Err(Error::InfeasibleScenario("no revenues".into()));
        }
        if let Some(r) = revenues.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
            return Err(Error::InfeasibleScenario(format!(
                "revenue {r} is not positive"
            )));
        }
        if !(retention_cost.is_finite() && retention_cost > 0.0) {
            return Err(Error::InfeasibleScenario(format!(
                "retention cost must be positive, got {retention_cost}"
            )));
        }
        let r_avg = revenues.iter().sum::<f64>() / revenues.len() as f64;
        if retention_cost >= r_avg * p_eff {
            return Err(Error::InfeasibleScenario(format!(
                "retention cost {retention_cost} must be below R_avg·P_eff = {}",
                r_avg * p_eff
            )));
        }
        Ok(Self {
            retention_cost,
            p_eff,
            revenues,
            r_avg,
        })
    }

    /// Scenario whose retention cost is tuned to reach the UCC ratio `r_c`.
    pub fn tuned(r_c: f64, p_eff: f64, revenues: Vec<f64>) -> Result<Self> {
        if revenues.is_empty() {
            return Err(Error::InfeasibleScenario("no revenues".into()));
        }
        let r_avg = revenues.iter().sum::<f64>() / revenues.len() as f64;
        let m = tune_retention_cost(r_c, p_eff, r_avg)?;
        Self::new(m, p_eff, revenues)
    }

    pub fn revenues(&self) -> &[f64] {
        &self.revenues
    }

    pub fn r_avg(&self) -> f64 {
        self.r_avg
    }

    /// Costed dataset over the scenario's customers; `churners[i]` marks
    /// customer `i` as an actual positive. Fails if a churner's expected
    /// recovered revenue does not exceed the retention cost.
    pub fn dataset(&self, churners: &[bool]) -> Result<CostedDataset> {
        if churners.len() != self.revenues.len() {
            return Err(Error::InvalidDataset(format!(
                "{} labels for {} revenues",
                churners.len(),
                self.revenues.len()
            )));
        }
        let examples = self
            .revenues
            .iter()
            .zip(churners)
            .enumerate()
            .map(|(i, (&r, &churn))| {
                let c = churn_example_costs(r, self);
                if churn {
                    LabeledExample::new(format!("c{i}"), Label::Positive, c.d_fn, c.d_tp)
                } else {
                    LabeledExample::new(format!("c{i}"), Label::Negative, c.e_fp, c.e_tn)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        CostedDataset::new(examples)
    }

    /// Shifted churn TCC with the perfect-classification baseline dropped:
    /// `C_FN·FN + C_FP·FP + Σ_{a ∈ S_FN} δ_a`, with `δ_a = P_eff·(R_a − R_avg)`.
    ///
    /// Equals the per-example total minus `M·P`, a constant for fixed labels.
    pub fn tcc(&self, churners: &[bool], predicted: &[bool]) -> f64 {
        let m = self.retention_cost;
        let c_fn = self.r_avg * self.p_eff - m;
        let mut total = 0.0;
        for ((&r, &churn), &pred) in self.revenues.iter().zip(churners).zip(predicted) {
            match (churn, pred) {
                (true, false) => total += c_fn + self.p_eff * (r - self.r_avg),
                (false, true) => total += m,
                _ => {}
            }
        }
        total
    }
}

/// `(d_fn, d_tp, e_fp, e_tn) = (R_a·P_eff, M, M, 0)`.
pub fn churn_example_costs(revenue: f64, scenario: &ChurnScenario) -> ChurnExampleCosts {
    ChurnExampleCosts {
        d_fn: revenue * scenario.p_eff,
        d_tp: scenario.retention_cost,
        e_fp: scenario.retention_cost,
        e_tn: 0.0,
    }
}

/// `C_FP = M`, `C_FN = R_avg·P_eff − M`.
pub fn churn_shifted_costs(scenario: &ChurnScenario) -> Result<ShiftedCosts> {
    let m = scenario.retention_cost;
    let c_fn = scenario.r_avg * scenario.p_eff - m;
    if c_fn <= 0.0 {
        return Err(Error::InfeasibleScenario(format!(
            "M = {m} is not below R_avg·P_eff = {}",
            scenario.r_avg * scenario.p_eff
        )));
    }
    ShiftedCosts::new(c_fn, m)
}

/// Retention cost giving UCC ratio `r_c`: `M = P_eff·R_avg·(1 − r_c)`.
pub fn tune_retention_cost(r_c: f64, p_eff: f64, r_avg: f64) -> Result<f64> {
    if !(r_c > 0.0 && r_c < 1.0) {
        return Err(Error::Domain(format!("r_C must lie in (0, 1), got {r_c}")));
    }
    Ok(p_eff * r_avg * (1.0 - r_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn shifted_costs_from_matrix() {
        let s = shifted_from_matrix(&CostMatrix {
            c_tp: 0.0,
            c_fn: 2.0,
            c_fp: 1.0,
            c_tn: 0.0,
        })
        .unwrap();
        assert_eq!((s.c_fn, s.c_fp), (2.0, 1.0));
        assert!(close(s.r_c(), 2.0 / 3.0, 1e-15));

        let s = shifted_from_matrix(&CostMatrix {
            c_tp: 0.0,
            c_fn: 1.0,
            c_fp: 1.0,
            c_tn: 0.0,
        })
        .unwrap();
        assert_eq!(s.r_c(), 0.5);

        let s = shifted_from_matrix(&CostMatrix {
            c_tp: 5.0,
            c_fn: 7.0,
            c_fp: 4.0,
            c_tn: 1.0,
        })
        .unwrap();
        assert_eq!((s.c_fn, s.c_fp), (2.0, 3.0));
        assert!(close(s.r_c(), 0.4, 1e-15));
    }

    #[test]
    fn incoherent_matrix_rejected() {
        assert!(matches!(
            CostMatrix::new(2.0, 1.0, 1.0, 0.0),
            Err(Error::IncoherentCosts(_))
        ));
        let bad = CostMatrix {
            c_tp: 0.0,
            c_fn: 1.0,
            c_fp: 1.0,
            c_tn: 1.0,
        };
        assert!(matches!(
            shifted_from_matrix(&bad),
            Err(Error::IncoherentCosts(_))
        ));
    }

    #[test]
    fn example_independent_tcc() {
        let costs = ShiftedCosts::new(2.0, 1.0).unwrap();
        assert_eq!(
            tcc_example_independent(&ConfusionMatrix::new(5, 0, 0, 5), &costs, 0.0),
            0.0
        );
        assert_eq!(
            tcc_example_independent(&ConfusionMatrix::new(2, 3, 4, 1), &costs, 0.0),
            10.0
        );
        let worst = ConfusionMatrix::new(0, 7, 9, 0);
        assert_eq!(
            tcc_example_independent(&worst, &costs, 0.0),
            costs.tcc_span(&worst)
        );
    }

    #[test]
    fn four_term_tcc_matches_shifted_form() {
        let m = CostMatrix::new(5.0, 7.0, 4.0, 1.0).unwrap();
        let s = shifted_from_matrix(&m).unwrap();
        let cm = ConfusionMatrix::new(3, 4, 5, 6);
        assert!(close(
            m.tcc(&cm),
            tcc_example_independent(&cm, &s, m.tcc_min(&cm)),
            1e-15
        ));
    }

    fn three_examples() -> CostedDataset {
        CostedDataset::new(vec![
            LabeledExample::new("a", Label::Positive, 10.0, 1.0).unwrap(),
            LabeledExample::new("b", Label::Positive, 6.0, 2.0).unwrap(),
            LabeledExample::new("c", Label::Negative, 4.0, 0.5).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn example_dependent_tcc_by_hand() {
        let ds = three_examples();
        // a predicted negative (FN, 10), b predicted positive (TP, 2), c negative (TN, 0.5)
        let out = ClassificationOutcome::new(["b"]);
        assert_eq!(tcc_example_dependent(&ds, &out).unwrap(), 12.5);
        let perfect = ClassificationOutcome::perfect(&ds);
        assert_eq!(tcc_example_dependent(&ds, &perfect).unwrap(), ds.tcc_min());
        assert_eq!(ds.tcc_min(), 3.5);
    }

    #[test]
    fn example_dependent_reduces_to_confusion_form() {
        let ex = (0..12)
            .map(|i| {
                if i < 5 {
                    LabeledExample::new(format!("p{i}"), Label::Positive, 7.0, 5.0).unwrap()
                } else {
                    LabeledExample::new(format!("n{i}"), Label::Negative, 4.0, 1.0).unwrap()
                }
            })
            .collect();
        let ds = CostedDataset::new(ex).unwrap();
        let out = ClassificationOutcome::new(["p0", "p3", "n5", "n6", "n9"]);
        let cm = crate::confusion::confusion_from_outcome(&ds, &out).unwrap();
        let m = CostMatrix::new(5.0, 7.0, 4.0, 1.0).unwrap();
        let s = shifted_from_matrix(&m).unwrap();
        let dep = tcc_example_dependent(&ds, &out).unwrap();
        assert_eq!(dep, tcc_example_independent(&cm, &s, m.tcc_min(&cm)));
        let d = decompose_tcc(&ds, &out, &s).unwrap();
        assert_eq!(d.fluctuation, 0.0);
    }

    #[test]
    fn invalid_outcome_propagates() {
        let ds = three_examples();
        let out = ClassificationOutcome::new(["zzz"]);
        assert!(tcc_example_dependent(&ds, &out).is_err());
        assert!(decompose_tcc(&ds, &out, &ShiftedCosts::new(1.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn churn_costs_per_example() {
        let sc = ChurnScenario::new(10.0, 0.25, vec![80.0, 120.0]).unwrap();
        let c = churn_example_costs(80.0, &sc);
        assert_eq!((c.d_fn, c.d_tp, c.e_fp, c.e_tn), (20.0, 10.0, 10.0, 0.0));
        assert_eq!(c.d_fn - c.d_tp, 10.0);

        let shifted = churn_shifted_costs(&sc).unwrap();
        assert_eq!(shifted.c_fp, 10.0);
        let avg = churn_example_costs(sc.r_avg(), &sc);
        assert!(close(avg.d_fn - avg.d_tp, shifted.c_fn, 1e-15));
        assert_eq!(avg.e_fp - avg.e_tn, shifted.c_fp);
    }

    #[test]
    fn churn_symmetric_point() {
        let revenues = vec![50.0, 100.0, 150.0];
        let sc = ChurnScenario::new(0.25 * 100.0 / 2.0, 0.25, revenues).unwrap();
        let s = churn_shifted_costs(&sc).unwrap();
        assert_eq!(s.c_fn, s.c_fp);
        assert_eq!(s.r_c(), 0.5);
    }

    #[test]
    fn churn_tuning_by_hand() {
        let m = tune_retention_cost(0.8, 0.25, 100.0).unwrap();
        assert!(close(m, 5.0, 1e-15));
        let sc = ChurnScenario::new(m, 0.25, vec![100.0]).unwrap();
        let s = churn_shifted_costs(&sc).unwrap();
        assert!(close(s.c_fn, 20.0, 1e-15));
        assert!(close(
            tune_retention_cost(0.2, 0.25, 100.0).unwrap(),
            20.0,
            1e-15
        ));
        assert!(close(
            tune_retention_cost(0.5, 0.4, 30.0).unwrap(),
            0.4 * 30.0 / 2.0,
            1e-15
        ));
        assert!(tune_retention_cost(1.0 - 1e-12, 0.25, 100.0).unwrap() < 1e-9);
    }

    #[test]
    fn churn_domain_errors() {
        assert!(matches!(
            tune_retention_cost(0.0, 0.25, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            tune_retention_cost(1.0, 0.25, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ChurnScenario::new(25.0, 0.25, vec![100.0]),
            Err(Error::InfeasibleScenario(_))
        ));
        assert!(ChurnScenario::new(1.0, 0.25, vec![100.0, -1.0]).is_err());
    }

    #[test]
    fn churn_single_false_negative_fluctuation() {
        // With P_eff = 1 the deviation of one missed churner is R_a - R_avg.
        let revenues = vec![40.0, 70.0, 100.0, 110.0];
        let sc = ChurnScenario::new(20.0, 1.0, revenues.clone()).unwrap();
        let churners = [true, true, false, false];
        let ds = sc.dataset(&churners).unwrap();
        let s = churn_shifted_costs(&sc).unwrap();
        // c1 (R = 70) missed, c0 caught, no false positives.
        let out = ClassificationOutcome::new(["c0"]);
        let d = decompose_tcc(&ds, &out, &s).unwrap();
        assert!(close(d.fluctuation, 70.0 - sc.r_avg(), 1e-12));

        // General P_eff scales the deviation.
        let sc = ChurnScenario::new(5.0, 0.25, revenues).unwrap();
        let ds = sc.dataset(&churners).unwrap();
        let s = churn_shifted_costs(&sc).unwrap();
        let d = decompose_tcc(&ds, &out, &s).unwrap();
        assert!(close(d.fluctuation, 0.25 * (70.0 - sc.r_avg()), 1e-12));
    }

    #[test]
    fn churn_shifted_tcc_is_total_minus_baseline() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(2..40);
            let revenues: Vec<f64> = (0..n).map(|_| rng.random_range(40.0..120.0)).collect();
            let sc = ChurnScenario::new(5.0, 0.25, revenues).unwrap();
            let churners: Vec<bool> = (0..n).map(|_| rng.random_bool(0.3)).collect();
            let predicted: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            let ds = sc.dataset(&churners).unwrap();
            let ids = (0..n).filter(|&i| predicted[i]).map(|i| format!("c{i}"));
            let out = ClassificationOutcome::new(ids);
            let total = tcc_example_dependent(&ds, &out).unwrap();
            let p = churners.iter().filter(|&&c| c).count() as f64;
            assert!(close(sc.tcc(&churners, &predicted), total - 5.0 * p, 1e-12));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn decomposition_identity(
            seed in any::<u64>(),
            n in 1usize..60,
            p_eff in 0.05f64..1.0,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let revenues: Vec<f64> = (0..n).map(|_| rng.random_range(50.0..150.0)).collect();
            let m = p_eff * rng.random_range(1.0..49.0);
            let sc = ChurnScenario::new(m, p_eff, revenues).unwrap();
            let churners: Vec<bool> = (0..n).map(|_| rng.random_bool(0.4)).collect();
            let ds = sc.dataset(&churners).unwrap();
            let ids = (0..n).filter(|_| rng.random_bool(0.5)).map(|i| format!("c{i}"));
            let out = ClassificationOutcome::new(ids);
            let s = churn_shifted_costs(&sc).unwrap();
            let d = decompose_tcc(&ds, &out, &s).unwrap();
            prop_assert!(close(d.recomposed(), d.total, 1e-9));
            let lower = ds.tcc_min();
            let upper: f64 = ds.examples().iter().map(|e| e.ucc_incorrect.max(e.ucc_correct)).sum();
            prop_assert!(d.total >= lower - 1e-9 && d.total <= upper + 1e-9);
        }

        #[test]
        fn tuned_retention_cost_round_trips(
            r_c in 0.001f64..0.999,
            p_eff in 0.01f64..1.0,
            r_avg in 1.0f64..1000.0,
        ) {
            let sc = ChurnScenario::tuned(r_c, p_eff, vec![r_avg]).unwrap();
            let s = churn_shifted_costs(&sc).unwrap();
            prop_assert!((s.r_c() - r_c).abs() <= 1e-12);
        }
    }
}
