//! The 2×2 confusion matrix of a binary classifier.

use serde::{Deserialize, Serialize};

use crate::dataset::{ClassificationOutcome, CostedDataset};
use crate::error::Result;

/// Exact counts of a binary classifier's outcomes.
///
/// Rows are actual classes, columns predicted classes:
///
/// ```text
///              predicted +   predicted -
/// actual +        tp            fn
/// actual -        fp            tn
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub tp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    pub fp: u64,
    pub tn: u64,
}

impl ConfusionMatrix {
    pub const fn new(tp: u64, fn_: u64, fp: u64, tn: u64) -> Self {
        Self { tp, fn_, fp, tn }
    }

    /// Actual positives, `P = TP + FN`.
    pub const fn positives(&self) -> u64 {
        self.tp + self.fn_
    }

    /// Actual negatives, `N = TN + FP`.
    pub const fn negatives(&self) -> u64 {
        self.tn + self.fp
    }

    pub const fn total(&self) -> u64 {
        self.positives() + self.negatives()
    }

    pub const fn predicted_positive(&self) -> u64 {
        self.tp + self.fp
    }

    pub const fn predicted_negative(&self) -> u64 {
        self.tn + self.fn_
    }

    /// Exchange the roles of the two classes.
    pub const fn swapped(&self) -> Self {
        Self {
            tp: self.tn,
            fn_: self.fp,
            fp: self.fn_,
            tn: self.tp,
        }
    }
}

/// Tabulate an outcome against a dataset.
pub fn confusion_from_outcome(
    dataset: &CostedDataset,
    outcome: &ClassificationOutcome,
) -> Result<ConfusionMatrix> {
    let mask = outcome.mask(dataset)?;
    let mut cm = ConfusionMatrix::default();
    for (ex, &pred) in dataset.examples().iter().zip(&mask) {
        match (ex.label.is_positive(), pred) {
            (true, true) => cm.tp += 1,
            (true, false) => cm.fn_ += 1,
            (false, true) => cm.fp += 1,
            (false, false) => cm.tn += 1,
        }
    }
    Ok(cm)
}
