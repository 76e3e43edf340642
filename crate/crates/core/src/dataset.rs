//! Labeled examples carrying per-example unit classification costs, and the
//! classifier outcomes evaluated against them.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Actual class of an example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Positive,
    Negative,
}

impl Label {
    pub fn is_positive(self) -> bool {
        self == Label::Positive
    }
}

/// One example with its unit classification costs.
///
/// For a positive example `ucc_incorrect` is the false-negative cost and
/// `ucc_correct` the true-positive cost; for a negative example they are the
/// false-positive and true-negative costs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledExample {
    pub id: String,
    pub label: Label,
    pub ucc_incorrect: f64,
    pub ucc_correct: f64,
}

impl LabeledExample {
    pub fn new(
        id: impl Into<String>,
        label: Label,
        ucc_incorrect: f64,
        ucc_correct: f64,
    ) -> Result<Self> {
        let id = id.into();
        if !(ucc_incorrect.is_finite() && ucc_correct.is_finite()) {
            return Err(Error::IncoherentCosts(format!(
                "example {id}: non-finite cost"
            )));
        }
        if ucc_incorrect <= ucc_correct {
            return Err(Error::IncoherentCosts(format!(
                "example {id}: misclassification cost {ucc_incorrect} must exceed correct cost {ucc_correct}"
            )));
        }
        Ok(Self {
            id,
            label,
            ucc_incorrect,
            ucc_correct,
        })
    }

    /// Shifted cost of misclassifying this example (`D_a^FN` or `E_a^FP`).
    pub fn shifted_cost(&self) -> f64 {
        self.ucc_incorrect - self.ucc_correct
    }
}

/// An ordered collection of examples with unique ids.
#[derive(Debug, Clone, PartialEq)]
pub struct CostedDataset {
    examples: Vec<LabeledExample>,
    index: HashMap<String, usize>,
    positives: usize,
}

impl CostedDataset {
    pub fn new(examples: Vec<LabeledExample>) -> Result<Self> {
        let mut index = HashMap::with_capacity(examples.len());
        for (i, ex) in examples.iter().enumerate() {
            if index.insert(ex.id.clone(), i).is_some() {
                return Err(Error::InvalidDataset(format!("duplicate id {}", ex.id)));
            }
        }
        let positives = examples.iter().filter(|e| e.label.is_positive()).count();
        Ok(Self {
            examples,
            index,
            positives,
        })
    }

    pub fn examples(&self) -> &[LabeledExample] {
        &self.examples
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn positives(&self) -> usize {
        self.positives
    }

    pub fn negatives(&self) -> usize {
        self.examples.len() - self.positives
    }

    /// Fraction of positive examples, `r_+ = P / N_tot`. Zero for an empty dataset.
    pub fn r_plus(&self) -> f64 {
        if self.examples.is_empty() {
            0.0
        } else {
            self.positives as f64 / self.examples.len() as f64
        }
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Sum of correct-classification costs, the cost of a perfect classifier.
    pub fn tcc_min(&self) -> f64 {
        self.examples.iter().map(|e| e.ucc_correct).sum()
    }
}

/// The set of example ids a classifier labelled positive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassificationOutcome {
    pub predicted_positive: BTreeSet<String>,
}

impl ClassificationOutcome {
    pub fn new<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            predicted_positive: ids.into_iter().map(Into::into).collect(),
        }
    }

    /// Outcome predicting every example positive.
    pub fn all_positive(dataset: &CostedDataset) -> Self {
        Self::new(dataset.examples().iter().map(|e| e.id.clone()))
    }

    /// Outcome predicting exactly the actual positives.
    pub fn perfect(dataset: &CostedDataset) -> Self {
        Self::new(
            dataset
                .examples()
                .iter()
                .filter(|e| e.label.is_positive())
                .map(|e| e.id.clone()),
        )
    }

    /// Per-example predicted-positive flags in dataset order.
    ///
    /// Fails if the outcome names an id absent from `dataset`.
    pub fn mask(&self, dataset: &CostedDataset) -> Result<Vec<bool>> {
        let mut mask = vec![false; dataset.len()];
        for id in &self.predicted_positive {
            let pos = dataset
                .position(id)
                .ok_or_else(|| Error::InvalidOutcome(format!("unknown id {id}")))?;
            mask[pos] = true;
        }
        Ok(mask)
    }
}
