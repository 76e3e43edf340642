//! Average ranks and rank correlations (standard and top-weighted Spearman).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::Orientation;

/// Relative tolerance used by the harness when grouping ties.
///
/// Metrics that are affine in each other (WA at `w = r_C`, MSU, C-score)
/// should induce identical rankings; computing them along different paths
/// leaves rounding noise of a few ulps that would otherwise split ties.
pub const HARNESS_TIE_TOLERANCE: f64 = 1e-12;

/// Ranks with 1 = best; tied entries share the mean of their positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankVector {
    ranks: Vec<f64>,
}

impl RankVector {
    /// Wraps precomputed ranks, checking that they sum to `n(n+1)/2`.
    pub fn new(ranks: Vec<f64>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::Degenerate("rank vector is empty".into()));
        }
        let n = ranks.len() as f64;
        let sum: f64 = ranks.iter().sum();
        let expected = n * (n + 1.0) / 2.0;
        if ranks.iter().any(|r| !r.is_finite() || *r < 1.0 || *r > n)
            || (sum - expected).abs() > 1e-9 * expected
        {
            return Err(Error::Domain(
                "ranks must lie in [1, n] and sum to n(n+1)/2".into(),
            ));
        }
        Ok(Self { ranks })
    }

    pub fn ranks(&self) -> &[f64] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.ranks.iter().all(|&r| r == self.ranks[0])
    }
}

/// Ranks values best first, exact ties only.
pub fn rank_values(values: &[f64], orientation: Orientation) -> Result<RankVector> {
    rank_values_with_tolerance(values, orientation, 0.0)
}

/// Ranks values best first. Sorted neighbours closer than
/// `rel_tol · max(|a|, |b|, 1)` are chained into one tie group.
pub fn rank_values_with_tolerance(
    values: &[f64],
    orientation: Orientation,
    rel_tol: f64,
) -> Result<RankVector> {
    if values.is_empty() {
        return Err(Error::Degenerate("cannot rank an empty list".into()));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("cannot rank non-finite value {v}")));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    match orientation {
        Orientation::HigherIsBetter => order.sort_by(|&a, &b| values[b].total_cmp(&values[a])),
        Orientation::LowerIsBetter => order.sort_by(|&a, &b| values[a].total_cmp(&values[b])),
    }
    let close = |a: f64, b: f64| (a - b).abs() <= rel_tol * a.abs().max(b.abs()).max(1.0);

    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && close(values[order[end - 1]], values[order[end]]) {
            end += 1;
        }
        // positions start+1 ..= end share their mean
        let avg = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    Ok(RankVector { ranks })
}

fn check_pair(r: &RankVector, s: &RankVector) -> Result<()> {
    if r.len() != s.len() {
        return Err(Error::Domain(format!(
            "rank vectors differ in length ({} vs {})",
            r.len(),
            s.len()
        )));
    }
    if r.len() < 2 {
        return Err(Error::Degenerate(
            "correlation needs at least two items".into(),
        ));
    }
    Ok(())
}

fn weighted_pearson(x: &[f64], y: &[f64], u: &[f64]) -> f64 {
    let total: f64 = u.iter().sum();
    let mx = x.iter().zip(u).map(|(a, w)| a * w).sum::<f64>() / total;
    let my = y.iter().zip(u).map(|(a, w)| a * w).sum::<f64>() / total;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for ((a, b), w) in x.iter().zip(y).zip(u) {
        let (dx, dy) = (a - mx, b - my);
        sxy += w * dx * dy;
        sxx += w * dx * dx;
        syy += w * dy * dy;
    }
    (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
}

/// Pearson correlation of two rank vectors; `None` if either is constant.
pub fn spearman(r: &RankVector, s: &RankVector) -> Result<Option<f64>> {
    check_pair(r, s)?;
    if r.is_constant() || s.is_constant() {
        return Ok(None);
    }
    let u = vec![1.0; r.len()];
    Ok(Some(weighted_pearson(&r.ranks, &s.ranks, &u)))
}

/// Top-weighted Spearman: weighted Pearson on ranks with per-item weight
/// `1/(r_i + n0 − 1) + 1/(s_i + n0 − 1)`.
pub fn weighted_spearman(r: &RankVector, s: &RankVector, n0: f64) -> Result<Option<f64>> {
    if !(n0.is_finite() && n0 > 0.0) {
        return Err(Error::Domain(format!("n0 must be positive, got {n0}")));
    }
    check_pair(r, s)?;
    if r.is_constant() || s.is_constant() {
        return Ok(None);
    }
    let f = |rank: f64| 1.0 / (rank + n0 - 1.0);
    let u: Vec<f64> = r
        .ranks
        .iter()
        .zip(&s.ranks)
        .map(|(&a, &b)| f(a) + f(b))
        .collect();
    Ok(Some(weighted_pearson(&r.ranks, &s.ranks, &u)))
}

/// Which rank correlation the harness uses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorrelationScheme {
    #[default]
    Standard,
    Weighted {
        n0: f64,
    },
}

impl CorrelationScheme {
    pub const DEFAULT_N0: f64 = 2.0;

    pub fn weighted(n0: f64) -> Result<Self> {
        if !(n0.is_finite() && n0 > 0.0) {
            return Err(Error::Domain(format!("n0 must be positive, got {n0}")));
        }
        Ok(CorrelationScheme::Weighted { n0 })
    }

    pub fn name(&self) -> &'static str {
        match self {
            CorrelationScheme::Standard => "standard",
            CorrelationScheme::Weighted { .. } => "weighted",
        }
    }

    pub fn correlate(&self, r: &RankVector, s: &RankVector) -> Result<Option<f64>> {
        match *self {
            CorrelationScheme::Standard => spearman(r, s),
            CorrelationScheme::Weighted { n0 } => weighted_spearman(r, s, n0),
        }
    }
}
