//! Densities on `[0, 1]` and the adaptive integrator used to take
//! expectations under them.
//!
//! Integration is global adaptive Gauss–Kronrod (7/15 points): the interval
//! with the largest error estimate is bisected until the summed error drops
//! below `max(abs_tol, rel_tol·|I|)`. Beta densities with a shape parameter
//! below one are integrated after the substitution `w = t^{1/α}` (and the
//! mirrored one near 1), which removes the endpoint singularity. Peaked Beta
//! densities are integrated only over a window of ±60 standard deviations
//! around the mean, split at the mode.

use serde::{Deserialize, Serialize};
use statrs::function::beta::ln_beta;

use crate::error::{Error, Result};

/// Tolerances of the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &wk)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += wk * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// Returns the best estimate even when `max_subdivisions` is exhausted.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> f64 {
    if a == b {
        return 0.0;
    }
    let (v, e) = gk15(&f, a, b);
    let mut segments = vec![(a, b, v, e)];
    let mut total = v;
    let mut error = e;
    while error > cfg.abs_tol.max(cfg.rel_tol * total.abs())
        && segments.len() < cfg.max_subdivisions
    {
        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (lo, hi, v, e) = segments.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval cannot be split further in floating point.
            segments.push((lo, hi, v, 0.0));
            error -= e;
            continue;
        }
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        total += v1 + v2 - v;
        error += e1 + e2 - e;
        segments.push((lo, mid, v1, e1));
        segments.push((mid, hi, v2, e2));
    }
    // Re-sum to shed the drift of incremental updates.
    segments.iter().map(|s| s.2).sum()
}

/// `a·ln(x)` with the convention `0·ln(0) = 0`.
fn xlogy(a: f64, x: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        a * x.ln()
    }
}

/// Shape parameters of a Beta distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaParams {
    pub alpha: f64,
    pub beta: f64,
}

impl BetaParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && alpha > 0.0 && beta > 0.0) {
            return Err(Error::Domain(format!(
                "Beta parameters must be positive, got ({alpha}, {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn mean(&self) -> f64 {
        self.alpha / (self.alpha + self.beta)
    }

    pub fn variance(&self) -> f64 {
        let s = self.alpha + self.beta;
        self.alpha * self.beta / (s * s * (s + 1.0))
    }

    pub fn ln_norm(&self) -> f64 {
        ln_beta(self.alpha, self.beta)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.pdf_with_norm(x, self.ln_norm())
    }

    fn pdf_with_norm(&self, x: f64, ln_norm: f64) -> f64 {
        if !(0.0..=1.0).contains(&x) {
            return 0.0;
        }
        (xlogy(self.alpha - 1.0, x) + xlogy(self.beta - 1.0, 1.0 - x) - ln_norm).exp()
    }

    fn expect<F: Fn(f64) -> f64>(&self, f: &F, cfg: &QuadratureConfig) -> f64 {
        let (a, b) = (self.alpha, self.beta);
        let ln_norm = self.ln_norm();
        let mean = self.mean();
        if a >= 1.0 && b >= 1.0 {
            let sd = self.variance().sqrt();
            let lo = (mean - 60.0 * sd).max(0.0);
            let hi = (mean + 60.0 * sd).min(1.0);
            let g = |x: f64| f(x) * self.pdf_with_norm(x, ln_norm);
            let mode = if a + b > 2.0 {
                (a - 1.0) / (a + b - 2.0)
            } else {
                mean
            };
            let mode = mode.clamp(lo, hi);
            return integrate(g, lo, mode, cfg) + integrate(g, mode, hi, cfg);
        }
        let left = if a < 1.0 {
            // w = t^{1/a}: w^{a-1} dw = dt / a
            let g = |t: f64| {
                let w = t.powf(1.0 / a);
                f(w) * (xlogy(b - 1.0, 1.0 - w) - ln_norm).exp() / a
            };
            integrate(g, 0.0, mean.powf(a), cfg)
        } else {
            integrate(|x| f(x) * self.pdf_with_norm(x, ln_norm), 0.0, mean, cfg)
        };
        let right = if b < 1.0 {
            // 1 - w = t^{1/b}
            let g = |t: f64| {
                let w = 1.0 - t.powf(1.0 / b);
                f(w) * (xlogy(a - 1.0, w) - ln_norm).exp() / b
            };
            integrate(g, 0.0, (1.0 - mean).powf(b), cfg)
        } else {
            integrate(|x| f(x) * self.pdf_with_norm(x, ln_norm), mean, 1.0, cfg)
        };
        left + right
    }
}

/// Piecewise-linear density through `(x_i, y_i)`, normalized to unit mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TabulatedDensity {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl TabulatedDensity {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::Domain(
                "tabulated density needs ≥ 2 matching knots".into(),
            ));
        }
        if xs.windows(2).any(|w| !(w[0] < w[1])) || xs[0] < 0.0 || xs[xs.len() - 1] > 1.0 {
            return Err(Error::Domain(
                "tabulated knots must increase strictly within [0, 1]".into(),
            ));
        }
        if ys.iter().any(|y| !(y.is_finite() && *y >= 0.0)) {
            return Err(Error::Domain("tabulated density values must be ≥ 0".into()));
        }
        let area: f64 = xs
            .windows(2)
            .zip(ys.windows(2))
            .map(|(x, y)| 0.5 * (x[1] - x[0]) * (y[0] + y[1]))
            .sum();
        if area <= 0.0 {
            return Err(Error::Domain("tabulated density has zero mass".into()));
        }
        let ys = ys.into_iter().map(|y| y / area).collect();
        Ok(Self { xs, ys })
    }

    pub fn knots(&self) -> (&[f64], &[f64]) {
        (&self.xs, &self.ys)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if x < self.xs[0] || x > self.xs[self.xs.len() - 1] {
            return 0.0;
        }
        let i = self
            .xs
            .partition_point(|&k| k <= x)
            .clamp(1, self.xs.len() - 1);
        let (x0, x1) = (self.xs[i - 1], self.xs[i]);
        let (y0, y1) = (self.ys[i - 1], self.ys[i]);
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    fn expect<F: Fn(f64) -> f64>(&self, f: &F, cfg: &QuadratureConfig) -> f64 {
        self.xs
            .windows(2)
            .zip(self.ys.windows(2))
            .map(|(x, y)| {
                let (x0, x1, y0, y1) = (x[0], x[1], y[0], y[1]);
                let lin = |t: f64| f(t) * (y0 + (y1 - y0) * (t - x0) / (x1 - x0));
                integrate(lin, x0, x1, cfg)
            })
            .sum()
    }
}

/// A probability density over a weight or cost ratio in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Density {
    Beta(BetaParams),
    Uniform {
        low: f64,
        high: f64,
    },
    Tabulated(TabulatedDensity),
    /// All mass at one point; the limit of a Beta with vanishing variance.
    Point {
        at: f64,
    },
}

impl Density {
    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        Ok(Density::Beta(BetaParams::new(alpha, beta)?))
    }

    pub fn uniform(low: f64, high: f64) -> Result<Self> {
        if !(0.0 <= low && low < high && high <= 1.0) {
            return Err(Error::Domain(format!(
                "uniform interval must satisfy 0 ≤ low < high ≤ 1, got [{low}, {high}]"
            )));
        }
        Ok(Density::Uniform { low, high })
    }

    /// Uniform on `[center - half_width, center + half_width]`.
    pub fn interval(center: f64, half_width: f64) -> Result<Self> {
        Self::uniform(center - half_width, center + half_width)
    }

    pub fn point(at: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&at) {
            return Err(Error::Domain(format!(
                "point mass must lie in [0, 1], got {at}"
            )));
        }
        Ok(Density::Point { at })
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match self {
            Density::Beta(b) => b.pdf(x),
            Density::Uniform { low, high } => {
                if (*low..=*high).contains(&x) {
                    1.0 / (high - low)
                } else {
                    0.0
                }
            }
            Density::Tabulated(t) => t.pdf(x),
            Density::Point { .. } => f64::NAN,
        }
    }

    pub fn mean(&self, cfg: &QuadratureConfig) -> f64 {
        match self {
            Density::Beta(b) => b.mean(),
            Density::Uniform { low, high } => 0.5 * (low + high),
            Density::Point { at } => *at,
            Density::Tabulated(_) => self.expect(|x| x, cfg),
        }
    }

    /// `∫ f(x) u(x) dx` over `[0, 1]`.
    pub fn expect<F: Fn(f64) -> f64>(&self, f: F, cfg: &QuadratureConfig) -> f64 {
        match self {
            Density::Beta(b) => b.expect(&f, cfg),
            Density::Uniform { low, high } => integrate(&f, *low, *high, cfg) / (high - low),
            Density::Tabulated(t) => t.expect(&f, cfg),
            Density::Point { at } => f(*at),
        }
    }

    /// The density of `1 - x` when `x` follows `self`.
    pub fn reflected(&self) -> Self {
        match self {
            Density::Beta(b) => Density::Beta(BetaParams {
                alpha: b.beta,
                beta: b.alpha,
            }),
            Density::Uniform { low, high } => Density::Uniform {
                low: 1.0 - high,
                high: 1.0 - low,
            },
            Density::Tabulated(t) => Density::Tabulated(TabulatedDensity {
                xs: t.xs.iter().rev().map(|x| 1.0 - x).collect(),
                ys: t.ys.iter().rev().copied().collect(),
            }),
            Density::Point { at } => Density::Point { at: 1.0 - at },
        }
    }
}
