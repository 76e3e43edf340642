//! Subcommand implementations.

use std::collections::HashSet;

use anyhow::Context;
use serde::Serialize;

use costeval_core::experiment::{self, ConfigOverrides, ExperimentConfig};
use costeval_core::metrics::{evaluate, metric_registry};
use costeval_core::weighting::{
    rescale_example_weights, target_weight, wa_tcc_affine, weight_from_costs, weighted_accuracy,
};
use costeval_core::{
    estimation, ConfusionMatrix, CostContext, CostedDataset, Density, Error, Label, LabeledExample,
    MetricId, ShiftedCosts, TargetProfile, WeightSpec,
};

use crate::report::{self, Row};
use crate::{
    CostArgs, Counts, EstimateMode, Format, HeatmapArgs, MetricsArgs, ReweightArgs, WaArgs,
};

fn matrix(c: &Counts) -> ConfusionMatrix {
    ConfusionMatrix::new(c.tp, c.fn_, c.fp, c.tn)
}

fn costs(c: &CostArgs) -> Result<Option<ShiftedCosts>, Error> {
    match (c.cfn, c.cfp) {
        (Some(c_fn), Some(c_fp)) => ShiftedCosts::new(c_fn, c_fp).map(Some),
        _ => Ok(None),
    }
}

#[derive(Serialize)]
struct CostsOut {
    c_fn: f64,
    c_fp: f64,
    r_c: f64,
    tcc_min: f64,
}

#[derive(Serialize)]
struct MetricOut {
    metric: String,
    value: Option<f64>,
}

#[derive(Serialize)]
struct MetricsReport {
    confusion_matrix: ConfusionMatrix,
    costs: Option<CostsOut>,
    metrics: Vec<MetricOut>,
}

pub fn metrics(a: MetricsArgs) -> anyhow::Result<()> {
    let cm = matrix(&a.counts);
    let costs = costs(&a.costs)?;
    let ctx = costs.map(|c| CostContext::with_tcc_min(c, a.tcc_min));
    let dist = match (a.dist_alpha, a.dist_beta) {
        (Some(al), Some(be)) => Some(Density::beta(al, be)?),
        _ => None,
    };
    let explicit = a.only.is_some();
    let ids: Vec<MetricId> = match &a.only {
        Some(names) => names
            .iter()
            .map(|n| n.parse())
            .collect::<Result<_, Error>>()?,
        None => metric_registry()
            .into_iter()
            .map(|d| match d.id {
                MetricId::FBeta(_) => MetricId::FBeta(a.f_beta),
                id => id,
            })
            .collect(),
    };
    let mut out = Vec::new();
    for id in ids {
        let missing =
            (id.needs_costs() && ctx.is_none()) || (id.needs_distribution() && dist.is_none());
        if missing && !explicit {
            continue;
        }
        let value = evaluate(&id, &cm, ctx.as_ref(), dist.as_ref())?;
        out.push(MetricOut {
            metric: id.to_string(),
            value,
        });
    }
    match a.format {
        Format::Json => report::json(&MetricsReport {
            confusion_matrix: cm,
            costs: costs.map(|c| CostsOut {
                c_fn: c.c_fn,
                c_fp: c.c_fp,
                r_c: c.r_c(),
                tcc_min: a.tcc_min,
            }),
            metrics: out,
        }),
        f => report::rows(
            &out.into_iter()
                .map(|m| Row::new(m.metric, m.value))
                .collect::<Vec<_>>(),
            f,
        ),
    }
}

#[derive(Serialize)]
struct WaReport {
    w: f64,
    wa: Option<f64>,
    tcc: Option<f64>,
    tcc_min: Option<f64>,
    tcc_max: Option<f64>,
}

pub fn wa(a: WaArgs) -> anyhow::Result<()> {
    let cm = matrix(&a.counts);
    let mut rep = match (a.w, costs(&a.costs)?) {
        (Some(w), _) => WaReport {
            w,
            wa: weighted_accuracy(&cm, WeightSpec::new(w)?),
            tcc: None,
            tcc_min: None,
            tcc_max: None,
        },
        (None, Some(c)) => {
            let w = weight_from_costs(&c);
            WaReport {
                w: w.value(),
                wa: weighted_accuracy(&cm, w),
                tcc: None,
                tcc_min: None,
                tcc_max: None,
            }
        }
        (None, None) => return Err(Error::MissingContext("give --w or --cfn/--cfp".into()).into()),
    };
    if let Some(c) = costs(&a.costs)? {
        if cm.positives() > 0 && cm.negatives() > 0 {
            let t = wa_tcc_affine(&cm, &CostContext::with_tcc_min(c, a.tcc_min))?;
            rep.tcc = Some(t.tcc);
            rep.tcc_min = Some(t.tcc_min);
            rep.tcc_max = Some(t.tcc_max);
        }
    }
    match a.format {
        Format::Json => report::json(&rep),
        f => {
            let mut rows = vec![Row::new("w", Some(rep.w)), Row::new("wa", rep.wa)];
            if rep.tcc.is_some() {
                rows.push(Row::new("tcc", rep.tcc));
                rows.push(Row::new("tcc_min", rep.tcc_min));
                rows.push(Row::new("tcc_max", rep.tcc_max));
            }
            report::rows(&rows, f)
        }
    }
}

#[derive(Serialize)]
struct RankingReport {
    alpha: f64,
    w_min: f64,
    w_max: f64,
    midpoint: f64,
    /// Best first at the midpoint.
    ordering: Vec<&'static str>,
}

pub fn estimate_weight(mode: EstimateMode) -> anyhow::Result<()> {
    match mode {
        EstimateMode::Ratio { v, format } => {
            let w = estimation::weight_from_ucc_ratio(v)?.value();
            match format {
                Format::Json => report::json(&serde_json::json!({ "v": v, "w": w })),
                f => report::rows(&[Row::new("w", Some(w))], f),
            }
        }
        EstimateMode::Ranking {
            alpha,
            p,
            n,
            format,
        } => {
            let iv = estimation::constraints_from_ranking(alpha, p, n)?;
            let mid = iv.midpoint();
            let models = estimation::EmblematicModel::standard_set(alpha)?;
            let ranked = estimation::rank_emblematic(&models, WeightSpec::new(mid)?, p, n)?;
            let rep = RankingReport {
                alpha,
                w_min: iv.w_min,
                w_max: iv.w_max,
                midpoint: mid,
                ordering: ranked.iter().map(|m| m.kind.name()).collect(),
            };
            match format {
                Format::Json => report::json(&rep),
                Format::Csv => report::rows(
                    &[
                        Row::new("w_min", Some(rep.w_min)),
                        Row::new("w_max", Some(rep.w_max)),
                        Row::new("midpoint", Some(rep.midpoint)),
                    ],
                    Format::Csv,
                ),
                Format::Text => {
                    println!("w in [{:.6}, {:.6}]", rep.w_min, rep.w_max);
                    println!(
                        "ordering at w = {:.6}: {}",
                        rep.midpoint,
                        rep.ordering.join(" > ")
                    );
                    Ok(())
                }
            }
        }
    }
}

fn parse_label(raw: &str) -> Result<Label, Error> {
    match raw.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "positive" | "pos" | "+" | "yes" => Ok(Label::Positive),
        "0" | "false" | "negative" | "neg" | "-" | "no" => Ok(Label::Negative),
        other => Err(Error::Ingestion(format!("unrecognized label {other:?}"))),
    }
}

#[derive(Serialize)]
struct ExampleWeight {
    id: String,
    label: Label,
    weight: f64,
}

#[derive(Serialize)]
struct ReweightReport {
    r_plus_dev: f64,
    r_plus_target: f64,
    w_t: Option<f64>,
    weights: Vec<ExampleWeight>,
}

pub fn reweight(a: ReweightArgs) -> anyhow::Result<()> {
    let file = std::fs::File::open(&a.input)
        .map_err(|e| Error::Ingestion(format!("cannot open {}: {e}", a.input.display())))?;
    let mut rdr = csv::Reader::from_reader(file);
    let headers = rdr.headers().map_err(Error::from)?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::Ingestion(format!("column {name:?} not found")))
    };
    let id_idx = col(&a.id_column)?;
    let label_idx = col(&a.label_column)?;
    let weight_idx = a.weight_column.as_deref().map(col).transpose()?;
    let costs = costs(&a.costs)?;
    let (c_fn, c_fp) = costs.map(|c| (c.c_fn, c.c_fp)).unwrap_or((1.0, 1.0));

    let mut examples = Vec::new();
    let mut base = Vec::new();
    let mut seen = HashSet::new();
    for rec in rdr.records() {
        let rec = rec.map_err(Error::from)?;
        let field = |i: usize| rec.get(i).unwrap_or("").trim().to_string();
        let id = field(id_idx);
        if !seen.insert(id.clone()) {
            return Err(Error::InvalidDataset(format!("duplicate id {id:?}")).into());
        }
        let label = parse_label(&field(label_idx))?;
        let cost = if label.is_positive() { c_fn } else { c_fp };
        examples.push(LabeledExample::new(id, label, cost, 0.0)?);
        base.push(match weight_idx {
            Some(i) => field(i)
                .parse::<f64>()
                .map_err(|_| Error::Ingestion(format!("bad weight {:?}", field(i))))?,
            None => 1.0,
        });
    }
    let ds = CostedDataset::new(examples)?;
    let weights = rescale_example_weights(&ds, &base, a.r_plus_target)?;
    let r_plus_dev = ds.r_plus();
    let w_t = match costs {
        Some(c) => {
            Some(target_weight(&c, &TargetProfile::new(r_plus_dev, a.r_plus_target)?).value())
        }
        None => None,
    };
    let rep = ReweightReport {
        r_plus_dev,
        r_plus_target: a.r_plus_target,
        w_t,
        weights: ds
            .examples()
            .iter()
            .zip(weights)
            .map(|(e, weight)| ExampleWeight {
                id: e.id.clone(),
                label: e.label,
                weight,
            })
            .collect(),
    };
    match a.format {
        Format::Json => report::json(&rep),
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(std::io::stdout().lock());
            w.write_record(["id", "label", "weight"])?;
            for e in &rep.weights {
                let label = if e.label.is_positive() { "1" } else { "0" };
                w.write_record([e.id.as_str(), label, &e.weight.to_string()])?;
            }
            w.flush()?;
            if let Some(wt) = rep.w_t {
                eprintln!("w_t = {wt}");
            }
            Ok(())
        }
    }
}

pub fn heatmap(a: HeatmapArgs) -> anyhow::Result<()> {
    let mut file = match &a.config {
        Some(path) => ConfigOverrides::from_path(path)?,
        None => ConfigOverrides::default(),
    };
    // a revenue source chosen on the command line replaces the file's
    if a.revenue_csv.is_some() || a.revenue_synthetic.is_some() {
        file.revenue_csv = None;
        file.revenue_synthetic = None;
    }
    let flags = ConfigOverrides {
        n_tot: a.n_tot,
        n_samples: a.n_samples,
        p_eff: a.p_eff,
        grid: a.grid,
        metrics: a.metric,
        correlation: a.correlation,
        n0: a.n0,
        seed: a.seed,
        revenue_csv: a.revenue_csv,
        revenue_column: a.revenue_column,
        revenue_synthetic: a.revenue_synthetic,
    };
    let merged = flags.merged_over(file);
    let cfg = merged.apply(ExperimentConfig::default())?;
    let run = experiment::run_heatmap_with_workers(&cfg, a.workers)?;
    let written = experiment::write_outputs(&run, &a.out)
        .with_context(|| format!("writing into {}", a.out.display()))?;
    eprintln!("wrote {} files to {}", written.len(), a.out.display());
    if !run.metadata.cell_errors.is_empty() {
        eprintln!(
            "warning: {} cells failed and are blank:",
            run.metadata.cell_errors.len()
        );
        for e in &run.metadata.cell_errors {
            eprintln!("  {e}");
        }
    }
    if a.render.is_some() {
        for g in &run.grids {
            println!("{}", experiment::render_text(g));
        }
    }
    Ok(())
}
