//! Campaign drivers. Each trial draws from its own random stream and the
//! results are collected in trial order, so parallelism never changes output.

use bonnesen_core::bounds::{
    full_report, full_report_3d, largest_valid_eps, lemma_delta_bound, lemma_eps_bound,
    lemma_eps_bound_solid, BoundReport, MeasureSource, SeparableConcave,
};
use bonnesen_core::certifier::{decide_equality_projection, decide_equality_projection_3d};
use bonnesen_core::convex_core::{Point2, Polygon, Polytope3};
use bonnesen_core::graph_body::{GraphBody, Kind, PLFunction};
use bonnesen_core::scalar::q;
use bonnesen_core::{Rational, Result, Scalar};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{ExperimentConfig, Field, LabError, Mode};
use crate::gen::{
    gen_concave, gen_convex_polygon, gen_equality_pair, gen_equality_pair_3d, gen_polytope3,
    regular_polygon,
};
use crate::output::{write_outputs, Panel, MAX_PANELS};

/// Off-diagonal cells are certifier errors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Confusion {
    pub equal_as_equal: usize,
    pub equal_as_unequal: usize,
    pub unequal_as_equal: usize,
    pub unequal_as_unequal: usize,
}

impl Confusion {
    fn record(&mut self, truth: bool, verdict: bool) {
        match (truth, verdict) {
            (true, true) => self.equal_as_equal += 1,
            (true, false) => self.equal_as_unequal += 1,
            (false, true) => self.unequal_as_equal += 1,
            (false, false) => self.unequal_as_unequal += 1,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.equal_as_unequal == 0 && self.unequal_as_equal == 0
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub mode: String,
    pub dim: u32,
    pub field: String,
    pub trials: usize,
    pub chain_violations: usize,
    pub confusion: Confusion,
    /// Largest `|gap|` over pairs known to attain equality.
    pub max_equality_gap: f64,
    pub lemma_violations: usize,
    pub convergence_violations: usize,
    pub errors: Vec<String>,
}

impl Summary {
    pub fn violations(&self) -> usize {
        let gap = usize::from(self.field == "exact" && self.dim == 2 && self.max_equality_gap != 0.0);
        self.chain_violations
            + self.confusion.equal_as_unequal
            + self.confusion.unequal_as_equal
            + self.lemma_violations
            + self.convergence_violations
            + self.errors.len()
            + gap
    }

    pub fn render(&self) -> String {
        let c = &self.confusion;
        format!(
            "mode={} dim={} field={} trials={}\n\
             chain violations: {}\n\
             certifier confusion [truth equal|unequal x verdict equal|unequal]: [[{}, {}], [{}, {}]]\n\
             max |gap| on equality pairs: {:e}\n\
             lemma violations: {}\n\
             convergence violations: {}\n\
             errors: {}\n\
             total violations: {}",
            self.mode,
            self.dim,
            self.field,
            self.trials,
            self.chain_violations,
            c.equal_as_equal,
            c.equal_as_unequal,
            c.unequal_as_equal,
            c.unequal_as_unequal,
            self.max_equality_gap,
            self.lemma_violations,
            self.convergence_violations,
            self.errors.len(),
            self.violations()
        )
    }
}

/// Everything one trial contributes to the outputs.
#[derive(Clone, Debug, Default)]
pub struct TrialOutcome {
    pub row: Vec<String>,
    pub record: Value,
    pub panel: Option<Panel>,
    pub chain_violation: bool,
    /// `(truth, verdict)` for certifier trials.
    pub verdict: Option<(bool, bool)>,
    pub equality_gap: Option<f64>,
    pub lemma_violation: bool,
    pub convergence_violation: bool,
}

pub struct CampaignResult {
    pub header: Vec<String>,
    pub outcomes: Vec<TrialOutcome>,
    pub summary: Summary,
}

fn report_header() -> Vec<String> {
    ["trial", "source"]
        .into_iter()
        .chain(BoundReport::<f64>::csv_header())
        .map(String::from)
        .collect()
}

fn report_row<S: Scalar>(trial: usize, r: &BoundReport<S>) -> Vec<String> {
    let mut row = vec![trial.to_string(), r.source.name().to_string()];
    row.extend(r.csv_row());
    row
}

fn header_for(config: &ExperimentConfig) -> Vec<String> {
    let cols: &[&str] = match config.mode {
        Mode::Chain | Mode::Certify => return report_header(),
        Mode::Lemma => &[
            "trial", "m", "n", "volA", "volB", "volSum", "delta", "delta_bound", "eps", "eps_bound",
        ],
        Mode::Convergence => &["k", "volume", "oracle", "disk_error", "error_ratio"],
    };
    cols.iter().map(|s| s.to_string()).collect()
}

fn to_field<S: Scalar>(p: &Polygon<Rational>) -> Result<Polygon<S>> {
    p.map_field(S::from_rational)
}

fn outline<S: Scalar>(p: &Polygon<S>) -> Vec<[f64; 2]> {
    p.vertices().iter().map(|v| [v[0].to_f64(), v[1].to_f64()]).collect()
}

fn panel<S: Scalar>(a: &Polygon<S>, b: &Polygon<S>, title: String) -> Panel {
    Panel {
        title,
        shapes: vec![outline(a), outline(b), outline(&a.minkowski_sum(b))],
    }
}

fn panel3(a: &Polytope3, b: &Polytope3, title: String) -> Result<Panel> {
    let up = [0.0, 0.0, 1.0];
    let (pa, pb) = (a.project(&up)?, b.project(&up)?);
    Ok(panel(&pa, &pb, title))
}

fn direction(rng: &mut impl Rng) -> [i64; 2] {
    loop {
        let d = [rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        if d != [0, 0] {
            return d;
        }
    }
}

fn vertex_count(config: &ExperimentConfig, rng: &mut impl Rng) -> usize {
    rng.gen_range(config.vertex_range.clone())
}

fn chain_trial_2d<S: Scalar>(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let (ka, kb) = (vertex_count(config, &mut rng), vertex_count(config, &mut rng));
    let a = gen_convex_polygon(&mut rng, ka, config.denom_bound)?;
    let b = gen_convex_polygon(&mut rng, kb, config.denom_bound)?;
    let d = direction(&mut rng);
    let source = if rng.gen_bool(0.5) {
        MeasureSource::Projection
    } else {
        MeasureSource::Slice
    };
    let (a, b) = (to_field::<S>(&a)?, to_field::<S>(&b)?);
    let dir: Point2<S> = [S::from_int(d[0]), S::from_int(d[1])];
    let r = full_report(&a, &b, &dir, source)?;
    let holds = r.chain_holds();
    Ok(TrialOutcome {
        row: report_row(trial, &r),
        record: json!({"trial": trial, "chain_holds": holds, "report": r.to_json()}),
        panel: (trial < MAX_PANELS).then(|| panel(&a, &b, format!("trial {trial}"))),
        chain_violation: !holds,
        ..Default::default()
    })
}

fn chain_trial_3d(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let (ka, kb) = (
        vertex_count(config, &mut rng).max(4),
        vertex_count(config, &mut rng).max(4),
    );
    let a = gen_polytope3(&mut rng, ka)?;
    let b = gen_polytope3(&mut rng, kb)?;
    let d = direction(&mut rng);
    let dir = [f64::from(d[0] as i32), f64::from(d[1] as i32), 1.0];
    let source = if rng.gen_bool(0.5) {
        MeasureSource::Projection
    } else {
        MeasureSource::Slice
    };
    let r = full_report_3d(&a, &b, &dir, source)?;
    let holds = r.chain_holds();
    Ok(TrialOutcome {
        row: report_row(trial, &r),
        record: json!({"trial": trial, "chain_holds": holds, "report": r.to_json()}),
        panel: if trial < MAX_PANELS { Some(panel3(&a, &b, format!("trial {trial}"))?) } else { None },
        chain_violation: !holds,
        ..Default::default()
    })
}

fn certify_trial_2d<S: Scalar>(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let constructed = trial.is_multiple_of(2);
    let (a, b, kernel) = if constructed {
        let k = vertex_count(config, &mut rng);
        let pair = gen_equality_pair(&mut rng, k, config.denom_bound)?;
        (pair.a, pair.b, pair.truth.kernel)
    } else {
        let (ka, kb) = (vertex_count(config, &mut rng), vertex_count(config, &mut rng));
        let a = gen_convex_polygon(&mut rng, ka, config.denom_bound)?;
        let b = gen_convex_polygon(&mut rng, kb, config.denom_bound)?;
        (a, b, [q(0, 1), q(1, 1)])
    };
    let (a, b) = (to_field::<S>(&a)?, to_field::<S>(&b)?);
    let kernel: Point2<S> = [S::from_rational(&kernel[0]), S::from_rational(&kernel[1])];
    // Ground truth for random pairs is the bound gap, computed separately.
    let truth = constructed
        || full_report(&a, &b, &kernel, MeasureSource::Projection)?.equality_bonnesen;
    let v = decide_equality_projection(&a, &b, &kernel)?;
    let witness_ok = match &v.decomposition {
        Some(d) => d.verify(&a, &b)?,
        None => true,
    };
    let mut record = v.to_json();
    record["trial"] = json!(trial);
    record["kind"] = json!(if constructed { "constructed" } else { "random" });
    Ok(TrialOutcome {
        row: report_row(trial, &v.report),
        record,
        panel: (trial < MAX_PANELS).then(|| panel(&a, &b, format!("trial {trial}: equal={}", v.equal))),
        verdict: Some((truth, v.equal && witness_ok)),
        equality_gap: constructed.then(|| v.report.gap_bonnesen.to_f64().abs()),
        ..Default::default()
    })
}

fn certify_trial_3d(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let constructed = trial.is_multiple_of(2);
    let k = vertex_count(config, &mut rng).max(4);
    let (a, b) = if constructed {
        let (a, b, _) = gen_equality_pair_3d(&mut rng, k)?;
        (a, b)
    } else {
        (gen_polytope3(&mut rng, k)?, gen_polytope3(&mut rng, k)?)
    };
    let up = [0.0, 0.0, 1.0];
    let truth =
        constructed || full_report_3d(&a, &b, &up, MeasureSource::Projection)?.equality_bonnesen;
    let v = decide_equality_projection_3d(&a, &b, &up)?;
    let d = v.decomposition.as_ref();
    let record = json!({
        "trial": trial,
        "kind": if constructed { "constructed" } else { "random" },
        "equal": v.equal,
        "lambda": d.map(|d| d.witness.lambda),
        "alpha": d.map(|d| d.alpha),
        "beta": d.map(|d| d.beta),
        "gap": v.report.gap_bonnesen.to_f64(),
        "residual": v.residual,
        "mode": "float",
    });
    Ok(TrialOutcome {
        row: report_row(trial, &v.report),
        record,
        panel: if trial < MAX_PANELS { Some(panel3(&a, &b, format!("trial {trial}: equal={}", v.equal))?) } else { None },
        verdict: Some((truth, v.equal)),
        equality_gap: constructed.then(|| v.report.gap_bonnesen.to_f64().abs()),
        ..Default::default()
    })
}

fn hypograph(f: &PLFunction<Rational>) -> Result<Polygon<Rational>> {
    let zero = PLFunction::constant(&f.domain(), q(0, 1), Kind::Convex)?;
    GraphBody::new(zero, f.clone())?.to_polygon()
}

fn random_length(rng: &mut impl Rng) -> Rational {
    q(rng.gen_range(1..=16), rng.gen_range(1..=4))
}

fn lemma_trial_2d(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let (m, n) = (random_length(&mut rng), random_length(&mut rng));
    // Slopes of f lean up and slopes of g lean down, so the slope-gap
    // hypothesis holds for a good share of draws.
    let f = gen_concave(&mut rng, &m, -4..=16)?;
    let g = gen_concave(&mut rng, &n, -16..=4)?;
    let (ha, hb) = (hypograph(&f)?, hypograph(&g)?);
    let vol_sum = ha.minkowski_sum(&hb).volume();
    let delta = lemma_delta_bound(&f, &g)?;
    let mut violated = vol_sum < delta.bound || delta.vol_sum != vol_sum;
    let eps = largest_valid_eps(&f, &g);
    let eps_bound = match &eps {
        Some(e) => {
            let b = lemma_eps_bound(&f, &g, e)?;
            violated |= vol_sum < b.bound;
            Some(b.bound)
        }
        None => None,
    };
    let opt = |x: &Option<Rational>| x.as_ref().map(|v| v.render()).unwrap_or_default();
    let d = delta.delta.clone().expect("slope-free bound carries its correction");
    Ok(TrialOutcome {
        row: vec![
            trial.to_string(),
            m.render(),
            n.render(),
            ha.volume().render(),
            hb.volume().render(),
            vol_sum.render(),
            d.render(),
            delta.bound.render(),
            opt(&eps),
            opt(&eps_bound),
        ],
        record: json!({
            "trial": trial,
            "volSum": vol_sum.render(),
            "delta_bound": delta.bound.render(),
            "eps": eps.as_ref().map(Scalar::render),
            "eps_bound": eps_bound.as_ref().map(Scalar::render),
            "holds": !violated,
        }),
        panel: (trial < MAX_PANELS).then(|| panel(&ha, &hb, format!("trial {trial}"))),
        lemma_violation: violated,
        ..Default::default()
    })
}

fn lemma_trial_3d(config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = config.trial_rng(trial);
    let (m, n) = (random_length(&mut rng), random_length(&mut rng));
    let f = SeparableConcave::new(
        gen_concave(&mut rng, &m, 0..=16)?,
        gen_concave(&mut rng, &m, -8..=8)?,
    )?;
    let g = SeparableConcave::new(
        gen_concave(&mut rng, &n, -16..=0)?,
        gen_concave(&mut rng, &n, -8..=8)?,
    )?;
    let sf = f.first.slopes();
    let sg = g.first.slopes();
    let eps = sf[sf.len() - 1].clone() - &sg[0];
    let (ha, hb) = (f.hypograph()?, g.hypograph()?);
    let vol_sum = ha.minkowski_sum(&hb)?.volume();
    let (bound, checked) = lemma_eps_bound_solid(&f, &g, &eps)?;
    let slack = 1e-9 * vol_sum.abs().max(1.0);
    let violated = vol_sum < bound.to_f64() - slack || (checked - vol_sum).abs() > slack;
    Ok(TrialOutcome {
        row: vec![
            trial.to_string(),
            m.render(),
            n.render(),
            bonnesen_core::bounds::sig12(ha.volume()),
            bonnesen_core::bounds::sig12(hb.volume()),
            bonnesen_core::bounds::sig12(vol_sum),
            String::new(),
            String::new(),
            eps.render(),
            bound.render(),
        ],
        record: json!({
            "trial": trial,
            "volSum": vol_sum,
            "eps": eps.render(),
            "eps_bound": bound.render(),
            "holds": !violated,
        }),
        panel: if trial < MAX_PANELS { Some(panel3(&ha, &hb, format!("trial {trial}"))?) } else { None },
        lemma_violation: violated,
        ..Default::default()
    })
}

/// Doublings in the convergence study: `k = start * 2^i`. Past about 5e4
/// vertices neighbouring turns fall below the float hull's collinearity
/// tolerance and vertices merge, so the study stops there.
fn convergence_steps(config: &ExperimentConfig) -> usize {
    let k_max = if config.dim == 2 { 50_000 } else { 1_000 };
    let start = *config.vertex_range.start();
    (0..config.trials)
        .take_while(|&i| i < 32 && start << i <= k_max)
        .count()
}

fn regular_area(k: usize) -> f64 {
    let k = k as f64;
    0.5 * k * (std::f64::consts::TAU / k).sin()
}

/// Regular `k`-gons approach the unit disk; the area error should at least
/// halve per doubling of `k` (it quarters asymptotically).
fn convergence(config: &ExperimentConfig) -> Result<Vec<TrialOutcome>> {
    let start = *config.vertex_range.start();
    let volumes: Vec<(usize, f64)> = (0..convergence_steps(config))
        .into_par_iter()
        .map(|i| {
            let k = start << i;
            let p = regular_polygon(k)?;
            let volume = if config.dim == 2 {
                GraphBody::from_polygon(&p)?.volume()
            } else {
                let mut pts: Vec<[f64; 3]> = p.vertices().iter().map(|v| [v[0], v[1], 0.0]).collect();
                pts.extend(p.vertices().iter().map(|v| [v[0], v[1], 1.0]));
                Polytope3::canonical_hull(&pts)?.volume()
            };
            Ok((k, volume))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(volumes.len());
    let mut previous: Option<f64> = None;
    for (i, &(k, volume)) in volumes.iter().enumerate() {
        let oracle = regular_area(k);
        let err = std::f64::consts::PI - volume;
        let ratio = previous.map(|p| err / p);
        let wrong_area = (volume - oracle).abs() > 1e-9 * oracle;
        let slow = ratio.is_some_and(|r| r.is_nan() || r > 0.5);
        previous = Some(err);
        let p = regular_polygon(k)?;
        out.push(TrialOutcome {
            row: vec![
                k.to_string(),
                bonnesen_core::bounds::sig12(volume),
                bonnesen_core::bounds::sig12(oracle),
                format!("{err:.6e}"),
                ratio.map(|r| format!("{r:.6}")).unwrap_or_default(),
            ],
            record: json!({"k": k, "volume": volume, "oracle": oracle, "disk_error": err, "error_ratio": ratio}),
            panel: (i < 6).then(|| panel(&p, &p, format!("k = {k}"))),
            convergence_violation: wrong_area || slow,
            ..Default::default()
        });
    }
    Ok(out)
}

fn trial(config: &ExperimentConfig, i: usize) -> Result<TrialOutcome> {
    match (config.mode, config.dim, config.field) {
        (Mode::Chain, 2, Field::Exact) => chain_trial_2d::<Rational>(config, i),
        (Mode::Chain, 2, Field::Float) => chain_trial_2d::<f64>(config, i),
        (Mode::Chain, _, _) => chain_trial_3d(config, i),
        (Mode::Certify, 2, Field::Exact) => certify_trial_2d::<Rational>(config, i),
        (Mode::Certify, 2, Field::Float) => certify_trial_2d::<f64>(config, i),
        (Mode::Certify, _, _) => certify_trial_3d(config, i),
        (Mode::Lemma, 2, _) => lemma_trial_2d(config, i),
        (Mode::Lemma, _, _) => lemma_trial_3d(config, i),
        (Mode::Convergence, _, _) => unreachable!("convergence runs as one study"),
    }
}

/// Run every trial and tally the summary, without touching the filesystem.
pub fn run_trials(config: &ExperimentConfig) -> std::result::Result<CampaignResult, LabError> {
    config.validate()?;
    let mut summary = Summary {
        mode: config.mode.name().into(),
        dim: config.dim,
        field: if config.dim == 2 { config.field.name() } else { "float" }.into(),
        trials: config.trials,
        ..Default::default()
    };
    let results: Vec<Result<TrialOutcome>> = if config.mode == Mode::Convergence {
        match convergence(config) {
            Ok(v) => v.into_iter().map(Ok).collect(),
            Err(e) => vec![Err(e)],
        }
    } else {
        (0..config.trials)
            .into_par_iter()
            .map(|i| trial(config, i))
            .collect()
    };
    let mut outcomes = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(o) => {
                summary.chain_violations += usize::from(o.chain_violation);
                summary.lemma_violations += usize::from(o.lemma_violation);
                summary.convergence_violations += usize::from(o.convergence_violation);
                if let Some((truth, verdict)) = o.verdict {
                    summary.confusion.record(truth, verdict);
                }
                if let Some(g) = o.equality_gap {
                    summary.max_equality_gap = summary.max_equality_gap.max(g);
                }
                outcomes.push(o);
            }
            Err(e) => summary.errors.push(format!("trial {i}: {e}")),
        }
    }
    Ok(CampaignResult {
        header: header_for(config),
        outcomes,
        summary,
    })
}

/// Run the campaign and write `reports.csv`, `verdicts.json`, `gallery.svg`
/// and `summary.json` into the output directory.
pub fn run_campaign(config: &ExperimentConfig) -> std::result::Result<Summary, LabError> {
    let result = run_trials(config)?;
    write_outputs(config, &result)?;
    Ok(result.summary)
}

