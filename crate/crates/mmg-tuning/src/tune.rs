//! The tuning workflow: build the exploration box, minimize the deviation
//! objective over the tune set, and assemble a reproducible report.

use std::collections::BTreeMap;
use std::time::Instant;

use cmaes::{minimize, HistoryRecord, Termination};
use mmg_core::{MmgParams64, ShipParticulars64};
use serde::Serialize;

use crate::error::TuningError;
use crate::objective::{objective_j, trial_deviation, ABORT_SENTINEL};
use crate::problem::{apply_candidate, exploration_box, TuningSpec};
use crate::trial::Trial;

/// Deviation of one trial before and after tuning.
#[derive(Debug, Clone, Serialize)]
pub struct TrialDeviation {
    pub label: String,
    pub j_pre: f64,
    pub j_star: f64,
}

/// Wall-clock measurement; kept in its own field so reproducibility checks
/// can compare reports with timing stripped.
#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub wall_clock_s: f64,
}

/// Everything a tuning run produced, ready for JSON serialization.
#[derive(Debug, Clone, Serialize)]
pub struct TuneReport {
    pub schema_version: u32,
    /// Echo of the problem definition (selector, a_r, weights, optimizer
    /// settings including the seed).
    pub spec: TuningSpec,
    pub weight_q: [f64; 3],
    pub tune_labels: Vec<String>,
    pub test_labels: Vec<String>,
    /// Whether the run had no held-out test set.
    pub test_set_empty: bool,
    pub box_lower: Vec<f64>,
    pub box_upper: Vec<f64>,
    pub theta_pre: BTreeMap<String, f64>,
    pub theta_star: BTreeMap<String, f64>,
    pub j_pre_tune: f64,
    pub j_star_tune: f64,
    pub j_pre_test: Option<f64>,
    pub j_star_test: Option<f64>,
    pub per_trial_tune: Vec<TrialDeviation>,
    pub per_trial_test: Vec<TrialDeviation>,
    pub evals_used: usize,
    pub iterations: usize,
    pub restarts: usize,
    pub termination: Termination,
    /// Number of recorded optimizer generations.
    pub history_rows: usize,
    /// Where the history CSV was written, when exported.
    pub history_path: Option<String>,
    pub timing: Option<Timing>,
}

impl TuneReport {
    /// JSON value with volatile fields (timing) removed, for bit-level
    /// comparison of repeated runs.
    pub fn comparable(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(map) = value.as_object_mut() {
            map.remove("timing");
        }
        value
    }

    pub fn to_json_pretty(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Result of [`tune`]: the tuned parameter set, its report, and the
/// optimizer history for CSV export.
#[derive(Debug, Clone)]
pub struct TuneOutcome {
    pub theta_star: MmgParams64,
    pub report: TuneReport,
    pub history: Vec<HistoryRecord>,
}

fn per_trial_j(params: &MmgParams64, trial: &Trial, weight: [f64; 3], ship: &ShipParticulars64) -> f64 {
    trial_deviation(params, trial, weight, ship).map(|(j, _)| j).unwrap_or(ABORT_SENTINEL)
}

/// Minimize the deviation objective over `tune_set` within the relative
/// exploration box around `base`, starting from `base` itself.
///
/// `test_set` may be empty (tune-only run); it never influences the search
/// and is evaluated purely for the report.
pub fn tune(
    spec: &TuningSpec,
    base: &MmgParams64,
    ship: &ShipParticulars64,
    tune_set: &[Trial],
    test_set: &[Trial],
) -> Result<TuneOutcome, TuningError> {
    let selector = spec.validated_selector()?;
    if tune_set.is_empty() {
        return Err(TuningError::EmptyTuneSet);
    }
    let weight = spec.weights_for(ship);
    let bounds = exploration_box(&selector, base, spec.a_r)?;
    let theta_pre = selector.values(base);

    // Seed the first run's mean at the reference values (the box center),
    // so the reference is evaluated as a candidate and the result can only
    // match or improve on it.
    let mut cma = spec.cma.clone();
    cma.mean0 = Some(bounds.normalize(&theta_pre).iter().copied().collect());

    let mut objective = |x: &[f64]| {
        let candidate = apply_candidate(base, &selector, x);
        objective_j(&candidate, tune_set, weight, ship)
    };
    let started = Instant::now();
    let result = minimize(&mut objective, &bounds, &cma)?;
    let wall_clock_s = started.elapsed().as_secs_f64();

    let theta_star = apply_candidate(base, &selector, &result.x_best);

    let j_pre_tune = objective_j(base, tune_set, weight, ship);
    let per_trial = |set: &[Trial]| -> Vec<TrialDeviation> {
        set.iter()
            .map(|t| TrialDeviation {
                label: t.label.clone(),
                j_pre: per_trial_j(base, t, weight, ship),
                j_star: per_trial_j(&theta_star, t, weight, ship),
            })
            .collect()
    };
    let per_trial_tune = per_trial(tune_set);
    let per_trial_test = per_trial(test_set);
    let (j_pre_test, j_star_test) = if test_set.is_empty() {
        (None, None)
    } else {
        (
            Some(objective_j(base, test_set, weight, ship)),
            Some(objective_j(&theta_star, test_set, weight, ship)),
        )
    };

    let to_map = |values: &[f64]| -> BTreeMap<String, f64> {
        selector.names().iter().cloned().zip(values.iter().copied()).collect()
    };

    let report = TuneReport {
        schema_version: 1,
        spec: spec.clone(),
        weight_q: weight,
        tune_labels: tune_set.iter().map(|t| t.label.clone()).collect(),
        test_labels: test_set.iter().map(|t| t.label.clone()).collect(),
        test_set_empty: test_set.is_empty(),
        box_lower: bounds.lower().iter().copied().collect(),
        box_upper: bounds.upper().iter().copied().collect(),
        theta_pre: to_map(&theta_pre),
        theta_star: to_map(&result.x_best),
        j_pre_tune,
        j_star_tune: result.f_best,
        j_pre_test,
        j_star_test,
        per_trial_tune,
        per_trial_test,
        evals_used: result.evals_used,
        iterations: result.iterations,
        restarts: result.restarts.len(),
        termination: result.termination,
        history_rows: result.history.len(),
        history_path: None,
        timing: Some(Timing { wall_clock_s }),
    };

    Ok(TuneOutcome { theta_star, report, history: result.history })
}
