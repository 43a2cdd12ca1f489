//! The trajectory-deviation objective: replay each trial's control record
//! from its first state under candidate parameters and accumulate weighted
//! squared pose deviations.

use mmg_core::{simulate, MmgParams64, ShipParticulars64, SimulationError, Trajectory64};

use crate::error::TuningError;
use crate::trial::Trial;

/// Worst-rank fitness for candidates whose rollout aborts; large enough to
/// lose against any real deviation, finite so ranking stays well-defined.
pub const ABORT_SENTINEL: f64 = 1e100;

/// Weighted squared pose deviation of one trial, plus the simulated
/// trajectory. The first row is the shared initial condition and does not
/// contribute.
pub fn trial_deviation(
    params: &MmgParams64,
    trial: &Trial,
    weight: [f64; 3],
    ship: &ShipParticulars64,
) -> Result<(f64, Trajectory64), SimulationError> {
    let predicted = simulate(trial.initial_state(), &trial.controls, params, ship, trial.dt)?;
    let mut j = 0.0;
    for (sim, meas) in predicted.states.iter().zip(&trial.states).skip(1) {
        let dx = sim.x - meas.x;
        let dy = sim.y - meas.y;
        let dpsi = sim.psi - meas.psi;
        j += weight[0] * dx * dx + weight[1] * dy * dy + weight[2] * dpsi * dpsi;
    }
    Ok((j, predicted))
}

/// Total deviation over a trial set; an aborted rollout yields
/// [`ABORT_SENTINEL`] so the optimizer ranks the candidate worst instead of
/// crashing the search.
pub fn objective_j(
    params: &MmgParams64,
    trials: &[Trial],
    weight: [f64; 3],
    ship: &ShipParticulars64,
) -> f64 {
    let mut total = 0.0;
    for trial in trials {
        match trial_deviation(params, trial, weight, ship) {
            Ok((j, _)) => total += j,
            Err(_) => return ABORT_SENTINEL,
        }
    }
    total
}

/// Deviation and simulated track of one trial under fixed parameters.
#[derive(Debug, Clone)]
pub struct TrialEvaluation {
    pub label: String,
    pub j: f64,
    pub trajectory: Trajectory64,
}

/// Per-trial and total deviations for reporting and plotting.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub per_trial: Vec<TrialEvaluation>,
    pub total: f64,
}

/// Evaluate fixed parameters against a trial set. Unlike the search-time
/// objective, an aborted rollout is reported as an error naming the trial.
pub fn evaluate(
    params: &MmgParams64,
    trials: &[Trial],
    weight: [f64; 3],
    ship: &ShipParticulars64,
) -> Result<Evaluation, TuningError> {
    if trials.is_empty() {
        return Err(TuningError::EmptyTrialSet);
    }
    let mut per_trial = Vec::with_capacity(trials.len());
    let mut total = 0.0;
    for trial in trials {
        let (j, trajectory) = trial_deviation(params, trial, weight, ship).map_err(|cause| {
            TuningError::TrialAborted { label: trial.label.clone(), cause }
        })?;
        total += j;
        per_trial.push(TrialEvaluation { label: trial.label.clone(), j, trajectory });
    }
    Ok(Evaluation { per_trial, total })
}
