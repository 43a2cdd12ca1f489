//! Restart loop around the single run: doubled population on each restart,
//! fresh random mean, shared evaluation budget and RNG stream.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::config::CmaConfig;
use crate::constraint::BoxConstraint;
use crate::error::{OptError, Termination};
use crate::history::HistoryRecord;
use crate::run::{run, RunOutcome, RunSetup};

/// Summary of one run inside the restart loop.
#[derive(Debug, Clone, Serialize)]
pub struct RestartRecord {
    pub restart: usize,
    pub lambda: usize,
    pub iterations: usize,
    pub evals: usize,
    pub best_f: f64,
    pub termination: Termination,
}

/// Outcome of a full minimization.
#[derive(Debug, Clone, Serialize)]
pub struct OptResult {
    /// Best feasible point in the original (denormalized) coordinates.
    pub x_best: Vec<f64>,
    /// Objective value at `x_best`.
    pub f_best: f64,
    pub evals_used: usize,
    pub iterations: usize,
    /// Why the final run stopped.
    pub termination: Termination,
    pub restarts: Vec<RestartRecord>,
    #[serde(skip)]
    pub history: Vec<HistoryRecord>,
}

/// Minimizes `f` over the box, restarting with a doubled population each
/// time a run converges before the evaluation budget is spent.
///
/// Within-bounds candidates are passed to `f` as-is; out-of-bounds samples
/// are clamped before evaluation and charged a quadratic penalty in the
/// internal ranking. The returned point always lies inside the box.
pub fn minimize<F: FnMut(&[f64]) -> f64>(
    f: &mut F,
    bounds: &BoxConstraint,
    config: &CmaConfig,
) -> Result<OptResult, OptError> {
    let n = bounds.dim();
    config.validate(n)?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);

    let mut lambda = config.initial_lambda(n);
    let mut mean0 = match &config.mean0 {
        Some(m) => DVector::from_column_slice(m),
        None => DVector::from_element(n, 0.5),
    };

    let mut evals_used = 0usize;
    let mut iterations = 0usize;
    let mut best_f = f64::INFINITY;
    let mut best_z: Option<DVector<f64>> = None;
    let mut history: Vec<HistoryRecord> = Vec::new();
    let mut restarts: Vec<RestartRecord> = Vec::new();
    let mut termination = Termination::Budget;

    let mut restart = 0usize;
    while evals_used < config.max_evals {
        let setup = RunSetup {
            lambda,
            sigma0: config.sigma0,
            mean0: mean0.clone(),
            budget: config.max_evals - evals_used,
            tol_fun: config.tol_fun,
            tol_x: config.tol_x,
            restart,
            iter_offset: iterations,
            eval_offset: evals_used,
            best_ever_so_far: best_f,
        };
        let RunOutcome { best_z: z, best_f: fv, evals, iters, termination: term } =
            run(f, bounds, &setup, &mut rng, &mut history)?;

        evals_used += evals;
        iterations += iters;
        if fv < best_f {
            best_f = fv;
            best_z = Some(z);
        }
        restarts.push(RestartRecord {
            restart,
            lambda,
            iterations: iters,
            evals,
            best_f: fv,
            termination: term,
        });
        termination = term;
        if matches!(term, Termination::Budget) {
            break;
        }

        restart += 1;
        lambda = (lambda * 2).min(config.lambda_max);
        mean0 = DVector::from_fn(n, |_, _| rng.random::<f64>());
    }

    let best_z = best_z.expect("at least one evaluation");
    Ok(OptResult {
        x_best: bounds.denormalize(&best_z),
        f_best: best_f,
        evals_used,
        iterations,
        termination,
        restarts,
        history,
    })
}

/// Runs a single strategy (no restarts) with the configured or default
/// population size. Stops on its own convergence tests or the budget.
pub fn minimize_single_run<F: FnMut(&[f64]) -> f64>(
    f: &mut F,
    bounds: &BoxConstraint,
    config: &CmaConfig,
) -> Result<OptResult, OptError> {
    let n = bounds.dim();
    config.validate(n)?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let lambda = config.initial_lambda(n);
    let mean0 = match &config.mean0 {
        Some(m) => DVector::from_column_slice(m),
        None => DVector::from_element(n, 0.5),
    };
    let mut history = Vec::new();
    let setup = RunSetup {
        lambda,
        sigma0: config.sigma0,
        mean0,
        budget: config.max_evals,
        tol_fun: config.tol_fun,
        tol_x: config.tol_x,
        restart: 0,
        iter_offset: 0,
        eval_offset: 0,
        best_ever_so_far: f64::INFINITY,
    };
    let outcome = run(f, bounds, &setup, &mut rng, &mut history)?;
    Ok(OptResult {
        x_best: bounds.denormalize(&outcome.best_z),
        f_best: outcome.best_f,
        evals_used: outcome.evals,
        iterations: outcome.iters,
        termination: outcome.termination,
        restarts: vec![RestartRecord {
            restart: 0,
            lambda,
            iterations: outcome.iters,
            evals: outcome.evals,
            best_f: outcome.best_f,
            termination: outcome.termination,
        }],
        history,
    })
}
