//! Optimizer configuration.

use serde::{Deserialize, Serialize};

use crate::error::OptError;

fn default_lambda_max() -> usize {
    128
}

fn default_sigma0() -> f64 {
    0.3
}

fn default_max_evals() -> usize {
    500_000
}

fn default_tol_fun() -> f64 {
    1e-10
}

fn default_tol_x() -> f64 {
    1e-11
}

/// Tuning knobs of the restarted optimizer.
///
/// `sigma0`, `mean0`, `tol_x` are all expressed in the normalized `[0,1]^n`
/// search coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CmaConfig {
    /// Initial population size; `None` picks `4 + floor(3 ln n)`.
    pub lambda0: Option<usize>,
    /// Population cap over restarts.
    pub lambda_max: usize,
    /// Initial step size.
    pub sigma0: f64,
    /// Initial mean of the first run; `None` starts at the box centre.
    /// Restarts always draw a fresh uniform mean.
    pub mean0: Option<Vec<f64>>,
    /// Total evaluation budget across all restarts.
    pub max_evals: usize,
    /// Relative stagnation tolerance on the best fitness per run.
    pub tol_fun: f64,
    /// Distribution-collapse tolerance per coordinate.
    pub tol_x: f64,
    /// RNG seed; a fixed seed makes the whole optimization bit-identical.
    pub seed: u64,
}

impl Default for CmaConfig {
    fn default() -> Self {
        Self {
            lambda0: None,
            lambda_max: default_lambda_max(),
            sigma0: default_sigma0(),
            mean0: None,
            max_evals: default_max_evals(),
            tol_fun: default_tol_fun(),
            tol_x: default_tol_x(),
            seed: 0,
        }
    }
}

impl CmaConfig {
    /// Resolve the initial population size for dimension `n`.
    pub fn initial_lambda(&self, n: usize) -> usize {
        self.lambda0
            .unwrap_or_else(|| 4 + (3.0 * (n as f64).ln()).floor() as usize)
    }

    pub fn validate(&self, dim: usize) -> Result<(), OptError> {
        if dim == 0 {
            return Err(OptError::InvalidConfig("dimension must be at least 1"));
        }
        let lambda0 = self.initial_lambda(dim);
        if lambda0 < 4 {
            return Err(OptError::InvalidConfig("initial population must be at least 4"));
        }
        if lambda0 > self.lambda_max {
            return Err(OptError::InvalidConfig("initial population exceeds lambda_max"));
        }
        if !(self.sigma0 > 0.0 && self.sigma0 <= 1.0) {
            return Err(OptError::InvalidConfig("sigma0 must lie in (0, 1]"));
        }
        if self.max_evals == 0 {
            return Err(OptError::InvalidConfig("evaluation budget must be positive"));
        }
        if !(self.tol_fun >= 0.0 && self.tol_x >= 0.0) {
            return Err(OptError::InvalidConfig("tolerances must be non-negative"));
        }
        if let Some(m) = &self.mean0 {
            if m.len() != dim {
                return Err(OptError::InvalidConfig("mean0 length must equal dimension"));
            }
            if !m.iter().all(|v| v.is_finite() && (0.0..=1.0).contains(v)) {
                return Err(OptError::InvalidConfig("mean0 must lie in [0,1]^n"));
            }
        }
        Ok(())
    }
}
