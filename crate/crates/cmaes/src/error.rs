//! Optimizer error and termination types.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptError {
    /// Malformed search box.
    #[error("invalid box constraint: {0}")]
    InvalidBox(&'static str),

    /// Malformed optimizer configuration.
    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(&'static str),

    /// The objective returned NaN or infinity; the caller must map failure
    /// modes to large finite values instead.
    #[error("objective returned non-finite value {value} at {coords:?}")]
    NonFiniteObjective { coords: Vec<f64>, value: f64 },
}

/// Why a single run (or the whole optimization) stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// Best fitness stagnated within the relative tolerance window.
    ToleranceFun,
    /// Search distribution collapsed below the coordinate tolerance.
    ToleranceX,
    /// Covariance condition number exceeded the safe limit.
    Condition,
    /// Step size diverged.
    Divergence,
    /// Evaluation budget exhausted.
    Budget,
}
