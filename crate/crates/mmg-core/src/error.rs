//! Error types for model construction and simulation.

use thiserror::Error;

/// Rejected model configuration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// A ship particular that must be strictly positive is not.
    #[error("ship particular `{name}` must be > 0, got {value}")]
    NonPositiveParticular { name: &'static str, value: f64 },

    /// A ship particular is not finite.
    #[error("ship particular `{name}` is not finite ({value})")]
    NonFiniteParticular { name: &'static str, value: f64 },

    /// Block coefficient outside (0, 1].
    #[error("block coefficient must lie in (0, 1], got {0}")]
    BlockCoefficientOutOfRange(f64),

    /// Unknown tunable-parameter name in a selector or file.
    #[error("unknown model parameter `{0}`")]
    UnknownParameter(String),

    /// A model coefficient is not finite.
    #[error("model coefficient `{name}` is not finite")]
    NonFiniteCoefficient { name: &'static str },

    /// A model coefficient violates its physical sign/range constraint.
    #[error("model coefficient `{name}` violates its physical range, got {value}")]
    CoefficientOutOfRange { name: &'static str, value: f64 },

    /// Flap-angle map breakpoints must be strictly increasing.
    #[error("flap map breakpoints must be strictly increasing (index {index})")]
    FlapMapNotIncreasing { index: usize },

    /// Flap-angle map contains a non-finite entry.
    #[error("flap map contains a non-finite value at index {index}")]
    FlapMapNonFinite { index: usize },
}

/// Failure of a single force evaluation or integration step.
///
/// The hydrodynamic models are only valid for forward motion with forward
/// propeller revolutions; leaving that regime (typically under an extreme
/// candidate parameter set) aborts the evaluation rather than extrapolating.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum StepError {
    /// The state or input left the model's validity region.
    #[error("outside model validity region: {what}")]
    InvalidRegime { what: &'static str },

    /// The effective mass matrix for the sway/yaw subsystem is singular.
    #[error("singular effective mass matrix (determinant {det})")]
    SingularMass { det: f64 },

    /// A derivative or updated state component became non-finite.
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },
}

/// Failure during a multi-step rollout.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimulationError {
    /// Integration stopped before the control sequence was exhausted.
    #[error("simulation aborted at step {step} (t = {time} s): {cause}")]
    Aborted { step: usize, time: f64, cause: StepError },

    /// The control sequence is empty, so no trajectory can be produced.
    #[error("control sequence is empty")]
    EmptyControls,

    /// A non-positive or non-finite time step was requested.
    #[error("time step must be finite and > 0, got {0}")]
    BadTimeStep(f64),
}
