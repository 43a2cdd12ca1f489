//! Forward-Euler time integration of the manoeuvring model.

use crate::error::{SimulationError, StepError};
use crate::model;
use crate::params::MmgParams;
use crate::scalar::Real;
use crate::ship::ShipParticulars;
use crate::state::{ControlInput, State};

/// A simulated (or recorded) run at a fixed time step.
///
/// Row `i` holds the state at time `i * dt` together with the control that
/// will be applied over the following step; the last row's control is
/// carried for completeness but never integrated. Heading is continuous
/// (never wrapped), which integration guarantees by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T: Real> {
    pub dt: T,
    pub states: Vec<State<T>>,
    pub controls: Vec<ControlInput<T>>,
}

impl<T: Real> Trajectory<T> {
    /// Number of rows.
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Time of row `i` (zero-based), starting at `t = 0`.
    pub fn time(&self, i: usize) -> T {
        T::of(i as f64) * self.dt
    }

    pub fn last_state(&self) -> &State<T> {
        self.states.last().expect("trajectory has at least one row")
    }

    /// Track positions as `(x, y)` pairs.
    pub fn track(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.states.iter().map(|s| (s.x, s.y))
    }
}

/// One forward-Euler step: `state + f(state, input) * dt`.
///
/// The step size must be positive and finite; `simulate` validates this
/// once per rollout.
pub fn euler_step<T: Real>(
    state: &State<T>,
    input: &ControlInput<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
    dt: T,
) -> Result<State<T>, StepError> {
    let d = model::f_zeta(state, input, params, ship)?;
    let s = state.as_array();
    let mut next = [T::zero(); 6];
    for i in 0..6 {
        next[i] = s[i] + d[i] * dt;
    }
    let next = State::from_array(next);
    if !next.is_finite() {
        return Err(StepError::NonFinite { what: "integrated state" });
    }
    Ok(next)
}

/// Roll the model forward under a control sequence.
///
/// The result has exactly `controls.len()` rows; the first row is the
/// initial condition with the first control, and each later row is one
/// Euler step under the previous row's control.
pub fn simulate<T: Real>(
    initial: State<T>,
    controls: &[ControlInput<T>],
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
    dt: T,
) -> Result<Trajectory<T>, SimulationError> {
    if controls.is_empty() {
        return Err(SimulationError::EmptyControls);
    }
    if !(dt.is_finite() && dt > T::zero()) {
        return Err(SimulationError::BadTimeStep(dt.to_f64()));
    }
    let mut states = Vec::with_capacity(controls.len());
    states.push(initial);
    for i in 1..controls.len() {
        let prev = states[i - 1];
        let next = euler_step(&prev, &controls[i - 1], params, ship, dt).map_err(|cause| {
            SimulationError::Aborted {
                step: i,
                time: (T::of(i as f64) * dt).to_f64(),
                cause,
            }
        })?;
        states.push(next);
    }
    Ok(Trajectory { dt, states, controls: controls.to_vec() })
}
