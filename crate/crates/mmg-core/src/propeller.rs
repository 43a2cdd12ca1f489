//! Propeller forces from an advance-angle parameterization of the open-water
//! characteristics.

use crate::error::StepError;
use crate::params::MmgParams;
use crate::scalar::Real;
use crate::ship::ShipParticulars;
use crate::state::{Flow, ForceTriple, State};

/// Thrust coefficient `K_T` as a cubic in the advance angle, which is in
/// **degrees** — the open-water fit was made against a degree axis.
pub fn thrust_coefficient<T: Real>(phi_deg: T) -> T {
    T::of(3.31e-6) * phi_deg * phi_deg * phi_deg - T::of(3.72e-4) * phi_deg * phi_deg
        - T::of(2.60e-3) * phi_deg
        + T::of(0.167)
}

/// Lateral (paddle-wheel) force coefficient `C_PY`, advance angle in degrees.
pub fn lateral_coefficient<T: Real>(phi_deg: T) -> T {
    -T::of(2.83e-5) * phi_deg * phi_deg + T::of(6.04e-4) * phi_deg - T::of(1.28e-2)
}

/// Yaw moment coefficient `C_PN`, advance angle in degrees.
///
/// Piecewise linear with a branch point at 20°; the two fitted segments do
/// not meet there, and the jump is kept as fitted (no smoothing).
pub fn yaw_coefficient<T: Real>(phi_deg: T) -> T {
    if phi_deg < T::of(20.0) {
        -T::of(2.48e-4) * phi_deg - T::of(1.70e-3)
    } else {
        -T::of(1.86e-4) * phi_deg + T::of(4.03e-3)
    }
}

/// Inflow condition at the propeller, shared with the rudder model (the
/// rudder sits in the propeller slipstream).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropellerInflow<T: Real> {
    /// Wake fraction at the current drift condition.
    pub w_p: T,
    /// Longitudinal inflow speed `u_p = (1 - w_p) u` [m/s].
    pub u_p: T,
    /// Blade tip tangential speed at 0.7 radius, `0.7 pi n_p D_p` [m/s].
    pub tip_speed: T,
    /// Apparent inflow speed `sqrt(u_p^2 + tip_speed^2)` [m/s].
    pub apparent_speed: T,
    /// Advance angle `atan(u_p / tip_speed)` in degrees.
    pub phi_deg: T,
    /// Advance ratio `J_p = u_p / (n_p D_p)`.
    pub advance_ratio: T,
    /// Thrust coefficient at `phi_deg`.
    pub k_t: T,
}

/// Evaluate the propeller inflow for a flow condition and propeller rate.
///
/// Caller must have established the valid regime (`u > 0`, `n_p > 0`).
pub fn inflow<T: Real>(
    u: T,
    n_p: T,
    flow: &Flow<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> PropellerInflow<T> {
    let beta_p = flow.beta - params.l_p * flow.r_nd;
    let w_p = params.w_p0 * (params.c_w * beta_p * beta_p).exp();
    let u_p = (T::one() - w_p) * u;
    let tip_speed = T::of(0.7) * T::PI() * n_p * ship.propeller_diameter;
    let apparent_speed = (u_p * u_p + tip_speed * tip_speed).sqrt();
    let phi_deg = (u_p / tip_speed).atan() * T::of(180.0) / T::PI();
    let advance_ratio = u_p / (n_p * ship.propeller_diameter);
    PropellerInflow {
        w_p,
        u_p,
        tip_speed,
        apparent_speed,
        phi_deg,
        advance_ratio,
        k_t: thrust_coefficient(phi_deg),
    }
}

pub(crate) fn check_regime<T: Real>(u: T, n_p: T) -> Result<(), StepError> {
    if u <= T::zero() {
        return Err(StepError::InvalidRegime { what: "surge speed u <= 0" });
    }
    if n_p <= T::zero() {
        return Err(StepError::InvalidRegime { what: "propeller rate n_p <= 0" });
    }
    Ok(())
}

pub(crate) fn force_with_inflow<T: Real>(
    inflow: &PropellerInflow<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> ForceTriple<T> {
    let disk_area =
        T::PI() * ship.propeller_diameter * ship.propeller_diameter / T::of(4.0);
    let q = T::of(0.5)
        * ship.water_density
        * disk_area
        * inflow.apparent_speed
        * inflow.apparent_speed;
    let surge = q * (T::one() - params.t_p) * inflow.k_t;
    if params.propeller_lateral {
        ForceTriple {
            surge,
            sway: q * lateral_coefficient(inflow.phi_deg),
            yaw: q * ship.length * yaw_coefficient(inflow.phi_deg),
        }
    } else {
        ForceTriple { surge, sway: T::zero(), yaw: T::zero() }
    }
}

/// Dimensional propeller force and moment for a state and propeller rate.
pub fn force<T: Real>(
    state: &State<T>,
    n_p: T,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<ForceTriple<T>, StepError> {
    check_regime(state.u, n_p)?;
    let flow = Flow::from_state(state, ship.length);
    let inflow = inflow(state.u, n_p, &flow, params, ship);
    Ok(force_with_inflow(&inflow, params, ship))
}
