//! Rudder normal force and its resolution into hull-frame surge/sway/yaw
//! components, including hull-rudder interaction.

use crate::error::StepError;
use crate::params::MmgParams;
use crate::propeller::{self, PropellerInflow};
use crate::scalar::Real;
use crate::ship::ShipParticulars;
use crate::state::{Flow, ForceTriple, State};

/// Intermediate quantities of one rudder force evaluation, kept for
/// diagnostics and tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RudderBreakdown<T: Real> {
    /// Slipstream-accelerated longitudinal inflow `u_R*` [m/s].
    pub u_r_slipstream: T,
    /// Tip-speed floor `u_R**` [m/s].
    pub u_r_floor: T,
    /// Effective longitudinal inflow, the larger of the two [m/s].
    pub u_r: T,
    /// Lateral inflow after flow straightening [m/s].
    pub v_r: T,
    /// Effective attack angle of the inflow on the rudder [rad].
    pub alpha_r: T,
    /// Flap angle commanded through the linkage map [rad].
    pub delta_f: T,
    /// Rudder normal force [N].
    pub normal_force: T,
    /// True when the resultant inflow vanished and the force was zeroed.
    pub degenerate: bool,
    /// Hull-frame force/moment contribution.
    pub force: ForceTriple<T>,
}

/// Normal-force gradient of the flapped rudder at flap angle `delta_f`.
pub fn lift_gradient<T: Real>(params: &MmgParams<T>, delta_f: T) -> T {
    params.f_a0 + params.f_a2 * delta_f * delta_f
}

/// Zero-incidence (camber) lift offset of the flapped rudder.
pub fn camber_coefficient<T: Real>(params: &MmgParams<T>, delta_f: T) -> T {
    params.c_l01 * delta_f + params.c_l03 * delta_f * delta_f * delta_f
}

/// Evaluate the rudder model given precomputed flow and propeller inflow.
///
/// Caller must have established the valid regime (`u > 0`, `n_p > 0`).
pub fn breakdown<T: Real>(
    delta: T,
    flow: &Flow<T>,
    prop: &PropellerInflow<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> RudderBreakdown<T> {
    // Slipstream acceleration over the rudder. Without forward inflow at
    // the propeller the momentum-theory factor is undefined; the tip-speed
    // floor below then governs.
    let u_r_slipstream = if prop.u_p > T::zero() {
        let eta = ship.propeller_diameter / ship.rudder_height;
        let j_p = prop.advance_ratio;
        let load = (T::one() + T::of(8.0) * prop.k_t / (T::PI() * j_p * j_p)).sqrt();
        prop.u_p * params.epsilon * (eta * params.kappa * (load - T::one()) + T::one())
    } else {
        T::zero()
    };
    let u_r_floor = prop.tip_speed * params.u_r0;
    let u_r = u_r_slipstream.max(u_r_floor);

    // Flow straightening, with separate coefficients per side of the
    // effective drift at the rudder position.
    let beta_r = flow.beta - params.l_r * flow.r_nd;
    let gamma = if beta_r >= T::zero() { params.gamma_rp } else { params.gamma_rn };
    let l_r_dim = params.l_r * ship.length;
    let v_r = gamma * (flow.speed * flow.beta.sin() - l_r_dim * flow.yaw_rate);

    let u_r_sq = u_r * u_r + v_r * v_r;
    let delta_f = params.flap_map.eval(delta);
    if u_r_sq == T::zero() {
        return RudderBreakdown {
            u_r_slipstream,
            u_r_floor,
            u_r,
            v_r,
            alpha_r: delta,
            delta_f,
            normal_force: T::zero(),
            degenerate: true,
            force: ForceTriple::zero(),
        };
    }

    let alpha_r = delta - v_r.atan2(u_r);
    let f_alpha = lift_gradient(params, delta_f);
    let c_l0 = camber_coefficient(params, delta_f);
    let normal_force = T::of(0.5)
        * ship.water_density
        * ship.rudder_area
        * u_r_sq
        * (f_alpha * alpha_r.sin() + c_l0);

    let x_h_dim = params.x_h * ship.length;
    let force = ForceTriple {
        surge: -(T::one() - params.t_r) * normal_force * delta.sin(),
        sway: -(T::one() + params.a_h) * normal_force * delta.cos(),
        yaw: -(ship.x_rudder() + params.a_h * x_h_dim) * normal_force * delta.cos(),
    };
    RudderBreakdown {
        u_r_slipstream,
        u_r_floor,
        u_r,
        v_r,
        alpha_r,
        delta_f,
        normal_force,
        degenerate: false,
        force,
    }
}

/// Dimensional rudder force and moment for a state and control.
pub fn force<T: Real>(
    state: &State<T>,
    delta: T,
    n_p: T,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<ForceTriple<T>, StepError> {
    propeller::check_regime(state.u, n_p)?;
    let flow = Flow::from_state(state, ship.length);
    let prop = propeller::inflow(state.u, n_p, &flow, params, ship);
    Ok(breakdown(delta, &flow, &prop, params, ship).force)
}
