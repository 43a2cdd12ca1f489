//! Hull forces from polynomial fits in nondimensional lateral velocity and
//! yaw rate.

use crate::error::StepError;
use crate::params::MmgParams;
use crate::scalar::Real;
use crate::ship::ShipParticulars;
use crate::state::{Flow, ForceTriple, State};

/// Nondimensional hull force coefficients `(X'_H, Y'_H, N'_H)` at the given
/// nondimensional lateral velocity and yaw rate.
///
/// The surge polynomial is even in `(v', r')`, the sway and yaw polynomials
/// odd. The cross-coupling derivatives stored as composites in the
/// parameter table are recovered here via [`MmgParams::x_vr`] and
/// [`MmgParams::y_r`].
pub fn coefficients<T: Real>(params: &MmgParams<T>, v: T, r: T) -> (T, T, T) {
    let x = -params.r0
        + params.x_vv * v * v
        + params.x_vr() * v * r
        + params.x_rr * r * r
        + params.x_vvvr * v * v * v * r
        + params.x_vvvv * v * v * v * v;
    let y = params.y_v * v
        + params.y_r() * r
        + params.y_vvv * v * v * v
        + params.y_vvr * v * v * r
        + params.y_vrr * v * r * r
        + params.y_rrr * r * r * r;
    let n = params.n_v * v
        + params.n_r * r
        + params.n_vvv * v * v * v
        + params.n_vvr * v * v * r
        + params.n_vrr * v * r * r
        + params.n_rrr * r * r * r;
    (x, y, n)
}

pub(crate) fn force_with_flow<T: Real>(
    flow: &Flow<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> ForceTriple<T> {
    let (xc, yc, nc) = coefficients(params, flow.v_nd, flow.r_nd);
    let q = ship.force_scale() * flow.speed * flow.speed;
    ForceTriple { surge: q * xc, sway: q * yc, yaw: q * ship.length * nc }
}

/// Dimensional hull force and moment for a state.
///
/// Fails when the ship is dead in the water, where the nondimensional
/// velocities are undefined.
pub fn force<T: Real>(
    state: &State<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<ForceTriple<T>, StepError> {
    let flow = Flow::from_state(state, ship.length);
    if flow.speed <= T::zero() {
        return Err(StepError::InvalidRegime { what: "resultant speed U = 0" });
    }
    Ok(force_with_flow(&flow, params, ship))
}
