//! Assembly of hull, propeller and rudder forces into the rigid-body
//! equations of motion and the full state derivative.

use crate::error::StepError;
use crate::hull;
use crate::params::MmgParams;
use crate::propeller;
use crate::rudder;
use crate::scalar::Real;
use crate::ship::ShipParticulars;
use crate::state::{ControlInput, Flow, ForceTriple, State};

/// Dimensional mass and inertia terms entering the equations of motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProperties<T: Real> {
    /// Displaced mass `m` [kg].
    pub mass: T,
    /// Added mass in surge [kg].
    pub added_mass_x: T,
    /// Added mass in sway [kg].
    pub added_mass_y: T,
    /// Total yaw inertia about midship `I_g + x_g^2 m + J_zz` [kg·m²].
    pub yaw_inertia: T,
    /// Longitudinal centre of gravity [m].
    pub x_g: T,
}

impl<T: Real> MassProperties<T> {
    pub fn new(ship: &ShipParticulars<T>, params: &MmgParams<T>) -> Self {
        let mass = ship.mass();
        Self {
            mass,
            added_mass_x: params.m_x * ship.mass_scale(),
            added_mass_y: params.m_y * ship.mass_scale(),
            yaw_inertia: ship.yaw_inertia()
                + ship.x_g * ship.x_g * mass
                + params.j_zz * ship.inertia_scale(),
            x_g: ship.x_g,
        }
    }
}

/// Per-component force evaluation at one state/input, plus the sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceBreakdown<T: Real> {
    pub hull: ForceTriple<T>,
    pub propeller: ForceTriple<T>,
    pub rudder: ForceTriple<T>,
    pub total: ForceTriple<T>,
}

/// Evaluate all three force components at a state and control input.
pub fn forces<T: Real>(
    state: &State<T>,
    input: &ControlInput<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<ForceBreakdown<T>, StepError> {
    propeller::check_regime(state.u, input.n_p)?;
    let flow = Flow::from_state(state, ship.length);
    let hull = hull::force_with_flow(&flow, params, ship);
    let inflow = propeller::inflow(state.u, input.n_p, &flow, params, ship);
    let prop = propeller::force_with_inflow(&inflow, params, ship);
    let rud = rudder::breakdown(input.delta, &flow, &inflow, params, ship).force;
    let total = hull.add(&prop).add(&rud);
    Ok(ForceBreakdown { hull, propeller: prop, rudder: rud, total })
}

/// Body-frame accelerations `(du/dt, dv_m/dt, dr/dt)`.
///
/// Surge decouples; sway and yaw remain coupled through the off-centre
/// centre of gravity and are solved as a 2x2 linear system.
pub fn f_mmg<T: Real>(
    state: &State<T>,
    input: &ControlInput<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<[T; 3], StepError> {
    let f = forces(state, input, params, ship)?;
    let mp = MassProperties::new(ship, params);
    let (m, mx, my) = (mp.mass, mp.added_mass_x, mp.added_mass_y);
    let (u, v_m, r) = (state.u, state.v_m, state.r);

    let du = (f.total.surge + (m + my) * v_m * r + mp.x_g * m * r * r) / (m + mx);

    let a11 = m + my;
    let a12 = mp.x_g * m;
    let a22 = mp.yaw_inertia;
    let b0 = f.total.sway - (m + mx) * u * r;
    let b1 = f.total.yaw - a12 * u * r;
    let det = a11 * a22 - a12 * a12;
    if !det.is_finite() || det == T::zero() {
        return Err(StepError::SingularMass { det: det.to_f64() });
    }
    let dv = (b0 * a22 - a12 * b1) / det;
    let dr = (a11 * b1 - a12 * b0) / det;

    if !(du.is_finite() && dv.is_finite() && dr.is_finite()) {
        return Err(StepError::NonFinite { what: "body acceleration" });
    }
    Ok([du, dv, dr])
}

/// Full six-component state derivative: earth-frame pose rates followed by
/// body-frame accelerations.
pub fn f_zeta<T: Real>(
    state: &State<T>,
    input: &ControlInput<T>,
    params: &MmgParams<T>,
    ship: &ShipParticulars<T>,
) -> Result<[T; 6], StepError> {
    let [du, dv, dr] = f_mmg(state, input, params, ship)?;
    let (sin_psi, cos_psi) = (state.psi.sin(), state.psi.cos());
    Ok([
        state.u * cos_psi - state.v_m * sin_psi,
        state.u * sin_psi + state.v_m * cos_psi,
        state.r,
        du,
        dv,
        dr,
    ])
}
