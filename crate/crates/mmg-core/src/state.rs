//! State, control and force containers shared across the model.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Full simulation state: earth-fixed pose plus body-frame velocities.
///
/// Positions are in metres, heading in radians (unwrapped, positive
/// clockwise from the `x` axis toward `y`), `u`/`v_m` in m/s (surge and
/// lateral speed at midship) and `r` in rad/s (yaw rate, positive to
/// starboard).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State<T: Real> {
    pub x: T,
    pub y: T,
    pub psi: T,
    pub u: T,
    pub v_m: T,
    pub r: T,
}

impl<T: Real> State<T> {
    pub fn new(x: T, y: T, psi: T, u: T, v_m: T, r: T) -> Self {
        Self { x, y, psi, u, v_m, r }
    }

    /// State at the origin with the given surge speed, heading along +x.
    pub fn cruising(u: T) -> Self {
        let z = T::zero();
        Self { x: z, y: z, psi: z, u, v_m: z, r: z }
    }

    /// Resultant speed `U = sqrt(u^2 + v_m^2)` of the midship point.
    pub fn speed(&self) -> T {
        (self.u * self.u + self.v_m * self.v_m).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.psi.is_finite()
            && self.u.is_finite()
            && self.v_m.is_finite()
            && self.r.is_finite()
    }

    pub fn as_array(&self) -> [T; 6] {
        [self.x, self.y, self.psi, self.u, self.v_m, self.r]
    }

    pub fn from_array(a: [T; 6]) -> Self {
        Self { x: a[0], y: a[1], psi: a[2], u: a[3], v_m: a[4], r: a[5] }
    }
}

/// Actuator command held constant over one integration step.
///
/// `delta` is the rudder angle in radians (positive deflection turns the
/// ship to starboard); `n_p` is the propeller rate in rev/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlInput<T: Real> {
    pub delta: T,
    pub n_p: T,
}

impl<T: Real> ControlInput<T> {
    pub fn new(delta: T, n_p: T) -> Self {
        Self { delta, n_p }
    }

    pub fn is_finite(&self) -> bool {
        self.delta.is_finite() && self.n_p.is_finite()
    }
}

/// Surge force, lateral force and yaw moment about midship, in N and N·m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceTriple<T: Real> {
    pub surge: T,
    pub sway: T,
    pub yaw: T,
}

impl<T: Real> ForceTriple<T> {
    pub fn zero() -> Self {
        let z = T::zero();
        Self { surge: z, sway: z, yaw: z }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            surge: self.surge + other.surge,
            sway: self.sway + other.sway,
            yaw: self.yaw + other.yaw,
        }
    }
}

/// Velocity-derived quantities every force component needs.
///
/// Nondimensional lateral speed and yaw rate follow the convention
/// `v' = v_m / U`, `r' = r L / U`. Both are defined as zero when the ship
/// is dead in the water (`U = 0`) so this type stays total; force
/// evaluation separately rejects that regime as invalid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flow<T: Real> {
    /// Resultant speed `U` in m/s.
    pub speed: T,
    /// Drift angle `beta = atan2(-v_m, u)` in radians.
    pub beta: T,
    /// Nondimensional lateral velocity `v_m / U`.
    pub v_nd: T,
    /// Nondimensional yaw rate `r L / U`.
    pub r_nd: T,
    /// Dimensional yaw rate, carried through for force models that mix
    /// dimensional and nondimensional terms [rad/s].
    pub yaw_rate: T,
}

impl<T: Real> Flow<T> {
    /// Evaluate flow quantities for a state and ship length.
    pub fn from_state(state: &State<T>, length: T) -> Self {
        let speed = state.speed();
        if speed == T::zero() {
            Self { speed, beta: T::zero(), v_nd: T::zero(), r_nd: T::zero(), yaw_rate: state.r }
        } else {
            Self {
                speed,
                beta: (-state.v_m).atan2(state.u),
                v_nd: state.v_m / speed,
                r_nd: state.r * length / speed,
                yaw_rate: state.r,
            }
        }
    }
}
