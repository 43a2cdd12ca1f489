//! Tunable model coefficients: added masses, hydrodynamic derivatives,
//! propeller and rudder interaction constants.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::scalar::Real;

/// Piecewise-linear map from commanded rudder angle to flap angle, radians
/// on both axes.
///
/// An empty table is the identity (flap follows the rudder command).
/// Between breakpoints the map interpolates linearly; outside the table it
/// holds the end value, modelling a mechanical stop. Tables must cover
/// negative angles explicitly — no symmetry is assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct FlapMap<T: Real> {
    points: Vec<(T, T)>,
}

impl<T: Real> FlapMap<T> {
    pub fn identity() -> Self {
        Self { points: Vec::new() }
    }

    /// Build from `(rudder, flap)` breakpoints in radians.
    pub fn from_points(points: Vec<(T, T)>) -> Result<Self, ModelError> {
        for (i, &(d, f)) in points.iter().enumerate() {
            if !d.is_finite() || !f.is_finite() {
                return Err(ModelError::FlapMapNonFinite { index: i });
            }
            if i > 0 && points[i - 1].0 >= d {
                return Err(ModelError::FlapMapNotIncreasing { index: i });
            }
        }
        Ok(Self { points })
    }

    /// Build from `(rudder, flap)` breakpoints in degrees.
    pub fn from_degrees(points: &[[f64; 2]]) -> Result<Self, ModelError> {
        Self::from_points(
            points
                .iter()
                .map(|p| (T::of(p[0].to_radians()), T::of(p[1].to_radians())))
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.points.is_empty()
    }

    /// Flap angle for a commanded rudder angle, radians.
    pub fn eval(&self, delta: T) -> T {
        if self.points.is_empty() {
            return delta;
        }
        let first = self.points[0];
        let last = self.points[self.points.len() - 1];
        if delta <= first.0 {
            return first.1;
        }
        if delta >= last.0 {
            return last.1;
        }
        for w in self.points.windows(2) {
            let (d0, f0) = w[0];
            let (d1, f1) = w[1];
            if delta <= d1 {
                let t = (delta - d0) / (d1 - d0);
                return f0 + t * (f1 - f0);
            }
        }
        unreachable!("breakpoints are strictly increasing and bracket delta");
    }
}

impl<T: Real> Default for FlapMap<T> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<T: Real> Serialize for FlapMap<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let deg: Vec<[f64; 2]> = self
            .points
            .iter()
            .map(|&(d, f)| [d.to_f64().to_degrees(), f.to_f64().to_degrees()])
            .collect();
        deg.serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for FlapMap<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let deg = Vec::<[f64; 2]>::deserialize(d)?;
        Self::from_degrees(&deg).map_err(serde::de::Error::custom)
    }
}

fn default_true() -> bool {
    true
}

/// The full coefficient set of the manoeuvring model.
///
/// Everything here is nondimensional. Two hull entries are stored exactly
/// as the reference tables print them — as the composites `X'_vr + m'_y`
/// and `Y'_r - m'_x` — and the bare derivatives are recovered on demand via
/// [`MmgParams::x_vr`] / [`MmgParams::y_r`] using the added masses stored
/// alongside. Any scalar field can be read or written by its string name
/// (see [`MmgParams::get`] / [`MmgParams::set`]), which is how tuning
/// selects an arbitrary subset to optimize.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MmgParams<T: Real> {
    /// Added mass in surge, `m'_x`.
    pub m_x: T,
    /// Added mass in sway, `m'_y`.
    pub m_y: T,
    /// Added moment of inertia in yaw, `J'_zz`.
    pub j_zz: T,

    /// Straight-running resistance coefficient, `R'_0`.
    pub r0: T,
    pub x_vv: T,
    /// Composite table entry `X'_vr + m'_y`.
    pub x_vr_plus_my: T,
    pub x_rr: T,
    pub x_vvvr: T,
    pub x_vvvv: T,
    pub y_v: T,
    /// Composite table entry `Y'_r - m'_x`.
    pub y_r_minus_mx: T,
    pub y_vvv: T,
    pub y_vvr: T,
    pub y_vrr: T,
    pub y_rrr: T,
    pub n_v: T,
    pub n_r: T,
    pub n_vvv: T,
    pub n_vvr: T,
    pub n_vrr: T,
    pub n_rrr: T,

    /// Thrust deduction factor.
    pub t_p: T,
    /// Straight-running wake fraction at the propeller.
    pub w_p0: T,
    /// Exponent coefficient of the wake's drift-angle dependence.
    pub c_w: T,
    /// Longitudinal propeller position as a fraction of ship length
    /// (enters the propeller drift angle `beta_p = beta - l_p r'`).
    pub l_p: T,

    /// Steering resistance deduction factor.
    pub t_r: T,
    /// Rudder-to-hull lateral force increase factor.
    pub a_h: T,
    /// Point of action of that extra lateral force, fraction of length.
    pub x_h: T,
    /// Propeller-slipstream velocity increase factor at the rudder.
    pub epsilon: T,
    /// Slipstream acceleration blending factor.
    pub kappa: T,
    /// Floor on rudder inflow as a fraction of propeller tip speed.
    pub u_r0: T,
    /// Effective longitudinal rudder position for its lateral inflow,
    /// fraction of length.
    pub l_r: T,
    /// Flow-straightening coefficient for positive effective drift.
    pub gamma_rp: T,
    /// Flow-straightening coefficient for negative effective drift.
    pub gamma_rn: T,
    /// Rudder lift-slope constant term.
    pub f_a0: T,
    /// Rudder lift-slope flap-angle-squared term.
    pub f_a2: T,
    /// Camber lift linear term in flap angle.
    pub c_l01: T,
    /// Camber lift cubic term in flap angle.
    pub c_l03: T,

    /// Commanded-rudder to flap-angle map (degrees in serialized form).
    #[serde(rename = "flap_map_deg", skip_serializing_if = "FlapMap::is_identity")]
    pub flap_map: FlapMap<T>,

    /// Apply the propeller's lateral force and yaw moment. The model gives
    /// both a small nonzero value even in a straight run; disabling them
    /// yields an exactly straight zero-rudder track for symmetry checks.
    #[serde(default = "default_true")]
    pub propeller_lateral: bool,
}

impl<T: Real> Default for MmgParams<T> {
    /// Reference coefficient set of the 83 m container carrier.
    fn default() -> Self {
        Self {
            m_x: T::of(0.010),
            m_y: T::of(0.168),
            j_zz: T::of(0.010),

            r0: T::of(0.017),
            x_vv: T::of(0.009),
            x_vr_plus_my: T::of(0.160),
            x_rr: T::of(-0.0164),
            x_vvvr: T::of(-0.824),
            x_vvvv: T::of(-0.114),
            y_v: T::of(-0.329),
            y_r_minus_mx: T::of(0.090),
            y_vvv: T::of(-0.787),
            y_vvr: T::of(-0.022),
            y_vrr: T::of(-0.206),
            y_rrr: T::of(0.001),
            n_v: T::of(-0.106),
            n_r: T::of(-0.057),
            n_vvv: T::of(-0.037),
            n_vvr: T::of(-0.105),
            n_vrr: T::of(0.012),
            n_rrr: T::of(-0.008),

            t_p: T::of(0.080),
            w_p0: T::of(0.422),
            c_w: T::of(-2.0),
            l_p: T::of(-0.5),

            t_r: T::of(-0.058),
            a_h: T::of(0.158),
            x_h: T::of(-0.605),
            epsilon: T::of(1.27),
            kappa: T::of(0.5),
            u_r0: T::of(0.14),
            l_r: T::of(-0.888),
            gamma_rp: T::of(0.483),
            gamma_rn: T::of(0.172),
            f_a0: T::of(2.411),
            f_a2: T::of(-0.381),
            c_l01: T::of(1.164),
            c_l03: T::of(-0.381),

            flap_map: FlapMap::identity(),
            propeller_lateral: true,
        }
    }
}

/// String names of every scalar coefficient, in declaration order.
pub const PARAM_NAMES: [&str; 38] = [
    "m_x", "m_y", "j_zz", "r0", "x_vv", "x_vr_plus_my", "x_rr", "x_vvvr", "x_vvvv", "y_v",
    "y_r_minus_mx", "y_vvv", "y_vvr", "y_vrr", "y_rrr", "n_v", "n_r", "n_vvv", "n_vvr", "n_vrr",
    "n_rrr", "t_p", "w_p0", "c_w", "l_p", "t_r", "a_h", "x_h", "epsilon", "kappa", "u_r0", "l_r",
    "gamma_rp", "gamma_rn", "f_a0", "f_a2", "c_l01", "c_l03",
];

/// The 12 coefficients tuned by default: resistance plus every
/// propeller/hull/rudder interaction constant, leaving the hydrodynamic
/// derivatives and lift-curve constants fixed.
pub const DEFAULT_TARGET: [&str; 12] = [
    "r0", "t_p", "w_p0", "c_w", "t_r", "a_h", "x_h", "epsilon", "kappa", "l_r", "gamma_rp",
    "gamma_rn",
];

impl<T: Real> MmgParams<T> {
    /// Bare sway-coupled surge derivative `X'_vr`, recovered from the
    /// composite table entry and the sway added mass.
    pub fn x_vr(&self) -> T {
        self.x_vr_plus_my - self.m_y
    }

    /// Bare yaw-rate sway derivative `Y'_r`, recovered from the composite
    /// table entry and the surge added mass.
    pub fn y_r(&self) -> T {
        self.y_r_minus_mx + self.m_x
    }

    /// Read a scalar coefficient by name.
    pub fn get(&self, name: &str) -> Result<T, ModelError> {
        match name {
            "m_x" => Ok(self.m_x),
            "m_y" => Ok(self.m_y),
            "j_zz" => Ok(self.j_zz),
            "r0" => Ok(self.r0),
            "x_vv" => Ok(self.x_vv),
            "x_vr_plus_my" => Ok(self.x_vr_plus_my),
            "x_rr" => Ok(self.x_rr),
            "x_vvvr" => Ok(self.x_vvvr),
            "x_vvvv" => Ok(self.x_vvvv),
            "y_v" => Ok(self.y_v),
            "y_r_minus_mx" => Ok(self.y_r_minus_mx),
            "y_vvv" => Ok(self.y_vvv),
            "y_vvr" => Ok(self.y_vvr),
            "y_vrr" => Ok(self.y_vrr),
            "y_rrr" => Ok(self.y_rrr),
            "n_v" => Ok(self.n_v),
            "n_r" => Ok(self.n_r),
            "n_vvv" => Ok(self.n_vvv),
            "n_vvr" => Ok(self.n_vvr),
            "n_vrr" => Ok(self.n_vrr),
            "n_rrr" => Ok(self.n_rrr),
            "t_p" => Ok(self.t_p),
            "w_p0" => Ok(self.w_p0),
            "c_w" => Ok(self.c_w),
            "l_p" => Ok(self.l_p),
            "t_r" => Ok(self.t_r),
            "a_h" => Ok(self.a_h),
            "x_h" => Ok(self.x_h),
            "epsilon" => Ok(self.epsilon),
            "kappa" => Ok(self.kappa),
            "u_r0" => Ok(self.u_r0),
            "l_r" => Ok(self.l_r),
            "gamma_rp" => Ok(self.gamma_rp),
            "gamma_rn" => Ok(self.gamma_rn),
            "f_a0" => Ok(self.f_a0),
            "f_a2" => Ok(self.f_a2),
            "c_l01" => Ok(self.c_l01),
            "c_l03" => Ok(self.c_l03),
            other => Err(ModelError::UnknownParameter(other.to_string())),
        }
    }

    /// Overwrite a scalar coefficient by name.
    pub fn set(&mut self, name: &str, value: T) -> Result<(), ModelError> {
        let slot = match name {
            "m_x" => &mut self.m_x,
            "m_y" => &mut self.m_y,
            "j_zz" => &mut self.j_zz,
            "r0" => &mut self.r0,
            "x_vv" => &mut self.x_vv,
            "x_vr_plus_my" => &mut self.x_vr_plus_my,
            "x_rr" => &mut self.x_rr,
            "x_vvvr" => &mut self.x_vvvr,
            "x_vvvv" => &mut self.x_vvvv,
            "y_v" => &mut self.y_v,
            "y_r_minus_mx" => &mut self.y_r_minus_mx,
            "y_vvv" => &mut self.y_vvv,
            "y_vvr" => &mut self.y_vvr,
            "y_vrr" => &mut self.y_vrr,
            "y_rrr" => &mut self.y_rrr,
            "n_v" => &mut self.n_v,
            "n_r" => &mut self.n_r,
            "n_vvv" => &mut self.n_vvv,
            "n_vvr" => &mut self.n_vvr,
            "n_vrr" => &mut self.n_vrr,
            "n_rrr" => &mut self.n_rrr,
            "t_p" => &mut self.t_p,
            "w_p0" => &mut self.w_p0,
            "c_w" => &mut self.c_w,
            "l_p" => &mut self.l_p,
            "t_r" => &mut self.t_r,
            "a_h" => &mut self.a_h,
            "x_h" => &mut self.x_h,
            "epsilon" => &mut self.epsilon,
            "kappa" => &mut self.kappa,
            "u_r0" => &mut self.u_r0,
            "l_r" => &mut self.l_r,
            "gamma_rp" => &mut self.gamma_rp,
            "gamma_rn" => &mut self.gamma_rn,
            "f_a0" => &mut self.f_a0,
            "f_a2" => &mut self.f_a2,
            "c_l01" => &mut self.c_l01,
            "c_l03" => &mut self.c_l03,
            other => return Err(ModelError::UnknownParameter(other.to_string())),
        };
        *slot = value;
        Ok(())
    }

    /// Reject physically impossible coefficient sets.
    pub fn validate(&self) -> Result<(), ModelError> {
        for name in PARAM_NAMES {
            let v = self.get(name).expect("PARAM_NAMES entries are valid");
            if !v.is_finite() {
                return Err(ModelError::NonFiniteCoefficient { name });
            }
        }
        let checks: [(&'static str, T, bool); 4] = [
            ("r0", self.r0, self.r0 > T::zero()),
            ("w_p0", self.w_p0, self.w_p0 > T::zero() && self.w_p0 < T::one()),
            ("gamma_rp", self.gamma_rp, self.gamma_rp > T::zero()),
            ("gamma_rn", self.gamma_rn, self.gamma_rn > T::zero()),
        ];
        for (name, value, ok) in checks {
            if !ok {
                return Err(ModelError::CoefficientOutOfRange { name, value: value.to_f64() });
            }
        }
        Ok(())
    }
}
