//! Principal particulars of the hull, propeller and rudder.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::scalar::Real;

fn default_density<T: Real>() -> T {
    T::of(1025.0)
}

fn default_kzz_ratio<T: Real>() -> T {
    T::of(0.25)
}

fn default_x_rudder_ratio<T: Real>() -> T {
    T::of(-0.5)
}

/// Fixed geometry and environment of one ship.
///
/// Lengths in metres, areas in m²; `water_density` in kg/m³. These are
/// measured properties of the vessel and are never touched by tuning.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShipParticulars<T: Real> {
    /// Length between perpendiculars, `L`.
    pub length: T,
    /// Moulded beam.
    pub beam: T,
    /// Moulded draft.
    pub draft: T,
    /// Block coefficient of the underwater hull.
    pub block_coefficient: T,
    /// Longitudinal centre of gravity, forward-positive from midship.
    pub x_g: T,
    /// Propeller diameter.
    pub propeller_diameter: T,
    /// Rudder span (height).
    pub rudder_height: T,
    /// Profile area of the movable rudder part.
    pub rudder_area: T,
    /// Water density; defaults to seawater.
    #[serde(default = "default_density")]
    pub water_density: T,
    /// Yaw radius of gyration as a fraction of `length`.
    #[serde(default = "default_kzz_ratio")]
    pub kzz_ratio: T,
    /// Longitudinal rudder position as a fraction of `length`
    /// (aft-negative from midship).
    #[serde(default = "default_x_rudder_ratio")]
    pub x_rudder_ratio: T,
}

impl<T: Real> ShipParticulars<T> {
    /// The 83 m container carrier used as the reference vessel.
    pub fn container_83m() -> Self {
        Self {
            length: T::of(83.0),
            beam: T::of(13.5),
            draft: T::of(3.8),
            block_coefficient: T::of(0.737),
            x_g: T::of(0.93),
            propeller_diameter: T::of(2.80),
            rudder_height: T::of(3.49),
            rudder_area: T::of(6.282),
            water_density: default_density(),
            kzz_ratio: default_kzz_ratio(),
            x_rudder_ratio: default_x_rudder_ratio(),
        }
    }

    /// Reject geometrically impossible configurations.
    pub fn validate(&self) -> Result<(), ModelError> {
        let positives: [(&'static str, T); 9] = [
            ("length", self.length),
            ("beam", self.beam),
            ("draft", self.draft),
            ("propeller_diameter", self.propeller_diameter),
            ("rudder_height", self.rudder_height),
            ("rudder_area", self.rudder_area),
            ("water_density", self.water_density),
            ("kzz_ratio", self.kzz_ratio),
            ("block_coefficient", self.block_coefficient),
        ];
        for (name, value) in positives {
            if !value.is_finite() {
                return Err(ModelError::NonFiniteParticular { name, value: value.to_f64() });
            }
            if value <= T::zero() {
                return Err(ModelError::NonPositiveParticular { name, value: value.to_f64() });
            }
        }
        for (name, value) in [("x_g", self.x_g), ("x_rudder_ratio", self.x_rudder_ratio)] {
            if !value.is_finite() {
                return Err(ModelError::NonFiniteParticular { name, value: value.to_f64() });
            }
        }
        if self.block_coefficient > T::one() {
            return Err(ModelError::BlockCoefficientOutOfRange(
                self.block_coefficient.to_f64(),
            ));
        }
        Ok(())
    }

    /// Displaced mass `rho * Cb * L * B * d` in kg.
    pub fn mass(&self) -> T {
        self.water_density * self.block_coefficient * self.length * self.beam * self.draft
    }

    /// Yaw moment of inertia about the centre of gravity, `m (kzz L)^2`.
    pub fn yaw_inertia(&self) -> T {
        let kzz = self.kzz_ratio * self.length;
        self.mass() * kzz * kzz
    }

    /// Scale `0.5 rho L d` turning a nondimensional force coefficient times
    /// `U^2` into newtons.
    pub fn force_scale(&self) -> T {
        T::of(0.5) * self.water_density * self.length * self.draft
    }

    /// Scale `0.5 rho L^2 d` for yaw moments (N·m per `U^2`).
    pub fn moment_scale(&self) -> T {
        self.force_scale() * self.length
    }

    /// Scale `0.5 rho L^2 d` used to dimensionalize added masses.
    pub fn mass_scale(&self) -> T {
        self.force_scale() * self.length
    }

    /// Scale `0.5 rho L^4 d` used to dimensionalize added yaw inertia.
    pub fn inertia_scale(&self) -> T {
        self.mass_scale() * self.length * self.length
    }

    /// Rudder position aft of midship in metres (negative).
    pub fn x_rudder(&self) -> T {
        self.x_rudder_ratio * self.length
    }
}
