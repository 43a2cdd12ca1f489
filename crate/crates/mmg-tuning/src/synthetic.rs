//! Synthetic turning trials: a rate-limited rudder ramp at constant shaft
//! speed, simulated forward and overlaid with seeded sensor noise.

use std::f64::consts::PI;

use mmg_core::{simulate, ControlInput64, MmgParams64, ShipParticulars64, SimulationError, State64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::trial::Trial;

const DEG: f64 = PI / 180.0;

/// A turning test: the rudder ramps from zero to a signed target angle at a
/// fixed rate and holds; shaft speed stays constant throughout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ManeuverSpec {
    /// Signed rudder command [deg].
    pub rudder_deg: f64,
    /// Steering-gear rate limit [deg/s].
    pub rudder_rate_deg_s: f64,
    /// Shaft speed [rpm].
    pub n_p_rpm: f64,
    /// Initial ahead speed [m/s].
    pub u0: f64,
    /// Recorded duration [s].
    pub duration_s: f64,
    /// Sample interval [s].
    pub dt: f64,
}

impl Default for ManeuverSpec {
    fn default() -> Self {
        Self {
            rudder_deg: 35.0,
            rudder_rate_deg_s: 2.34,
            n_p_rpm: 106.0,
            u0: 3.086,
            duration_s: 600.0,
            dt: 1.0,
        }
    }
}

impl ManeuverSpec {
    pub fn turn(rudder_deg: f64) -> Self {
        Self { rudder_deg, ..Self::default() }
    }

    /// Label of the maneuver, e.g. `turn+35` or `turn-10`.
    pub fn label(&self) -> String {
        if self.rudder_deg == self.rudder_deg.trunc() {
            format!("turn{:+}", self.rudder_deg as i64)
        } else {
            format!("turn{:+}", self.rudder_deg)
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.rudder_deg.is_finite() && self.rudder_deg.abs() <= 45.0) {
            return Err(format!("rudder angle {} exceeds 45 deg", self.rudder_deg));
        }
        if !(self.rudder_rate_deg_s.is_finite() && self.rudder_rate_deg_s > 0.0) {
            return Err(format!("rudder rate {} must be > 0", self.rudder_rate_deg_s));
        }
        if !(self.n_p_rpm.is_finite() && self.n_p_rpm > 0.0) {
            return Err(format!("shaft speed {} rpm must be > 0", self.n_p_rpm));
        }
        if !(self.u0.is_finite() && self.u0 > 0.0) {
            return Err(format!("initial speed {} must be > 0", self.u0));
        }
        if !(self.duration_s.is_finite() && self.duration_s > 0.0) {
            return Err(format!("duration {} must be > 0", self.duration_s));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(format!("dt {} must be > 0", self.dt));
        }
        Ok(())
    }

    /// Number of recorded rows.
    pub fn rows(&self) -> usize {
        ((self.duration_s / self.dt).round() as usize).max(2)
    }

    /// The deterministic control sequence, in SI units.
    pub fn controls(&self) -> Vec<ControlInput64> {
        let n_p = self.n_p_rpm / 60.0;
        let target = self.rudder_deg * DEG;
        let rate = self.rudder_rate_deg_s * DEG;
        (0..self.rows())
            .map(|i| {
                let t = i as f64 * self.dt;
                let delta = target.signum() * (rate * t).min(target.abs());
                ControlInput64 { delta, n_p }
            })
            .collect()
    }
}

/// Per-channel standard deviations of the measurement noise, in the units
/// of the trial file columns. Controls are recorded exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseSpec {
    /// Position components [m].
    pub pos_m: f64,
    /// Heading [deg].
    pub psi_deg: f64,
    /// Surge and sway speed [m/s].
    pub speed_m_s: f64,
    /// Yaw rate [deg/s].
    pub r_deg_s: f64,
}

impl Default for NoiseSpec {
    fn default() -> Self {
        Self { pos_m: 1.0, psi_deg: 0.2, speed_m_s: 0.05, r_deg_s: 0.02 }
    }
}

impl NoiseSpec {
    pub fn none() -> Self {
        Self { pos_m: 0.0, psi_deg: 0.0, speed_m_s: 0.0, r_deg_s: 0.0 }
    }

    /// Default level scaled by a common factor (0 turns noise off).
    pub fn scaled(factor: f64) -> Self {
        let d = Self::default();
        Self {
            pos_m: d.pos_m * factor,
            psi_deg: d.psi_deg * factor,
            speed_m_s: d.speed_m_s * factor,
            r_deg_s: d.r_deg_s * factor,
        }
    }

    pub fn is_none(&self) -> bool {
        self.pos_m == 0.0 && self.psi_deg == 0.0 && self.speed_m_s == 0.0 && self.r_deg_s == 0.0
    }
}

fn noisy(rng: &mut ChaCha12Rng, value: f64, sigma: f64) -> f64 {
    if sigma > 0.0 {
        value + sigma * rng.sample::<f64, _>(StandardNormal)
    } else {
        value
    }
}

/// Simulate one maneuver under `theta_true` and record it as a trial with
/// seeded Gaussian measurement noise on the state channels.
pub fn generate_trial(
    theta_true: &MmgParams64,
    spec: &ManeuverSpec,
    ship: &ShipParticulars64,
    noise: &NoiseSpec,
    seed: u64,
) -> Result<Trial, SimulationError> {
    let initial = State64::cruising(spec.u0);
    let controls = spec.controls();
    let trajectory = simulate(initial, &controls, theta_true, ship, spec.dt)?;

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let sigma_psi = noise.psi_deg * DEG;
    let sigma_r = noise.r_deg_s * DEG;
    let states: Vec<State64> = trajectory
        .states
        .iter()
        .map(|s| State64 {
            x: noisy(&mut rng, s.x, noise.pos_m),
            y: noisy(&mut rng, s.y, noise.pos_m),
            psi: noisy(&mut rng, s.psi, sigma_psi),
            u: noisy(&mut rng, s.u, noise.speed_m_s),
            v_m: noisy(&mut rng, s.v_m, noise.speed_m_s),
            r: noisy(&mut rng, s.r, sigma_r),
        })
        .collect();

    Ok(Trial {
        label: spec.label(),
        ship: "container-83m".to_string(),
        dt: spec.dt,
        states,
        controls,
    })
}

/// Rudder angles of the standard eight-trial turning suite [deg].
pub const STANDARD_ANGLES: [f64; 8] = [10.0, -10.0, 20.0, -20.0, 35.0, -35.0, 40.0, -40.0];

/// Generate the eight-trial suite; trial `i` uses seed `seed + i`.
pub fn standard_suite(
    theta_true: &MmgParams64,
    ship: &ShipParticulars64,
    noise: &NoiseSpec,
    seed: u64,
) -> Result<Vec<Trial>, SimulationError> {
    STANDARD_ANGLES
        .iter()
        .enumerate()
        .map(|(i, &deg)| {
            generate_trial(theta_true, &ManeuverSpec::turn(deg), ship, noise, seed + i as u64)
        })
        .collect()
}
