//! Trial time series: an evenly sampled record of pose, velocity, and
//! control channels from one maneuver, with CSV persistence.
//!
//! The file layout is a `#`-prefixed metadata block (`key: value` per line)
//! followed by a fixed column header and one row per time step:
//!
//! ```text
//! # ship: container-83m
//! # maneuver: turn+35
//! # dt: 1
//! # rows: 600
//! # units: mariner
//! p1,p2,psi,u,v_m,r,n_p,delta
//! 0,0,0,3.086,0,0,106,0
//! ...
//! ```
//!
//! `mariner` files carry angles in degrees, yaw rate in deg/s, and shaft
//! speed in rpm; `si` files carry radians, rad/s, and rev/s. In memory a
//! trial always uses SI units with the heading unwrapped to a continuous
//! signal. Values are written with shortest round-trip formatting so a
//! save/load cycle reproduces the stored numbers exactly.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use mmg_core::{ControlInput64, State64};
use serde::{Deserialize, Serialize};

use crate::error::TrialError;

const COLUMNS: &str = "p1,p2,psi,u,v_m,r,n_p,delta";
const DEG: f64 = PI / 180.0;

/// Unit system declared in a trial file header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrialUnits {
    /// Degrees, deg/s, rpm.
    Mariner,
    /// Radians, rad/s, rev/s (the in-memory representation).
    Si,
}

impl TrialUnits {
    fn as_str(self) -> &'static str {
        match self {
            TrialUnits::Mariner => "mariner",
            TrialUnits::Si => "si",
        }
    }
}

/// One maneuver record, fixed time step, SI units, unwrapped heading.
#[derive(Debug, Clone, PartialEq)]
pub struct Trial {
    /// Maneuver label, e.g. `turn+35`.
    pub label: String,
    /// Ship identifier carried in the file header.
    pub ship: String,
    pub dt: f64,
    pub states: Vec<State64>,
    pub controls: Vec<ControlInput64>,
}

impl Trial {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn initial_state(&self) -> State64 {
        self.states[0]
    }

    pub fn duration(&self) -> f64 {
        self.dt * (self.len().saturating_sub(1)) as f64
    }

    /// Checks the invariants assumed by the model: at least two rows, a
    /// positive time step, finite values, and headway/shaft rates that stay
    /// in the forward regime.
    pub fn validate(&self) -> Result<(), TrialError> {
        if self.len() < 2 {
            return Err(TrialError::TooShort(self.len()));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(TrialError::BadDt(self.dt));
        }
        debug_assert_eq!(self.states.len(), self.controls.len());
        for (i, (s, c)) in self.states.iter().zip(&self.controls).enumerate() {
            let row = i + 1;
            if !(s.is_finite() && c.delta.is_finite() && c.n_p.is_finite()) {
                return Err(TrialError::InvalidRow { row, what: "non-finite value".into() });
            }
            if s.u <= 0.0 {
                return Err(TrialError::InvalidRow {
                    row,
                    what: format!("u = {} must be > 0", s.u),
                });
            }
            if c.n_p <= 0.0 {
                return Err(TrialError::InvalidRow {
                    row,
                    what: format!("n_p = {} must be > 0", c.n_p),
                });
            }
        }
        Ok(())
    }

    /// Serialize to the CSV format in the requested units.
    pub fn to_csv(&self, units: TrialUnits) -> String {
        let mut out = String::new();
        out.push_str(&format!("# ship: {}\n", self.ship));
        out.push_str(&format!("# maneuver: {}\n", self.label));
        out.push_str(&format!("# dt: {}\n", self.dt));
        out.push_str(&format!("# rows: {}\n", self.len()));
        out.push_str(&format!("# units: {}\n", units.as_str()));
        out.push_str(COLUMNS);
        out.push('\n');
        for (s, c) in self.states.iter().zip(&self.controls) {
            let (psi, r, n_p, delta) = match units {
                TrialUnits::Mariner => (s.psi / DEG, s.r / DEG, c.n_p * 60.0, c.delta / DEG),
                TrialUnits::Si => (s.psi, s.r, c.n_p, c.delta),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                s.x, s.y, psi, s.u, s.v_m, r, n_p, delta
            ));
        }
        out
    }

    /// Parse the CSV format; converts to SI and unwraps the heading.
    pub fn from_csv(text: &str) -> Result<Self, TrialError> {
        let mut meta: BTreeMap<String, String> = BTreeMap::new();
        let mut states = Vec::new();
        let mut controls = Vec::new();
        let mut saw_columns = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                let body = rest.trim();
                match body.split_once(':') {
                    Some((k, v)) => {
                        meta.insert(k.trim().to_string(), v.trim().to_string());
                    }
                    None => {
                        return Err(TrialError::Parse {
                            line,
                            msg: format!("metadata line without `key: value` form: `{body}`"),
                        })
                    }
                }
                continue;
            }
            if !saw_columns {
                if trimmed != COLUMNS {
                    return Err(TrialError::BadColumns {
                        expected: COLUMNS,
                        found: trimmed.to_string(),
                    });
                }
                saw_columns = true;
                continue;
            }
            let fields: Vec<&str> = trimmed.split(',').collect();
            if fields.len() != 8 {
                return Err(TrialError::Parse {
                    line,
                    msg: format!("expected 8 fields, found {}", fields.len()),
                });
            }
            let mut v = [0.0f64; 8];
            for (slot, field) in v.iter_mut().zip(&fields) {
                *slot = field.trim().parse().map_err(|_| TrialError::Parse {
                    line,
                    msg: format!("not a number: `{}`", field.trim()),
                })?;
            }
            states.push(State64 { x: v[0], y: v[1], psi: v[2], u: v[3], v_m: v[4], r: v[5] });
            controls.push(ControlInput64 { delta: v[7], n_p: v[6] });
        }

        let units_raw = meta.get("units").ok_or(TrialError::MissingMetadata("units"))?;
        let units = match units_raw.as_str() {
            "mariner" => TrialUnits::Mariner,
            "si" => TrialUnits::Si,
            other => return Err(TrialError::UnknownUnits(other.to_string())),
        };
        let dt: f64 = meta
            .get("dt")
            .ok_or(TrialError::MissingMetadata("dt"))?
            .parse()
            .map_err(|_| TrialError::BadDt(f64::NAN))?;

        if units == TrialUnits::Mariner {
            for s in &mut states {
                s.psi *= DEG;
                s.r *= DEG;
            }
            for c in &mut controls {
                c.delta *= DEG;
                c.n_p /= 60.0;
            }
        }
        unwrap_heading(&mut states);

        let trial = Trial {
            label: meta.get("maneuver").cloned().unwrap_or_default(),
            ship: meta.get("ship").cloned().unwrap_or_default(),
            dt,
            states,
            controls,
        };
        trial.validate()?;
        Ok(trial)
    }

    pub fn save(&self, path: &Path, units: TrialUnits) -> Result<(), TrialError> {
        let file = fs::File::create(path)?;
        let mut w = BufWriter::new(file);
        w.write_all(self.to_csv(units).as_bytes())?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, TrialError> {
        let text = fs::read_to_string(path)?;
        Self::from_csv(&text)
    }
}

/// Make the heading continuous: whenever consecutive samples jump by more
/// than half a turn, shift the rest of the series by whole turns.
fn unwrap_heading(states: &mut [State64]) {
    let mut offset = 0.0f64;
    for i in 1..states.len() {
        let mut step = states[i].psi + offset - states[i - 1].psi;
        while step > PI {
            offset -= 2.0 * PI;
            step -= 2.0 * PI;
        }
        while step < -PI {
            offset += 2.0 * PI;
            step += 2.0 * PI;
        }
        states[i].psi += offset;
    }
}
