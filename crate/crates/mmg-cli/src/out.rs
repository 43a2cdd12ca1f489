//! Output-file helpers. Plot data is written as plain CSV (length-normalized
//! track coordinates) rather than rendered images, so any plotting tool can
//! consume it and outputs stay byte-comparable across runs.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use mmg_core::{MmgParams64, Trajectory64};
use mmg_tuning::Trial;

pub fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating directory {}", dir.display()))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Track of a trajectory with both coordinates divided by ship length, one
/// `x_over_l,y_over_l` row per sample.
pub fn track_csv(traj: &Trajectory64, length: f64) -> String {
    let mut csv = String::from("x_over_l,y_over_l\n");
    for (x, y) in traj.track() {
        csv.push_str(&format!("{},{}\n", x / length, y / length));
    }
    csv
}

/// Recorded and simulated tracks side by side, divided by ship length.
pub fn overlay_csv(trial: &Trial, sim: &Trajectory64, length: f64) -> String {
    let mut csv = String::from("t,x_rec_over_l,y_rec_over_l,x_sim_over_l,y_sim_over_l\n");
    for (i, (rec, s)) in trial.states.iter().zip(&sim.states).enumerate() {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            i as f64 * trial.dt,
            rec.x / length,
            rec.y / length,
            s.x / length,
            s.y / length
        ));
    }
    csv
}

/// A full parameter set as pretty JSON, loadable by every verb.
pub fn params_json(params: &MmgParams64) -> String {
    let mut text = serde_json::to_string_pretty(params).expect("parameters serialize");
    text.push('\n');
    text
}

pub fn value_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}
