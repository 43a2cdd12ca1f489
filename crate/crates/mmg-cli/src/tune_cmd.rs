//! The `tune` verb: fit the selected parameters to a dataset's tune split
//! and write the tuned parameters, report, and optimizer history.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::Args;
use cmaes::write_history_csv;
use mmg_core::{MmgParams64, ShipParticulars64};
use mmg_tuning::{tune, Trial, TuneReport, TuningSpec};

use crate::config::load_config;
use crate::out;

#[derive(Args)]
pub struct TuneArgs {
    /// Run configuration JSON.
    #[arg(long)]
    pub config: PathBuf,
    /// Exploration radius override.
    #[arg(long, allow_negative_numbers = true)]
    pub ar: Option<f64>,
    /// Optimizer seed override.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory override.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

/// Run one tuning job and write `theta_star.json`, `report.json` and
/// `history.csv` into `dir`. Shared with the sweep verb.
pub fn tune_into(
    spec: &TuningSpec,
    base: &MmgParams64,
    ship: &ShipParticulars64,
    tune_set: &[Trial],
    test_set: &[Trial],
    dir: &Path,
) -> Result<TuneReport> {
    out::ensure_dir(dir)?;
    let mut outcome = tune(spec, base, ship, tune_set, test_set).context("tuning failed")?;

    let mut history = Vec::new();
    write_history_csv(&mut history, &outcome.history).context("rendering history CSV")?;
    out::write_text(&dir.join("history.csv"), std::str::from_utf8(&history)?)?;
    outcome.report.history_path = Some("history.csv".to_string());

    out::write_text(&dir.join("theta_star.json"), &out::params_json(&outcome.theta_star))?;
    out::write_text(&dir.join("report.json"), &outcome.report.to_json_pretty())?;
    Ok(outcome.report)
}

pub fn run(args: &TuneArgs) -> Result<()> {
    // Flag validation happens before any data is loaded or simulated.
    if let Some(ar) = args.ar {
        if !(ar.is_finite() && ar > 0.0) {
            return Err(anyhow!("--ar must be finite and > 0, got {ar}"));
        }
    }
    let loaded = load_config(&args.config)?;
    let mut spec = loaded.config.tuning.clone();
    if let Some(ar) = args.ar {
        spec.a_r = ar;
    }
    if let Some(seed) = args.seed {
        spec.cma.seed = seed;
    }

    let ship = loaded.ship()?;
    let base = loaded.base_params()?;
    let (tune_set, test_set) = loaded.load_dataset()?;
    let out_dir = loaded.out_dir(args.out_dir.as_deref());

    let report = tune_into(&spec, &base, &ship, &tune_set, &test_set, &out_dir)?;
    println!(
        "tune: J(tune) {:.6e} -> {:.6e} in {} evals ({:?})",
        report.j_pre_tune, report.j_star_tune, report.evals_used, report.termination
    );
    if let (Some(pre), Some(star)) = (report.j_pre_test, report.j_star_test) {
        println!("tune: J(test) {pre:.6e} -> {star:.6e}");
    }
    println!(
        "wrote theta_star.json, report.json, history.csv to {}",
        out_dir.display()
    );
    Ok(())
}
