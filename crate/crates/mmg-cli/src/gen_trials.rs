//! The `gen-trials` verb: fabricate the eight-trial turning dataset with its
//! manifest and, optionally, a perturbed ground-truth parameter set.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::Args;
use mmg_core::{MmgParams64, ShipParticulars64};
use mmg_tuning::{
    generate_trial, ManeuverSpec, Manifest, ManifestEntry, NoiseSpec, ParamSelector, SplitRole,
    TrialUnits, STANDARD_ANGLES, STANDARD_TUNE,
};

use crate::config::{load_params, load_ship};
use crate::out;

#[derive(Args)]
pub struct GenTrialsArgs {
    /// Output directory for trial files and the manifest.
    #[arg(long, default_value = "trials")]
    pub out_dir: PathBuf,
    /// Noise level as a multiple of the standard sensor model (0 = exact).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub noise: f64,
    /// Relative perturbation fabricating a ground truth away from the
    /// reference parameters (0 records the reference itself).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta_true_perturb: f64,
    /// Seed for the perturbation and the per-trial measurement noise.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Trial length [s].
    #[arg(long, default_value_t = 600.0)]
    pub duration: f64,
    /// Sample interval [s].
    #[arg(long, default_value_t = 1.0)]
    pub dt: f64,
    /// Reference parameter JSON (may be partial); built-in values if absent.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Ship particulars JSON; the built-in 83 m container carrier if absent.
    #[arg(long)]
    pub ship: Option<PathBuf>,
}

pub fn run(args: &GenTrialsArgs) -> Result<()> {
    if !(args.noise.is_finite() && args.noise >= 0.0) {
        return Err(anyhow!("--noise must be finite and >= 0, got {}", args.noise));
    }
    if !(args.theta_true_perturb.is_finite() && (0.0..1.0).contains(&args.theta_true_perturb)) {
        return Err(anyhow!(
            "--theta-true-perturb must be in [0, 1), got {}",
            args.theta_true_perturb
        ));
    }
    let base = match &args.params {
        Some(p) => load_params(p)?,
        None => MmgParams64::default(),
    };
    let ship = match &args.ship {
        Some(p) => load_ship(p)?,
        None => ShipParticulars64::container_83m(),
    };
    let theta_true = if args.theta_true_perturb > 0.0 {
        mmg_tuning::perturb_uniform(
            &base,
            &ParamSelector::default_target(),
            args.theta_true_perturb,
            args.seed,
        )
    } else {
        base.clone()
    };
    let noise = NoiseSpec::scaled(args.noise);

    out::ensure_dir(&args.out_dir)?;
    let mut entries = Vec::new();
    for (i, &deg) in STANDARD_ANGLES.iter().enumerate() {
        let spec = ManeuverSpec {
            duration_s: args.duration,
            dt: args.dt,
            ..ManeuverSpec::turn(deg)
        };
        spec.validate().map_err(|msg| anyhow!("invalid maneuver: {msg}"))?;
        let trial = generate_trial(&theta_true, &spec, &ship, &noise, args.seed + i as u64)
            .with_context(|| format!("generating {}", spec.label()))?;
        let file = format!("{}.csv", trial.label);
        trial
            .save(&args.out_dir.join(&file), TrialUnits::Mariner)
            .with_context(|| format!("writing {file}"))?;
        let split = if STANDARD_TUNE.contains(&trial.label.as_str()) {
            SplitRole::Tune
        } else {
            SplitRole::Test
        };
        entries.push(ManifestEntry { path: file, label: trial.label, split });
    }
    Manifest::new(entries)
        .save(&args.out_dir.join("manifest.json"))
        .context("writing manifest.json")?;

    if args.theta_true_perturb > 0.0 {
        out::write_text(&args.out_dir.join("theta_true.json"), &out::params_json(&theta_true))?;
        println!("wrote fabricated ground truth to theta_true.json");
    }
    println!(
        "wrote {} trials + manifest.json to {} (noise x{}, seed {})",
        STANDARD_ANGLES.len(),
        args.out_dir.display(),
        args.noise,
        args.seed
    );
    Ok(())
}
