//! The `evaluate` verb: score a parameter file against a dataset split and
//! export recorded-versus-simulated track overlays.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Args, ValueEnum};
use mmg_tuning::evaluate;
use serde::Serialize;

use crate::config::{load_config, load_params};
use crate::out;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dataset {
    Tune,
    Test,
}

#[derive(Args)]
pub struct EvaluateArgs {
    /// Run configuration JSON.
    #[arg(long)]
    pub config: PathBuf,
    /// Parameter file to score; the config's reference parameters if absent.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Which split to score.
    #[arg(long, value_enum, default_value_t = Dataset::Tune)]
    pub dataset: Dataset,
    /// Output directory override.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Serialize)]
struct TrialRow {
    label: String,
    j: f64,
    overlay_csv: String,
}

#[derive(Serialize)]
struct EvaluationReport {
    schema_version: u32,
    dataset: String,
    /// Parameter file scored, when one was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    params_file: Option<String>,
    weight_q: [f64; 3],
    total_j: f64,
    per_trial: Vec<TrialRow>,
}

pub fn run(args: &EvaluateArgs) -> Result<()> {
    let loaded = load_config(&args.config)?;
    let ship = loaded.ship()?;
    let params = match &args.params {
        Some(p) => load_params(p)?,
        None => loaded.base_params()?,
    };
    let (tune_set, test_set) = loaded.load_dataset()?;
    let (name, set) = match args.dataset {
        Dataset::Tune => ("tune", tune_set),
        Dataset::Test => ("test", test_set),
    };
    if set.is_empty() {
        return Err(anyhow!("the {name} split of this dataset is empty"));
    }
    let weight = loaded.config.tuning.weights_for(&ship);
    let result = evaluate(&params, &set, weight, &ship).context("evaluating")?;

    let out_dir = loaded.out_dir(args.out_dir.as_deref());
    out::ensure_dir(&out_dir)?;
    let mut rows = Vec::new();
    println!("{:<12} J", "trial");
    for t in &result.per_trial {
        let overlay = format!("overlay_{name}_{}.csv", t.label);
        let trial = set.iter().find(|x| x.label == t.label).expect("evaluated label exists");
        out::write_text(
            &out_dir.join(&overlay),
            &out::overlay_csv(trial, &t.trajectory, ship.length),
        )?;
        println!("{:<12} {:.6e}", t.label, t.j);
        rows.push(TrialRow { label: t.label.clone(), j: t.j, overlay_csv: overlay });
    }
    println!("{:<12} {:.6e}", "total", result.total);

    let report = EvaluationReport {
        schema_version: 1,
        dataset: name.to_string(),
        params_file: args.params.as_ref().map(|p| p.display().to_string()),
        weight_q: weight,
        total_j: result.total,
        per_trial: rows,
    };
    out::write_text(
        &out_dir.join(format!("evaluation_{name}.json")),
        &out::value_json(&report),
    )?;
    println!(
        "wrote evaluation_{name}.json and {} overlay files to {}",
        result.per_trial.len(),
        out_dir.display()
    );
    Ok(())
}
