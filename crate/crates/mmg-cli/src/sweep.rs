//! The `sweep` verb: tune once per exploration radius and tabulate the
//! tune- and test-set deviations, one row per radius.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::Args;
use serde::Serialize;

use crate::config::load_config;
use crate::out;
use crate::tune_cmd::tune_into;

#[derive(Args)]
pub struct SweepArgs {
    /// Run configuration JSON.
    #[arg(long)]
    pub config: PathBuf,
    /// Exploration radius; pass once per sweep point.
    #[arg(long = "ar", required = true, allow_negative_numbers = true)]
    pub ars: Vec<f64>,
    /// Optimizer seed override, shared by all sweep points.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory override.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Serialize)]
struct SweepRow {
    a_r: f64,
    j_tune: f64,
    j_test: Option<f64>,
}

#[derive(Serialize)]
struct SweepSummary {
    schema_version: u32,
    rows: Vec<SweepRow>,
}

pub fn run(args: &SweepArgs) -> Result<()> {
    for &ar in &args.ars {
        if !(ar.is_finite() && ar > 0.0) {
            return Err(anyhow!("--ar must be finite and > 0, got {ar}"));
        }
    }
    for (i, &ar) in args.ars.iter().enumerate() {
        if args.ars[..i].contains(&ar) {
            return Err(anyhow!("--ar {ar} given twice"));
        }
    }
    let loaded = load_config(&args.config)?;
    let ship = loaded.ship()?;
    let base = loaded.base_params()?;
    let (tune_set, test_set) = loaded.load_dataset()?;
    let out_dir = loaded.out_dir(args.out_dir.as_deref());
    out::ensure_dir(&out_dir)?;

    let mut rows = Vec::new();
    let mut csv = String::from("a_r,j_tune,j_test\n");
    for &ar in &args.ars {
        let mut spec = loaded.config.tuning.clone();
        spec.a_r = ar;
        if let Some(seed) = args.seed {
            spec.cma.seed = seed;
        }
        let sub = out_dir.join(format!("ar-{ar}"));
        let report = tune_into(&spec, &base, &ship, &tune_set, &test_set, &sub)
            .with_context(|| format!("tuning at a_r = {ar}"))?;

        let j_tune = report.j_star_tune;
        let j_test = report.j_star_test;
        match j_test {
            Some(t) => {
                csv.push_str(&format!("{ar},{j_tune},{t}\n"));
                println!("a_r {ar}: J(tune) {j_tune:.6e}, J(test) {t:.6e}");
            }
            None => {
                csv.push_str(&format!("{ar},{j_tune},\n"));
                println!("a_r {ar}: J(tune) {j_tune:.6e}");
            }
        }
        rows.push(SweepRow { a_r: ar, j_tune, j_test });
    }
    out::write_text(&out_dir.join("sweep_summary.csv"), &csv)?;
    out::write_text(
        &out_dir.join("sweep_summary.json"),
        &out::value_json(&SweepSummary { schema_version: 1, rows }),
    )?;
    println!(
        "wrote sweep_summary.csv and {} run directories to {}",
        args.ars.len(),
        out_dir.display()
    );
    Ok(())
}
