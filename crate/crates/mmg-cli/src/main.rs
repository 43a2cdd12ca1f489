//! `mmgtune`: simulate the maneuvering model, fabricate trial datasets, and
//! fit parameter subsets against recorded trials.
//!
//! Every verb is deterministic for a fixed seed: rerunning the same command
//! reproduces its output files bit for bit (wall-clock timing lives in a
//! separate report field excluded from comparisons).

mod config;
mod evaluate;
mod gen_trials;
mod out;
mod simulate;
mod sweep;
mod tune_cmd;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "mmgtune",
    version,
    about = "Simulate and tune the 3-DOF ship maneuvering model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run turning (or straight-line) maneuvers and export track data.
    Simulate(simulate::SimulateArgs),
    /// Fabricate the eight-trial turning suite with a dataset manifest.
    GenTrials(gen_trials::GenTrialsArgs),
    /// Fit the selected parameters against the tune split of a dataset.
    Tune(tune_cmd::TuneArgs),
    /// Score a parameter file against a dataset split, with track overlays.
    Evaluate(evaluate::EvaluateArgs),
    /// Tune once per exploration radius and tabulate the deviations.
    Sweep(sweep::SweepArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => simulate::run(&args),
        Command::GenTrials(args) => gen_trials::run(&args),
        Command::Tune(args) => tune_cmd::run(&args),
        Command::Evaluate(args) => evaluate::run(&args),
        Command::Sweep(args) => sweep::run(&args),
    };
    if let Err(err) = result {
        eprintln!("mmgtune: error: {err:#}");
        std::process::exit(1);
    }
}
