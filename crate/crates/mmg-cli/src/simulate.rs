//! The `simulate` verb: turning (or straight) runs with track export and a
//! turning-circle summary.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Args, ValueEnum};
use mmg_core::{simulate, turning_circle, MmgParams64, ShipParticulars64, State64};
use mmg_tuning::{ManeuverSpec, Trial, TrialUnits};
use serde::Serialize;

use crate::config::{load_params, load_ship};
use crate::out;

/// One international knot in m/s.
const KNOT: f64 = 1852.0 / 3600.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeltaSign {
    /// Starboard turn, `+|delta|`.
    Plus,
    /// Port turn, `-|delta|`.
    Minus,
    /// Mirrored pair, `+|delta|` then `-|delta|`.
    Both,
}

#[derive(Args)]
pub struct SimulateArgs {
    /// Rudder command magnitude [deg]; 0 runs straight ahead.
    #[arg(long, default_value_t = 35.0, allow_negative_numbers = true)]
    pub delta: f64,
    /// Turn direction(s) applied to the magnitude of --delta.
    #[arg(long, value_enum, default_value_t = DeltaSign::Plus)]
    pub delta_sign: DeltaSign,
    /// Shaft speed [rpm].
    #[arg(long, default_value_t = 106.0)]
    pub np_rpm: f64,
    /// Initial ahead speed [m/s].
    #[arg(long, default_value_t = 3.086, conflicts_with = "u0_knots")]
    pub u0: f64,
    /// Initial ahead speed [knots], instead of --u0.
    #[arg(long)]
    pub u0_knots: Option<f64>,
    /// Run length [s].
    #[arg(long, default_value_t = 600.0)]
    pub duration: f64,
    /// Integration and output step [s].
    #[arg(long, default_value_t = 1.0)]
    pub dt: f64,
    /// Steering-gear rate limit [deg/s].
    #[arg(long, default_value_t = 2.34)]
    pub rudder_rate: f64,
    /// Parameter JSON (may be partial); built-in values if absent.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Ship particulars JSON; the built-in 83 m container carrier if absent.
    #[arg(long)]
    pub ship: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = "sim")]
    pub out_dir: PathBuf,
}

#[derive(Serialize)]
struct RunSummary {
    label: String,
    delta_deg: f64,
    /// Whether the run closed a full turning circle within the duration.
    closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    diameter_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diameter_over_l: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rms_residual_m: Option<f64>,
    trajectory_csv: String,
    track_csv: String,
}

#[derive(Serialize)]
struct Comparison {
    starboard_diameter_m: f64,
    port_diameter_m: f64,
    starboard_larger: bool,
}

#[derive(Serialize)]
struct SimulateSummary {
    schema_version: u32,
    u0_m_s: f64,
    np_rpm: f64,
    dt: f64,
    duration_s: f64,
    runs: Vec<RunSummary>,
    /// Present when the runs include one starboard and one port circle.
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<Comparison>,
}

pub fn run(args: &SimulateArgs) -> Result<()> {
    let params = match &args.params {
        Some(p) => load_params(p)?,
        None => MmgParams64::default(),
    };
    let ship = match &args.ship {
        Some(p) => load_ship(p)?,
        None => ShipParticulars64::container_83m(),
    };
    let ship_name = args
        .ship
        .as_ref()
        .and_then(|p| p.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "container-83m".to_string());
    let u0 = match args.u0_knots {
        Some(kn) => kn * KNOT,
        None => args.u0,
    };

    let magnitude = args.delta.abs();
    let deltas: Vec<f64> = if magnitude == 0.0 {
        vec![0.0]
    } else {
        match args.delta_sign {
            DeltaSign::Plus => vec![magnitude],
            DeltaSign::Minus => vec![-magnitude],
            DeltaSign::Both => vec![magnitude, -magnitude],
        }
    };

    out::ensure_dir(&args.out_dir)?;
    let mut runs = Vec::new();
    let mut circles: Vec<(bool, f64)> = Vec::new();
    for delta in deltas {
        let spec = ManeuverSpec {
            rudder_deg: delta,
            rudder_rate_deg_s: args.rudder_rate,
            n_p_rpm: args.np_rpm,
            u0,
            duration_s: args.duration,
            dt: args.dt,
        };
        spec.validate().map_err(|msg| anyhow!("invalid maneuver: {msg}"))?;
        let label = spec.label();
        let controls = spec.controls();
        let traj = simulate(State64::cruising(u0), &controls, &params, &ship, spec.dt)
            .with_context(|| format!("simulating {label}"))?;

        let trajectory_csv = format!("trajectory_{label}.csv");
        let record = Trial {
            label: label.clone(),
            ship: ship_name.clone(),
            dt: spec.dt,
            states: traj.states.clone(),
            controls,
        };
        record
            .save(&args.out_dir.join(&trajectory_csv), TrialUnits::Mariner)
            .with_context(|| format!("writing {trajectory_csv}"))?;
        let track_file = format!("track_{label}.csv");
        out::write_text(&args.out_dir.join(&track_file), &out::track_csv(&traj, ship.length))?;

        let circle = turning_circle(&traj);
        match &circle {
            Some(c) => {
                circles.push((c.starboard, c.diameter));
                println!(
                    "{label}: circle closed, diameter {:.1} m ({:.2} L)",
                    c.diameter,
                    c.diameter / ship.length
                );
            }
            None => println!("{label}: no closed circle within {} s", args.duration),
        }
        runs.push(RunSummary {
            label,
            delta_deg: delta,
            closed: circle.is_some(),
            diameter_m: circle.as_ref().map(|c| c.diameter),
            diameter_over_l: circle.as_ref().map(|c| c.diameter / ship.length),
            rms_residual_m: circle.as_ref().map(|c| c.rms_residual),
            trajectory_csv,
            track_csv: track_file,
        });
    }

    let starboard = circles.iter().find(|c| c.0).map(|c| c.1);
    let port = circles.iter().find(|c| !c.0).map(|c| c.1);
    let comparison = match (starboard, port) {
        (Some(s), Some(p)) => {
            println!(
                "starboard {:.1} m vs port {:.1} m: starboard circle is {}",
                s,
                p,
                if s > p { "larger" } else { "not larger" }
            );
            Some(Comparison {
                starboard_diameter_m: s,
                port_diameter_m: p,
                starboard_larger: s > p,
            })
        }
        _ => None,
    };

    let summary = SimulateSummary {
        schema_version: 1,
        u0_m_s: u0,
        np_rpm: args.np_rpm,
        dt: args.dt,
        duration_s: args.duration,
        runs,
        comparison,
    };
    out::write_text(&args.out_dir.join("summary.json"), &out::value_json(&summary))?;
    println!(
        "wrote {} run(s) + summary.json to {}",
        summary.runs.len(),
        args.out_dir.display()
    );
    Ok(())
}
