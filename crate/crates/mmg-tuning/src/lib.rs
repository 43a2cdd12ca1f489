//! Fine-tuning the ship maneuvering model against recorded trials.
//!
//! The pieces, in pipeline order: [`trial`] reads and writes maneuver time
//! series; [`synthetic`] fabricates them from known parameters; [`split`]
//! assigns trials to tune/test sets; [`problem`] defines which parameters
//! move and inside which box; [`objective`] scores a candidate by replaying
//! each trial's controls and accumulating weighted squared pose deviation;
//! [`tune`] runs the box-constrained optimizer over it and writes up the
//! result.

pub mod error;
pub mod objective;
pub mod problem;
pub mod split;
pub mod synthetic;
pub mod trial;
pub mod tune;

pub use error::{SplitError, TrialError, TuningError};
pub use objective::{evaluate, objective_j, trial_deviation, Evaluation, TrialEvaluation, ABORT_SENTINEL};
pub use problem::{apply_candidate, exploration_box, perturb_uniform, ParamSelector, TuningSpec};
pub use split::{
    make_split, partition, DatasetSplit, Manifest, ManifestEntry, SplitRole, SplitScheme,
    STANDARD_TEST, STANDARD_TUNE,
};
pub use synthetic::{generate_trial, standard_suite, ManeuverSpec, NoiseSpec, STANDARD_ANGLES};
pub use trial::{Trial, TrialUnits};
pub use tune::{tune, Timing, TrialDeviation, TuneOutcome, TuneReport};
