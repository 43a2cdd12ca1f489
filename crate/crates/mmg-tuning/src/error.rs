use mmg_core::SimulationError;
use thiserror::Error;

/// Failures while reading, writing, or validating trial files.
#[derive(Debug, Error)]
pub enum TrialError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing metadata key `{0}` in header")]
    MissingMetadata(&'static str),
    #[error("units `{0}` not recognized (expected `mariner` or `si`)")]
    UnknownUnits(String),
    #[error("bad column header: expected `{expected}`, found `{found}`")]
    BadColumns { expected: &'static str, found: String },
    #[error("trial needs at least 2 rows, found {0}")]
    TooShort(usize),
    #[error("dt = {0} must be positive and finite")]
    BadDt(f64),
    #[error("row {row}: {what}")]
    InvalidRow { row: usize, what: String },
}

/// Failures while building splits or loading a dataset manifest.
#[derive(Debug, Error)]
pub enum SplitError {
    #[error("maneuver `{0}` required by the standard split is missing")]
    MissingManeuver(String),
    #[error("trial `{0}` assigned to both tune and test sets")]
    Overlap(String),
    #[error("trial label `{0}` not present in the dataset")]
    UnknownLabel(String),
    #[error("duplicate trial label `{0}`")]
    DuplicateLabel(String),
    #[error("tune set must not be empty")]
    EmptyTune,
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("manifest: {0}")]
    Manifest(#[from] serde_json::Error),
    #[error("trial `{label}`: {source}")]
    Trial {
        label: String,
        #[source]
        source: TrialError,
    },
}

/// Failures while setting up or running a tuning problem.
#[derive(Debug, Error)]
pub enum TuningError {
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("duplicate parameter `{0}` in selector")]
    DuplicateParameter(String),
    #[error("selector must name at least one parameter")]
    EmptySelector,
    #[error("exploration radius a_r = {0} must be positive and finite")]
    BadRadius(f64),
    #[error("parameter `{name}` has reference value 0; its exploration interval is empty")]
    DegenerateBox { name: String },
    #[error("weights must be finite, non-negative, and not all zero")]
    BadWeights,
    #[error("tune set must not be empty")]
    EmptyTuneSet,
    #[error("trial set must not be empty")]
    EmptyTrialSet,
    #[error("trial `{label}` aborted during simulation: {cause}")]
    TrialAborted {
        label: String,
        #[source]
        cause: SimulationError,
    },
    #[error("optimizer: {0}")]
    Opt(#[from] cmaes::OptError),
}
