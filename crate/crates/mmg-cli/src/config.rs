//! The run-configuration file shared by `tune`, `evaluate` and `sweep`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use mmg_core::{MmgParams64, ShipParticulars64};
use mmg_tuning::{Manifest, Trial, TuningSpec};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

fn default_out_dir() -> String {
    "out".to_string()
}

/// One tuning problem: where the dataset lives, which ship and reference
/// parameters to use, and the optimizer settings. Relative paths resolve
/// against the config file's directory. Unknown keys are rejected so typos
/// fail loudly instead of silently falling back to defaults.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    /// Dataset manifest path.
    pub manifest: String,
    /// Ship particulars JSON; the built-in 83 m container carrier if absent.
    #[serde(default)]
    pub ship: Option<String>,
    /// Reference parameter JSON (may be partial); built-in values if absent.
    #[serde(default)]
    pub base_params: Option<String>,
    /// Output directory for reports and tuned parameters.
    #[serde(default = "default_out_dir")]
    pub out_dir: String,
    #[serde(default)]
    pub tuning: TuningSpec,
}

/// A loaded config together with the directory its paths resolve against.
pub struct LoadedConfig {
    pub config: RunConfig,
    base_dir: PathBuf,
}

pub fn load_config(path: &Path) -> Result<LoadedConfig> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let config: RunConfig = serde_json::from_str(&text)
        .with_context(|| format!("parsing config {}", path.display()))?;
    if config.schema_version != SCHEMA_VERSION {
        bail!(
            "config {}: unsupported schema_version {} (this build reads {})",
            path.display(),
            config.schema_version,
            SCHEMA_VERSION
        );
    }
    let base_dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    Ok(LoadedConfig { config, base_dir })
}

impl LoadedConfig {
    fn resolve(&self, rel: &str) -> PathBuf {
        let p = Path::new(rel);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }

    pub fn out_dir(&self, cli_override: Option<&Path>) -> PathBuf {
        match cli_override {
            Some(p) => p.to_path_buf(),
            None => self.resolve(&self.config.out_dir),
        }
    }

    pub fn ship(&self) -> Result<ShipParticulars64> {
        match &self.config.ship {
            Some(rel) => load_ship(&self.resolve(rel)),
            None => Ok(ShipParticulars64::container_83m()),
        }
    }

    pub fn base_params(&self) -> Result<MmgParams64> {
        match &self.config.base_params {
            Some(rel) => load_params(&self.resolve(rel)),
            None => Ok(MmgParams64::default()),
        }
    }

    /// Load every trial named by the manifest, already split into
    /// `(tune, test)`. Trial paths resolve against the manifest's directory.
    pub fn load_dataset(&self) -> Result<(Vec<Trial>, Vec<Trial>)> {
        let path = self.resolve(&self.config.manifest);
        let manifest = Manifest::load(&path)
            .with_context(|| format!("loading manifest {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        manifest
            .load_trials(base)
            .with_context(|| format!("loading trials referenced by {}", path.display()))
    }
}

/// Load and validate a ship particulars file.
pub fn load_ship(path: &Path) -> Result<ShipParticulars64> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading ship file {}", path.display()))?;
    let ship: ShipParticulars64 = serde_json::from_str(&text)
        .with_context(|| format!("parsing ship file {}", path.display()))?;
    ship.validate().with_context(|| format!("validating ship file {}", path.display()))?;
    Ok(ship)
}

/// Load and validate a parameter file. Missing entries take the built-in
/// values, so a file may list only the parameters that differ.
pub fn load_params(path: &Path) -> Result<MmgParams64> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading parameter file {}", path.display()))?;
    let params: MmgParams64 = serde_json::from_str(&text)
        .with_context(|| format!("parsing parameter file {}", path.display()))?;
    params
        .validate()
        .with_context(|| format!("validating parameter file {}", path.display()))?;
    Ok(params)
}
