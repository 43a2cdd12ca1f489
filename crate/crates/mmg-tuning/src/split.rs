//! Tune/test dataset splits and the on-disk manifest tying trial files to
//! their split assignment.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::SplitError;
use crate::trial::Trial;

/// Labels of the standard split of the eight-trial turning suite: half the
/// angles tune, the mirrored half tests.
pub const STANDARD_TUNE: [&str; 4] = ["turn+10", "turn-20", "turn+35", "turn-40"];
pub const STANDARD_TEST: [&str; 4] = ["turn-10", "turn+20", "turn-35", "turn+40"];

/// How to assign trials to the tune and test sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "scheme")]
pub enum SplitScheme {
    /// The fixed eight-trial assignment above.
    Standard,
    /// Explicit label lists; must be disjoint and tune nonempty.
    Custom { tune: Vec<String>, test: Vec<String> },
}

/// A validated split, by trial label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub tune: Vec<String>,
    pub test: Vec<String>,
}

impl DatasetSplit {
    pub fn test_is_empty(&self) -> bool {
        self.test.is_empty()
    }
}

/// Build a split over the given labels.
pub fn make_split(labels: &[String], scheme: &SplitScheme) -> Result<DatasetSplit, SplitError> {
    let available: BTreeSet<&str> = labels.iter().map(|s| s.as_str()).collect();
    if available.len() != labels.len() {
        let mut seen = BTreeSet::new();
        for l in labels {
            if !seen.insert(l.as_str()) {
                return Err(SplitError::DuplicateLabel(l.clone()));
            }
        }
    }
    let (tune, test): (Vec<String>, Vec<String>) = match scheme {
        SplitScheme::Standard => {
            for needed in STANDARD_TUNE.iter().chain(&STANDARD_TEST) {
                if !available.contains(needed) {
                    return Err(SplitError::MissingManeuver((*needed).to_string()));
                }
            }
            (
                STANDARD_TUNE.iter().map(|s| s.to_string()).collect(),
                STANDARD_TEST.iter().map(|s| s.to_string()).collect(),
            )
        }
        SplitScheme::Custom { tune, test } => (tune.clone(), test.clone()),
    };
    if tune.is_empty() {
        return Err(SplitError::EmptyTune);
    }
    let tune_set: BTreeSet<&str> = tune.iter().map(|s| s.as_str()).collect();
    for label in &test {
        if tune_set.contains(label.as_str()) {
            return Err(SplitError::Overlap(label.clone()));
        }
    }
    for label in tune.iter().chain(&test) {
        if !available.contains(label.as_str()) {
            return Err(SplitError::UnknownLabel(label.clone()));
        }
    }
    Ok(DatasetSplit { tune, test })
}

/// Clone trials into (tune, test) sets following the split's label order.
pub fn partition(trials: &[Trial], split: &DatasetSplit) -> (Vec<Trial>, Vec<Trial>) {
    let pick = |labels: &[String]| {
        labels
            .iter()
            .filter_map(|l| trials.iter().find(|t| &t.label == l).cloned())
            .collect::<Vec<_>>()
    };
    (pick(&split.tune), pick(&split.test))
}

/// One manifest row: a trial file and its split assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub path: String,
    pub label: String,
    pub split: SplitRole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitRole {
    Tune,
    Test,
}

/// The dataset manifest file: trial paths plus split assignments, stored as
/// JSON next to the trial files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub const SCHEMA_VERSION: u32 = 1;

    pub fn new(entries: Vec<ManifestEntry>) -> Self {
        Self { schema_version: Self::SCHEMA_VERSION, entries }
    }

    pub fn validate(&self) -> Result<(), SplitError> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.label.as_str()) {
                return Err(SplitError::DuplicateLabel(e.label.clone()));
            }
        }
        if !self.entries.iter().any(|e| e.split == SplitRole::Tune) {
            return Err(SplitError::EmptyTune);
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<(), SplitError> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(path, text).map_err(SplitError::Io)
    }

    pub fn load(path: &Path) -> Result<Self, SplitError> {
        let text = fs::read_to_string(path)?;
        let manifest: Manifest = serde_json::from_str(&text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    /// Load every referenced trial; relative paths resolve against
    /// `base_dir`. Returns (tune, test) in manifest order.
    pub fn load_trials(&self, base_dir: &Path) -> Result<(Vec<Trial>, Vec<Trial>), SplitError> {
        self.validate()?;
        let mut tune = Vec::new();
        let mut test = Vec::new();
        for e in &self.entries {
            let raw = Path::new(&e.path);
            let path = if raw.is_absolute() { raw.to_path_buf() } else { base_dir.join(raw) };
            let trial = Trial::load(&path)
                .map_err(|source| SplitError::Trial { label: e.label.clone(), source })?;
            match e.split {
                SplitRole::Tune => tune.push(trial),
                SplitRole::Test => test.push(trial),
            }
        }
        Ok((tune, test))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn suite_labels() -> Vec<String> {
        ["turn+10", "turn-10", "turn+20", "turn-20", "turn+35", "turn-35", "turn+40", "turn-40"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn standard_split_partitions_the_suite() {
        let split = make_split(&suite_labels(), &SplitScheme::Standard).unwrap();
        assert_eq!(split.tune, STANDARD_TUNE.map(String::from).to_vec());
        assert_eq!(split.test, STANDARD_TEST.map(String::from).to_vec());
    }

    #[test]
    fn standard_split_requires_all_eight_maneuvers() {
        let mut labels = suite_labels();
        labels.retain(|l| l != "turn-35");
        match make_split(&labels, &SplitScheme::Standard) {
            Err(SplitError::MissingManeuver(l)) => assert_eq!(l, "turn-35"),
            other => panic!("expected missing-maneuver error, got {other:?}"),
        }
    }

    #[test]
    fn overlapping_custom_lists_are_rejected() {
        let scheme = SplitScheme::Custom {
            tune: vec!["turn+10".into(), "turn+20".into()],
            test: vec!["turn+20".into()],
        };
        assert!(matches!(
            make_split(&suite_labels(), &scheme),
            Err(SplitError::Overlap(l)) if l == "turn+20"
        ));
    }

    #[test]
    fn tune_only_custom_split_is_allowed() {
        let scheme = SplitScheme::Custom { tune: vec!["turn+35".into()], test: vec![] };
        let split = make_split(&suite_labels(), &scheme).unwrap();
        assert!(split.test_is_empty());
    }

    #[test]
    fn empty_tune_list_is_rejected() {
        let scheme = SplitScheme::Custom { tune: vec![], test: vec!["turn+10".into()] };
        assert!(matches!(make_split(&suite_labels(), &scheme), Err(SplitError::EmptyTune)));
    }

    #[test]
    fn unknown_label_is_rejected() {
        let scheme = SplitScheme::Custom { tune: vec!["zigzag-10".into()], test: vec![] };
        assert!(matches!(
            make_split(&suite_labels(), &scheme),
            Err(SplitError::UnknownLabel(l)) if l == "zigzag-10"
        ));
    }
}
