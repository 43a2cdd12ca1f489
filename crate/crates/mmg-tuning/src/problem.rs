//! Which parameters to tune and where to search: the ordered parameter
//! selector, the relative exploration box around the reference values, and
//! helpers to materialize candidates as full parameter sets.

use std::f64::consts::FRAC_PI_4;

use cmaes::{BoxConstraint, CmaConfig};
use mmg_core::{MmgParams64, ShipParticulars64, DEFAULT_TARGET, PARAM_NAMES};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::TuningError;

/// Ordered list of parameter names to optimize.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamSelector {
    names: Vec<String>,
}

impl ParamSelector {
    /// Validates that every name is a known parameter and appears once.
    pub fn new<I, S>(names: I) -> Result<Self, TuningError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(TuningError::EmptySelector);
        }
        for (i, name) in names.iter().enumerate() {
            if !PARAM_NAMES.contains(&name.as_str()) {
                return Err(TuningError::UnknownParameter(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(TuningError::DuplicateParameter(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// The default twelve-parameter target: resistance, propeller
    /// interaction, and rudder interaction constants, leaving the hull
    /// derivatives fixed.
    pub fn default_target() -> Self {
        Self::new(DEFAULT_TARGET).expect("default target names are valid")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Current values of the selected parameters, in selector order.
    pub fn values(&self, params: &MmgParams64) -> Vec<f64> {
        self.names
            .iter()
            .map(|n| params.get(n).expect("selector names validated"))
            .collect()
    }
}

/// Everything that defines one tuning problem besides the data itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TuningSpec {
    /// Parameter names to tune; validated on use.
    pub selector: Vec<String>,
    /// Relative half-width of the exploration box.
    pub a_r: f64,
    /// Deviation weights (x, y, heading); `None` uses ship length for the
    /// position terms and π/4 for the heading term.
    pub weight_q: Option<[f64; 3]>,
    pub cma: CmaConfig,
}

impl Default for TuningSpec {
    fn default() -> Self {
        Self {
            selector: DEFAULT_TARGET.iter().map(|s| s.to_string()).collect(),
            a_r: 0.2,
            weight_q: None,
            cma: CmaConfig::default(),
        }
    }
}

impl TuningSpec {
    /// Validate and return the parameter selector.
    pub fn validated_selector(&self) -> Result<ParamSelector, TuningError> {
        if !(self.a_r.is_finite() && self.a_r > 0.0) {
            return Err(TuningError::BadRadius(self.a_r));
        }
        if let Some(w) = self.weight_q {
            if !w.iter().all(|v| v.is_finite() && *v >= 0.0) || w.iter().all(|v| *v == 0.0) {
                return Err(TuningError::BadWeights);
            }
        }
        ParamSelector::new(self.selector.iter().cloned())
    }

    /// Resolve the deviation weights for a given ship.
    pub fn weights_for(&self, ship: &ShipParticulars64) -> [f64; 3] {
        self.weight_q.unwrap_or([ship.length, ship.length, FRAC_PI_4])
    }
}

/// Per-parameter search interval `[θ_i − a_r|θ_i|, θ_i + a_r|θ_i|]` around
/// the reference values. A zero reference value has an empty interval and
/// is rejected.
pub fn exploration_box(
    selector: &ParamSelector,
    base: &MmgParams64,
    a_r: f64,
) -> Result<BoxConstraint, TuningError> {
    if !(a_r.is_finite() && a_r > 0.0) {
        return Err(TuningError::BadRadius(a_r));
    }
    let mut lower = Vec::with_capacity(selector.len());
    let mut upper = Vec::with_capacity(selector.len());
    for name in selector.names() {
        let theta = base.get(name).expect("selector names validated");
        if theta == 0.0 {
            return Err(TuningError::DegenerateBox { name: name.clone() });
        }
        let half = a_r * theta.abs();
        lower.push(theta - half);
        upper.push(theta + half);
    }
    Ok(BoxConstraint::new(lower, upper)?)
}

/// A full parameter set with the selected entries replaced by `x`.
pub fn apply_candidate(base: &MmgParams64, selector: &ParamSelector, x: &[f64]) -> MmgParams64 {
    assert_eq!(x.len(), selector.len(), "candidate length must match selector");
    let mut params = base.clone();
    for (name, &value) in selector.names().iter().zip(x) {
        params.set(name, value).expect("selector names validated");
    }
    params
}

/// Perturb each selected parameter by an independent uniform relative
/// factor in `(−rel, +rel)`; used to fabricate ground-truth parameter sets
/// a known distance from the reference.
pub fn perturb_uniform(
    base: &MmgParams64,
    selector: &ParamSelector,
    rel: f64,
    seed: u64,
) -> MmgParams64 {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut params = base.clone();
    for name in selector.names() {
        let theta = params.get(name).expect("selector names validated");
        let u = 2.0 * rng.random::<f64>() - 1.0;
        params.set(name, theta * (1.0 + rel * u)).expect("selector names validated");
    }
    params
}
