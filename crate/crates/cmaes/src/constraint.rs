//! Axis-aligned box constraints and the affine map to unit coordinates.

use nalgebra::DVector;

use crate::error::OptError;

/// Per-coordinate search bounds, `lower[i] < upper[i]`.
///
/// The optimizer itself works in normalized `[0, 1]^n` coordinates; this
/// type owns the affine map between those and the original space.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxConstraint {
    lower: DVector<f64>,
    upper: DVector<f64>,
}

impl BoxConstraint {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, OptError> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(OptError::InvalidBox("bound vectors empty or of unequal length"));
        }
        for (&lo, &hi) in lower.iter().zip(&upper) {
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(OptError::InvalidBox("bounds must be finite"));
            }
            if lo >= hi {
                return Err(OptError::InvalidBox("each lower bound must be < upper bound"));
            }
        }
        Ok(Self { lower: DVector::from(lower), upper: DVector::from(upper) })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &DVector<f64> {
        &self.lower
    }

    pub fn upper(&self) -> &DVector<f64> {
        &self.upper
    }

    /// Map original coordinates to `[0, 1]^n`.
    pub fn normalize(&self, x: &[f64]) -> DVector<f64> {
        DVector::from_iterator(
            self.dim(),
            x.iter()
                .zip(self.lower.iter().zip(self.upper.iter()))
                .map(|(&v, (&lo, &hi))| (v - lo) / (hi - lo)),
        )
    }

    /// Map normalized coordinates back to the original space.
    ///
    /// Exactly hits the stored bound when the normalized coordinate is
    /// exactly 0 or 1, so repaired boundary points denormalize to the bound
    /// bit-for-bit.
    pub fn denormalize(&self, z: &DVector<f64>) -> Vec<f64> {
        z.iter()
            .zip(self.lower.iter().zip(self.upper.iter()))
            .map(|(&t, (&lo, &hi))| {
                if t == 0.0 {
                    lo
                } else if t == 1.0 {
                    hi
                } else {
                    lo + t * (hi - lo)
                }
            })
            .collect()
    }

    /// True when `x` (original coordinates) lies inside the box.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(self.upper.iter()))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }
}

/// Clamp normalized coordinates into `[0, 1]^n`; returns the repaired
/// vector and the squared clamping distance.
pub fn repair(z: &DVector<f64>) -> (DVector<f64>, f64) {
    let mut repaired = z.clone();
    let mut dist_sq = 0.0;
    for v in repaired.iter_mut() {
        let clamped = v.clamp(0.0, 1.0);
        let d = *v - clamped;
        dist_sq += d * d;
        *v = clamped;
    }
    (repaired, dist_sq)
}
