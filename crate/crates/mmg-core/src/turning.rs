//! Turning-circle measurement: fit a circle to the steady phase of a
//! turning manoeuvre and report its diameter.

use crate::dynamics::Trajectory;
use crate::scalar::Real;

/// Steady turning circle extracted from a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningCircle<T: Real> {
    pub center: (T, T),
    pub diameter: T,
    /// Root-mean-square radial deviation of the fitted points [m].
    pub rms_residual: T,
    /// True for a starboard (positive heading rate) turn.
    pub starboard: bool,
}

/// Least-squares circle through a point set (algebraic fit); returns
/// `(center_x, center_y, radius)`.
///
/// Points are centred on their centroid before solving, which keeps the
/// normal equations well-conditioned for tracks far from the origin.
/// Returns `None` for fewer than three points or a degenerate (collinear)
/// configuration.
pub fn fit_circle<T: Real>(points: &[(T, T)]) -> Option<(T, T, T)> {
    if points.len() < 3 {
        return None;
    }
    let n = T::of(points.len() as f64);
    let mut mx = T::zero();
    let mut my = T::zero();
    for &(x, y) in points {
        mx = mx + x;
        my = my + y;
    }
    mx = mx / n;
    my = my / n;

    // With centred coordinates the first-order sums vanish, so the 3x3
    // normal equations split into a 2x2 system and a scalar.
    let (mut sxx, mut sxy, mut syy) = (T::zero(), T::zero(), T::zero());
    let (mut sxz, mut syz, mut sz) = (T::zero(), T::zero(), T::zero());
    for &(px, py) in points {
        let x = px - mx;
        let y = py - my;
        let z = x * x + y * y;
        sxx = sxx + x * x;
        sxy = sxy + x * y;
        syy = syy + y * y;
        sxz = sxz + x * z;
        syz = syz + y * z;
        sz = sz + z;
    }
    let det = sxx * syy - sxy * sxy;
    if det == T::zero() || !det.is_finite() {
        return None;
    }
    let a = (sxz * syy - sxy * syz) / det;
    let b = (sxx * syz - sxy * sxz) / det;
    let c = sz / n;
    let half_a = a / T::of(2.0);
    let half_b = b / T::of(2.0);
    let radicand = c + half_a * half_a + half_b * half_b;
    if radicand <= T::zero() || !radicand.is_finite() {
        return None;
    }
    Some((mx + half_a, my + half_b, radicand.sqrt()))
}

/// Fit the steady circle over the final full revolution of heading.
///
/// Returns `None` when the run never completes a revolution (the turn did
/// not close within the recorded time).
pub fn turning_circle<T: Real>(traj: &Trajectory<T>) -> Option<TurningCircle<T>> {
    let states = &traj.states;
    if states.len() < 3 {
        return None;
    }
    let psi_end = states[states.len() - 1].psi;
    let total = psi_end - states[0].psi;
    let tau = T::of(std::f64::consts::TAU);
    if total.abs() < tau {
        return None;
    }
    // Walk back until one full revolution of heading is covered.
    let mut start = 0;
    for (i, s) in states.iter().enumerate().rev() {
        if (psi_end - s.psi).abs() >= tau {
            start = i;
            break;
        }
    }
    let points: Vec<(T, T)> = states[start..].iter().map(|s| (s.x, s.y)).collect();
    let (cx, cy, radius) = fit_circle(&points)?;
    let mut sq = T::zero();
    for &(x, y) in &points {
        let dx = x - cx;
        let dy = y - cy;
        let dev = (dx * dx + dy * dy).sqrt() - radius;
        sq = sq + dev * dev;
    }
    let rms = (sq / T::of(points.len() as f64)).sqrt();
    Some(TurningCircle {
        center: (cx, cy),
        diameter: radius + radius,
        rms_residual: rms,
        starboard: total > T::zero(),
    })
}
