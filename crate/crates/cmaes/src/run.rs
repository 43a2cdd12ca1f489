//! A single CMA-ES run: sampling, repair-and-penalty evaluation, ranking,
//! and the standard mean/step-size/covariance updates.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::constraint::{repair, BoxConstraint};
use crate::error::{OptError, Termination};
use crate::history::HistoryRecord;

/// Recombination weights and adaptation rates for dimension `n` and
/// population `lambda`, following the widely used tutorial defaults.
pub(crate) struct Strategy {
    pub weights: Vec<f64>,
    pub mu_eff: f64,
    pub c_sigma: f64,
    pub d_sigma: f64,
    pub c_c: f64,
    pub c_1: f64,
    pub c_mu: f64,
    pub chi_n: f64,
}

impl Strategy {
    pub fn new(n: usize, lambda: usize) -> Self {
        let nf = n as f64;
        let mu = lambda / 2;
        let mut weights: Vec<f64> = (0..mu)
            .map(|i| ((lambda as f64 + 1.0) / 2.0).ln() - ((i + 1) as f64).ln())
            .collect();
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= sum;
        }
        let mu_eff = 1.0 / weights.iter().map(|w| w * w).sum::<f64>();
        let c_sigma = (mu_eff + 2.0) / (nf + mu_eff + 5.0);
        let d_sigma =
            1.0 + 2.0 * (((mu_eff - 1.0) / (nf + 1.0)).sqrt() - 1.0).max(0.0) + c_sigma;
        let c_c = (4.0 + mu_eff / nf) / (nf + 4.0 + 2.0 * mu_eff / nf);
        let c_1 = 2.0 / ((nf + 1.3) * (nf + 1.3) + mu_eff);
        let c_mu = (1.0 - c_1)
            .min(2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((nf + 2.0) * (nf + 2.0) + mu_eff));
        let chi_n = nf.sqrt() * (1.0 - 1.0 / (4.0 * nf) + 1.0 / (21.0 * nf * nf));
        Self { weights, mu_eff, c_sigma, d_sigma, c_c, c_1, c_mu, chi_n }
    }
}

pub(crate) struct RunSetup {
    pub lambda: usize,
    pub sigma0: f64,
    pub mean0: DVector<f64>,
    /// Evaluations this run may consume (≥ 1).
    pub budget: usize,
    pub tol_fun: f64,
    pub tol_x: f64,
    pub restart: usize,
    pub iter_offset: usize,
    pub eval_offset: usize,
    /// Best raw objective from earlier runs, for the history column.
    pub best_ever_so_far: f64,
}

pub(crate) struct RunOutcome {
    /// Best feasible point, normalized coordinates.
    pub best_z: DVector<f64>,
    /// Raw objective at `best_z`.
    pub best_f: f64,
    pub evals: usize,
    pub iters: usize,
    pub termination: Termination,
}

const CONDITION_LIMIT: f64 = 1e14;
const SIGMA_DIVERGENCE: f64 = 1e6;
const PENALTY_SCALE: f64 = 1e4;
const PENALTY_FLOOR: f64 = 1e-8;

pub(crate) fn run<F: FnMut(&[f64]) -> f64>(
    f: &mut F,
    bounds: &BoxConstraint,
    setup: &RunSetup,
    rng: &mut ChaCha12Rng,
    history: &mut Vec<HistoryRecord>,
) -> Result<RunOutcome, OptError> {
    let n = bounds.dim();
    let lambda = setup.lambda;
    let strat = Strategy::new(n, lambda);

    let mut mean = setup.mean0.clone();
    let mut sigma = setup.sigma0;
    let mut cov: DMatrix<f64> = DMatrix::identity(n, n);
    let mut p_sigma: DVector<f64> = DVector::zeros(n);
    let mut p_c: DVector<f64> = DVector::zeros(n);
    let mut eig_vectors: DMatrix<f64> = DMatrix::identity(n, n);
    let mut eig_sqrt: DVector<f64> = DVector::from_element(n, 1.0);

    let mut evals = 0usize;
    let mut iters = 0usize;
    let mut c_pen: Option<f64> = None;

    let window = 10 + (30 * n).div_ceil(lambda);
    let mut recent_best: VecDeque<f64> = VecDeque::with_capacity(window);

    let mut eval_at = |z_repaired: &DVector<f64>,
                       evals: &mut usize|
     -> Result<f64, OptError> {
        let x = bounds.denormalize(z_repaired);
        let value = f(&x);
        *evals += 1;
        if !value.is_finite() {
            return Err(OptError::NonFiniteObjective { coords: x, value });
        }
        Ok(value)
    };

    // The initial mean is always evaluated as a candidate: when a caller
    // seeds it at a reference parameter set, the final result can then
    // never be worse than that reference.
    let (mut best_z, mut best_f) = {
        let (repaired, _) = repair(&mean);
        let value = eval_at(&repaired, &mut evals)?;
        (repaired, value)
    };

    let termination = loop {
        if evals >= setup.budget {
            break Termination::Budget;
        }

        // Sample and evaluate one generation, stopping short if the budget
        // runs out mid-generation (those candidates still count toward the
        // best-ever point, but no strategy update happens).
        let mut samples: Vec<DVector<f64>> = Vec::with_capacity(lambda);
        let mut raw: Vec<f64> = Vec::with_capacity(lambda);
        let mut dist_sq: Vec<f64> = Vec::with_capacity(lambda);
        for _ in 0..lambda {
            if evals >= setup.budget {
                break;
            }
            let xi: DVector<f64> =
                DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
            let y = &eig_vectors * eig_sqrt.component_mul(&xi);
            let z = &mean + &y * sigma;
            let (repaired, d2) = repair(&z);
            let value = eval_at(&repaired, &mut evals)?;
            if value < best_f {
                best_f = value;
                best_z = repaired;
            }
            samples.push(z);
            raw.push(value);
            dist_sq.push(d2);
        }
        if samples.len() < lambda {
            break Termination::Budget;
        }
        iters += 1;

        // Penalty coefficient: fixed per run from the first generation's
        // typical objective magnitude.
        let cp = *c_pen.get_or_insert_with(|| {
            let mut mags: Vec<f64> = raw.iter().map(|v| v.abs()).collect();
            mags.sort_by(|a, b| a.partial_cmp(b).expect("finite magnitudes"));
            (PENALTY_SCALE * mags[mags.len() / 2]).max(PENALTY_FLOOR)
        });
        let fitness: Vec<f64> =
            raw.iter().zip(&dist_sq).map(|(v, d)| v + cp * d).collect();

        let mut order: Vec<usize> = (0..lambda).collect();
        order.sort_by(|&a, &b| {
            fitness[a]
                .partial_cmp(&fitness[b])
                .expect("finite fitness")
                .then(a.cmp(&b))
        });

        // Weighted recombination over the unrepaired samples.
        let old_mean = mean.clone();
        let mut y_w: DVector<f64> = DVector::zeros(n);
        let mut new_mean: DVector<f64> = DVector::zeros(n);
        for (w, &idx) in strat.weights.iter().zip(&order) {
            new_mean += &samples[idx] * *w;
            y_w += (&samples[idx] - &old_mean) * (*w / sigma);
        }
        mean = new_mean;

        // Cumulative step-size adaptation.
        let inv_sqrt_c_y = {
            let back = eig_vectors.transpose() * &y_w;
            let scaled =
                DVector::from_fn(n, |i, _| back[i] / eig_sqrt[i]);
            &eig_vectors * scaled
        };
        let cs = strat.c_sigma;
        p_sigma = &p_sigma * (1.0 - cs)
            + inv_sqrt_c_y * (cs * (2.0 - cs) * strat.mu_eff).sqrt();
        let ps_norm = p_sigma.norm();
        let expected = (1.0 - (1.0 - cs).powi(2 * iters as i32)).sqrt() * strat.chi_n;
        let h_sigma = ps_norm / expected < (1.4 + 2.0 / (n as f64 + 1.0));

        // Covariance adaptation: rank-1 plus rank-mu.
        let cc = strat.c_c;
        p_c = &p_c * (1.0 - cc)
            + &y_w * (if h_sigma { (cc * (2.0 - cc) * strat.mu_eff).sqrt() } else { 0.0 });
        let mut rank_mu: DMatrix<f64> = DMatrix::zeros(n, n);
        for (w, &idx) in strat.weights.iter().zip(&order) {
            let y = (&samples[idx] - &old_mean) / sigma;
            rank_mu += (&y * y.transpose()) * *w;
        }
        let delta_h = if h_sigma { 0.0 } else { cc * (2.0 - cc) };
        cov = &cov * (1.0 - strat.c_1 - strat.c_mu)
            + (&p_c * p_c.transpose() + &cov * delta_h) * strat.c_1
            + rank_mu * strat.c_mu;
        // Keep exact symmetry against drift.
        cov = (&cov + &cov.transpose()) * 0.5;

        sigma *= ((cs / strat.d_sigma) * (ps_norm / strat.chi_n - 1.0))
            .min(1.0)
            .exp();

        // Refresh the eigendecomposition used for sampling.
        let eig = nalgebra::SymmetricEigen::new(cov.clone());
        let max_eig = eig.eigenvalues.max();
        let min_eig = eig.eigenvalues.min();
        eig_vectors = eig.eigenvectors;
        eig_sqrt = eig.eigenvalues.map(|v| v.max(1e-30).sqrt());

        let gen_best = fitness[order[0]];
        if recent_best.len() == window {
            recent_best.pop_front();
        }
        recent_best.push_back(gen_best);

        history.push(HistoryRecord {
            iteration: setup.iter_offset + iters,
            evals: setup.eval_offset + evals,
            lambda,
            best_f: gen_best,
            best_ever_f: best_f.min(setup.best_ever_so_far),
            restart: setup.restart,
            sigma,
        });

        if !(sigma.is_finite() && max_eig.is_finite()) || sigma <= 0.0 {
            break Termination::Divergence;
        }
        if sigma > SIGMA_DIVERGENCE {
            break Termination::Divergence;
        }
        if min_eig <= 0.0 || max_eig / min_eig.max(1e-300) > CONDITION_LIMIT {
            break Termination::Condition;
        }
        if sigma * max_eig.sqrt() < setup.tol_x {
            break Termination::ToleranceX;
        }
        if recent_best.len() == window {
            let hi = recent_best.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = recent_best.iter().cloned().fold(f64::INFINITY, f64::min);
            if hi - lo <= setup.tol_fun * hi.abs().max(1.0) {
                break Termination::ToleranceFun;
            }
        }
    };

    Ok(RunOutcome { best_z, best_f, evals, iters, termination })
}
