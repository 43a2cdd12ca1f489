//! Per-iteration optimization history and its CSV export.

use std::io::{self, Write};

use serde::Serialize;

/// One generation's summary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistoryRecord {
    /// Global iteration counter across restarts, starting at 1.
    pub iteration: usize,
    /// Objective evaluations consumed so far (all runs).
    pub evals: usize,
    /// Population size of the run this generation belongs to.
    pub lambda: usize,
    /// Best penalized fitness within this generation.
    pub best_f: f64,
    /// Best raw objective value seen so far at any feasible point.
    pub best_ever_f: f64,
    /// Restart index the generation belongs to (0 = first run).
    pub restart: usize,
    /// Step size at the end of the generation (normalized coordinates).
    pub sigma: f64,
}

/// Write history as CSV: one row per iteration.
pub fn write_history_csv<W: Write>(mut out: W, history: &[HistoryRecord]) -> io::Result<()> {
    writeln!(out, "iteration,evals,lambda,best_f,best_ever_f,restart")?;
    for h in history {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            h.iteration, h.evals, h.lambda, h.best_f, h.best_ever_f, h.restart
        )?;
    }
    Ok(())
}
