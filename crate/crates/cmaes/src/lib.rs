//! Box-constrained CMA-ES for small, expensive, derivative-free problems.
//!
//! The optimizer works in normalized `[0, 1]^n` coordinates internally.
//! Out-of-box samples are clamped before evaluation and penalized in the
//! ranking by their squared clamping distance, so the strategy keeps full
//! rank while the reported optimum is always feasible. Runs that converge
//! early restart with a doubled population and a fresh random mean until
//! the evaluation budget is exhausted.
//!
//! Everything is deterministic for a fixed seed: a single ChaCha12 stream
//! drives sampling and restart means across the whole minimization.

mod config;
mod constraint;
mod error;
mod history;
mod minimize;
mod run;

pub use config::CmaConfig;
pub use constraint::{repair, BoxConstraint};
pub use error::{OptError, Termination};
pub use history::{write_history_csv, HistoryRecord};
pub use minimize::{minimize, minimize_single_run, OptResult, RestartRecord};
