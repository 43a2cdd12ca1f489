//! 3-DOF ship manoeuvring model of the MMG family: modular hull, propeller
//! and rudder forces, rigid-body dynamics, and forward-Euler simulation.
//!
//! The model is generic over the scalar type through the [`Real`] trait so
//! it can run in `f32` or `f64`; the `f64` instantiations used everywhere
//! else in this workspace are exported as type aliases at the crate root
//! ([`State64`], [`MmgParams64`], …).

pub mod dynamics;
pub mod error;
pub mod hull;
pub mod model;
pub mod params;
pub mod propeller;
pub mod rudder;
pub mod scalar;
pub mod ship;
pub mod state;
pub mod turning;

pub use dynamics::{euler_step, simulate, Trajectory};
pub use error::{ModelError, SimulationError, StepError};
pub use model::{f_mmg, f_zeta, forces, ForceBreakdown, MassProperties};
pub use params::{FlapMap, MmgParams, DEFAULT_TARGET, PARAM_NAMES};
pub use scalar::Real;
pub use ship::ShipParticulars;
pub use state::{ControlInput, Flow, ForceTriple, State};
pub use turning::{fit_circle, turning_circle, TurningCircle};

/// `f64` instantiations — the workspace default precision.
pub type State64 = State<f64>;
pub type ControlInput64 = ControlInput<f64>;
pub type ForceTriple64 = ForceTriple<f64>;
pub type MmgParams64 = MmgParams<f64>;
pub type FlapMap64 = FlapMap<f64>;
pub type ShipParticulars64 = ShipParticulars<f64>;
pub type Trajectory64 = Trajectory<f64>;
pub type TurningCircle64 = TurningCircle<f64>;
