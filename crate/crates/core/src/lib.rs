//! Port energy management simulator.
//!
//! Given a declarative [`Scenario`](scenario::Scenario) describing a
//! container terminal (throughput, sector split, emission factors,
//! renewable supply, per-TEU costs and an AGV cost matrix) this crate
//! computes baseline and renewable-offset energy, sector-weighted CO2
//! emissions and their derived intensity metrics, the optimal AGV
//! assignment, operating-cost savings and a scalarized objective score,
//! and serializes the lot as JSON or CSV.
//!
//! ```
//! use port_ems::{presets, report::run_scenario};
//!
//! let scenario = presets::load("yangshan-phase4").unwrap();
//! let report = run_scenario(&scenario).unwrap();
//! assert_eq!(report.energy.optimized_total, 708_750.0);
//! assert_eq!(report.emissions.reduction, 31_500.0);
//! ```

pub mod batch;
pub mod dispatch;
pub mod economics;
pub mod emissions;
pub mod energy;
pub mod error;
pub mod objective;
pub mod presets;
pub mod renewables;
pub mod report;
pub mod scenario;

pub use dispatch::{Assignment, CostMatrix};
pub use error::{DispatchError, Error, Result, ValidationError};
pub use report::{run_scenario, serialize_report, ReportFormat, SimulationReport};
pub use scenario::{validate_scenario, Scenario, ValidatedScenario};
