//! Batch evaluation over many scenarios or cost matrices.
//!
//! With the `parallel` feature (on by default) the top-level functions fan
//! out over the rayon thread pool; without it they fall back to the
//! [`sequential`] versions. Output order always matches input order, so
//! both paths produce identical results.

use crate::dispatch::{brute_force_assignment, solve_assignment, Assignment, CostMatrix};
use crate::error::{DispatchError, Result};
use crate::report::{run_scenario, SimulationReport};
use crate::scenario::ValidatedScenario;

/// Solver and oracle totals for one matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCheck {
    pub solver_total: f64,
    pub oracle_total: f64,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.solver_total == self.oracle_total
    }
}

fn oracle_check(matrix: &CostMatrix) -> Result<OracleCheck, DispatchError> {
    Ok(OracleCheck {
        solver_total: solve_assignment(matrix).total_cost,
        oracle_total: brute_force_assignment(matrix)?.total_cost,
    })
}

pub mod sequential {
    use super::*;

    pub fn run_scenarios(scenarios: &[ValidatedScenario]) -> Vec<Result<SimulationReport>> {
        scenarios.iter().map(run_scenario).collect()
    }

    pub fn solve_assignments(matrices: &[CostMatrix]) -> Vec<Assignment> {
        matrices.iter().map(solve_assignment).collect()
    }

    pub fn check_against_oracle(
        matrices: &[CostMatrix],
    ) -> Vec<Result<OracleCheck, DispatchError>> {
        matrices.iter().map(oracle_check).collect()
    }
}

#[cfg(feature = "parallel")]
pub mod parallel {
    use rayon::prelude::*;

    use super::*;

    pub fn run_scenarios(scenarios: &[ValidatedScenario]) -> Vec<Result<SimulationReport>> {
        scenarios.par_iter().map(run_scenario).collect()
    }

    pub fn solve_assignments(matrices: &[CostMatrix]) -> Vec<Assignment> {
        matrices.par_iter().map(solve_assignment).collect()
    }

    pub fn check_against_oracle(
        matrices: &[CostMatrix],
    ) -> Vec<Result<OracleCheck, DispatchError>> {
        matrices.par_iter().map(oracle_check).collect()
    }
}

#[cfg(feature = "parallel")]
pub use parallel::{check_against_oracle, run_scenarios, solve_assignments};
#[cfg(not(feature = "parallel"))]
pub use sequential::{check_against_oracle, run_scenarios, solve_assignments};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn matrices() -> Vec<CostMatrix> {
        (1..=6)
            .map(|n| {
                let data = (0..n * n)
                    .map(|k| ((k * 37 + n * 11) % 101) as f64)
                    .collect();
                CostMatrix::from_flat(n, n, data).unwrap()
            })
            .collect()
    }

    #[test]
    fn batch_matches_sequential() {
        let ms = matrices();
        assert_eq!(solve_assignments(&ms), sequential::solve_assignments(&ms));
        let checks = check_against_oracle(&ms);
        assert!(checks.iter().all(|c| c.as_ref().unwrap().agrees()));

        let scenarios: Vec<_> = presets::names()
            .map(|n| presets::load(n).unwrap())
            .collect();
        let a: Vec<_> = run_scenarios(&scenarios)
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        let b: Vec<_> = sequential::run_scenarios(&scenarios)
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_limit_surfaces_per_item() {
        let big = CostMatrix::from_flat(11, 11, vec![0.0; 121]).unwrap();
        let out = check_against_oracle(&[big]);
        assert_eq!(out[0], Err(DispatchError::OracleSizeLimit(11)));
    }
}
