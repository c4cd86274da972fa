//! Flat per-TEU operating cost comparison.

use serde::{Deserialize, Serialize};

use crate::scenario::CostParameters;

/// Per-TEU figures in USD/TEU, totals in USD.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    pub per_teu_baseline: f64,
    pub per_teu_optimized: f64,
    pub per_teu_savings: f64,
    pub total_baseline: f64,
    pub total_optimized: f64,
    pub total_savings: f64,
    /// Negative when the optimized rate is the higher one.
    pub savings_fraction: f64,
}

pub fn cost_report(teu_per_year: f64, costs: &CostParameters) -> CostReport {
    let per_teu_savings = costs.baseline_cost_per_teu - costs.optimized_cost_per_teu;
    let total_baseline = costs.baseline_cost_per_teu * teu_per_year;
    let total_savings = per_teu_savings * teu_per_year;
    CostReport {
        per_teu_baseline: costs.baseline_cost_per_teu,
        per_teu_optimized: costs.optimized_cost_per_teu,
        per_teu_savings,
        total_baseline,
        total_optimized: costs.optimized_cost_per_teu * teu_per_year,
        total_savings,
        savings_fraction: if total_baseline > 0.0 {
            total_savings / total_baseline
        } else {
            0.0
        },
    }
}
