//! Runs one scenario end to end and serializes the result.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dispatch::{solve_assignment, Assignment};
use crate::economics::{cost_report, CostReport};
use crate::emissions::{self, EmissionsResult};
use crate::energy::{self, EnergyResult};
use crate::error::{Error, Result};
use crate::objective::{score_scenario, ObjectiveScore};
use crate::renewables::{self, GenerationResult};
use crate::scenario::{RenewableSource, ValidatedScenario};

/// Relative tolerance for cross-field checks and reference comparisons.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub scenario_name: String,
    pub throughput_teu: f64,
    /// MWh offsetting grid supply.
    pub renewable_energy: f64,
    /// MWh of new green energy behind the substitution efficiency.
    pub new_green_energy: f64,
    pub energy: EnergyResult,
    pub emissions: EmissionsResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generation: Option<GenerationResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Assignment>,
    pub costs: CostReport,
    pub objective: ObjectiveScore,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// JSON mirroring the report's field names.
    Structured,
    /// CSV, one `metric,value,unit` row per quantity.
    Tabular,
}

pub fn run_scenario(scenario: &ValidatedScenario) -> Result<SimulationReport> {
    let mut flags = Vec::new();
    let renewable_energy = scenario.renewable_energy();
    let new_green_energy = scenario.new_green_energy();

    let baseline_total = energy::baseline_energy(&scenario.throughput);
    let sectors = energy::allocate_sectors(baseline_total, &scenario.shares);
    let optimized = energy::optimized_energy(baseline_total, renewable_energy);
    if optimized.clamped {
        flags.push(format!(
            "renewables_exceed_demand: {renewable_energy} MWh renewable supply exceeds {baseline_total} MWh demand; optimized energy floored at 0"
        ));
    }
    let energy = EnergyResult::new(sectors, baseline_total, optimized.value);

    // Renewables displace grid supply; sector consumption itself is unchanged.
    let factors = &scenario.factors;
    let baseline_emissions = emissions::baseline_emissions(&sectors, factors);
    let optimized_emissions = emissions::optimized_emissions(&sectors, factors, renewable_energy);
    if optimized_emissions.clamped {
        flags.push(format!(
            "credit_exceeds_emissions: renewable credit exceeds {baseline_emissions} kg sector emissions; optimized emissions floored at 0"
        ));
    }
    let reduction = emissions::emission_reduction(baseline_emissions, optimized_emissions.value);
    let emissions = EmissionsResult {
        baseline_emissions,
        optimized_emissions: optimized_emissions.value,
        reduction,
        renewable_credit: emissions::renewable_credit(renewable_energy, factors),
        baseline_intensity: emissions::carbon_intensity(baseline_emissions, energy.baseline_total),
        optimized_intensity: emissions::carbon_intensity(
            optimized_emissions.value,
            energy.optimized_total,
        ),
        substitution_efficiency: emissions::substitution_efficiency(reduction, new_green_energy),
    };
    if new_green_energy != renewable_energy {
        flags.push(format!(
            "green_energy_differs: substitution efficiency uses {new_green_energy} MWh new green energy while the offset uses {renewable_energy} MWh"
        ));
    }

    let modeled = scenario.renewables.source == RenewableSource::FromPvWindModels;
    let generation =
        (modeled || !scenario.pv_arrays.is_empty() || !scenario.wind_turbines.is_empty())
            .then(|| renewables::model_generation(&scenario.pv_arrays, &scenario.wind_turbines));

    let assignment = scenario.cost_matrix().map(solve_assignment);
    let dispatch_cost = assignment.as_ref().map_or(0.0, |a| a.total_cost);

    let costs = cost_report(scenario.throughput.teu_per_year, &scenario.costs);
    let objective = score_scenario(
        emissions.optimized_emissions,
        energy.optimized_total,
        dispatch_cost,
        renewable_energy,
        &scenario.objective_weights,
    );

    if let Some(reference) = &scenario.reference {
        let computed = [
            energy.baseline_total,
            energy.optimized_total,
            emissions.baseline_emissions,
            emissions.optimized_emissions,
            costs.total_savings,
        ];
        for ((name, expected), value) in reference.entries().into_iter().zip(computed) {
            if let Some(expected) = expected {
                if !approx_eq(value, expected) {
                    flags.push(format!(
                        "reference_mismatch: {name} computed {value} differs from reference {expected}"
                    ));
                }
            }
        }
    }

    let report = SimulationReport {
        scenario_name: scenario.name.clone(),
        throughput_teu: scenario.throughput.teu_per_year,
        renewable_energy,
        new_green_energy,
        energy,
        emissions,
        generation,
        assignment,
        costs,
        objective,
        flags,
    };
    report.check_consistency().map_err(Error::Report)?;
    Ok(report)
}

fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= CONSISTENCY_TOLERANCE * a.abs().max(b.abs())
}

impl SimulationReport {
    /// Verifies the identities that tie the embedded results together.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let e = &self.energy;
        let m = &self.emissions;
        let c = &self.costs;
        let checks = [
            (
                "optimized_total <= baseline_total",
                e.optimized_total <= e.baseline_total,
            ),
            (
                "sector breakdown sums to baseline_total",
                approx_eq(e.baseline_by_sector.total(), e.baseline_total),
            ),
            (
                "reduction = baseline - optimized emissions",
                m.reduction == m.baseline_emissions - m.optimized_emissions,
            ),
            (
                "baseline intensity",
                approx_eq(
                    m.baseline_intensity,
                    emissions::carbon_intensity(m.baseline_emissions, e.baseline_total),
                ),
            ),
            (
                "optimized intensity",
                approx_eq(
                    m.optimized_intensity,
                    emissions::carbon_intensity(m.optimized_emissions, e.optimized_total),
                ),
            ),
            (
                "per-TEU savings",
                c.per_teu_savings == c.per_teu_baseline - c.per_teu_optimized,
            ),
            (
                "objective total = sum of terms",
                self.objective.total
                    == self.objective.terms.emissions
                        + self.objective.terms.energy
                        + self.objective.terms.dispatch
                        + self.objective.terms.renewables,
            ),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((what, _)) => Err(format!(
                "inconsistent report for `{}`: {what}",
                self.scenario_name
            )),
            None => Ok(()),
        }
    }

    /// `(metric, value, unit)` rows in presentation order.
    pub fn metrics(&self) -> Vec<(String, f64, &'static str)> {
        let e = &self.energy;
        let m = &self.emissions;
        let c = &self.costs;
        let o = &self.objective;
        let mut rows: Vec<(String, f64, &'static str)> = [
            ("throughput_teu", self.throughput_teu, "TEU/yr"),
            ("baseline_total_mwh", e.baseline_total, "MWh"),
            ("optimized_total_mwh", e.optimized_total, "MWh"),
            (
                "baseline_equipment_mwh",
                e.baseline_by_sector.equipment,
                "MWh",
            ),
            (
                "baseline_transport_mwh",
                e.baseline_by_sector.transport,
                "MWh",
            ),
            (
                "baseline_buildings_mwh",
                e.baseline_by_sector.buildings,
                "MWh",
            ),
            (
                "energy_reduction_fraction",
                e.reduction_fraction,
                "fraction",
            ),
            ("renewable_energy_mwh", self.renewable_energy, "MWh"),
            ("new_green_energy_mwh", self.new_green_energy, "MWh"),
            ("baseline_emissions_kg", m.baseline_emissions, "kg CO2"),
            ("optimized_emissions_kg", m.optimized_emissions, "kg CO2"),
            ("emission_reduction_kg", m.reduction, "kg CO2"),
            ("renewable_credit_kg", m.renewable_credit, "kg CO2"),
            ("baseline_intensity", m.baseline_intensity, "kg CO2/MWh"),
            ("optimized_intensity", m.optimized_intensity, "kg CO2/MWh"),
            (
                "substitution_efficiency",
                m.substitution_efficiency,
                "kg CO2/MWh",
            ),
        ]
        .into_iter()
        .map(|(k, v, u)| (k.to_string(), v, u))
        .collect();

        if let Some(g) = &self.generation {
            rows.push(("pv_annual_kwh".into(), g.pv_annual, "kWh"));
            rows.push(("wind_annual_kwh".into(), g.wind_annual, "kWh"));
            rows.push(("generation_total_mwh".into(), g.total_annual_mwh, "MWh"));
        }
        if let Some(a) = &self.assignment {
            rows.push(("assignment_total_cost".into(), a.total_cost, "distance"));
            for (row, col) in a.pairs() {
                rows.push((format!("assignment_row_{row}"), col as f64, "column"));
            }
        }
        rows.extend(
            [
                ("per_teu_baseline_usd", c.per_teu_baseline, "USD/TEU"),
                ("per_teu_optimized_usd", c.per_teu_optimized, "USD/TEU"),
                ("per_teu_savings_usd", c.per_teu_savings, "USD/TEU"),
                ("total_baseline_usd", c.total_baseline, "USD"),
                ("total_optimized_usd", c.total_optimized, "USD"),
                ("total_savings_usd", c.total_savings, "USD"),
                ("savings_fraction", c.savings_fraction, "fraction"),
                ("objective_total", o.total, "score"),
                ("objective_emissions_term", o.terms.emissions, "score"),
                ("objective_energy_term", o.terms.energy, "score"),
                ("objective_dispatch_term", o.terms.dispatch, "score"),
                ("objective_renewables_term", o.terms.renewables, "score"),
            ]
            .into_iter()
            .map(|(k, v, u)| (k.to_string(), v, u)),
        );
        rows
    }

    /// Human-readable digest with presentation rounding.
    pub fn summary(&self) -> String {
        let e = &self.energy;
        let m = &self.emissions;
        let c = &self.costs;
        let mut s = String::new();
        let _ = writeln!(s, "scenario {}", self.scenario_name);
        let _ = writeln!(
            s,
            "  energy      {:.0} -> {:.0} MWh ({:.1}% reduction)",
            e.baseline_total,
            e.optimized_total,
            100.0 * e.reduction_fraction
        );
        let _ = writeln!(
            s,
            "  emissions   {:.0} -> {:.0} kg CO2 ({:.0} kg reduction)",
            m.baseline_emissions, m.optimized_emissions, m.reduction
        );
        let _ = writeln!(
            s,
            "  intensity   {:.2} -> {:.2} kg CO2/MWh; substitution efficiency {:.2} kg CO2/MWh",
            m.baseline_intensity, m.optimized_intensity, m.substitution_efficiency
        );
        if let Some(a) = &self.assignment {
            let _ = writeln!(s, "  dispatch    {a}");
        }
        let _ = writeln!(
            s,
            "  costs       ${:.1}M -> ${:.1}M, savings ${:.1}M ({:.0}%)",
            c.total_baseline / 1e6,
            c.total_optimized / 1e6,
            c.total_savings / 1e6,
            100.0 * c.savings_fraction
        );
        let _ = writeln!(s, "  objective   {}", self.objective.total);
        for flag in &self.flags {
            let _ = writeln!(s, "  flag        {flag}");
        }
        s
    }
}

/// Full-precision numeric cell; never writes `-0`.
pub fn format_value(value: f64) -> String {
    if value == 0.0 {
        "0".to_string()
    } else {
        value.to_string()
    }
}

pub fn serialize_report(report: &SimulationReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Structured => {
            let mut out =
                serde_json::to_vec_pretty(report).expect("report serialization is infallible");
            out.push(b'\n');
            out
        }
        ReportFormat::Tabular => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["metric", "value", "unit"])
                .expect("in-memory write");
            for (metric, value, unit) in report.metrics() {
                w.write_record([metric.as_str(), &format_value(value), unit])
                    .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

/// Several reports in one document: a JSON array, or CSV with a leading
/// `scenario` column.
pub fn serialize_reports(reports: &[SimulationReport], format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Structured => {
            let mut out =
                serde_json::to_vec_pretty(reports).expect("report serialization is infallible");
            out.push(b'\n');
            out
        }
        ReportFormat::Tabular => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["scenario", "metric", "value", "unit"])
                .expect("in-memory write");
            for report in reports {
                for (metric, value, unit) in report.metrics() {
                    w.write_record([
                        report.scenario_name.as_str(),
                        metric.as_str(),
                        &format_value(value),
                        unit,
                    ])
                    .expect("in-memory write");
                }
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}
