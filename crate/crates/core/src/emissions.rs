//! Carbon accounting: sector-weighted emissions, renewable credit and the
//! intensity / substitution metrics derived from them.
//!
//! All sector energies are electrical, in MWh; factors are kg CO2/MWh, so
//! every result here is in kg CO2.

use serde::{Deserialize, Serialize};

use crate::energy::Clamped;
use crate::scenario::{EmissionFactorSet, SectorEnergyBreakdown};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmissionsResult {
    pub baseline_emissions: f64,
    pub optimized_emissions: f64,
    pub reduction: f64,
    pub renewable_credit: f64,
    pub baseline_intensity: f64,
    pub optimized_intensity: f64,
    pub substitution_efficiency: f64,
}

/// Sum of sector energy times sector factor.
pub fn baseline_emissions(sectors: &SectorEnergyBreakdown, factors: &EmissionFactorSet) -> f64 {
    sectors.equipment * factors.equipment_factor
        + sectors.transport * factors.transport_factor
        + sectors.buildings * factors.buildings_factor
}

/// Credit earned by displacing grid energy with renewables.
pub fn renewable_credit(renewable_energy: f64, factors: &EmissionFactorSet) -> f64 {
    renewable_energy * factors.grid_factor
}

/// Sector emissions after optimization, less the renewable credit.
/// Floors at zero when the credit exceeds the emissions.
pub fn optimized_emissions(
    new_sectors: &SectorEnergyBreakdown,
    factors: &EmissionFactorSet,
    renewable_energy: f64,
) -> Clamped {
    Clamped::at_zero(
        baseline_emissions(new_sectors, factors) - renewable_credit(renewable_energy, factors),
    )
}

/// Signed: negative when the optimized case emits more.
pub fn emission_reduction(baseline: f64, optimized: f64) -> f64 {
    baseline - optimized
}

pub fn carbon_intensity(emissions: f64, energy: f64) -> f64 {
    if energy == 0.0 {
        0.0
    } else {
        emissions / energy
    }
}

pub fn substitution_efficiency(reduction: f64, green_energy: f64) -> f64 {
    if green_energy == 0.0 {
        0.0
    } else {
        reduction / green_energy
    }
}
