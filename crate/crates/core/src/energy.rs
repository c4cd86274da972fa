//! Baseline and renewable-offset energy consumption.

use serde::{Deserialize, Serialize};

use crate::scenario::{SectorEnergyBreakdown, SectorShares, ThroughputSpec};

/// A value that was floored at zero, remembering whether the floor fired.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clamped {
    pub value: f64,
    pub clamped: bool,
}

impl Clamped {
    pub(crate) fn at_zero(raw: f64) -> Self {
        if raw < 0.0 {
            Self {
                value: 0.0,
                clamped: true,
            }
        } else {
            Self {
                value: raw,
                clamped: false,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyResult {
    pub baseline_total: f64,
    pub baseline_by_sector: SectorEnergyBreakdown,
    pub optimized_total: f64,
    pub reduction_fraction: f64,
}

impl EnergyResult {
    pub fn new(
        baseline_by_sector: SectorEnergyBreakdown,
        baseline_total: f64,
        optimized_total: f64,
    ) -> Self {
        let reduction_fraction = if baseline_total > 0.0 {
            (baseline_total - optimized_total) / baseline_total
        } else {
            0.0
        };
        Self {
            baseline_total,
            baseline_by_sector,
            optimized_total,
            reduction_fraction,
        }
    }
}

/// Annual consumption in MWh from throughput (TEU) and unit energy (kWh/TEU).
pub fn baseline_energy(throughput: &ThroughputSpec) -> f64 {
    throughput.teu_per_year * throughput.unit_energy / 1000.0
}

pub fn allocate_sectors(total: f64, shares: &SectorShares) -> SectorEnergyBreakdown {
    SectorEnergyBreakdown {
        equipment: total * shares.equipment_share,
        transport: total * shares.transport_share,
        buildings: total * shares.buildings_share,
    }
}

/// Consumption left after renewables displace grid supply. Floors at zero
/// when renewables exceed demand.
pub fn optimized_energy(baseline: f64, renewable_energy: f64) -> Clamped {
    Clamped::at_zero(baseline - renewable_energy)
}
