//! PV and wind generation models.
//!
//! Instantaneous power comes out in kW and annual yields in kWh; only the
//! aggregate [`GenerationResult::total_annual_mwh`] is in the canonical MWh.

use serde::{Deserialize, Serialize};

use crate::scenario::{PvArraySpec, WindTurbineSpec};

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GenerationResult {
    /// kWh/yr
    pub pv_annual: f64,
    /// kWh/yr
    pub wind_annual: f64,
    pub total_annual_mwh: f64,
}

impl GenerationResult {
    pub fn new(pv_annual: f64, wind_annual: f64) -> Self {
        Self {
            pv_annual,
            wind_annual,
            total_annual_mwh: (pv_annual + wind_annual) / 1000.0,
        }
    }
}

/// Panel output in kW for area (m²), irradiance (kW/m²) and module efficiency.
pub fn pv_instant_power(area: f64, irradiance: f64, efficiency: f64) -> f64 {
    area * irradiance * efficiency
}

/// Annual PV yield in kWh.
pub fn pv_annual_energy(peak_power: f64, sun_hours: f64, performance_ratio: f64) -> f64 {
    peak_power * sun_hours * performance_ratio
}

/// Turbine output in kW: half of rho * A * v³ * Cp, which is in W.
pub fn wind_instant_power(air_density: f64, swept_area: f64, wind_speed: f64, cp: f64) -> f64 {
    0.5 * air_density * swept_area * wind_speed.powi(3) * cp / 1000.0
}

/// Annual wind yield in kWh.
pub fn wind_annual_energy(average_power: f64, operating_hours: f64) -> f64 {
    average_power * operating_hours
}

impl PvArraySpec {
    pub fn instant_power(&self) -> f64 {
        pv_instant_power(self.panel_area, self.irradiance, self.module_efficiency)
    }

    pub fn annual_energy(&self) -> f64 {
        pv_annual_energy(self.peak_power, self.sun_hours, self.performance_ratio)
    }
}

impl WindTurbineSpec {
    pub fn instant_power(&self) -> f64 {
        wind_instant_power(
            self.air_density,
            self.swept_area,
            self.wind_speed,
            self.power_coefficient,
        )
    }

    pub fn annual_energy(&self) -> f64 {
        wind_annual_energy(self.average_power, self.operating_hours)
    }
}

/// Sums annual yields over every asset.
pub fn model_generation(pv: &[PvArraySpec], wind: &[WindTurbineSpec]) -> GenerationResult {
    let pv_annual = pv.iter().map(PvArraySpec::annual_energy).sum();
    let wind_annual = wind.iter().map(WindTurbineSpec::annual_energy).sum();
    GenerationResult::new(pv_annual, wind_annual)
}
