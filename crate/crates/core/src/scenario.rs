//! Scenario model: every input of the port model as a validated domain type.
//!
//! Units are canonical throughout: energy in MWh, emissions in kg CO2,
//! emission factors in kg CO2/MWh, money in USD. The PV and wind asset
//! descriptions keep their natural kW / kWh units; conversion to MWh
//! happens in [`crate::renewables`].
//!
//! A [`Scenario`] is the raw, deserialized form and may hold any values.
//! [`validate_scenario`] turns it into a [`ValidatedScenario`], which is the
//! only thing the engines accept.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::dispatch::CostMatrix;
use crate::error::{Error, ValidationError};
use crate::objective::ObjectiveWeights;
use crate::renewables;

/// Tolerance on the sum of the three sector shares.
pub const SHARE_SUM_TOLERANCE: f64 = 1e-9;

/// Relative tolerance between a stated and a modeled renewable supply.
pub const MODELED_SUPPLY_TOLERANCE: f64 = 1e-6;

/// Upper bound on the wind power coefficient (Betz limit).
pub const BETZ_LIMIT: f64 = 0.593;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThroughputSpec {
    /// TEU per year.
    pub teu_per_year: f64,
    /// kWh per TEU.
    pub unit_energy: f64,
}

/// Energy per sector, in MWh.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorEnergyBreakdown {
    pub equipment: f64,
    pub transport: f64,
    pub buildings: f64,
}

impl SectorEnergyBreakdown {
    pub fn total(&self) -> f64 {
        self.equipment + self.transport + self.buildings
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorShares {
    pub equipment_share: f64,
    pub transport_share: f64,
    pub buildings_share: f64,
}

impl SectorShares {
    pub fn new(equipment: f64, transport: f64, buildings: f64) -> Self {
        Self {
            equipment_share: equipment,
            transport_share: transport,
            buildings_share: buildings,
        }
    }

    pub fn sum(&self) -> f64 {
        self.equipment_share + self.transport_share + self.buildings_share
    }
}

/// Emission factors in kg CO2/MWh.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmissionFactorSet {
    pub equipment_factor: f64,
    pub transport_factor: f64,
    pub buildings_factor: f64,
    /// Credited per MWh of grid energy displaced by renewables.
    pub grid_factor: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenewableSource {
    Explicit,
    FromPvWindModels,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenewableSupplySpec {
    /// Annual renewable supply offsetting grid energy, MWh. Required when
    /// `source` is explicit; filled in from the asset models otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub renewable_energy: Option<f64>,
    pub source: RenewableSource,
    /// Newly introduced green energy used as the denominator of the
    /// substitution efficiency, MWh. Defaults to `renewable_energy`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub new_green_energy: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PvArraySpec {
    /// m²
    pub panel_area: f64,
    /// kW/m²
    pub irradiance: f64,
    pub module_efficiency: f64,
    /// kW
    pub peak_power: f64,
    /// Effective sunshine hours per year.
    pub sun_hours: f64,
    pub performance_ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindTurbineSpec {
    /// kg/m³
    pub air_density: f64,
    /// m²
    pub swept_area: f64,
    /// m/s
    pub wind_speed: f64,
    pub power_coefficient: f64,
    /// kW
    pub average_power: f64,
    /// h/yr
    pub operating_hours: f64,
}

/// USD per TEU.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostParameters {
    pub baseline_cost_per_teu: f64,
    pub optimized_cost_per_teu: f64,
}

/// Published figures a scenario is expected to reproduce. Any computed
/// value that disagrees is flagged in the report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceFigures {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline_energy_mwh: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimized_energy_mwh: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline_emissions_kg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimized_emissions_kg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_savings_usd: Option<f64>,
}

impl ReferenceFigures {
    pub(crate) fn entries(&self) -> [(&'static str, Option<f64>); 5] {
        [
            ("baseline_energy_mwh", self.baseline_energy_mwh),
            ("optimized_energy_mwh", self.optimized_energy_mwh),
            ("baseline_emissions_kg", self.baseline_emissions_kg),
            ("optimized_emissions_kg", self.optimized_emissions_kg),
            ("total_savings_usd", self.total_savings_usd),
        ]
    }
}

/// One port case, as read from a scenario file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub throughput: ThroughputSpec,
    pub shares: SectorShares,
    pub factors: EmissionFactorSet,
    pub renewables: RenewableSupplySpec,
    #[serde(default)]
    pub pv_arrays: Vec<PvArraySpec>,
    #[serde(default)]
    pub wind_turbines: Vec<WindTurbineSpec>,
    pub costs: CostParameters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dispatch_matrix: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub objective_weights: ObjectiveWeights,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceFigures>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization is infallible")
    }
}

/// A scenario whose invariants have all been checked.
///
/// Derefs to the underlying [`Scenario`]; `renewables.renewable_energy` is
/// always populated.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedScenario {
    scenario: Scenario,
    dispatch_matrix: Option<CostMatrix>,
}

impl ValidatedScenario {
    pub fn renewable_energy(&self) -> f64 {
        self.scenario
            .renewables
            .renewable_energy
            .expect("populated during validation")
    }

    /// Denominator for the substitution efficiency.
    pub fn new_green_energy(&self) -> f64 {
        self.scenario
            .renewables
            .new_green_energy
            .unwrap_or_else(|| self.renewable_energy())
    }

    pub fn cost_matrix(&self) -> Option<&CostMatrix> {
        self.dispatch_matrix.as_ref()
    }

    pub fn into_inner(self) -> Scenario {
        self.scenario
    }
}

impl Deref for ValidatedScenario {
    type Target = Scenario;

    fn deref(&self) -> &Scenario {
        &self.scenario
    }
}

impl TryFrom<Scenario> for ValidatedScenario {
    type Error = ValidationError;

    fn try_from(raw: Scenario) -> Result<Self, ValidationError> {
        validate_scenario(raw)
    }
}

/// Parse and validate in one step.
pub fn load_scenario(text: &str) -> Result<ValidatedScenario, Error> {
    Ok(validate_scenario(Scenario::from_json(text)?)?)
}

/// Checks every invariant, reporting the first violation found.
pub fn validate_scenario(mut raw: Scenario) -> Result<ValidatedScenario, ValidationError> {
    if raw.name.trim().is_empty() {
        return Err(ValidationError::new("name", "must be non-empty"));
    }

    let t = &raw.throughput;
    non_negative("throughput.teu_per_year", t.teu_per_year)?;
    non_negative("throughput.unit_energy", t.unit_energy)?;
    if !(t.teu_per_year * t.unit_energy).is_finite() {
        return Err(ValidationError::new(
            "throughput",
            "implied total energy is not finite",
        ));
    }

    let s = &raw.shares;
    unit_interval("shares.equipment_share", s.equipment_share)?;
    unit_interval("shares.transport_share", s.transport_share)?;
    unit_interval("shares.buildings_share", s.buildings_share)?;
    let sum = s.sum();
    if (sum - 1.0).abs() > SHARE_SUM_TOLERANCE {
        return Err(ValidationError::new(
            "shares",
            format!(
                "shares sum to {} (must be 1 within {SHARE_SUM_TOLERANCE:e})",
                short(sum)
            ),
        ));
    }

    let f = &raw.factors;
    non_negative("factors.equipment_factor", f.equipment_factor)?;
    non_negative("factors.transport_factor", f.transport_factor)?;
    non_negative("factors.buildings_factor", f.buildings_factor)?;
    non_negative("factors.grid_factor", f.grid_factor)?;

    for (i, pv) in raw.pv_arrays.iter().enumerate() {
        let field = |name: &str| format!("pv_arrays[{i}].{name}");
        non_negative(&field("panel_area"), pv.panel_area)?;
        non_negative(&field("irradiance"), pv.irradiance)?;
        unit_interval(&field("module_efficiency"), pv.module_efficiency)?;
        non_negative(&field("peak_power"), pv.peak_power)?;
        non_negative(&field("sun_hours"), pv.sun_hours)?;
        unit_interval(&field("performance_ratio"), pv.performance_ratio)?;
    }

    for (i, wt) in raw.wind_turbines.iter().enumerate() {
        let field = |name: &str| format!("wind_turbines[{i}].{name}");
        finite(&field("air_density"), wt.air_density)?;
        if wt.air_density <= 0.0 {
            return Err(ValidationError::new(
                field("air_density"),
                format!("must be > 0, got {}", short(wt.air_density)),
            ));
        }
        non_negative(&field("swept_area"), wt.swept_area)?;
        non_negative(&field("wind_speed"), wt.wind_speed)?;
        finite(&field("power_coefficient"), wt.power_coefficient)?;
        if wt.power_coefficient <= 0.0 || wt.power_coefficient > BETZ_LIMIT {
            return Err(ValidationError::new(
                field("power_coefficient"),
                format!(
                    "must lie in (0, {BETZ_LIMIT}], got {}",
                    short(wt.power_coefficient)
                ),
            ));
        }
        non_negative(&field("average_power"), wt.average_power)?;
        non_negative(&field("operating_hours"), wt.operating_hours)?;
    }

    let modeled = renewables::model_generation(&raw.pv_arrays, &raw.wind_turbines).total_annual_mwh;
    let r = &mut raw.renewables;
    match r.source {
        RenewableSource::Explicit => match r.renewable_energy {
            Some(e) => non_negative("renewables.renewable_energy", e)?,
            None => {
                return Err(ValidationError::new(
                    "renewables.renewable_energy",
                    "required when source is explicit",
                ))
            }
        },
        RenewableSource::FromPvWindModels => match r.renewable_energy {
            Some(e) => {
                non_negative("renewables.renewable_energy", e)?;
                if (e - modeled).abs() > MODELED_SUPPLY_TOLERANCE * modeled.abs().max(e.abs()) {
                    return Err(ValidationError::new(
                        "renewables.renewable_energy",
                        format!(
                            "stated {} MWh disagrees with modeled PV and wind output {} MWh",
                            short(e),
                            short(modeled)
                        ),
                    ));
                }
            }
            None => r.renewable_energy = Some(modeled),
        },
    }
    if let Some(g) = r.new_green_energy {
        non_negative("renewables.new_green_energy", g)?;
    }

    let c = &raw.costs;
    non_negative("costs.baseline_cost_per_teu", c.baseline_cost_per_teu)?;
    non_negative("costs.optimized_cost_per_teu", c.optimized_cost_per_teu)?;

    let dispatch_matrix = match &raw.dispatch_matrix {
        Some(rows) => Some(
            CostMatrix::from_rows(rows)
                .map_err(|e| ValidationError::new("dispatch_matrix", e.to_string()))?,
        ),
        None => None,
    };

    raw.objective_weights.validate()?;

    if let Some(reference) = &raw.reference {
        for (name, value) in reference.entries() {
            if let Some(v) = value {
                finite(&format!("reference.{name}"), v)?;
            }
        }
    }

    Ok(ValidatedScenario {
        scenario: raw,
        dispatch_matrix,
    })
}

pub(crate) fn finite(field: &str, value: f64) -> Result<(), ValidationError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ValidationError::new(field, "must be finite"))
    }
}

pub(crate) fn non_negative(field: &str, value: f64) -> Result<(), ValidationError> {
    finite(field, value)?;
    if value < 0.0 {
        return Err(ValidationError::new(
            field,
            format!("must be >= 0, got {}", short(value)),
        ));
    }
    Ok(())
}

pub(crate) fn positive(field: &str, value: f64) -> Result<(), ValidationError> {
    finite(field, value)?;
    if value <= 0.0 {
        return Err(ValidationError::new(
            field,
            format!("must be > 0, got {}", short(value)),
        ));
    }
    Ok(())
}

fn unit_interval(field: &str, value: f64) -> Result<(), ValidationError> {
    finite(field, value)?;
    if !(0.0..=1.0).contains(&value) {
        return Err(ValidationError::new(
            field,
            format!("must lie in [0, 1], got {}", short(value)),
        ));
    }
    Ok(())
}

/// Formats a value for error messages, hiding float-literal noise
/// (0.5 + 0.3 + 0.3 reads as 1.1, not 1.1000000000000001).
fn short(value: f64) -> String {
    let s = format!("{value:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
