//! Weighted-sum scalarization of the four port objectives: emissions,
//! energy and AGV distance (minimized) and renewable supply (maximized).
//!
//! Each term is divided by its normalizer before weighting so that kg, MWh
//! and km can be combined. With unit weights and normalizers the score is
//! the plain sum of the raw quantities.

use serde::{Deserialize, Serialize};

use crate::error::ValidationError;
use crate::scenario::{non_negative, positive};

/// How the renewable term enters the score.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenewableTerm {
    /// Subtracted: more renewable supply lowers the score.
    #[default]
    Maximize,
    /// Added like the other three terms.
    LiteralSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Normalizers {
    /// kg
    pub emissions: f64,
    /// MWh
    pub energy: f64,
    /// km or abstract cost
    pub dispatch: f64,
    /// MWh
    pub renewables: f64,
}

impl Default for Normalizers {
    fn default() -> Self {
        Self {
            emissions: 1.0,
            energy: 1.0,
            dispatch: 1.0,
            renewables: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ObjectiveWeights {
    pub w_emissions: f64,
    pub w_energy: f64,
    pub w_dispatch: f64,
    pub w_renewables: f64,
    pub normalizers: Normalizers,
    pub renewable_term: RenewableTerm,
}

impl Default for ObjectiveWeights {
    fn default() -> Self {
        Self {
            w_emissions: 1.0,
            w_energy: 1.0,
            w_dispatch: 1.0,
            w_renewables: 1.0,
            normalizers: Normalizers::default(),
            renewable_term: RenewableTerm::Maximize,
        }
    }
}

impl ObjectiveWeights {
    pub fn validate(&self) -> Result<(), ValidationError> {
        non_negative("objective_weights.w_emissions", self.w_emissions)?;
        non_negative("objective_weights.w_energy", self.w_energy)?;
        non_negative("objective_weights.w_dispatch", self.w_dispatch)?;
        non_negative("objective_weights.w_renewables", self.w_renewables)?;
        let n = &self.normalizers;
        positive("objective_weights.normalizers.emissions", n.emissions)?;
        positive("objective_weights.normalizers.energy", n.energy)?;
        positive("objective_weights.normalizers.dispatch", n.dispatch)?;
        positive("objective_weights.normalizers.renewables", n.renewables)?;
        Ok(())
    }

    pub fn with_weights(mut self, [we, wn, wd, wr]: [f64; 4]) -> Self {
        self.w_emissions = we;
        self.w_energy = wn;
        self.w_dispatch = wd;
        self.w_renewables = wr;
        self
    }
}

/// Signed, weighted, normalized contributions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveTerms {
    pub emissions: f64,
    pub energy: f64,
    pub dispatch: f64,
    pub renewables: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveScore {
    pub total: f64,
    pub terms: ObjectiveTerms,
}

pub fn score_scenario(
    emissions: f64,
    energy: f64,
    dispatch_cost: f64,
    renewable_energy: f64,
    weights: &ObjectiveWeights,
) -> ObjectiveScore {
    let n = &weights.normalizers;
    let renewables = weights.w_renewables * (renewable_energy / n.renewables);
    let terms = ObjectiveTerms {
        emissions: weights.w_emissions * (emissions / n.emissions),
        energy: weights.w_energy * (energy / n.energy),
        dispatch: weights.w_dispatch * (dispatch_cost / n.dispatch),
        // `0.0 - x` rather than `-x` keeps a zero term at +0.
        renewables: match weights.renewable_term {
            RenewableTerm::Maximize => 0.0 - renewables,
            RenewableTerm::LiteralSum => renewables,
        },
    };
    ObjectiveScore {
        total: terms.emissions + terms.energy + terms.dispatch + terms.renewables,
        terms,
    }
}
