//! Scenarios and matrices compiled into the library.

use crate::dispatch::CostMatrix;
use crate::error::{Error, Result};
use crate::scenario::{load_scenario, Scenario, ValidatedScenario};

const SCENARIOS: &[(&str, &str)] = &[
    (
        "yangshan-phase4",
        include_str!("../presets/yangshan-phase4.json"),
    ),
    (
        "yangshan-phase4-stated-shares",
        include_str!("../presets/yangshan-phase4-stated-shares.json"),
    ),
    ("empty-port", include_str!("../presets/empty-port.json")),
];

const MATRICES: &[(&str, &str)] = &[("yangshan-agv", include_str!("../presets/yangshan-agv.csv"))];

pub fn names() -> impl Iterator<Item = &'static str> {
    SCENARIOS.iter().map(|(name, _)| *name)
}

pub fn matrix_names() -> impl Iterator<Item = &'static str> {
    MATRICES.iter().map(|(name, _)| *name)
}

/// Raw JSON of a bundled scenario.
pub fn source(name: &str) -> Option<&'static str> {
    SCENARIOS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Unvalidated scenario, for callers that want to tweak it first.
pub fn scenario(name: &str) -> Option<Scenario> {
    source(name).map(|s| Scenario::from_json(s).expect("bundled presets parse"))
}

pub fn load(name: &str) -> Result<ValidatedScenario> {
    let text = source(name).ok_or_else(|| {
        Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no preset named `{name}`"),
        ))
    })?;
    load_scenario(text)
}

pub fn matrix(name: &str) -> Option<CostMatrix> {
    MATRICES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| CostMatrix::from_csv_str(s).expect("bundled matrices parse"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_validates() {
        for name in names() {
            let s = load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(s.name, name);
        }
        assert!(load("nope").is_err());
    }

    #[test]
    fn yangshan_agv_preset() {
        let m = matrix("yangshan-agv").unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.get(1, 2), 280.0);
    }
}
