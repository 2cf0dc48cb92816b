use serde::{Deserialize, Serialize};

use crate::economy::EconomyParams;
use crate::epidemic::EpidemicParams;
use crate::error::SimError;
use crate::needs::NeedsCalibration;
use crate::policy::PolicySpec;
use crate::world::{PlaceParams, PopulationConfig, ScheduleConfig};

/// Everything a run needs. Every key has a default, so an empty file is a
/// valid configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub ticks_total: u64,
    pub ticks_per_day: u32,
    pub runs: usize,
    pub base_seed: u64,
    pub population: PopulationConfig,
    pub places: PlaceParams,
    pub schedule: ScheduleConfig,
    pub needs: NeedsCalibration,
    pub epidemic: EpidemicParams,
    pub economy: EconomyParams,
    pub policies: Vec<PolicySpec>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            name: "baseline".into(),
            ticks_total: 480,
            ticks_per_day: 4,
            runs: 40,
            base_seed: 1,
            population: PopulationConfig::default(),
            places: PlaceParams::default(),
            schedule: ScheduleConfig::default(),
            needs: NeedsCalibration::default(),
            epidemic: EpidemicParams::default(),
            economy: EconomyParams::default(),
            policies: Vec::new(),
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), SimError> {
        let c = |r: Result<(), String>| r.map_err(SimError::Constraint);
        if self.ticks_per_day == 0 {
            return Err(SimError::Constraint("ticks_per_day must be > 0".into()));
        }
        if self.runs == 0 {
            return Err(SimError::Constraint("runs must be >= 1".into()));
        }
        c(self.schedule.validate(self.ticks_per_day))?;
        c(self.population.validate())?;
        c(self.places.validate())?;
        c(self.needs.validate())?;
        c(self.epidemic.validate())?;
        c(self.economy.validate())?;
        for p in &self.policies {
            c(p.validate())?;
        }
        if self.epidemic.initial_infected > self.population.target {
            return Err(SimError::Constraint(
                "epidemic.initial_infected exceeds the population target".into(),
            ));
        }
        Ok(())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration always serializes")
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parse and validate a TOML scenario. Syntax errors, unknown keys and
/// constraint violations are reported as distinct error variants.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, SimError> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| {
        let (line, column) = e.span().map_or((0, 0), |s| line_col(text, s.start));
        SimError::Syntax {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })?;
    let config: ScenarioConfig = toml::Value::Table(table).try_into().map_err(|e: toml::de::Error| {
        let msg = e.message().trim().to_string();
        if msg.contains("unknown field") {
            SimError::UnknownKey(msg)
        } else {
            SimError::Constraint(msg)
        }
    })?;
    config.validate()?;
    Ok(config)
}
