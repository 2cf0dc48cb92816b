//! Compartmental disease model with doctor visits, and place-based contagion.
//!
//! Flow: S → E → I1, then either a doctor visit (O1) or staying home (I2),
//! with a late visit I2 → O2 still possible. Every infected compartment ends
//! in R or Dead, and R may wane back to S.

mod progression;
mod testing;
mod transmission;

pub use progression::{per_tick_probability, progress_disease};
pub use testing::{run_tests, TestingPolicy};
pub use transmission::{density_modifier, exposure_probability, place_transmission, Occupant, TransmissionEvent};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::SimError;
use crate::types::{AgentId, PerAgeGroup};
use crate::world::World;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Compartment {
    S,
    E,
    I1,
    I2,
    O1,
    O2,
    R,
    Dead,
}

impl Compartment {
    pub const ALL: [Compartment; 8] = [
        Compartment::S,
        Compartment::E,
        Compartment::I1,
        Compartment::I2,
        Compartment::O1,
        Compartment::O2,
        Compartment::R,
        Compartment::Dead,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Compartment::S => "s",
            Compartment::E => "e",
            Compartment::I1 => "i1",
            Compartment::I2 => "i2",
            Compartment::O1 => "o1",
            Compartment::O2 => "o2",
            Compartment::R => "r",
            Compartment::Dead => "dead",
        }
    }

    /// Can pass the virus on (O-compartments only inside hospitals).
    pub fn is_infectious(self) -> bool {
        matches!(
            self,
            Compartment::I1 | Compartment::I2 | Compartment::O1 | Compartment::O2
        )
    }

    pub fn is_under_care(self) -> bool {
        matches!(self, Compartment::O1 | Compartment::O2)
    }

    /// Carries the virus, including the latent phase.
    pub fn is_infected(self) -> bool {
        self == Compartment::E || self.is_infectious()
    }

    pub fn is_alive(self) -> bool {
        self != Compartment::Dead
    }

    /// Edges of the compartment graph.
    pub fn can_transition_to(self, next: Compartment) -> bool {
        use Compartment::*;
        match (self, next) {
            (S, E) | (E, I1) | (I1, I2) | (I1, O1) | (I2, O2) | (R, S) => true,
            (I1 | I2 | O1 | O2, R | Dead) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HealthState {
    pub compartment: Compartment,
    pub ticks_in_compartment: u32,
    /// Latent period drawn at exposure.
    pub incubation_ticks: u32,
    pub believes_sick: bool,
    pub tested_positive: bool,
    pub detected: bool,
}

impl Default for HealthState {
    fn default() -> Self {
        HealthState::susceptible()
    }
}

impl HealthState {
    pub fn susceptible() -> Self {
        HealthState {
            compartment: Compartment::S,
            ticks_in_compartment: 0,
            incubation_ticks: 0,
            believes_sick: false,
            tested_positive: false,
            detected: false,
        }
    }

    pub fn exposed(incubation_ticks: u32) -> Self {
        HealthState {
            compartment: Compartment::E,
            incubation_ticks,
            ..HealthState::susceptible()
        }
    }

    pub fn enter(&mut self, next: Compartment) {
        debug_assert!(
            self.compartment.can_transition_to(next),
            "illegal transition {:?} -> {:?}",
            self.compartment,
            next
        );
        self.compartment = next;
        self.ticks_in_compartment = 0;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompartmentRates {
    pub i1: f64,
    pub i2: f64,
    pub o1: f64,
    pub o2: f64,
}

impl CompartmentRates {
    pub fn get(&self, c: Compartment) -> f64 {
        match c {
            Compartment::I1 => self.i1,
            Compartment::I2 => self.i2,
            Compartment::O1 => self.o1,
            Compartment::O2 => self.o2,
            _ => 0.0,
        }
    }

    fn all(&self) -> [f64; 4] {
        [self.i1, self.i2, self.o1, self.o2]
    }
}

/// Disease parameters. Rates are per day and converted to per tick.
/// The defaults are illustrative, not epidemiological estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EpidemicParams {
    pub initial_infected: usize,
    /// Latent period in whole days, drawn uniformly from the inclusive range.
    pub incubation_days: [u32; 2],
    pub asymptomatic_fraction: f64,
    /// Per sick day, while symptomatic in I1.
    pub p_visit_doctor: f64,
    /// Per sick day, from I2.
    pub p_late_doctor: f64,
    pub p_recover: CompartmentRates,
    pub p_die: CompartmentRates,
    pub p_waning: f64,
    /// Global multiplier on all place contagion.
    pub transmissibility: f64,
    /// Density modifier at an empty place; reaches 1 at capacity.
    pub density_floor: f64,
    pub susceptibility: PerAgeGroup<f64>,
    pub log_transmissions: bool,
}

impl Default for EpidemicParams {
    fn default() -> Self {
        EpidemicParams {
            initial_infected: 3,
            incubation_days: [2, 5],
            asymptomatic_fraction: 0.3,
            p_visit_doctor: 0.3,
            p_late_doctor: 0.1,
            p_recover: CompartmentRates {
                i1: 0.12,
                i2: 0.1,
                o1: 0.08,
                o2: 0.07,
            },
            p_die: CompartmentRates {
                i1: 0.002,
                i2: 0.004,
                o1: 0.015,
                o2: 0.02,
            },
            p_waning: 0.0,
            transmissibility: 1.0,
            density_floor: 0.5,
            susceptibility: PerAgeGroup {
                child: 0.5,
                student: 1.0,
                worker: 1.0,
                retiree: 1.0,
            },
            log_transmissions: false,
        }
    }
}

impl EpidemicParams {
    pub fn validate(&self) -> Result<(), String> {
        let prob = |name: &str, p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(format!("epidemic.{name} must be a probability"))
            }
        };
        prob("asymptomatic_fraction", self.asymptomatic_fraction)?;
        prob("p_visit_doctor", self.p_visit_doctor)?;
        prob("p_late_doctor", self.p_late_doctor)?;
        prob("p_waning", self.p_waning)?;
        prob("density_floor", self.density_floor)?;
        for (r, d) in self.p_recover.all().into_iter().zip(self.p_die.all()) {
            prob("p_recover", r)?;
            prob("p_die", d)?;
            if r + d > 1.0 + 1e-12 {
                return Err("epidemic.p_recover + p_die must not exceed 1".into());
            }
        }
        if !(self.transmissibility >= 0.0 && self.transmissibility.is_finite()) {
            return Err("epidemic.transmissibility must be >= 0".into());
        }
        if self.incubation_days[0] > self.incubation_days[1] {
            return Err("epidemic.incubation_days must be [low, high] with low <= high".into());
        }
        let s = &self.susceptibility;
        if [s.child, s.student, s.worker, s.retiree]
            .iter()
            .any(|v| !(v.is_finite() && *v >= 0.0))
        {
            return Err("epidemic.susceptibility must be >= 0".into());
        }
        Ok(())
    }

    pub fn sample_incubation_ticks<R: Rng + ?Sized>(&self, rng: &mut R, ticks_per_day: u32) -> u32 {
        let [lo, hi] = self.incubation_days;
        let days = if lo == hi { lo } else { rng.random_range(lo..=hi) };
        days * ticks_per_day
    }
}

/// Exact compartment counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Census {
    pub counts: [usize; 8],
}

impl Census {
    pub fn get(&self, c: Compartment) -> usize {
        self.counts[c.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn alive(&self) -> usize {
        self.total() - self.get(Compartment::Dead)
    }

    pub fn infected(&self) -> usize {
        Compartment::ALL
            .iter()
            .filter(|c| c.is_infected())
            .map(|c| self.get(*c))
            .sum()
    }
}

pub fn census_of<'a>(healths: impl IntoIterator<Item = &'a HealthState>) -> Census {
    let mut census = Census::default();
    for h in healths {
        census.counts[h.compartment.index()] += 1;
    }
    census
}

pub fn epi_census(world: &World) -> Census {
    census_of(world.agents.iter().map(|a| &a.health))
}

/// Expose `n` susceptible agents chosen uniformly on the epidemic stream.
pub fn seed_infection(world: &mut World, n: usize) -> Result<Vec<AgentId>, SimError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let susceptible: Vec<AgentId> = world
        .agents
        .iter()
        .filter(|a| a.health.compartment == Compartment::S)
        .map(|a| a.id)
        .collect();
    if n > susceptible.len() {
        return Err(SimError::Argument(format!(
            "cannot seed {n} infections with only {} susceptible agents",
            susceptible.len()
        )));
    }
    let tpd = world.clock.ticks_per_day;
    let rng = &mut world.rngs.epidemic;
    let mut chosen: Vec<AgentId> = rand::seq::index::sample(rng, susceptible.len(), n)
        .into_iter()
        .map(|i| susceptible[i])
        .collect();
    chosen.sort();
    for id in &chosen {
        let incubation = world
            .config
            .epidemic
            .sample_incubation_ticks(&mut world.rngs.epidemic, tpd);
        world.agents[id.index()].health = HealthState::exposed(incubation);
        world.ever_exposed += 1;
    }
    Ok(chosen)
}
