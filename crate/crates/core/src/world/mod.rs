//! The simulated town: people, places, households and the tick loop.

mod context;
mod population;
mod schedule;
mod step;

pub use context::available_context;
pub use population::{generate_population, HouseholdMix, HouseholdSizes, PlaceParams, PopulationConfig, StaffParams};
pub use schedule::{DaySchedule, ScheduleConfig, Slot};
pub use step::step_world;

use serde::{Deserialize, Serialize};

use crate::clock::Clock;
use crate::economy::{Government, Ledger, WealthSnapshot};
use crate::epidemic::{HealthState, TransmissionEvent};
use crate::harness::ScenarioConfig;
use crate::needs::{Activity, NeedsState, Traits};
use crate::policy::PolicySet;
use crate::rng::RngStreams;
use crate::types::{AgeGroup, AgentId, Money, PlaceId, PlaceKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    pub id: AgentId,
    pub age_group: AgeGroup,
    /// Index into `World::households`.
    pub household: usize,
    pub home: PlaceId,
    /// Second home for children of separated parents, used on odd weeks.
    pub alt_home: Option<PlaceId>,
    /// Employer for workers, school or university for the young.
    pub work_or_school: Option<PlaceId>,
    pub telework_capable: bool,
    /// Travels by public transport to work or school.
    pub commuter: bool,
    pub cluster: usize,
    pub essential_shop: PlaceId,
    pub traits: Traits,
    pub needs: NeedsState,
    pub health: HealthState,
    pub wealth: Money,
    /// Days of essential supplies at home.
    pub essential_stock: f64,
    pub is_caregiver: bool,
    pub current_place: PlaceId,
    /// What the agent did last tick.
    pub activity: Option<Activity>,
    pub worked_segments: u32,
    /// Duty segments lost because the employer was closed.
    pub missed_closed_segments: u32,
}

impl Agent {
    pub fn is_alive(&self) -> bool {
        self.health.compartment.is_alive()
    }

    /// Where the agent sleeps during the given week.
    pub fn effective_home(&self, week: u64) -> PlaceId {
        match self.alt_home {
            Some(alt) if week % 2 == 1 => alt,
            _ => self.home,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Place {
    pub id: PlaceId,
    pub kind: PlaceKind,
    pub contagion_base: f64,
    pub capacity: u32,
    /// Living agents here this tick.
    pub occupants: Vec<AgentId>,
    pub wealth: Money,
    pub employees: Vec<AgentId>,
    /// Went below zero while paying fixed costs.
    pub insolvent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HouseholdKind {
    Family,
    StudentShared,
    RetirementHome,
    ThreeGeneration,
    CoParenting,
}

impl HouseholdKind {
    pub const ALL: [HouseholdKind; 5] = [
        HouseholdKind::Family,
        HouseholdKind::StudentShared,
        HouseholdKind::RetirementHome,
        HouseholdKind::ThreeGeneration,
        HouseholdKind::CoParenting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HouseholdKind::Family => "family",
            HouseholdKind::StudentShared => "student_shared",
            HouseholdKind::RetirementHome => "retirement_home",
            HouseholdKind::ThreeGeneration => "three_generation",
            HouseholdKind::CoParenting => "co_parenting",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Household {
    pub kind: HouseholdKind,
    pub home: PlaceId,
    /// The other parent's home in a co-parenting household.
    pub second_home: Option<PlaceId>,
    pub members: Vec<AgentId>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SocialCluster {
    pub members: Vec<AgentId>,
    pub leisure: PlaceId,
}

#[derive(Debug, Clone)]
pub struct World {
    pub config: ScenarioConfig,
    pub seed: u64,
    pub clock: Clock,
    pub agents: Vec<Agent>,
    pub places: Vec<Place>,
    pub households: Vec<Household>,
    pub clusters: Vec<SocialCluster>,
    pub government: Government,
    pub ledger: Ledger,
    /// Balances right after generation, the base for ledger replay.
    pub initial_wealth: WealthSnapshot,
    pub policies: PolicySet,
    pub rngs: RngStreams,
    /// Agents ever moved into E, seeds included.
    pub ever_exposed: usize,
    /// Detection events so far.
    pub detected_total: usize,
    pub transmissions: Vec<TransmissionEvent>,
    /// Commuters passing through a station this tick.
    pub transit: Vec<AgentId>,
    /// Money velocity of the last settled day.
    pub last_velocity: f64,
}

impl World {
    pub fn place(&self, id: PlaceId) -> &Place {
        &self.places[id.index()]
    }

    pub fn places_of(&self, kind: PlaceKind) -> impl Iterator<Item = &Place> {
        self.places.iter().filter(move |p| p.kind == kind)
    }

    pub fn alive_count(&self) -> usize {
        self.agents.iter().filter(|a| a.is_alive()).count()
    }

    /// Sum of all agents' wealth per household.
    pub fn mean_household_capital(&self) -> f64 {
        if self.households.is_empty() {
            return 0.0;
        }
        let total: Money = self.agents.iter().map(|a| a.wealth).sum();
        total as f64 / self.households.len() as f64
    }

    /// Does this household still have a living child?
    pub fn has_living_child(&self, household: &Household) -> bool {
        household
            .members
            .iter()
            .any(|id| self.agents[id.index()].age_group == AgeGroup::Child && self.agents[id.index()].is_alive())
    }
}
