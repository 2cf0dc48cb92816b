use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Agent, Household, HouseholdKind, Place, SocialCluster, World};
use crate::clock::Clock;
use crate::economy::{wealth_snapshot, Government, Ledger};
use crate::epidemic::HealthState;
use crate::error::SimError;
use crate::harness::ScenarioConfig;
use crate::needs::{Need, NeedsState, Traits};
use crate::policy::PolicySet;
use crate::rng::RngStreams;
use crate::types::{AgeGroup, AgentId, PerPlaceKind, PlaceId, PlaceKind};

/// Share of households of each kind. Must sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HouseholdMix {
    pub family: f64,
    pub student_shared: f64,
    pub retirement_home: f64,
    pub three_generation: f64,
    pub co_parenting: f64,
}

impl Default for HouseholdMix {
    fn default() -> Self {
        HouseholdMix {
            family: 0.45,
            student_shared: 0.1,
            retirement_home: 0.05,
            three_generation: 0.2,
            co_parenting: 0.2,
        }
    }
}

impl HouseholdMix {
    pub fn get(&self, kind: HouseholdKind) -> f64 {
        match kind {
            HouseholdKind::Family => self.family,
            HouseholdKind::StudentShared => self.student_shared,
            HouseholdKind::RetirementHome => self.retirement_home,
            HouseholdKind::ThreeGeneration => self.three_generation,
            HouseholdKind::CoParenting => self.co_parenting,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for k in HouseholdKind::ALL {
            let f = self.get(k);
            if !(f.is_finite() && f >= 0.0) {
                return Err(format!("population.households.{} must be >= 0", k.name()));
            }
        }
        let sum: f64 = HouseholdKind::ALL.iter().map(|k| self.get(*k)).sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(format!("population.households fractions sum to {sum}, expected 1"));
        }
        Ok(())
    }
}

/// Inclusive size ranges per household archetype.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HouseholdSizes {
    pub family_children: [u32; 2],
    pub students: [u32; 2],
    pub retirement_home: u32,
    pub three_generation_children: [u32; 2],
    pub three_generation_retirees: [u32; 2],
    pub co_parenting_children: [u32; 2],
}

impl Default for HouseholdSizes {
    fn default() -> Self {
        HouseholdSizes {
            family_children: [1, 3],
            students: [3, 4],
            retirement_home: 8,
            three_generation_children: [1, 3],
            three_generation_retirees: [1, 2],
            co_parenting_children: [1, 3],
        }
    }
}

fn mid(r: [u32; 2]) -> f64 {
    f64::from(r[0] + r[1]) / 2.0
}

impl HouseholdSizes {
    pub fn mean_size(&self, kind: HouseholdKind) -> f64 {
        match kind {
            HouseholdKind::Family => 2.0 + mid(self.family_children),
            HouseholdKind::StudentShared => mid(self.students),
            HouseholdKind::RetirementHome => f64::from(self.retirement_home),
            HouseholdKind::ThreeGeneration => {
                2.0 + mid(self.three_generation_children) + mid(self.three_generation_retirees)
            }
            HouseholdKind::CoParenting => 2.0 + mid(self.co_parenting_children),
        }
    }

    fn validate(&self) -> Result<(), String> {
        for (name, r) in [
            ("family_children", self.family_children),
            ("students", self.students),
            ("three_generation_children", self.three_generation_children),
            ("three_generation_retirees", self.three_generation_retirees),
            ("co_parenting_children", self.co_parenting_children),
        ] {
            if r[0] > r[1] {
                return Err(format!("population.sizes.{name} must be [low, high] with low <= high"));
            }
        }
        if self.students[0] == 0 || self.retirement_home == 0 {
            return Err("population.sizes: student and retirement households need members".into());
        }
        if self.family_children[0] == 0 || self.three_generation_children[0] == 0 || self.co_parenting_children[0] == 0
        {
            return Err("population.sizes: households with children need at least one child".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StaffParams {
    pub essential_shop: u32,
    pub nonessential_shop: u32,
    pub leisure: u32,
    pub hospital: u32,
    pub pupils_per_teacher: u32,
    pub workplace_size: u32,
}

impl Default for StaffParams {
    fn default() -> Self {
        StaffParams {
            essential_shop: 4,
            nonessential_shop: 1,
            leisure: 1,
            hospital: 8,
            pupils_per_teacher: 15,
            workplace_size: 40,
        }
    }
}

/// Public places per 1000 inhabitants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlaceDensity {
    pub essential_shop: f64,
    pub nonessential_shop: f64,
    pub leisure: f64,
    pub hospital: f64,
    pub station: f64,
}

impl Default for PlaceDensity {
    fn default() -> Self {
        PlaceDensity {
            essential_shop: 6.0,
            nonessential_shop: 30.0,
            leisure: 60.0,
            hospital: 3.0,
            station: 3.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlaceParams {
    pub contagion_base: PerPlaceKind<f64>,
    /// Crowding reference for density. Homes, workplaces and schools are
    /// sized from their members instead.
    pub capacity: PerPlaceKind<u32>,
    pub per_thousand: PlaceDensity,
    pub children_per_school: u32,
    pub staff: StaffParams,
}

impl Default for PlaceParams {
    fn default() -> Self {
        PlaceParams {
            contagion_base: PerPlaceKind {
                home: 0.06,
                essential_shop: 0.01,
                nonessential_shop: 0.01,
                workplace: 0.15,
                school: 0.01,
                hospital: 0.03,
                leisure: 0.03,
                station: 0.02,
            },
            capacity: PerPlaceKind {
                home: 0,
                essential_shop: 20,
                nonessential_shop: 15,
                workplace: 0,
                school: 0,
                hospital: 30,
                leisure: 25,
                station: 40,
            },
            per_thousand: PlaceDensity::default(),
            children_per_school: 50,
            staff: StaffParams::default(),
        }
    }
}

impl PlaceParams {
    pub fn validate(&self) -> Result<(), String> {
        if self.contagion_base.values().iter().any(|c| !(0.0..=1.0).contains(c)) {
            return Err("places.contagion_base values must lie in [0, 1]".into());
        }
        for k in [
            PlaceKind::EssentialShop,
            PlaceKind::NonessentialShop,
            PlaceKind::Hospital,
            PlaceKind::Leisure,
            PlaceKind::Station,
        ] {
            if self.capacity.get(k) == 0 {
                return Err(format!("places.capacity.{} must be > 0", k.name()));
            }
        }
        let d = &self.per_thousand;
        if [d.essential_shop, d.nonessential_shop, d.leisure, d.hospital, d.station]
            .iter()
            .any(|v| !(v.is_finite() && *v > 0.0))
        {
            return Err("places.per_thousand values must be > 0".into());
        }
        if self.children_per_school == 0 || self.staff.pupils_per_teacher == 0 || self.staff.workplace_size == 0 {
            return Err("places: school and workplace sizes must be > 0".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PopulationConfig {
    pub target: usize,
    pub max_population: usize,
    pub households: HouseholdMix,
    pub sizes: HouseholdSizes,
    /// Share of office workers whose job can be done from home.
    pub telework_fraction: f64,
    /// Share of workers and students travelling through a station.
    pub commuter_fraction: f64,
    pub cluster_size: usize,
    /// Uniform range of the risk-avoidance trait.
    pub risk_avoidance: [f64; 2],
    /// Uniform range of the compliance trait.
    pub compliance: [f64; 2],
}

impl Default for PopulationConfig {
    fn default() -> Self {
        PopulationConfig {
            target: 330,
            max_population: 2500,
            households: HouseholdMix::default(),
            sizes: HouseholdSizes::default(),
            telework_fraction: 0.5,
            commuter_fraction: 0.3,
            cluster_size: 10,
            risk_avoidance: [0.0, 1.0],
            compliance: [0.5, 1.0],
        }
    }
}

impl PopulationConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.target == 0 {
            return Err("population.target must be > 0".into());
        }
        if self.target > self.max_population {
            return Err(format!(
                "population.target {} exceeds max_population {}",
                self.target, self.max_population
            ));
        }
        self.households.validate()?;
        self.sizes.validate()?;
        for (name, f) in [
            ("telework_fraction", self.telework_fraction),
            ("commuter_fraction", self.commuter_fraction),
        ] {
            if !(0.0..=1.0).contains(&f) {
                return Err(format!("population.{name} must lie in [0, 1]"));
            }
        }
        for (name, r) in [("risk_avoidance", self.risk_avoidance), ("compliance", self.compliance)] {
            if !(0.0 <= r[0] && r[0] <= r[1] && r[1] <= 1.0) {
                return Err(format!("population.{name} must be a range within [0, 1]"));
            }
        }
        if self.cluster_size == 0 {
            return Err("population.cluster_size must be > 0".into());
        }
        Ok(())
    }

    pub fn mean_household_size(&self) -> f64 {
        HouseholdKind::ALL
            .iter()
            .map(|k| self.households.get(*k) * self.sizes.mean_size(*k))
            .sum()
    }

    /// Households per kind, by largest remainder.
    pub fn household_counts(&self) -> Result<[usize; 5], SimError> {
        let mean = self.mean_household_size();
        let total = ((self.target as f64 / mean).round() as usize).max(1);
        let quotas: Vec<f64> = HouseholdKind::ALL
            .iter()
            .map(|k| self.households.get(*k) * total as f64)
            .collect();
        let mut counts = [0usize; 5];
        for (c, q) in counts.iter_mut().zip(&quotas) {
            *c = q.floor() as usize;
        }
        let mut order: Vec<usize> = (0..5).collect();
        // Stable sort keeps declaration order among equal remainders.
        order.sort_by(|a, b| {
            let ra = quotas[*a] - quotas[*a].floor();
            let rb = quotas[*b] - quotas[*b].floor();
            rb.partial_cmp(&ra).unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut missing = total - counts.iter().sum::<usize>();
        for i in order {
            if missing == 0 {
                break;
            }
            counts[i] += 1;
            missing -= 1;
        }
        for (k, c) in HouseholdKind::ALL.iter().zip(counts) {
            if self.households.get(*k) > 0.0 && c == 0 {
                return Err(SimError::Constraint(format!(
                    "population target {} is too small to include a {} household",
                    self.target,
                    k.name()
                )));
            }
        }
        Ok(counts)
    }
}

fn draw_range<R: Rng + ?Sized>(rng: &mut R, r: [u32; 2]) -> u32 {
    if r[0] == r[1] {
        r[0]
    } else {
        rng.random_range(r[0]..=r[1])
    }
}

fn uniform<R: Rng + ?Sized>(rng: &mut R, r: [f64; 2]) -> f64 {
    if r[0] == r[1] {
        r[0]
    } else {
        rng.random_range(r[0]..=r[1])
    }
}

struct Builder<'a> {
    config: &'a ScenarioConfig,
    agents: Vec<Agent>,
    places: Vec<Place>,
    households: Vec<Household>,
}

impl Builder<'_> {
    fn add_place(&mut self, kind: PlaceKind) -> PlaceId {
        let id = PlaceId(self.places.len() as u32);
        self.places.push(Place {
            id,
            kind,
            contagion_base: self.config.places.contagion_base.get(kind),
            capacity: self.config.places.capacity.get(kind),
            occupants: Vec::new(),
            wealth: 0,
            employees: Vec::new(),
            insolvent: false,
        });
        id
    }

    fn add_agent<R: Rng + ?Sized>(&mut self, rng: &mut R, group: AgeGroup, household: usize, home: PlaceId) -> AgentId {
        let id = AgentId(self.agents.len() as u32);
        let pop = &self.config.population;
        let calib = &self.config.needs;
        let jitter = calib.importance_jitter;
        let importance = calib
            .default_importance()
            .map(|w| w * (1.0 + jitter * rng.random_range(-1.0..=1.0)).max(0.05));
        let traits = Traits::new(
            uniform(rng, pop.risk_avoidance),
            uniform(rng, pop.compliance),
            importance,
        );
        let mut needs = NeedsState::full(calib);
        for need in [Need::Belonging, Need::SelfEsteem, Need::Autonomy, Need::Survival] {
            let t = calib.need(need).threshold;
            needs.set_level(need, rng.random_range(t..=1.0));
        }
        let econ = &self.config.economy;
        let wealth = econ.initial_wealth.get(group);
        let stock = econ.initial_stock_days * rng.random_range(0.5..=1.0);
        needs.sync_resources(stock, wealth, calib);
        self.agents.push(Agent {
            id,
            age_group: group,
            household,
            home,
            alt_home: None,
            work_or_school: None,
            telework_capable: false,
            commuter: false,
            cluster: 0,
            essential_shop: home,
            traits,
            needs,
            health: HealthState::susceptible(),
            wealth,
            essential_stock: stock,
            is_caregiver: false,
            current_place: home,
            activity: None,
            worked_segments: 0,
            missed_closed_segments: 0,
        });
        self.households[household].members.push(id);
        id
    }

    fn add_many<R: Rng + ?Sized>(&mut self, rng: &mut R, group: AgeGroup, n: u32, household: usize, home: PlaceId) {
        for _ in 0..n {
            self.add_agent(rng, group, household, home);
        }
    }

    fn add_household<R: Rng + ?Sized>(&mut self, rng: &mut R, kind: HouseholdKind) {
        let sizes = self.config.population.sizes;
        let h = self.households.len();
        let home = self.add_place(PlaceKind::Home);
        self.households.push(Household {
            kind,
            home,
            second_home: None,
            members: Vec::new(),
        });
        match kind {
            HouseholdKind::Family => {
                let c = draw_range(rng, sizes.family_children);
                self.add_many(rng, AgeGroup::Worker, 2, h, home);
                self.add_many(rng, AgeGroup::Child, c, h, home);
            }
            HouseholdKind::StudentShared => {
                let s = draw_range(rng, sizes.students);
                self.add_many(rng, AgeGroup::Student, s, h, home);
            }
            HouseholdKind::RetirementHome => {
                self.add_many(rng, AgeGroup::Retiree, sizes.retirement_home, h, home);
            }
            HouseholdKind::ThreeGeneration => {
                let c = draw_range(rng, sizes.three_generation_children);
                let r = draw_range(rng, sizes.three_generation_retirees);
                self.add_many(rng, AgeGroup::Worker, 2, h, home);
                self.add_many(rng, AgeGroup::Child, c, h, home);
                self.add_many(rng, AgeGroup::Retiree, r, h, home);
            }
            HouseholdKind::CoParenting => {
                let second = self.add_place(PlaceKind::Home);
                self.households[h].second_home = Some(second);
                let c = draw_range(rng, sizes.co_parenting_children);
                self.add_many(rng, AgeGroup::Worker, 1, h, home);
                self.add_many(rng, AgeGroup::Worker, 1, h, second);
                let first_child = self.agents.len();
                self.add_many(rng, AgeGroup::Child, c, h, home);
                for a in &mut self.agents[first_child..] {
                    a.alt_home = Some(second);
                }
            }
        }
    }
}

fn scaled_count(population: usize, per_thousand: f64) -> usize {
    ((population as f64 * per_thousand / 1000.0).round() as usize).max(1)
}

/// Build a fresh world: households, places, jobs, schools and social
/// clusters. Nobody is infected yet.
pub fn generate_population(config: &ScenarioConfig, seed: u64) -> Result<World, SimError> {
    config.validate()?;
    let pop = &config.population;
    let counts = pop.household_counts()?;
    let mut rngs = RngStreams::new(seed);
    let rng = &mut rngs.population;
    let mut b = Builder {
        config,
        agents: Vec::new(),
        places: Vec::new(),
        households: Vec::new(),
    };
    for (kind, n) in HouseholdKind::ALL.iter().zip(counts) {
        for _ in 0..n {
            b.add_household(rng, *kind);
        }
    }
    let n_agents = b.agents.len();
    if n_agents > pop.max_population {
        return Err(SimError::Constraint(format!(
            "generated {n_agents} agents, above max_population {}",
            pop.max_population
        )));
    }

    let pp = &config.places;
    let dens = pp.per_thousand;
    let mk = |b: &mut Builder, kind, n: usize| (0..n).map(|_| b.add_place(kind)).collect::<Vec<_>>();
    let essential = mk(
        &mut b,
        PlaceKind::EssentialShop,
        scaled_count(n_agents, dens.essential_shop),
    );
    let nonessential = mk(
        &mut b,
        PlaceKind::NonessentialShop,
        scaled_count(n_agents, dens.nonessential_shop),
    );
    let leisure = mk(&mut b, PlaceKind::Leisure, scaled_count(n_agents, dens.leisure));
    let hospitals = mk(&mut b, PlaceKind::Hospital, scaled_count(n_agents, dens.hospital));
    mk(&mut b, PlaceKind::Station, scaled_count(n_agents, dens.station));

    let of = |g: AgeGroup, b: &Builder| -> Vec<AgentId> {
        b.agents.iter().filter(|a| a.age_group == g).map(|a| a.id).collect()
    };
    let children = of(AgeGroup::Child, &b);
    let students = of(AgeGroup::Student, &b);
    let n_schools = children.len().div_ceil(pp.children_per_school as usize);
    let schools = mk(&mut b, PlaceKind::School, n_schools);
    let university = if students.is_empty() {
        None
    } else {
        Some(b.add_place(PlaceKind::School))
    };

    // Siblings share a school; households are spread round-robin.
    let mut next_school = 0;
    for h in 0..b.households.len() {
        let kids: Vec<AgentId> = b.households[h]
            .members
            .iter()
            .copied()
            .filter(|id| b.agents[id.index()].age_group == AgeGroup::Child)
            .collect();
        if kids.is_empty() {
            continue;
        }
        let school = schools[next_school % schools.len()];
        next_school += 1;
        for k in kids {
            b.agents[k.index()].work_or_school = Some(school);
        }
    }
    for s in &students {
        b.agents[s.index()].work_or_school = university;
    }

    let staff = pp.staff;
    let mut slots: Vec<PlaceId> = Vec::new();
    let push = |slots: &mut Vec<PlaceId>, places: &[PlaceId], n: u32| {
        for p in places {
            slots.extend(std::iter::repeat_n(*p, n as usize));
        }
    };
    push(&mut slots, &essential, staff.essential_shop);
    push(&mut slots, &nonessential, staff.nonessential_shop);
    push(&mut slots, &leisure, staff.leisure);
    push(&mut slots, &hospitals, staff.hospital);
    let all_schools: Vec<PlaceId> = schools.iter().copied().chain(university).collect();
    for s in &all_schools {
        let pupils = b.agents.iter().filter(|a| a.work_or_school == Some(*s)).count();
        let teachers = pupils.div_ceil(staff.pupils_per_teacher as usize).max(1);
        slots.extend(std::iter::repeat_n(*s, teachers));
    }

    let mut workers = of(AgeGroup::Worker, &b);
    workers.shuffle(rng);
    let fixed_jobs = slots.len().min(workers.len());
    let office_workers = workers.len() - fixed_jobs;
    let n_workplaces = office_workers.div_ceil(staff.workplace_size as usize);
    let workplaces = mk(&mut b, PlaceKind::Workplace, n_workplaces);
    for (i, w) in workers.iter().enumerate() {
        let employer = if i < fixed_jobs {
            slots[i]
        } else {
            workplaces[(i - fixed_jobs) % n_workplaces]
        };
        let agent = &mut b.agents[w.index()];
        agent.work_or_school = Some(employer);
        b.places[employer.index()].employees.push(*w);
    }
    for p in &mut b.places {
        p.employees.sort();
    }

    // Per-agent draws in id order keep generation reproducible.
    for i in 0..b.agents.len() {
        let a = &mut b.agents[i];
        let at_office = a
            .work_or_school
            .is_some_and(|p| b.places[p.index()].kind == PlaceKind::Workplace);
        a.telework_capable = at_office && rng.random::<f64>() < pop.telework_fraction;
        let travels = matches!(a.age_group, AgeGroup::Worker | AgeGroup::Student) && a.work_or_school.is_some();
        a.commuter = travels && rng.random::<f64>() < pop.commuter_fraction;
    }

    for (h, household) in b.households.iter().enumerate() {
        let shop = essential[h % essential.len()];
        for m in &household.members {
            b.agents[m.index()].essential_shop = shop;
        }
    }

    let mut order: Vec<AgentId> = b.agents.iter().map(|a| a.id).collect();
    order.shuffle(rng);
    let mut clusters: Vec<SocialCluster> = order
        .chunks(pop.cluster_size)
        .enumerate()
        .map(|(c, members)| {
            let mut members = members.to_vec();
            members.sort();
            SocialCluster {
                members,
                leisure: leisure[c % leisure.len()],
            }
        })
        .collect();
    // Fold a small trailing chunk into its neighbour.
    if clusters.len() > 1 && clusters.last().unwrap().members.len() * 2 < pop.cluster_size {
        let tail = clusters.pop().unwrap();
        let last = clusters.last_mut().unwrap();
        last.members.extend(tail.members);
        last.members.sort();
    }
    for (c, cluster) in clusters.iter().enumerate() {
        for m in &cluster.members {
            b.agents[m.index()].cluster = c;
        }
    }

    // Capacities of member-sized places.
    for i in 0..b.places.len() {
        let id = b.places[i].id;
        let kind = b.places[i].kind;
        let members = match kind {
            PlaceKind::Home => b
                .agents
                .iter()
                .filter(|a| a.home == id || a.alt_home == Some(id))
                .count(),
            PlaceKind::Workplace => b.places[i].employees.len(),
            PlaceKind::School => {
                b.places[i].employees.len()
                    + b.agents
                        .iter()
                        .filter(|a| a.work_or_school == Some(id) && a.age_group != AgeGroup::Worker)
                        .count()
            }
            _ => continue,
        };
        b.places[i].capacity = (members as u32).max(1);
    }

    let econ = &config.economy;
    for p in &mut b.places {
        if p.kind != PlaceKind::Home {
            // Shops pay staff out of takings; the rest need a payroll reserve.
            let payroll = match p.kind {
                PlaceKind::Workplace | PlaceKind::School | PlaceKind::Hospital => p.employees.len() as i64,
                _ => 0,
            };
            p.wealth = econ.place_endowment.get(p.kind) + econ.endowment_per_employee * payroll;
        }
    }

    let mut world = World {
        config: config.clone(),
        seed,
        clock: Clock::new(config.ticks_per_day),
        agents: b.agents,
        places: b.places,
        households: b.households,
        clusters,
        government: Government::from_params(econ),
        ledger: Ledger::new(),
        initial_wealth: crate::economy::WealthSnapshot {
            agents: Vec::new(),
            places: Vec::new(),
            government: 0,
        },
        policies: PolicySet::new(&config.policies),
        rngs,
        ever_exposed: 0,
        detected_total: 0,
        transmissions: Vec::new(),
        transit: Vec::new(),
        last_velocity: 0.0,
    };
    world.initial_wealth = wealth_snapshot(&world);
    Ok(world)
}
