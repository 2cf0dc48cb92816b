use rand::seq::IndexedRandom;

use super::context::wants_shop_choice;
use super::{available_context, Slot, World};
use crate::economy::{money_velocity, settle_day, total_money, transact};
use crate::epidemic::{
    epi_census, place_transmission, progress_disease, run_tests, HealthState, Occupant, TransmissionEvent,
};
use crate::metrics::{TickMetrics, REPORTED_SHOPS};
use crate::needs::{apply_effects, choose_activity, decay, ActivityKind, AgentView, Need, ACTIVITY_KINDS};
use crate::policy::{assign_caregivers, filter_context, PolicyKind, TriggerInputs};
use crate::types::{AgeGroup, AgentId, Money, PlaceId, PlaceKind};

/// Run the tick at `world.clock.tick`, then advance the clock.
///
/// Order: detection and policy triggers; per agent (ascending id) needs
/// decay, deliberation, movement and purchases; per-place transmission;
/// disease progression; end-of-day settlement on the last segment; metrics.
pub fn step_world(world: &mut World) -> TickMetrics {
    let clock = world.clock;
    let tpd = clock.ticks_per_day;
    let ledger_start = world.ledger.len();

    // Detection and triggers.
    for a in &mut world.agents {
        if a.health.compartment.is_under_care() && !a.health.detected {
            a.health.detected = true;
            world.detected_total += 1;
        }
    }
    if clock.is_first_segment() {
        if let Some(testing) = world.policies.testing() {
            let found = run_tests(&mut world.agents, &testing, &mut world.rngs.epidemic);
            world.detected_total += found.len();
        }
    }
    let census = epi_census(world);
    let alive = census.alive();
    let inputs = TriggerInputs {
        tick: clock.tick,
        detected: world.detected_total,
        infected_fraction: if alive == 0 {
            0.0
        } else {
            census.infected() as f64 / alive as f64
        },
    };
    world.policies.evaluate_triggers(&inputs);
    world.government.wage_takeover_active = world.policies.is_active(PolicyKind::WageTakeover);
    let schools_closed = world.policies.is_closed(PlaceKind::School);
    let caregivers = assign_caregivers(&mut world.agents, &world.households, schools_closed, clock.week_index()).len();

    // Deliberation and movement.
    let prevalence = if alive == 0 {
        0.0
    } else {
        world
            .agents
            .iter()
            .filter(|a| a.health.detected && a.health.compartment.is_infected())
            .count() as f64
            / alive as f64
    };
    let conformity = cluster_shares(world);
    let household_alive: Vec<usize> = world
        .households
        .iter()
        .map(|h| h.members.iter().filter(|m| world.agents[m.index()].is_alive()).count())
        .collect();
    let nonessential: Vec<PlaceId> = world.places_of(PlaceKind::NonessentialShop).map(|p| p.id).collect();
    let policy_active = world.policies.any_behavioural();
    let child_on_duty = world.config.schedule.slot(AgeGroup::Child, &clock) == Slot::Duty;
    let horizon = world.config.needs.subneeds.food_horizon_days;
    let price = world.config.economy.essential_price_per_day;

    for p in &mut world.places {
        p.occupants.clear();
    }
    world.transit.clear();
    let mut violations = 0;
    let mut activities = [0usize; ACTIVITY_KINDS];

    for i in 0..world.agents.len() {
        if !world.agents[i].is_alive() {
            world.agents[i].activity = None;
            continue;
        }
        {
            let calib = &world.config.needs;
            let a = &mut world.agents[i];
            a.needs = decay(&a.needs, 1, calib);
            if a.health.believes_sick {
                let drained = a.needs.level(Need::Survival) - calib.modifiers.sick_survival_drain;
                a.needs.set_level(Need::Survival, drained);
            }
            a.essential_stock = (a.essential_stock - 1.0 / f64::from(tpd)).max(0.0);
            a.needs.sync_resources(a.essential_stock, a.wealth, calib);
        }

        let shop = if wants_shop_choice(world, &world.agents[i]) {
            nonessential.choose(&mut world.rngs.behavior).copied()
        } else {
            None
        };
        let agent = &world.agents[i];
        let mut ctx = available_context(world, agent, shop);
        ctx.prevalence = prevalence;
        ctx.conformity = conformity[agent.cluster];
        ctx.policy_active = policy_active;
        let on_duty = agent.is_caregiver && child_on_duty;
        let filtered = filter_context(&ctx, &world.policies, on_duty, |p| world.places[p.index()].kind);
        let affordable = (agent.wealth.max(0) / price) as f64;
        let view = AgentView {
            needs: &agent.needs,
            traits: &agent.traits,
            believes_sick: agent.health.believes_sick,
            has_company: household_alive[agent.household] > 1,
            essential_stock: agent.essential_stock,
            purchasable_days: (horizon - agent.essential_stock).floor().max(0.0).min(affordable),
        };
        let decision = choose_activity(&view, &ctx, &filtered, &world.config.needs);
        let purchasable_days = view.purchasable_days;
        let activity = decision.activity;
        let id = AgentId(i as u32);
        let place_kind = world.places[activity.place.index()].kind;
        let open = !world.policies.is_closed(place_kind);

        world.agents[i].current_place = activity.place;
        world.places[activity.place.index()].occupants.push(id);

        if open {
            let amount: Money = match activity.kind {
                ActivityKind::ShopEssential => purchasable_days as Money * price,
                ActivityKind::ShopNonessential => world.config.economy.nonessential_spend,
                ActivityKind::Leisure => world.config.economy.leisure_spend,
                _ => 0,
            };
            if amount > 0 {
                transact(world, id, activity.place, amount);
            }
        }

        let calib = &world.config.needs;
        let a = &mut world.agents[i];
        a.needs = apply_effects(&a.needs, &decision.gains, calib);
        a.needs.sync_resources(a.essential_stock, a.wealth, calib);

        if a.age_group == AgeGroup::Worker && world.config.schedule.slot(AgeGroup::Worker, &clock) == Slot::Duty {
            if let Some(employer) = a.work_or_school {
                let employer_closed = world.policies.is_closed(world.places[employer.index()].kind);
                let worked = match activity.kind {
                    ActivityKind::WorkAtHome => true,
                    ActivityKind::WorkAtOffice => !employer_closed,
                    _ => false,
                };
                if worked {
                    a.worked_segments += 1;
                } else if employer_closed {
                    a.missed_closed_segments += 1;
                }
            }
        }
        if a.commuter && matches!(activity.kind, ActivityKind::WorkAtOffice | ActivityKind::AttendSchool) {
            world.transit.push(id);
        }
        if activity.breaks_policy {
            violations += 1;
        }
        activities[activity.kind.index()] += 1;
        a.activity = Some(activity);
    }

    // Transmission.
    let new_exposures = transmit(world);

    // Disease progression.
    let params = &world.config.epidemic;
    for a in &mut world.agents {
        a.health = progress_disease(&a.health, params, &mut world.rngs.epidemic, tpd);
    }

    // Settlement.
    if clock.is_last_segment() {
        settle_day(world);
        let total = total_money(world);
        world.last_velocity = money_velocity(&world.ledger, total, clock.day_index(), 1, tpd);
    }

    let purchases: Money = world.ledger.entries()[ledger_start..]
        .iter()
        .filter(|e| e.reason.is_purchase())
        .map(|e| e.amount)
        .sum();
    let metrics = collect_metrics(world, activities, new_exposures, purchases, violations, caregivers);
    world.clock.advance();
    metrics
}

/// Share of each cluster's living members doing each activity last tick.
fn cluster_shares(world: &World) -> Vec<[f64; ACTIVITY_KINDS]> {
    world
        .clusters
        .iter()
        .map(|c| {
            let mut counts = [0.0; ACTIVITY_KINDS];
            let mut n = 0.0;
            for m in &c.members {
                let a = &world.agents[m.index()];
                if let (true, Some(act)) = (a.is_alive(), a.activity) {
                    counts[act.kind.index()] += 1.0;
                    n += 1.0;
                }
            }
            if n > 0.0 {
                for v in &mut counts {
                    *v /= n;
                }
            }
            counts
        })
        .collect()
}

fn transmit(world: &mut World) -> usize {
    let multiplier = world.policies.contagion_multiplier();
    let tick = world.clock.tick;
    let log = world.config.epidemic.log_transmissions;
    let mut exposed = vec![false; world.agents.len()];
    let occupant = |world: &World, id: &AgentId| {
        let a = &world.agents[id.index()];
        Occupant {
            id: *id,
            compartment: a.health.compartment,
            susceptibility: world.config.epidemic.susceptibility.get(a.age_group),
        }
    };

    let stations: Vec<PlaceId> = world.places_of(PlaceKind::Station).map(|p| p.id).collect();
    let mut transit_groups: Vec<Vec<AgentId>> = vec![Vec::new(); stations.len()];
    for id in &world.transit {
        transit_groups[id.index() % stations.len()].push(*id);
    }

    for p in 0..world.places.len() {
        let place = &world.places[p];
        let group: &[AgentId] = if place.kind == PlaceKind::Station {
            let k = stations.iter().position(|s| *s == place.id).unwrap();
            &transit_groups[k]
        } else {
            &place.occupants
        };
        if group.is_empty() {
            continue;
        }
        let occupants: Vec<Occupant> = group.iter().map(|id| occupant(world, id)).collect();
        let (infectors, newly) = place_transmission(
            place.kind,
            place.contagion_base,
            place.capacity,
            &occupants,
            &world.config.epidemic,
            multiplier,
            &mut world.rngs.epidemic,
        );
        for id in &newly {
            exposed[id.index()] = true;
        }
        if log && !newly.is_empty() {
            world.transmissions.push(TransmissionEvent {
                place: PlaceId(p as u32),
                tick,
                infectors,
                exposed: newly,
            });
        }
    }

    let tpd = world.clock.ticks_per_day;
    let mut count = 0;
    for (i, hit) in exposed.iter().enumerate() {
        if *hit && world.agents[i].health.compartment == crate::epidemic::Compartment::S {
            let incubation = world
                .config
                .epidemic
                .sample_incubation_ticks(&mut world.rngs.epidemic, tpd);
            world.agents[i].health = HealthState::exposed(incubation);
            count += 1;
        }
    }
    world.ever_exposed += count;
    count
}

fn collect_metrics(
    world: &World,
    activities: [usize; ACTIVITY_KINDS],
    new_exposures: usize,
    purchases: Money,
    violations: usize,
    caregivers: usize,
) -> TickMetrics {
    let clock = world.clock;
    let census = epi_census(world);
    let mut occupancy = [0usize; 8];
    for p in &world.places {
        occupancy[p.kind.index()] += p.occupants.len();
    }
    let mut wealth_sum = [0 as Money; 4];
    let mut group_size = [0usize; 4];
    for a in &world.agents {
        wealth_sum[a.age_group.index()] += a.wealth;
        group_size[a.age_group.index()] += 1;
    }
    let mut wealth_by_age = [0.0; 4];
    for g in 0..4 {
        if group_size[g] > 0 {
            wealth_by_age[g] = wealth_sum[g] as f64 / group_size[g] as f64;
        }
    }
    let shop_wealth = REPORTED_SHOPS.map(|k| world.places_of(k).map(|p| p.wealth).sum::<Money>());
    TickMetrics {
        tick: clock.tick,
        day: clock.day_index(),
        segment: clock.segment_index(),
        compartments: census.counts,
        infected: census.infected(),
        detected_total: world.detected_total,
        new_exposures,
        activities,
        occupancy,
        wealth_by_age,
        household_capital: world.mean_household_capital(),
        shop_wealth,
        nonessential_insolvent: world
            .places_of(PlaceKind::NonessentialShop)
            .filter(|p| p.insolvent)
            .count(),
        government_reserves: world.government.reserves,
        total_money: total_money(world),
        purchases,
        velocity: world.last_velocity,
        policy_violations: violations,
        caregivers,
        active_policies: world.policies.active_names().join(";"),
    }
}
