use super::{payable, transfer, Account, Reason};
use crate::types::{AgeGroup, AgentId, Money, PlaceId, PlaceKind};
use crate::world::World;

/// Totals moved by one end-of-day settlement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DaySettlement {
    pub wages: Money,
    /// Wages employers owed but could not pay.
    pub wage_shortfall: Money,
    pub takeover_wages: Money,
    pub tax: Money,
    pub subsidies: Money,
    pub public_service: Money,
    pub fixed_costs: Money,
    pub laid_off: usize,
}

/// Close the books for the day: wages, government wage takeover, tax,
/// subsidies, public services and (optionally) fixed costs, in that order.
/// Resets the per-day work counters.
pub fn settle_day(world: &mut World) -> DaySettlement {
    let mut out = DaySettlement::default();
    let wage = world.config.economy.wage_per_segment;
    let n = world.agents.len();
    let mut gross: Vec<Money> = vec![0; n];

    for i in 0..n {
        let a = &world.agents[i];
        if !a.health.compartment.is_alive() || a.worked_segments == 0 {
            continue;
        }
        let Some(employer) = a.work_or_school.filter(|_| a.age_group == AgeGroup::Worker) else {
            continue;
        };
        let owed = Money::from(a.worked_segments) * wage;
        let payer = Account::Place(employer);
        let paid = payable(world, payer, owed);
        out.wage_shortfall += owed - paid;
        transfer(world, payer, Account::Agent(AgentId(i as u32)), paid, Reason::Wage);
        gross[i] += paid;
        out.wages += paid;
    }

    if world.government.wage_takeover_active {
        for i in 0..n {
            let a = &world.agents[i];
            if !a.health.compartment.is_alive() || a.missed_closed_segments == 0 {
                continue;
            }
            let owed = Money::from(a.missed_closed_segments) * wage;
            let paid = payable(world, Account::Government, owed);
            transfer(
                world,
                Account::Government,
                Account::Agent(AgentId(i as u32)),
                paid,
                Reason::Wage,
            );
            gross[i] += paid;
            out.takeover_wages += paid;
        }
    }

    for (i, g) in gross.iter().enumerate() {
        let tax = world.government.tax_on(*g);
        transfer(
            world,
            Account::Agent(AgentId(i as u32)),
            Account::Government,
            tax,
            Reason::Tax,
        );
        out.tax += tax;
    }

    let takeover = world.government.wage_takeover_active;
    let unemployed_subsidy = world.government.subsidy_per_unemployed;
    for i in 0..n {
        let a = &world.agents[i];
        if !a.health.compartment.is_alive() {
            continue;
        }
        let amount = if a.age_group == AgeGroup::Worker {
            let no_job = a.work_or_school.is_none();
            let laid_off = a.worked_segments == 0 && a.missed_closed_segments > 0 && !takeover;
            if laid_off {
                out.laid_off += 1;
            }
            let mut amount = world.config.economy.allowance.worker;
            if no_job || laid_off {
                amount += unemployed_subsidy;
            }
            amount
        } else {
            world.config.economy.allowance.get(a.age_group)
        };
        let paid = payable(world, Account::Government, amount);
        transfer(
            world,
            Account::Government,
            Account::Agent(AgentId(i as u32)),
            paid,
            Reason::Subsidy,
        );
        out.subsidies += paid;
    }

    let public: Vec<PlaceId> = world
        .places
        .iter()
        .filter(|p| p.kind.is_public())
        .map(|p| p.id)
        .collect();
    if !public.is_empty() {
        let budget = world.government.public_service_cost;
        let share = budget / public.len() as Money;
        let remainder = budget % public.len() as Money;
        for (k, place) in public.iter().enumerate() {
            let amount = share + if (k as Money) < remainder { 1 } else { 0 };
            let paid = payable(world, Account::Government, amount);
            transfer(
                world,
                Account::Government,
                Account::Place(*place),
                paid,
                Reason::PublicService,
            );
            out.public_service += paid;
        }
    }

    if world.config.economy.fixed_costs_enabled {
        for p in 0..world.places.len() {
            let kind = world.places[p].kind;
            if !matches!(
                kind,
                PlaceKind::EssentialShop | PlaceKind::NonessentialShop | PlaceKind::Leisure
            ) {
                continue;
            }
            let cost = world.config.economy.fixed_cost_per_day.get(kind);
            // Rent and loans are due regardless of the balance.
            transfer(
                world,
                Account::Place(PlaceId(p as u32)),
                Account::Government,
                cost,
                Reason::FixedCost,
            );
            out.fixed_costs += cost;
            if world.places[p].wealth < 0 {
                world.places[p].insolvent = true;
            }
        }
    }

    for a in &mut world.agents {
        a.worked_segments = 0;
        a.missed_closed_segments = 0;
    }
    out
}
