//! Closed money circuit. Money only ever moves between accounts, every move
//! is a ledger entry, and the total never changes.

mod ledger;
mod settlement;

pub use ledger::{money_velocity, replay, Account, Ledger, LedgerEntry, Reason, WealthSnapshot};
pub use settlement::{settle_day, DaySettlement};

use serde::{Deserialize, Serialize};

use crate::types::{AgentId, Money, PerAgeGroup, PerPlaceKind, PlaceId, PlaceKind};
use crate::world::World;

/// Prices, wages, endowments and public finance. Values only fix orderings
/// (workers earn more than students, who hold more than children).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EconomyParams {
    pub tax_rate: f64,
    pub wage_per_segment: Money,
    pub essential_price_per_day: Money,
    pub nonessential_spend: Money,
    pub leisure_spend: Money,
    pub subsidy_per_unemployed: Money,
    /// Daily transfer to agents who do not work, by age group.
    pub allowance: PerAgeGroup<Money>,
    pub initial_wealth: PerAgeGroup<Money>,
    /// Essential stock handed to each agent at creation, in days.
    pub initial_stock_days: f64,
    pub place_endowment: PerPlaceKind<Money>,
    /// Payroll reserve per employee of a workplace, school or hospital.
    pub endowment_per_employee: Money,
    pub government_reserves: Money,
    pub allow_deficit: bool,
    /// Daily budget for schools and hospitals, shared evenly.
    pub public_service_cost: Money,
    pub fixed_costs_enabled: bool,
    pub fixed_cost_per_day: PerPlaceKind<Money>,
}

impl Default for EconomyParams {
    fn default() -> Self {
        EconomyParams {
            tax_rate: 0.3,
            wage_per_segment: 12,
            essential_price_per_day: 5,
            nonessential_spend: 6,
            leisure_spend: 4,
            subsidy_per_unemployed: 6,
            allowance: PerAgeGroup {
                child: 3,
                student: 5,
                worker: 0,
                retiree: 7,
            },
            initial_wealth: PerAgeGroup {
                child: 100,
                student: 300,
                worker: 800,
                retiree: 1200,
            },
            initial_stock_days: 10.0,
            place_endowment: PerPlaceKind {
                home: 0,
                essential_shop: 1000,
                nonessential_shop: 600,
                workplace: 500,
                school: 1000,
                hospital: 1000,
                leisure: 600,
                station: 0,
            },
            endowment_per_employee: 2500,
            government_reserves: 50_000,
            allow_deficit: true,
            public_service_cost: 100,
            fixed_costs_enabled: false,
            fixed_cost_per_day: PerPlaceKind {
                home: 0,
                essential_shop: 20,
                nonessential_shop: 20,
                workplace: 0,
                school: 0,
                hospital: 0,
                leisure: 20,
                station: 0,
            },
        }
    }
}

impl EconomyParams {
    pub fn validate(&self) -> Result<(), String> {
        if !(0.0..=1.0).contains(&self.tax_rate) {
            return Err("economy.tax_rate must lie in [0, 1]".into());
        }
        if self.essential_price_per_day <= 0 {
            return Err("economy.essential_price_per_day must be > 0".into());
        }
        let non_negative = [
            ("wage_per_segment", self.wage_per_segment),
            ("nonessential_spend", self.nonessential_spend),
            ("leisure_spend", self.leisure_spend),
            ("subsidy_per_unemployed", self.subsidy_per_unemployed),
            ("endowment_per_employee", self.endowment_per_employee),
            ("public_service_cost", self.public_service_cost),
        ];
        for (name, v) in non_negative {
            if v < 0 {
                return Err(format!("economy.{name} must be >= 0"));
            }
        }
        for g in crate::types::AgeGroup::ALL {
            if self.allowance.get(g) < 0 || self.initial_wealth.get(g) < 0 {
                return Err("economy.allowance and economy.initial_wealth must be >= 0".into());
            }
        }
        if self.place_endowment.values().iter().any(|v| *v < 0)
            || self.fixed_cost_per_day.values().iter().any(|v| *v < 0)
        {
            return Err("economy place amounts must be >= 0".into());
        }
        if !(self.initial_stock_days >= 0.0 && self.initial_stock_days.is_finite()) {
            return Err("economy.initial_stock_days must be >= 0".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Government {
    pub reserves: Money,
    pub tax_rate: f64,
    pub subsidy_per_unemployed: Money,
    pub wage_takeover_active: bool,
    pub public_service_cost: Money,
    pub allow_deficit: bool,
}

impl Government {
    pub fn from_params(p: &EconomyParams) -> Self {
        Government {
            reserves: p.government_reserves,
            tax_rate: p.tax_rate,
            subsidy_per_unemployed: p.subsidy_per_unemployed,
            wage_takeover_active: false,
            public_service_cost: p.public_service_cost,
            allow_deficit: p.allow_deficit,
        }
    }

    /// Tax owed on a gross wage, rounded to the nearest unit.
    pub fn tax_on(&self, gross: Money) -> Money {
        (gross as f64 * self.tax_rate).round() as Money
    }
}

fn balance(world: &World, account: Account) -> Money {
    match account {
        Account::Agent(a) => world.agents[a.index()].wealth,
        Account::Place(p) => world.places[p.index()].wealth,
        Account::Government => world.government.reserves,
    }
}

fn balance_mut(world: &mut World, account: Account) -> &mut Money {
    match account {
        Account::Agent(a) => &mut world.agents[a.index()].wealth,
        Account::Place(p) => &mut world.places[p.index()].wealth,
        Account::Government => &mut world.government.reserves,
    }
}

/// Move exactly `amount` and record it. Zero amounts are skipped.
pub fn transfer(world: &mut World, payer: Account, payee: Account, amount: Money, reason: Reason) {
    debug_assert!(amount >= 0);
    if amount <= 0 {
        return;
    }
    *balance_mut(world, payer) -= amount;
    *balance_mut(world, payee) += amount;
    let tick = world.clock.tick;
    world.ledger.record(LedgerEntry {
        tick,
        payer,
        payee,
        amount,
        reason,
    });
}

/// What the payer can actually hand over: everything asked if it may run a
/// deficit, else at most its positive balance.
pub fn payable(world: &World, payer: Account, amount: Money) -> Money {
    let may_go_negative = payer == Account::Government && world.government.allow_deficit;
    if may_go_negative {
        amount
    } else {
        amount.min(balance(world, payer).max(0))
    }
}

/// An agent buys from a shop. The amount is scaled down to what the agent
/// can afford; essential purchases add to the agent's stock.
/// Returns the amount actually paid.
pub fn transact(world: &mut World, agent: AgentId, shop: PlaceId, amount: Money) -> Money {
    let kind = world.places[shop.index()].kind;
    debug_assert_eq!(
        world.agents[agent.index()].current_place,
        shop,
        "buyers must be at the shop"
    );
    let paid = amount.min(world.agents[agent.index()].wealth.max(0));
    if paid <= 0 {
        return 0;
    }
    let reason = if kind == PlaceKind::EssentialShop {
        Reason::PurchaseEssential
    } else {
        Reason::PurchaseNonessential
    };
    transfer(world, Account::Agent(agent), Account::Place(shop), paid, reason);
    if reason == Reason::PurchaseEssential {
        let price = world.config.economy.essential_price_per_day;
        world.agents[agent.index()].essential_stock += paid as f64 / price as f64;
    }
    paid
}

pub fn total_money(world: &World) -> Money {
    world.agents.iter().map(|a| a.wealth).sum::<Money>()
        + world.places.iter().map(|p| p.wealth).sum::<Money>()
        + world.government.reserves
}

pub fn wealth_snapshot(world: &World) -> WealthSnapshot {
    WealthSnapshot {
        agents: world.agents.iter().map(|a| a.wealth).collect(),
        places: world.places.iter().map(|p| p.wealth).collect(),
        government: world.government.reserves,
    }
}
