//! Per-tick census written as one CSV row.

use crate::epidemic::Compartment;
use crate::needs::ActivityKind;
use crate::types::{AgeGroup, Money, PlaceKind};

/// Place kinds whose summed wealth is reported.
pub const REPORTED_SHOPS: [PlaceKind; 4] = [
    PlaceKind::EssentialShop,
    PlaceKind::NonessentialShop,
    PlaceKind::Leisure,
    PlaceKind::Workplace,
];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TickMetrics {
    pub tick: u64,
    pub day: u64,
    pub segment: u32,
    pub compartments: [usize; 8],
    /// E, I and O together.
    pub infected: usize,
    pub detected_total: usize,
    pub new_exposures: usize,
    pub activities: [usize; 9],
    pub occupancy: [usize; 8],
    /// Mean wealth of living and dead members of each age group.
    pub wealth_by_age: [f64; 4],
    pub household_capital: f64,
    pub shop_wealth: [Money; 4],
    pub nonessential_insolvent: usize,
    pub government_reserves: Money,
    pub total_money: Money,
    pub purchases: Money,
    /// Velocity of the last settled day.
    pub velocity: f64,
    pub policy_violations: usize,
    pub caregivers: usize,
    pub active_policies: String,
}

impl TickMetrics {
    pub fn compartment(&self, c: Compartment) -> usize {
        self.compartments[c.index()]
    }

    pub fn activity(&self, k: ActivityKind) -> usize {
        self.activities[k.index()]
    }

    pub fn occupancy_of(&self, k: PlaceKind) -> usize {
        self.occupancy[k.index()]
    }

    /// Every column but the last, which holds the active policy names.
    pub fn numeric_columns() -> Vec<String> {
        let mut h: Vec<String> = vec!["tick".into(), "day".into(), "segment".into()];
        h.extend(Compartment::ALL.iter().map(|c| c.name().to_string()));
        h.extend(["infected", "detected_total", "new_exposures"].map(String::from));
        h.extend(ActivityKind::ALL.iter().map(|k| format!("act_{}", k.name())));
        h.extend(PlaceKind::ALL.iter().map(|k| format!("occ_{}", k.name())));
        h.extend(AgeGroup::ALL.iter().map(|g| format!("wealth_{}", g.name())));
        h.push("household_capital".into());
        h.extend(REPORTED_SHOPS.iter().map(|k| format!("wealth_{}", k.name())));
        h.extend(
            [
                "nonessential_insolvent",
                "government_reserves",
                "total_money",
                "purchases",
                "velocity",
                "policy_violations",
                "caregivers",
            ]
            .map(String::from),
        );
        h
    }

    pub fn header() -> Vec<String> {
        let mut h = Self::numeric_columns();
        h.push("active_policies".into());
        h
    }

    pub fn numeric_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = vec![self.tick as f64, self.day as f64, f64::from(self.segment)];
        v.extend(self.compartments.iter().map(|c| *c as f64));
        v.extend([self.infected, self.detected_total, self.new_exposures].map(|c| c as f64));
        v.extend(self.activities.iter().map(|c| *c as f64));
        v.extend(self.occupancy.iter().map(|c| *c as f64));
        v.extend(self.wealth_by_age);
        v.push(self.household_capital);
        v.extend(self.shop_wealth.iter().map(|w| *w as f64));
        v.extend([
            self.nonessential_insolvent as f64,
            self.government_reserves as f64,
            self.total_money as f64,
            self.purchases as f64,
            self.velocity,
            self.policy_violations as f64,
            self.caregivers as f64,
        ]);
        v
    }

    /// The CSV record; integers print without a fraction.
    pub fn record(&self) -> Vec<String> {
        let mut r: Vec<String> = vec![self.tick.to_string(), self.day.to_string(), self.segment.to_string()];
        r.extend(self.compartments.iter().map(|c| c.to_string()));
        r.extend([self.infected, self.detected_total, self.new_exposures].map(|c| c.to_string()));
        r.extend(self.activities.iter().map(|c| c.to_string()));
        r.extend(self.occupancy.iter().map(|c| c.to_string()));
        r.extend(self.wealth_by_age.iter().map(|w| w.to_string()));
        r.push(self.household_capital.to_string());
        r.extend(self.shop_wealth.iter().map(|w| w.to_string()));
        r.extend([
            self.nonessential_insolvent.to_string(),
            self.government_reserves.to_string(),
            self.total_money.to_string(),
            self.purchases.to_string(),
            self.velocity.to_string(),
            self.policy_violations.to_string(),
            self.caregivers.to_string(),
            self.active_policies.clone(),
        ]);
        r
    }
}
