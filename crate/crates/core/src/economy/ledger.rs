use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::types::{AgentId, Money, PlaceId};

/// Who holds money.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Account {
    Agent(AgentId),
    Place(PlaceId),
    Government,
}

impl fmt::Display for Account {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Account::Agent(a) => write!(f, "agent:{}", a.0),
            Account::Place(p) => write!(f, "place:{}", p.0),
            Account::Government => f.write_str("government"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Wage,
    Tax,
    Subsidy,
    PurchaseEssential,
    PurchaseNonessential,
    FixedCost,
    PublicService,
}

impl Reason {
    pub fn name(self) -> &'static str {
        match self {
            Reason::Wage => "wage",
            Reason::Tax => "tax",
            Reason::Subsidy => "subsidy",
            Reason::PurchaseEssential => "purchase_essential",
            Reason::PurchaseNonessential => "purchase_nonessential",
            Reason::FixedCost => "fixed_cost",
            Reason::PublicService => "public_service",
        }
    }

    pub fn is_purchase(self) -> bool {
        matches!(self, Reason::PurchaseEssential | Reason::PurchaseNonessential)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub tick: u64,
    pub payer: Account,
    pub payee: Account,
    pub amount: Money,
    pub reason: Reason,
}

/// Append-only record of every transfer.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Ledger {
    entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn new() -> Self {
        Ledger::default()
    }

    pub fn record(&mut self, entry: LedgerEntry) {
        debug_assert!(entry.amount > 0, "ledger amounts are positive");
        self.entries.push(entry);
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["tick", "payer", "payee", "amount", "reason"])?;
        for e in &self.entries {
            w.write_record([
                e.tick.to_string(),
                e.payer.to_string(),
                e.payee.to_string(),
                e.amount.to_string(),
                e.reason.name().to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Every balance in the economy at one moment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WealthSnapshot {
    pub agents: Vec<Money>,
    pub places: Vec<Money>,
    pub government: Money,
}

impl WealthSnapshot {
    pub fn total(&self) -> Money {
        self.agents.iter().sum::<Money>() + self.places.iter().sum::<Money>() + self.government
    }

    fn slot(&mut self, account: Account) -> &mut Money {
        match account {
            Account::Agent(a) => &mut self.agents[a.index()],
            Account::Place(p) => &mut self.places[p.index()],
            Account::Government => &mut self.government,
        }
    }
}

/// Rebuild balances by applying every ledger entry to a starting snapshot.
pub fn replay(initial: &WealthSnapshot, ledger: &Ledger) -> WealthSnapshot {
    let mut s = initial.clone();
    for e in ledger.entries() {
        *s.slot(e.payer) -= e.amount;
        *s.slot(e.payee) += e.amount;
    }
    s
}

/// Purchase volume per unit of money per day over `window_days` days
/// starting at `first_day`.
pub fn money_velocity(
    ledger: &Ledger,
    total_money: Money,
    first_day: u64,
    window_days: u64,
    ticks_per_day: u32,
) -> f64 {
    assert!(window_days >= 1, "window must cover at least one day");
    if total_money == 0 {
        return 0.0;
    }
    let tpd = u64::from(ticks_per_day);
    let start = first_day * tpd;
    let end = (first_day + window_days) * tpd;
    // Entries are appended in tick order.
    let entries = ledger.entries();
    let lo = entries.partition_point(|e| e.tick < start);
    let hi = entries.partition_point(|e| e.tick < end);
    let purchases: Money = entries[lo..hi]
        .iter()
        .filter(|e| e.reason.is_purchase())
        .map(|e| e.amount)
        .sum();
    purchases as f64 / (total_money as f64 * window_days as f64)
}
