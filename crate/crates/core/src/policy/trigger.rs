use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// What trigger conditions look at.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TriggerInputs {
    pub tick: u64,
    /// Cumulative detected infections.
    pub detected: usize,
    /// Currently infected (E, I or O) over the living population.
    pub infected_fraction: f64,
}

/// `detected >= k`, `infected_fraction >= x` or `tick >= t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Trigger {
    Detected(usize),
    InfectedFraction(f64),
    Tick(u64),
}

impl Trigger {
    pub fn holds(&self, inputs: &TriggerInputs) -> bool {
        match *self {
            Trigger::Detected(k) => inputs.detected >= k,
            Trigger::InfectedFraction(x) => inputs.infected_fraction >= x,
            Trigger::Tick(t) => inputs.tick >= t,
        }
    }
}

impl fmt::Display for Trigger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trigger::Detected(k) => write!(f, "detected >= {k}"),
            Trigger::InfectedFraction(x) => write!(f, "infected_fraction >= {x}"),
            Trigger::Tick(t) => write!(f, "tick >= {t}"),
        }
    }
}

impl FromStr for Trigger {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad trigger `{s}`: expected `detected >= k`, `infected_fraction >= x` or `tick >= t`");
        let (lhs, rhs) = s.split_once(">=").ok_or_else(bad)?;
        let rhs = rhs.trim();
        match lhs.trim() {
            "detected" => rhs.parse().map(Trigger::Detected).map_err(|_| bad()),
            "tick" => rhs.parse().map(Trigger::Tick).map_err(|_| bad()),
            "infected_fraction" => {
                let x: f64 = rhs.parse().map_err(|_| bad())?;
                if (0.0..=1.0).contains(&x) {
                    Ok(Trigger::InfectedFraction(x))
                } else {
                    Err(format!("bad trigger `{s}`: fraction must lie in [0, 1]"))
                }
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for Trigger {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Trigger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
