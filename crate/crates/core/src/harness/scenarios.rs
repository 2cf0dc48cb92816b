//! Built-in scenarios: a baseline, two school and work experiments and two
//! lockdown economics experiments. 120 days of about 330 people, 40 runs.

use super::ScenarioConfig;
use crate::policy::{PolicyKind, PolicySpec, Trigger};

pub const SCENARIOS: [(&str, &str); 5] = [
    ("baseline", "no interventions"),
    ("close-schools", "schools close at the first detected infection"),
    (
        "work-at-home",
        "offices close and staff telework from the first detected infection",
    ),
    (
        "lockdown-no-subsidy",
        "lockdown with non-essential shops closed from the first infection",
    ),
    (
        "lockdown-subsidy",
        "the same lockdown with the government paying wages of closed businesses",
    ),
];

fn with(name: &str, policies: Vec<PolicySpec>) -> ScenarioConfig {
    ScenarioConfig {
        name: name.to_string(),
        policies,
        ..ScenarioConfig::default()
    }
}

fn on_first_detection(kind: PolicyKind) -> PolicySpec {
    PolicySpec::new(kind, Trigger::Detected(1))
}

fn on_first_infection(kind: PolicyKind) -> PolicySpec {
    PolicySpec::new(kind, Trigger::InfectedFraction(0.001))
}

pub fn builtin(name: &str) -> Option<ScenarioConfig> {
    let config = match name {
        "baseline" => with(name, Vec::new()),
        "close-schools" => with(name, vec![on_first_detection(PolicyKind::CloseSchools)]),
        "work-at-home" => with(name, vec![on_first_detection(PolicyKind::CloseWorkplacesTelework)]),
        "lockdown-no-subsidy" => with(
            name,
            vec![
                on_first_infection(PolicyKind::Lockdown),
                on_first_infection(PolicyKind::CloseNonessentialShops),
            ],
        ),
        "lockdown-subsidy" => with(
            name,
            vec![
                on_first_infection(PolicyKind::Lockdown),
                on_first_infection(PolicyKind::CloseNonessentialShops),
                on_first_infection(PolicyKind::WageTakeover),
            ],
        ),
        _ => return None,
    };
    Some(config)
}
