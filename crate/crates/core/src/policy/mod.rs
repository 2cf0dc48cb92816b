//! Interventions, their triggers, and how they shrink the activity context.

mod caregivers;
mod trigger;

pub use caregivers::assign_caregivers;
pub use trigger::{Trigger, TriggerInputs};

use serde::{Deserialize, Serialize};

use crate::epidemic::TestingPolicy;
use crate::needs::{Activity, ActivityContext, ActivityKind, FilteredContext};
use crate::types::{PlaceId, PlaceKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    CloseSchools,
    CloseWorkplacesTelework,
    CloseNonessentialShops,
    Lockdown,
    SocialDistancing,
    Testing,
    WageTakeover,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 7] = [
        PolicyKind::CloseSchools,
        PolicyKind::CloseWorkplacesTelework,
        PolicyKind::CloseNonessentialShops,
        PolicyKind::Lockdown,
        PolicyKind::SocialDistancing,
        PolicyKind::Testing,
        PolicyKind::WageTakeover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolicyKind::CloseSchools => "close_schools",
            PolicyKind::CloseWorkplacesTelework => "close_workplaces_telework",
            PolicyKind::CloseNonessentialShops => "close_nonessential_shops",
            PolicyKind::Lockdown => "lockdown",
            PolicyKind::SocialDistancing => "social_distancing",
            PolicyKind::Testing => "testing",
            PolicyKind::WageTakeover => "wage_takeover",
        }
    }

    /// Restricts what people may do, as opposed to funding or testing.
    pub fn is_behavioural(self) -> bool {
        !matches!(self, PolicyKind::Testing | PolicyKind::WageTakeover)
    }
}

/// A policy as declared in the configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySpec {
    pub kind: PolicyKind,
    pub trigger: Trigger,
    /// Lifts the policy again once it holds. Policies are sticky without one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub release: Option<Trigger>,
    /// Social distancing: multiplier on every place's contagion.
    #[serde(default = "default_distancing", skip_serializing_if = "is_default_distancing")]
    pub contagion_multiplier: f64,
    /// Testing parameters.
    #[serde(default = "default_tests", skip_serializing_if = "is_default_tests")]
    pub tests_per_day: usize,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub symptomatic_only: bool,
    #[serde(default = "default_sensitivity", skip_serializing_if = "is_default_sensitivity")]
    pub sensitivity: f64,
}

fn default_distancing() -> f64 {
    0.5
}
fn is_default_distancing(v: &f64) -> bool {
    *v == default_distancing()
}
fn default_tests() -> usize {
    10
}
fn is_default_tests(v: &usize) -> bool {
    *v == default_tests()
}
fn default_true() -> bool {
    true
}
fn is_true(v: &bool) -> bool {
    *v
}
fn default_sensitivity() -> f64 {
    1.0
}
fn is_default_sensitivity(v: &f64) -> bool {
    *v == default_sensitivity()
}

impl PolicySpec {
    pub fn new(kind: PolicyKind, trigger: Trigger) -> Self {
        PolicySpec {
            kind,
            trigger,
            release: None,
            contagion_multiplier: default_distancing(),
            tests_per_day: default_tests(),
            symptomatic_only: true,
            sensitivity: default_sensitivity(),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(0.0..=1.0).contains(&self.contagion_multiplier) {
            return Err(format!(
                "policy {}: contagion_multiplier must lie in [0, 1]",
                self.kind.name()
            ));
        }
        if !(0.0..=1.0).contains(&self.sensitivity) {
            return Err(format!("policy {}: sensitivity must lie in [0, 1]", self.kind.name()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Policy {
    pub spec: PolicySpec,
    pub active: bool,
    pub activated_at: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolicyEvent {
    pub tick: u64,
    pub kind: PolicyKind,
    pub active: bool,
}

/// Ordered policies. Evaluation follows list order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolicySet {
    pub policies: Vec<Policy>,
    pub log: Vec<PolicyEvent>,
}

impl PolicySet {
    pub fn new(specs: &[PolicySpec]) -> Self {
        PolicySet {
            policies: specs
                .iter()
                .map(|s| Policy {
                    spec: s.clone(),
                    active: false,
                    activated_at: None,
                })
                .collect(),
            log: Vec::new(),
        }
    }

    pub fn is_active(&self, kind: PolicyKind) -> bool {
        self.policies.iter().any(|p| p.active && p.spec.kind == kind)
    }

    pub fn any_behavioural(&self) -> bool {
        self.policies.iter().any(|p| p.active && p.spec.kind.is_behavioural())
    }

    /// Activate policies whose trigger holds and release those whose release
    /// condition holds. Returns the changes made, in list order.
    pub fn evaluate_triggers(&mut self, inputs: &TriggerInputs) -> Vec<PolicyEvent> {
        let mut changes = Vec::new();
        for p in &mut self.policies {
            if !p.active {
                // A policy whose release already holds stays off.
                let released = p.activated_at.is_some() && p.spec.release.is_some_and(|r| r.holds(inputs));
                if !released && p.spec.trigger.holds(inputs) {
                    p.active = true;
                    p.activated_at.get_or_insert(inputs.tick);
                    changes.push(PolicyEvent {
                        tick: inputs.tick,
                        kind: p.spec.kind,
                        active: true,
                    });
                }
            } else if p.spec.release.is_some_and(|r| r.holds(inputs)) {
                p.active = false;
                changes.push(PolicyEvent {
                    tick: inputs.tick,
                    kind: p.spec.kind,
                    active: false,
                });
            }
        }
        self.log.extend_from_slice(&changes);
        changes
    }

    /// Is a place of this kind shut down?
    pub fn is_closed(&self, kind: PlaceKind) -> bool {
        let lockdown = self.is_active(PolicyKind::Lockdown);
        match kind {
            PlaceKind::School => lockdown || self.is_active(PolicyKind::CloseSchools),
            PlaceKind::Workplace => lockdown || self.is_active(PolicyKind::CloseWorkplacesTelework),
            PlaceKind::NonessentialShop | PlaceKind::Leisure => {
                lockdown || self.is_active(PolicyKind::CloseNonessentialShops)
            }
            PlaceKind::Home | PlaceKind::EssentialShop | PlaceKind::Hospital | PlaceKind::Station => false,
        }
    }

    /// Product of all active distancing multipliers.
    pub fn contagion_multiplier(&self) -> f64 {
        self.policies
            .iter()
            .filter(|p| p.active && p.spec.kind == PolicyKind::SocialDistancing)
            .map(|p| p.spec.contagion_multiplier)
            .product()
    }

    pub fn testing(&self) -> Option<TestingPolicy> {
        self.policies
            .iter()
            .find(|p| p.active && p.spec.kind == PolicyKind::Testing)
            .map(|p| TestingPolicy {
                capacity_per_day: p.spec.tests_per_day,
                symptomatic_only: p.spec.symptomatic_only,
                sensitivity: p.spec.sensitivity,
            })
    }

    pub fn active_names(&self) -> Vec<&'static str> {
        self.policies
            .iter()
            .filter(|p| p.active)
            .map(|p| p.spec.kind.name())
            .collect()
    }
}

/// Split a context into what policy allows and what it took away.
///
/// Home activities and doctor visits are never removed. A caregiver on duty
/// loses every activity away from home. Work and school at a closed place
/// vanish outright: nobody is there to let you in, so they cannot be taken up
/// as rule breaking either.
pub fn filter_context(
    context: &ActivityContext,
    policies: &PolicySet,
    caregiver_on_duty: bool,
    place_kind: impl Fn(PlaceId) -> PlaceKind,
) -> FilteredContext {
    let mut out = FilteredContext::default();
    for a in &context.candidates {
        let closed = policies.is_closed(place_kind(a.place));
        let keep = match a.kind {
            ActivityKind::RestAtHome
            | ActivityKind::StayHome
            | ActivityKind::WorkAtHome
            | ActivityKind::VisitDoctor => true,
            ActivityKind::WorkAtOffice | ActivityKind::AttendSchool if closed => continue,
            _ => !caregiver_on_duty && !closed,
        };
        if keep {
            out.allowed.push(*a);
        } else {
            out.removed.push(Activity {
                breaks_policy: false,
                ..*a
            });
        }
    }
    out
}
