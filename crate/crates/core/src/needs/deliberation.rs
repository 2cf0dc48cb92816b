//! Picking an activity: score each candidate by how much it refills the
//! currently urgent needs and take the best one.

use super::activity::{Activity, ActivityContext, ActivityKind, FilteredContext};
use super::{composite_safety, food_safety_level_with, urgency, Need, NeedsCalibration, NeedsState, Subneed, Traits};

/// The parts of an agent deliberation looks at.
#[derive(Debug, Clone, Copy)]
pub struct AgentView<'a> {
    pub needs: &'a NeedsState,
    pub traits: &'a Traits,
    pub believes_sick: bool,
    /// Other people share the agent's home.
    pub has_company: bool,
    pub essential_stock: f64,
    /// Days of supplies the agent can afford and store right now.
    pub purchasable_days: f64,
}

/// Expected change per need, plus the subneed deltas that produce the
/// safety component.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NeedGains {
    pub needs: [f64; 5],
    pub risk_avoidance: f64,
    pub compliance: f64,
    pub food_days: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decision {
    pub activity: Activity,
    pub gains: NeedGains,
    pub score: f64,
}

pub fn expected_gains(
    agent: &AgentView<'_>,
    activity: &Activity,
    context: &ActivityContext,
    calibration: &NeedsCalibration,
) -> NeedGains {
    let kind = activity.kind;
    let base = calibration.gains.get(kind);
    let m = &calibration.modifiers;
    let mut g = NeedGains::default();

    g.needs[Need::Belonging.index()] = if kind.is_home_based() && agent.has_company {
        base.belonging * m.company_belonging_multiplier
    } else {
        base.belonging
    };
    g.needs[Need::SelfEsteem.index()] = base.self_esteem;
    g.needs[Need::Autonomy.index()] = base.autonomy;

    let survival = if agent.believes_sick {
        match kind {
            ActivityKind::RestAtHome | ActivityKind::VisitDoctor => base.survival * m.sick_survival_multiplier,
            _ => -m.sick_activity_survival_penalty,
        }
    } else {
        base.survival
    };
    g.needs[Need::Survival.index()] = survival + m.conformity_scale * context.conformity[kind.index()];

    g.risk_avoidance = base.risk_avoidance;
    if !kind.is_home_based() {
        g.risk_avoidance -= agent.traits.risk_avoidance_weight * context.prevalence * m.risk_scale;
    }

    g.compliance = if activity.breaks_policy {
        -agent.traits.compliance_propensity * m.breaking_compliance_scale
    } else if context.policy_active || kind.is_duty() {
        base.compliance
    } else {
        0.0
    };

    if kind == ActivityKind::ShopEssential {
        g.food_days = agent.purchasable_days.max(0.0);
    }

    g.needs[Need::Safety.index()] = safety_delta(agent, &g, calibration);
    g
}

fn safety_delta(agent: &AgentView<'_>, g: &NeedGains, calibration: &NeedsCalibration) -> f64 {
    let s = &calibration.subneeds;
    let before = agent.needs.subneeds;
    let mut after = before;
    let r = Subneed::RiskAvoidance.index();
    after[r] = (after[r] + g.risk_avoidance).clamp(0.0, 1.0);
    let c = Subneed::Compliance.index();
    after[c] = (after[c] + g.compliance).clamp(-1.0, 1.0);
    if g.food_days > 0.0 {
        after[Subneed::FoodSafety.index()] =
            food_safety_level_with(agent.essential_stock + g.food_days, s.food_horizon_days);
    }
    composite_safety(&after, s) - composite_safety(&before, s)
}

/// Urgency-weighted sum of gains.
pub fn score(urgency: &[f64; 5], gains: &NeedGains) -> f64 {
    urgency.iter().zip(gains.needs.iter()).map(|(u, g)| u * g).sum()
}

/// Best activity for the agent. Policy-removed activities are considered, as
/// rule breaking, only while autonomy sits below its threshold.
///
/// Panics if `filtered.allowed` is empty; home options are never filtered out.
pub fn choose_activity(
    agent: &AgentView<'_>,
    context: &ActivityContext,
    filtered: &FilteredContext,
    calibration: &NeedsCalibration,
) -> Decision {
    let urg = urgency(agent.needs, &agent.traits.importance, calibration);
    let may_break = agent.needs.level(Need::Autonomy) < calibration.autonomy.threshold;

    let breaking = filtered.removed.iter().filter(|_| may_break).map(|a| Activity {
        breaks_policy: true,
        ..*a
    });

    let mut best: Option<Decision> = None;
    for activity in filtered.allowed.iter().copied().chain(breaking) {
        let gains = expected_gains(agent, &activity, context, calibration);
        let s = score(&urg, &gains);
        let better = match &best {
            None => true,
            Some(b) => s > b.score || (s == b.score && activity.tie_key() < b.activity.tie_key()),
        };
        if better {
            best = Some(Decision {
                activity,
                gains,
                score: s,
            });
        }
    }
    best.expect("filtered context always offers a home option")
}
