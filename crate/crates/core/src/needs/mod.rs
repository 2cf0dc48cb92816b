//! Container model of needs.
//!
//! Each need is a tank with a level in `[0, 1]` that drains every tick and is
//! refilled by activities. Safety is composite: it is derived from five
//! subneeds rather than stored directly. Compliance is the only level that may
//! go negative, and only when the agent breaks a rule.

mod activity;
mod calibration;
mod deliberation;

pub use activity::{Activity, ActivityContext, ActivityKind, FilteredContext, ACTIVITY_KINDS};
pub use calibration::{GainModifiers, GainTable, GainVector, NeedParams, NeedsCalibration, SubneedParams};
pub use deliberation::{choose_activity, expected_gains, score, AgentView, Decision, NeedGains};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Need {
    Safety,
    Belonging,
    SelfEsteem,
    Autonomy,
    Survival,
}

impl Need {
    pub const ALL: [Need; 5] = [
        Need::Safety,
        Need::Belonging,
        Need::SelfEsteem,
        Need::Autonomy,
        Need::Survival,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Need::Safety => "safety",
            Need::Belonging => "belonging",
            Need::SelfEsteem => "self_esteem",
            Need::Autonomy => "autonomy",
            Need::Survival => "survival",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subneed {
    FoodSafety,
    FinancialSurvival,
    RiskAvoidance,
    Compliance,
    FinancialSafety,
}

impl Subneed {
    pub const ALL: [Subneed; 5] = [
        Subneed::FoodSafety,
        Subneed::FinancialSurvival,
        Subneed::RiskAvoidance,
        Subneed::Compliance,
        Subneed::FinancialSafety,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Levels of the five needs plus the safety subneeds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeedsState {
    pub levels: [f64; 5],
    pub subneeds: [f64; 5],
}

impl NeedsState {
    /// Every tank full.
    pub fn full(calibration: &NeedsCalibration) -> Self {
        let mut state = NeedsState {
            levels: [1.0; 5],
            subneeds: [1.0; 5],
        };
        state.recompute_safety(calibration);
        state
    }

    #[inline]
    pub fn level(&self, need: Need) -> f64 {
        self.levels[need.index()]
    }

    #[inline]
    pub fn subneed(&self, sub: Subneed) -> f64 {
        self.subneeds[sub.index()]
    }

    pub fn set_level(&mut self, need: Need, value: f64) {
        debug_assert!(need != Need::Safety, "safety is derived from its subneeds");
        self.levels[need.index()] = value.clamp(0.0, 1.0);
    }

    pub fn set_subneed(&mut self, sub: Subneed, value: f64, calibration: &NeedsCalibration) {
        self.subneeds[sub.index()] = match sub {
            Subneed::Compliance => value.clamp(-1.0, 1.0),
            _ => value.clamp(0.0, 1.0),
        };
        self.recompute_safety(calibration);
    }

    pub fn recompute_safety(&mut self, calibration: &NeedsCalibration) {
        self.levels[Need::Safety.index()] = composite_safety(&self.subneeds, &calibration.subneeds);
    }

    /// Refresh the subneeds that mirror material resources.
    pub fn sync_resources(&mut self, essential_stock: f64, wealth: i64, calibration: &NeedsCalibration) {
        let s = &calibration.subneeds;
        self.subneeds[Subneed::FoodSafety.index()] = food_safety_level_with(essential_stock, s.food_horizon_days);
        self.subneeds[Subneed::FinancialSurvival.index()] =
            (wealth as f64 / s.financial_survival_reference as f64).clamp(0.0, 1.0);
        self.subneeds[Subneed::FinancialSafety.index()] =
            (wealth as f64 / s.financial_safety_reference as f64).clamp(0.0, 1.0);
        self.recompute_safety(calibration);
    }
}

/// Drain every tank for `ticks_elapsed` ticks.
pub fn decay(needs: &NeedsState, ticks_elapsed: u32, calibration: &NeedsCalibration) -> NeedsState {
    let mut out = *needs;
    if ticks_elapsed == 0 {
        return out;
    }
    let t = f64::from(ticks_elapsed);
    for need in Need::ALL {
        if need == Need::Safety {
            continue;
        }
        let i = need.index();
        out.levels[i] = (out.levels[i] - calibration.need(need).decay * t).clamp(0.0, 1.0);
    }
    let s = &calibration.subneeds;
    let rates = [
        s.food_safety_decay,
        s.financial_survival_decay,
        s.risk_avoidance_decay,
        s.compliance_decay,
        s.financial_safety_decay,
    ];
    for sub in Subneed::ALL {
        let i = sub.index();
        let drained = out.subneeds[i] - rates[i] * t;
        out.subneeds[i] = match sub {
            // Decay alone never pushes compliance below zero.
            Subneed::Compliance => {
                let floor = out.subneeds[i].min(0.0);
                drained.max(floor).clamp(-1.0, 1.0)
            }
            _ => drained.clamp(0.0, 1.0),
        };
    }
    out.recompute_safety(calibration);
    out
}

/// Minimum of food safety and financial survival, and the weighted mean of the
/// rest. Negative compliance can pull the mean down, but not below zero.
pub fn composite_safety(subneeds: &[f64; 5], params: &SubneedParams) -> f64 {
    let basic = subneeds[Subneed::FoodSafety.index()].min(subneeds[Subneed::FinancialSurvival.index()]);
    let mut weighted = params.risk_avoidance_weight * subneeds[Subneed::RiskAvoidance.index()]
        + params.compliance_weight * subneeds[Subneed::Compliance.index()];
    let mut total = params.risk_avoidance_weight + params.compliance_weight;
    if params.include_financial_safety {
        weighted += params.financial_safety_weight * subneeds[Subneed::FinancialSafety.index()];
        total += params.financial_safety_weight;
    }
    basic.min(weighted / total).max(0.0)
}

/// Food safety for a stock measured in days, over the default two-week horizon.
pub fn food_safety_level(essential_stock: f64) -> f64 {
    food_safety_level_with(essential_stock, 14.0)
}

pub fn food_safety_level_with(essential_stock: f64, horizon_days: f64) -> f64 {
    (essential_stock / horizon_days).clamp(0.0, 1.0)
}

/// Importance-weighted normalised deficit below each threshold.
pub fn urgency(needs: &NeedsState, importance: &[f64; 5], calibration: &NeedsCalibration) -> [f64; 5] {
    let mut out = [0.0; 5];
    for need in Need::ALL {
        let i = need.index();
        let threshold = calibration.need(need).threshold;
        out[i] = importance[i] * (threshold - needs.levels[i]).max(0.0) / threshold;
    }
    out
}

/// Add realised gains to the tanks. Food is handled through the stock, not here.
pub fn apply_effects(needs: &NeedsState, gains: &NeedGains, calibration: &NeedsCalibration) -> NeedsState {
    let mut out = *needs;
    for need in [Need::Belonging, Need::SelfEsteem, Need::Autonomy, Need::Survival] {
        let i = need.index();
        out.levels[i] = (out.levels[i] + gains.needs[i]).clamp(0.0, 1.0);
    }
    let r = Subneed::RiskAvoidance.index();
    out.subneeds[r] = (out.subneeds[r] + gains.risk_avoidance).clamp(0.0, 1.0);
    let c = Subneed::Compliance.index();
    let before = out.subneeds[c];
    let after = before + gains.compliance;
    out.subneeds[c] = if gains.compliance < 0.0 {
        after.clamp(-1.0, 1.0)
    } else {
        after.clamp(before.min(0.0), 1.0).max(-1.0)
    };
    out.recompute_safety(calibration);
    out
}

/// Individual dispositions, fixed at creation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Traits {
    pub risk_avoidance_weight: f64,
    pub compliance_propensity: f64,
    /// Per-need importance, normalised to sum to one.
    pub importance: [f64; 5],
}

impl Traits {
    pub fn new(risk_avoidance_weight: f64, compliance_propensity: f64, importance: [f64; 5]) -> Self {
        let total: f64 = importance.iter().sum();
        assert!(
            total > 0.0 && importance.iter().all(|w| *w > 0.0),
            "importance weights must be positive"
        );
        Traits {
            risk_avoidance_weight: risk_avoidance_weight.clamp(0.0, 1.0),
            compliance_propensity: compliance_propensity.clamp(0.0, 1.0),
            importance: importance.map(|w| w / total),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calib() -> NeedsCalibration {
        NeedsCalibration::default()
    }

    fn without_financial_safety() -> SubneedParams {
        SubneedParams {
            include_financial_safety: false,
            ..SubneedParams::default()
        }
    }

    #[test]
    fn zero_ticks_is_identity() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Belonging, 0.42);
        assert_eq!(decay(&s, 0, &c), s);
    }

    #[test]
    fn belonging_drains_linearly() {
        let mut c = calib();
        c.belonging.decay = 0.05;
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Belonging, 0.5);
        let out = decay(&s, 4, &c);
        assert!((out.level(Need::Belonging) - 0.30).abs() < 1e-12);
    }

    #[test]
    fn decay_floors_at_zero() {
        let mut c = calib();
        c.belonging.decay = 0.05;
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Belonging, 0.01);
        assert_eq!(decay(&s, 1, &c).level(Need::Belonging), 0.0);
    }

    #[test]
    fn compliance_decay_stops_at_zero_but_keeps_negative_values() {
        let mut c = calib();
        c.subneeds.compliance_decay = 0.1;
        let mut s = NeedsState::full(&c);
        s.subneeds[Subneed::Compliance.index()] = 0.05;
        assert_eq!(decay(&s, 1, &c).subneed(Subneed::Compliance), 0.0);
        s.subneeds[Subneed::Compliance.index()] = -0.3;
        assert_eq!(decay(&s, 3, &c).subneed(Subneed::Compliance), -0.3);
    }

    #[test]
    fn safety_takes_minimum_of_food_and_money() {
        let subs = [0.1, 0.9, 1.0, 1.0, 1.0];
        assert!((composite_safety(&subs, &SubneedParams::default()) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn safety_of_constant_subneeds_is_that_constant() {
        let subs = [0.6; 5];
        for p in [SubneedParams::default(), without_financial_safety()] {
            assert!((composite_safety(&subs, &p) - 0.6).abs() < 1e-12);
        }
    }

    #[test]
    fn safety_weighted_mean_branch() {
        let p = SubneedParams {
            risk_avoidance_weight: 0.75,
            compliance_weight: 0.25,
            ..without_financial_safety()
        };
        let subs = [0.8, 0.9, 0.4, 0.8, 0.0];
        // min(0.8, 0.75 * 0.4 + 0.25 * 0.8)
        assert!((composite_safety(&subs, &p) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn financial_safety_joins_the_mean_when_enabled() {
        let p = SubneedParams::default();
        let subs = [1.0, 1.0, 1.0, 1.0, 0.0];
        let expected = (0.6 + 0.3) / 1.0;
        assert!((composite_safety(&subs, &p) - expected).abs() < 1e-12);
    }

    #[test]
    fn food_safety_over_two_weeks() {
        assert_eq!(food_safety_level(14.0), 1.0);
        assert_eq!(food_safety_level(0.0), 0.0);
        assert!((food_safety_level(7.0) - 0.5).abs() < 1e-12);
        assert_eq!(food_safety_level(30.0), 1.0);
    }

    #[test]
    fn no_urgency_at_threshold() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.levels = c.thresholds();
        let u = urgency(&s, &[0.2; 5], &c);
        assert_eq!(u, [0.0; 5]);
    }

    #[test]
    fn urgency_formula() {
        let mut c = calib();
        c.belonging.threshold = 0.5;
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Belonging, 0.0);
        let importance = [0.2, 0.3, 0.2, 0.15, 0.15];
        let u = urgency(&s, &importance, &c);
        assert!((u[Need::Belonging.index()] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn negative_compliance_shows_up_through_safety() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.set_subneed(Subneed::Compliance, -0.2, &c);
        let u = urgency(&s, &c.default_importance(), &c);
        // Five urgency slots only; compliance has none of its own.
        assert_eq!(u.len(), 5);
        assert!(s.level(Need::Safety) < 1.0);
        let baseline = urgency(&NeedsState::full(&c), &c.default_importance(), &c);
        assert!(u[Need::Safety.index()] >= baseline[Need::Safety.index()]);
    }

    #[test]
    fn leisure_adds_belonging() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Belonging, 0.2);
        let mut g = NeedGains::default();
        g.needs[Need::Belonging.index()] = 0.3;
        let out = apply_effects(&s, &g, &c);
        assert!((out.level(Need::Belonging) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_gain_is_a_no_op() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.set_level(Need::Autonomy, 0.33);
        assert_eq!(apply_effects(&s, &NeedGains::default(), &c), s);
    }

    #[test]
    fn only_breaking_makes_compliance_negative() {
        let c = calib();
        let mut s = NeedsState::full(&c);
        s.set_subneed(Subneed::Compliance, 0.1, &c);
        let g = NeedGains {
            compliance: -0.5,
            ..NeedGains::default()
        };
        let broken = apply_effects(&s, &g, &c);
        assert!(broken.subneed(Subneed::Compliance) < s.subneed(Subneed::Compliance));
        assert!(broken.subneed(Subneed::Compliance) < 0.0);
        let g = NeedGains {
            compliance: 0.02,
            ..NeedGains::default()
        };
        let recovered = apply_effects(&broken, &g, &c);
        assert!(recovered.subneed(Subneed::Compliance) > broken.subneed(Subneed::Compliance));
    }

    #[test]
    fn traits_normalise_importance() {
        let t = Traits::new(0.5, 0.5, [1.0, 2.0, 3.0, 2.0, 2.0]);
        let sum: f64 = t.importance.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
        assert!((t.importance[2] - 0.3).abs() < 1e-12);
    }
}
