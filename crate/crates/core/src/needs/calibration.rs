//! Calibration of the needs model.
//!
//! None of these numbers come from measurement. They were chosen so that the
//! qualitative behaviour is sensible: people go to work on weekdays, socialise
//! in their free time, stock up on essentials and rest when they feel sick.

use serde::{Deserialize, Serialize};

use super::activity::ActivityKind;
use super::Need;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeedParams {
    pub threshold: f64,
    pub decay: f64,
    pub importance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubneedParams {
    pub food_safety_decay: f64,
    pub financial_survival_decay: f64,
    pub risk_avoidance_decay: f64,
    pub compliance_decay: f64,
    pub financial_safety_decay: f64,
    pub risk_avoidance_weight: f64,
    pub compliance_weight: f64,
    pub financial_safety_weight: f64,
    pub include_financial_safety: bool,
    /// Days of essential supplies that fully satisfy food safety.
    pub food_horizon_days: f64,
    /// Wealth below which financial survival is not fully satisfied.
    pub financial_survival_reference: i64,
    /// Wealth at which the financial buffer is considered comfortable.
    pub financial_safety_reference: i64,
}

impl Default for SubneedParams {
    fn default() -> Self {
        SubneedParams {
            food_safety_decay: 0.0,
            financial_survival_decay: 0.0,
            risk_avoidance_decay: 0.0,
            compliance_decay: 0.0,
            financial_safety_decay: 0.0,
            risk_avoidance_weight: 0.6,
            compliance_weight: 0.3,
            financial_safety_weight: 0.1,
            include_financial_safety: true,
            food_horizon_days: 14.0,
            financial_survival_reference: 100,
            financial_safety_reference: 1000,
        }
    }
}

/// Per-tick gain of one activity on each directly affected need or subneed.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GainVector {
    pub belonging: f64,
    pub self_esteem: f64,
    pub autonomy: f64,
    pub survival: f64,
    pub risk_avoidance: f64,
    pub compliance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GainTable {
    pub rest_at_home: GainVector,
    pub stay_home: GainVector,
    pub work_at_home: GainVector,
    pub work_at_office: GainVector,
    pub attend_school: GainVector,
    pub shop_essential: GainVector,
    pub shop_nonessential: GainVector,
    pub leisure: GainVector,
    pub visit_doctor: GainVector,
}

impl GainTable {
    pub fn get(&self, kind: ActivityKind) -> &GainVector {
        match kind {
            ActivityKind::RestAtHome => &self.rest_at_home,
            ActivityKind::StayHome => &self.stay_home,
            ActivityKind::WorkAtHome => &self.work_at_home,
            ActivityKind::WorkAtOffice => &self.work_at_office,
            ActivityKind::AttendSchool => &self.attend_school,
            ActivityKind::ShopEssential => &self.shop_essential,
            ActivityKind::ShopNonessential => &self.shop_nonessential,
            ActivityKind::Leisure => &self.leisure,
            ActivityKind::VisitDoctor => &self.visit_doctor,
        }
    }
}

fn gv(belonging: f64, self_esteem: f64, autonomy: f64, survival: f64, risk: f64, compliance: f64) -> GainVector {
    GainVector {
        belonging,
        self_esteem,
        autonomy,
        survival,
        risk_avoidance: risk,
        compliance,
    }
}

impl Default for GainTable {
    fn default() -> Self {
        GainTable {
            rest_at_home: gv(0.0, 0.0, 0.0, 0.1, 0.02, 0.02),
            stay_home: gv(0.01, 0.0, 0.0, 0.0, 0.02, 0.02),
            work_at_home: gv(0.01, 0.1, 0.0, 0.0, 0.02, 0.03),
            work_at_office: gv(0.04, 0.12, 0.0, 0.0, 0.0, 0.03),
            attend_school: gv(0.08, 0.06, 0.0, 0.0, 0.0, 0.03),
            shop_essential: gv(0.01, 0.0, 0.04, 0.0, 0.0, 0.0),
            shop_nonessential: gv(0.04, 0.03, 0.1, 0.0, 0.0, 0.0),
            leisure: gv(0.15, 0.02, 0.06, 0.0, 0.0, 0.0),
            visit_doctor: gv(0.0, 0.0, 0.0, 0.1, 0.0, 0.02),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GainModifiers {
    /// Multiplies belonging gains of home activities when others live there.
    pub company_belonging_multiplier: f64,
    /// Multiplies the survival gain of resting or seeing a doctor while sick.
    pub sick_survival_multiplier: f64,
    /// Survival lost per tick doing anything else while believing to be sick.
    pub sick_activity_survival_penalty: f64,
    /// Risk-avoidance lost per unit of risk weight and perceived prevalence.
    pub risk_scale: f64,
    /// Compliance lost per unit of compliance propensity when breaking a rule.
    pub breaking_compliance_scale: f64,
    /// Survival bonus per unit share of the social cluster doing the same.
    pub conformity_scale: f64,
    /// Extra survival drained per tick while feeling sick.
    pub sick_survival_drain: f64,
}

impl Default for GainModifiers {
    fn default() -> Self {
        GainModifiers {
            company_belonging_multiplier: 1.5,
            sick_survival_multiplier: 10.0,
            sick_activity_survival_penalty: 0.2,
            risk_scale: 10.0,
            breaking_compliance_scale: 1.0,
            conformity_scale: 0.03,
            sick_survival_drain: 0.1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NeedsCalibration {
    pub safety: NeedParams,
    pub belonging: NeedParams,
    pub self_esteem: NeedParams,
    pub autonomy: NeedParams,
    pub survival: NeedParams,
    pub subneeds: SubneedParams,
    pub gains: GainTable,
    pub modifiers: GainModifiers,
    /// Relative spread of individual importance weights around the defaults.
    pub importance_jitter: f64,
}

impl Default for NeedsCalibration {
    fn default() -> Self {
        let p = |threshold, decay, importance| NeedParams {
            threshold,
            decay,
            importance,
        };
        NeedsCalibration {
            safety: p(0.6, 0.0, 0.3),
            belonging: p(0.8, 0.04, 0.2),
            self_esteem: p(0.85, 0.04, 0.2),
            autonomy: p(0.7, 0.03, 0.15),
            survival: p(0.7, 0.005, 0.15),
            subneeds: SubneedParams::default(),
            gains: GainTable::default(),
            modifiers: GainModifiers::default(),
            importance_jitter: 0.2,
        }
    }
}

impl NeedsCalibration {
    pub fn need(&self, need: Need) -> &NeedParams {
        match need {
            Need::Safety => &self.safety,
            Need::Belonging => &self.belonging,
            Need::SelfEsteem => &self.self_esteem,
            Need::Autonomy => &self.autonomy,
            Need::Survival => &self.survival,
        }
    }

    pub fn thresholds(&self) -> [f64; 5] {
        Need::ALL.map(|n| self.need(n).threshold)
    }

    pub fn default_importance(&self) -> [f64; 5] {
        Need::ALL.map(|n| self.need(n).importance)
    }

    pub fn validate(&self) -> Result<(), String> {
        for need in Need::ALL {
            let p = self.need(need);
            if !(p.threshold > 0.0 && p.threshold < 1.0) {
                return Err(format!("needs.{}.threshold must lie in (0, 1)", need.name()));
            }
            if !(p.decay >= 0.0 && p.decay.is_finite()) {
                return Err(format!("needs.{}.decay must be >= 0", need.name()));
            }
            if !(p.importance > 0.0 && p.importance.is_finite()) {
                return Err(format!("needs.{}.importance must be > 0", need.name()));
            }
        }
        let s = &self.subneeds;
        for (name, d) in [
            ("food_safety_decay", s.food_safety_decay),
            ("financial_survival_decay", s.financial_survival_decay),
            ("risk_avoidance_decay", s.risk_avoidance_decay),
            ("compliance_decay", s.compliance_decay),
            ("financial_safety_decay", s.financial_safety_decay),
        ] {
            if !(d >= 0.0 && d.is_finite()) {
                return Err(format!("needs.subneeds.{name} must be >= 0"));
            }
        }
        if !(s.risk_avoidance_weight > 0.0 && s.compliance_weight > 0.0) {
            return Err("needs.subneeds weights must be > 0".into());
        }
        if s.include_financial_safety && !(s.financial_safety_weight > 0.0) {
            return Err("needs.subneeds.financial_safety_weight must be > 0 when included".into());
        }
        if !(s.food_horizon_days > 0.0) {
            return Err("needs.subneeds.food_horizon_days must be > 0".into());
        }
        if s.financial_survival_reference <= 0 || s.financial_safety_reference <= 0 {
            return Err("needs.subneeds financial references must be > 0".into());
        }
        for kind in ActivityKind::ALL {
            let g = self.gains.get(kind);
            let all = [
                g.belonging,
                g.self_esteem,
                g.autonomy,
                g.survival,
                g.risk_avoidance,
                g.compliance,
            ];
            if all.iter().any(|v| !v.is_finite()) {
                return Err(format!("needs.gains.{} must be finite", kind.name()));
            }
        }
        let m = &self.modifiers;
        let mods = [
            m.company_belonging_multiplier,
            m.sick_survival_multiplier,
            m.sick_activity_survival_penalty,
            m.risk_scale,
            m.breaking_compliance_scale,
            m.conformity_scale,
        ];
        if mods.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err("needs.modifiers must be finite and >= 0".into());
        }
        if !(0.0..1.0).contains(&self.importance_jitter) {
            return Err("needs.importance_jitter must lie in [0, 1)".into());
        }
        Ok(())
    }
}
