use serde::{Deserialize, Serialize};

use crate::types::PlaceId;

/// Activity kinds. Declaration order is the deliberation tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActivityKind {
    RestAtHome,
    StayHome,
    WorkAtHome,
    WorkAtOffice,
    AttendSchool,
    ShopEssential,
    ShopNonessential,
    Leisure,
    VisitDoctor,
}

pub const ACTIVITY_KINDS: usize = 9;

impl ActivityKind {
    pub const ALL: [ActivityKind; ACTIVITY_KINDS] = [
        ActivityKind::RestAtHome,
        ActivityKind::StayHome,
        ActivityKind::WorkAtHome,
        ActivityKind::WorkAtOffice,
        ActivityKind::AttendSchool,
        ActivityKind::ShopEssential,
        ActivityKind::ShopNonessential,
        ActivityKind::Leisure,
        ActivityKind::VisitDoctor,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// Rank used to break score ties; lower wins.
    #[inline]
    pub fn tie_rank(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ActivityKind::RestAtHome => "rest_at_home",
            ActivityKind::StayHome => "stay_home",
            ActivityKind::WorkAtHome => "work_at_home",
            ActivityKind::WorkAtOffice => "work_at_office",
            ActivityKind::AttendSchool => "attend_school",
            ActivityKind::ShopEssential => "shop_essential",
            ActivityKind::ShopNonessential => "shop_nonessential",
            ActivityKind::Leisure => "leisure",
            ActivityKind::VisitDoctor => "visit_doctor",
        }
    }

    pub fn is_home_based(self) -> bool {
        matches!(
            self,
            ActivityKind::RestAtHome | ActivityKind::StayHome | ActivityKind::WorkAtHome
        )
    }

    pub fn is_work(self) -> bool {
        matches!(self, ActivityKind::WorkAtHome | ActivityKind::WorkAtOffice)
    }

    /// Activities somebody asked the agent to do: a job or school.
    pub fn is_duty(self) -> bool {
        matches!(
            self,
            ActivityKind::WorkAtHome | ActivityKind::WorkAtOffice | ActivityKind::AttendSchool
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Activity {
    pub kind: ActivityKind,
    pub place: PlaceId,
    pub breaks_policy: bool,
}

impl Activity {
    pub fn new(kind: ActivityKind, place: PlaceId) -> Self {
        Activity {
            kind,
            place,
            breaks_policy: false,
        }
    }

    /// Deterministic preference key: lower sorts first among equal scores.
    pub fn tie_key(&self) -> (usize, u32) {
        (self.kind.tie_rank(), self.place.0)
    }
}

/// What the world offers an agent this tick, before any policy filtering.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivityContext {
    pub candidates: Vec<Activity>,
    /// Perceived share of the population known to be infected.
    pub prevalence: f64,
    /// Share of the agent's social cluster doing each activity kind last tick.
    pub conformity: [f64; ACTIVITY_KINDS],
    /// Whether any behavioural restriction is in force.
    pub policy_active: bool,
}

impl ActivityContext {
    pub fn new(candidates: Vec<Activity>) -> Self {
        ActivityContext {
            candidates,
            prevalence: 0.0,
            conformity: [0.0; ACTIVITY_KINDS],
            policy_active: false,
        }
    }

    pub fn kinds(&self) -> Vec<ActivityKind> {
        self.candidates.iter().map(|a| a.kind).collect()
    }
}

/// Context after policy filtering. `removed` keeps what policy took away so
/// rule breaking stays representable.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FilteredContext {
    pub allowed: Vec<Activity>,
    pub removed: Vec<Activity>,
}
