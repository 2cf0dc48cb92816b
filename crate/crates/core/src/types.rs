//! Identifiers and small enums shared by every subsystem.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Currency in integer minor units. All transfers are exact.
pub type Money = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AgentId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlaceId(pub u32);

impl AgentId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl PlaceId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "agent#{}", self.0)
    }
}

impl fmt::Display for PlaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "place#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AgeGroup {
    Child,
    Student,
    Worker,
    Retiree,
}

impl AgeGroup {
    pub const ALL: [AgeGroup; 4] = [AgeGroup::Child, AgeGroup::Student, AgeGroup::Worker, AgeGroup::Retiree];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            AgeGroup::Child => "child",
            AgeGroup::Student => "student",
            AgeGroup::Worker => "worker",
            AgeGroup::Retiree => "retiree",
        }
    }

    /// Workers and retirees count as adults for household rules.
    pub fn is_adult(self) -> bool {
        matches!(self, AgeGroup::Worker | AgeGroup::Retiree)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaceKind {
    Home,
    EssentialShop,
    NonessentialShop,
    Workplace,
    School,
    Hospital,
    Leisure,
    Station,
}

impl PlaceKind {
    pub const ALL: [PlaceKind; 8] = [
        PlaceKind::Home,
        PlaceKind::EssentialShop,
        PlaceKind::NonessentialShop,
        PlaceKind::Workplace,
        PlaceKind::School,
        PlaceKind::Hospital,
        PlaceKind::Leisure,
        PlaceKind::Station,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            PlaceKind::Home => "home",
            PlaceKind::EssentialShop => "essential_shop",
            PlaceKind::NonessentialShop => "nonessential_shop",
            PlaceKind::Workplace => "workplace",
            PlaceKind::School => "school",
            PlaceKind::Hospital => "hospital",
            PlaceKind::Leisure => "leisure",
            PlaceKind::Station => "station",
        }
    }

    /// Places that keep operating under lockdown.
    pub fn is_essential(self) -> bool {
        matches!(
            self,
            PlaceKind::EssentialShop | PlaceKind::Hospital | PlaceKind::Home | PlaceKind::Station
        )
    }

    /// Places funded by the government rather than by sales.
    pub fn is_public(self) -> bool {
        matches!(self, PlaceKind::School | PlaceKind::Hospital)
    }
}

/// A value per age group, laid out as a TOML table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerAgeGroup<T> {
    pub child: T,
    pub student: T,
    pub worker: T,
    pub retiree: T,
}

impl<T: Copy> PerAgeGroup<T> {
    pub fn get(&self, group: AgeGroup) -> T {
        match group {
            AgeGroup::Child => self.child,
            AgeGroup::Student => self.student,
            AgeGroup::Worker => self.worker,
            AgeGroup::Retiree => self.retiree,
        }
    }

    pub fn uniform(value: T) -> Self {
        PerAgeGroup {
            child: value,
            student: value,
            worker: value,
            retiree: value,
        }
    }
}

/// A value per place kind, laid out as a TOML table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerPlaceKind<T> {
    pub home: T,
    pub essential_shop: T,
    pub nonessential_shop: T,
    pub workplace: T,
    pub school: T,
    pub hospital: T,
    pub leisure: T,
    pub station: T,
}

impl<T: Copy> PerPlaceKind<T> {
    pub fn get(&self, kind: PlaceKind) -> T {
        match kind {
            PlaceKind::Home => self.home,
            PlaceKind::EssentialShop => self.essential_shop,
            PlaceKind::NonessentialShop => self.nonessential_shop,
            PlaceKind::Workplace => self.workplace,
            PlaceKind::School => self.school,
            PlaceKind::Hospital => self.hospital,
            PlaceKind::Leisure => self.leisure,
            PlaceKind::Station => self.station,
        }
    }

    pub fn values(&self) -> [T; 8] {
        PlaceKind::ALL.map(|k| self.get(k))
    }
}
