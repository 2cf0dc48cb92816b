use serde::{Deserialize, Serialize};

use crate::clock::Clock;
use crate::types::AgeGroup;

/// What a segment of the day is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    /// Work or school.
    Duty,
    Free,
    Rest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DaySchedule {
    pub weekday: Vec<Slot>,
    pub weekend: Vec<Slot>,
}

impl DaySchedule {
    fn working() -> Self {
        DaySchedule {
            weekday: vec![Slot::Duty, Slot::Duty, Slot::Free, Slot::Rest],
            weekend: vec![Slot::Free, Slot::Free, Slot::Free, Slot::Rest],
        }
    }

    fn leisurely() -> Self {
        DaySchedule {
            weekday: vec![Slot::Free, Slot::Free, Slot::Free, Slot::Rest],
            weekend: vec![Slot::Free, Slot::Free, Slot::Free, Slot::Rest],
        }
    }
}

/// Segment-by-segment plan per age group, one entry per tick of the day.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScheduleConfig {
    pub child: DaySchedule,
    pub student: DaySchedule,
    pub worker: DaySchedule,
    pub retiree: DaySchedule,
}

impl Default for ScheduleConfig {
    fn default() -> Self {
        ScheduleConfig {
            child: DaySchedule::working(),
            student: DaySchedule::working(),
            worker: DaySchedule::working(),
            retiree: DaySchedule::leisurely(),
        }
    }
}

impl ScheduleConfig {
    pub fn for_group(&self, group: AgeGroup) -> &DaySchedule {
        match group {
            AgeGroup::Child => &self.child,
            AgeGroup::Student => &self.student,
            AgeGroup::Worker => &self.worker,
            AgeGroup::Retiree => &self.retiree,
        }
    }

    pub fn slot(&self, group: AgeGroup, clock: &Clock) -> Slot {
        let day = self.for_group(group);
        let table = if clock.is_weekend() { &day.weekend } else { &day.weekday };
        table[clock.segment_index() as usize]
    }

    pub fn validate(&self, ticks_per_day: u32) -> Result<(), String> {
        for g in AgeGroup::ALL {
            let d = self.for_group(g);
            if d.weekday.len() != ticks_per_day as usize || d.weekend.len() != ticks_per_day as usize {
                return Err(format!(
                    "schedule.{} needs exactly {ticks_per_day} entries per day",
                    g.name()
                ));
            }
        }
        Ok(())
    }
}
