use serde::{Deserialize, Serialize};

/// Named segments of the default four-tick day.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Morning,
    Afternoon,
    Evening,
    Night,
}

impl Segment {
    pub fn from_index(index: u32) -> Option<Segment> {
        match index {
            0 => Some(Segment::Morning),
            1 => Some(Segment::Afternoon),
            2 => Some(Segment::Evening),
            3 => Some(Segment::Night),
            _ => None,
        }
    }
}

/// Simulation time. `tick` counts from zero; days are `ticks_per_day` ticks long
/// and weeks start on a Monday, so days 5 and 6 of each week are the weekend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clock {
    pub tick: u64,
    pub ticks_per_day: u32,
}

impl Clock {
    pub fn new(ticks_per_day: u32) -> Self {
        assert!(ticks_per_day > 0, "ticks_per_day must be positive");
        Clock { tick: 0, ticks_per_day }
    }

    pub fn at(tick: u64, ticks_per_day: u32) -> Self {
        Clock { tick, ticks_per_day }
    }

    pub fn advance(&mut self) {
        self.tick += 1;
    }

    pub fn day_index(&self) -> u64 {
        self.tick / u64::from(self.ticks_per_day)
    }

    /// Position within the day, `0..ticks_per_day`.
    pub fn segment_index(&self) -> u32 {
        (self.tick % u64::from(self.ticks_per_day)) as u32
    }

    /// Named segment; only defined for four-tick days.
    pub fn segment(&self) -> Option<Segment> {
        if self.ticks_per_day == 4 {
            Segment::from_index(self.segment_index())
        } else {
            None
        }
    }

    pub fn day_of_week(&self) -> u64 {
        self.day_index() % 7
    }

    pub fn week_index(&self) -> u64 {
        self.day_index() / 7
    }

    pub fn is_weekend(&self) -> bool {
        self.day_of_week() >= 5
    }

    pub fn is_first_segment(&self) -> bool {
        self.segment_index() == 0
    }

    pub fn is_last_segment(&self) -> bool {
        self.segment_index() + 1 == self.ticks_per_day
    }
}
