use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Compartment, EpidemicParams};
use crate::types::{AgentId, PlaceId, PlaceKind};

/// What transmission needs to know about one person at a place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Occupant {
    pub id: AgentId,
    pub compartment: Compartment,
    /// Age-group multiplier on the per-contact probability.
    pub susceptibility: f64,
}

/// Audit record of one place infecting someone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransmissionEvent {
    pub place: PlaceId,
    pub tick: u64,
    pub infectors: u32,
    pub exposed: Vec<AgentId>,
}

/// Crowding factor: `floor` when empty, rising linearly to 1 at capacity.
pub fn density_modifier(occupants: usize, capacity: u32, floor: f64) -> f64 {
    let fill = if capacity == 0 {
        1.0
    } else {
        (occupants as f64 / f64::from(capacity)).min(1.0)
    };
    floor + (1.0 - floor) * fill
}

/// Chance of at least one successful contact out of `infectors` independent ones.
pub fn exposure_probability(beta: f64, infectors: u32) -> f64 {
    if infectors == 0 {
        return 0.0;
    }
    let beta = beta.clamp(0.0, 1.0);
    1.0 - (1.0 - beta).powi(infectors as i32)
}

/// Newly exposed occupants of one place for one tick.
///
/// People under medical care transmit only inside hospitals.
pub fn place_transmission<R: Rng + ?Sized>(
    kind: PlaceKind,
    contagion_base: f64,
    capacity: u32,
    occupants: &[Occupant],
    params: &EpidemicParams,
    contagion_multiplier: f64,
    rng: &mut R,
) -> (u32, Vec<AgentId>) {
    let infectors = occupants
        .iter()
        .filter(|o| match o.compartment {
            Compartment::I1 | Compartment::I2 => true,
            Compartment::O1 | Compartment::O2 => kind == PlaceKind::Hospital,
            _ => false,
        })
        .count() as u32;
    if infectors == 0 {
        return (0, Vec::new());
    }
    let beta = params.transmissibility
        * contagion_base
        * contagion_multiplier
        * density_modifier(occupants.len(), capacity, params.density_floor);
    let mut exposed = Vec::new();
    for o in occupants.iter().filter(|o| o.compartment == Compartment::S) {
        let p = exposure_probability(beta * o.susceptibility, infectors);
        if rng.random::<f64>() < p {
            exposed.push(o.id);
        }
    }
    (infectors, exposed)
}
