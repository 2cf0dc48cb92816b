use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::types::AgentId;
use crate::world::Agent;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestingPolicy {
    pub capacity_per_day: usize,
    pub symptomatic_only: bool,
    pub sensitivity: f64,
}

/// One day of testing. Samples up to capacity among living, undetected,
/// eligible agents; infectious positives become detected.
pub fn run_tests<R: Rng + ?Sized>(agents: &mut [Agent], policy: &TestingPolicy, rng: &mut R) -> Vec<AgentId> {
    if policy.capacity_per_day == 0 {
        return Vec::new();
    }
    let eligible: Vec<usize> = agents
        .iter()
        .enumerate()
        .filter(|(_, a)| {
            a.health.compartment.is_alive()
                && !a.health.detected
                && (!policy.symptomatic_only || a.health.believes_sick)
        })
        .map(|(i, _)| i)
        .collect();
    if eligible.is_empty() {
        return Vec::new();
    }
    let take = policy.capacity_per_day.min(eligible.len());
    let mut sampled: Vec<usize> = rand::seq::index::sample(rng, eligible.len(), take)
        .into_iter()
        .map(|k| eligible[k])
        .collect();
    sampled.sort_unstable();
    let mut detected = Vec::new();
    for i in sampled {
        let agent = &mut agents[i];
        if !agent.health.compartment.is_infectious() {
            continue;
        }
        let positive = policy.sensitivity >= 1.0 || rng.random::<f64>() < policy.sensitivity;
        if positive {
            agent.health.tested_positive = true;
            agent.health.detected = true;
            detected.push(agent.id);
        }
    }
    detected
}
