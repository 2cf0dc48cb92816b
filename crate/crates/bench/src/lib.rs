//! Fixtures shared by the benchmarks.

use pandemos::harness::prepare_world;
use pandemos::{builtin, ScenarioConfig, World};

/// A built-in scenario resized to `agents` people and `ticks` ticks.
pub fn sized(scenario: &str, agents: usize, ticks: u64) -> ScenarioConfig {
    let mut config = builtin(scenario).expect("known scenario");
    config.population.target = agents;
    config.ticks_total = ticks;
    config
}

/// A seeded world ready for its first step.
pub fn world(config: &ScenarioConfig, seed: u64) -> World {
    prepare_world(config, seed).expect("valid benchmark config")
}
