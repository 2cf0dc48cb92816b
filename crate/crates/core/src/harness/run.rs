use rayon::prelude::*;

use super::stats::{summarize, BatchSummary};
use super::ScenarioConfig;
use crate::epidemic::seed_infection;
use crate::error::SimError;
use crate::metrics::TickMetrics;
use crate::world::{generate_population, step_world, World};

/// Per-tick metrics of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    pub seed: u64,
    pub rows: Vec<TickMetrics>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchResult {
    pub summary: BatchSummary,
    pub runs: Vec<RunMetrics>,
}

/// Build and seed the world for one run.
pub fn prepare_world(config: &ScenarioConfig, seed: u64) -> Result<World, SimError> {
    let mut world = generate_population(config, seed)?;
    seed_infection(&mut world, config.epidemic.initial_infected)?;
    Ok(world)
}

/// Run to completion, calling `observe` after every tick. Returns the final
/// world along with the metrics.
pub fn simulate_with<F>(config: &ScenarioConfig, seed: u64, mut observe: F) -> Result<(World, RunMetrics), SimError>
where
    F: FnMut(&World, &TickMetrics),
{
    let mut world = prepare_world(config, seed)?;
    let mut rows = Vec::with_capacity(config.ticks_total as usize);
    for _ in 0..config.ticks_total {
        let m = step_world(&mut world);
        observe(&world, &m);
        rows.push(m);
    }
    Ok((world, RunMetrics { seed, rows }))
}

pub fn run_single(config: &ScenarioConfig, seed: u64) -> Result<RunMetrics, SimError> {
    simulate_with(config, seed, |_, _| {}).map(|(_, m)| m)
}

/// `runs` independent runs with seeds `base_seed + i`. With `threads` of
/// `Some(1)` the runs execute one after another; otherwise they fan out over
/// a thread pool. Results are folded in seed order either way.
pub fn run_batch(
    config: &ScenarioConfig,
    runs: usize,
    base_seed: u64,
    threads: Option<usize>,
) -> Result<BatchResult, SimError> {
    if runs == 0 {
        return Err(SimError::Argument("a batch needs at least one run".into()));
    }
    let seeds: Vec<u64> = (0..runs as u64).map(|i| base_seed.wrapping_add(i)).collect();
    let results: Vec<Result<RunMetrics, SimError>> = match threads {
        Some(1) => seeds.iter().map(|s| run_single(config, *s)).collect(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| SimError::Argument(format!("cannot start {n} worker threads: {e}")))?;
            pool.install(|| seeds.par_iter().map(|s| run_single(config, *s)).collect())
        }
        None => seeds.par_iter().map(|s| run_single(config, *s)).collect(),
    };
    let runs: Vec<RunMetrics> = results.into_iter().collect::<Result<_, _>>()?;
    Ok(BatchResult {
        summary: summarize(&runs),
        runs,
    })
}
