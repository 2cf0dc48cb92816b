//! Configuration, single and batch runs, aggregation and file output.

mod config;
mod output;
mod run;
mod scenarios;
mod stats;

pub use config::{parse_config, ScenarioConfig};
pub use output::{
    replay_manifest, single_result, write_outputs, write_run_csv, write_scalars_csv, write_summary_csv, Manifest,
    MANIFEST_FILE, VERSION,
};
pub use run::{prepare_world, run_batch, run_single, simulate_with, BatchResult, RunMetrics};
pub use scenarios::{builtin, SCENARIOS};
pub use stats::{summarize, BatchSummary, RunScalars, Stat, Z95};
