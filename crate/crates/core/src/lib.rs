//! Agent-based simulator coupling a needs-driven behaviour model, an
//! SEIR-style epidemic with doctor visits, and a closed integer economy.
//!
//! The usual entry points are [`harness::parse_config`] or
//! [`harness::builtin`], then [`harness::run_single`] or
//! [`harness::run_batch`].

pub mod clock;
pub mod economy;
pub mod epidemic;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod needs;
pub mod policy;
pub mod rng;
pub mod types;
pub mod world;

pub use clock::Clock;
pub use error::{Result, SimError};
pub use harness::{builtin, parse_config, run_batch, run_single, ScenarioConfig};
pub use metrics::TickMetrics;
pub use types::{AgeGroup, AgentId, Money, PlaceId, PlaceKind};
pub use world::{step_world, World};
