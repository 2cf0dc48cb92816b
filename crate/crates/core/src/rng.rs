//! Named random streams.
//!
//! Every concern draws from its own ChaCha stream derived from the run seed,
//! so adding draws to one concern never shifts the numbers another sees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Population = 1,
    Epidemic = 2,
    Behavior = 3,
}

pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

#[derive(Debug, Clone)]
pub struct RngStreams {
    pub population: ChaCha8Rng,
    pub epidemic: ChaCha8Rng,
    pub behavior: ChaCha8Rng,
}

impl RngStreams {
    pub fn new(seed: u64) -> Self {
        RngStreams {
            population: stream_rng(seed, Stream::Population),
            epidemic: stream_rng(seed, Stream::Epidemic),
            behavior: stream_rng(seed, Stream::Behavior),
        }
    }
}
