/// Settings shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub rank: usize,
    pub seed: u64,
    pub samples: usize,
    pub json: bool,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("--rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("--samples must be positive")]
    NoSamples,
}

impl Config {
    pub fn new(rank: usize, seed: u64, samples: usize, json: bool) -> Result<Self, ConfigError> {
        if rank < 2 {
            return Err(ConfigError::RankTooSmall(rank));
        }
        if samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        Ok(Config { rank, seed, samples, json })
    }
}
