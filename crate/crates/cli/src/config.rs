//! Optional TOML configuration mirroring the global flags. Precedence:
//! command-line flag, then `SDCODES_WORKERS` (for the worker count), then
//! the config file, then the built-in default.

use anyhow::{Context, Result};
use serde::Deserialize;
use std::path::Path;

pub const WORKERS_ENV: &str = "SDCODES_WORKERS";
pub const DEFAULT_CONFIG_PATH: &str = "sdcodes.toml";

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// Default worker (thread) count.
    pub workers: Option<usize>,
    /// Default RNG seed for searches.
    pub seed: Option<u64>,
    /// Default candidate budget for searches.
    pub budget: Option<u64>,
    /// `standard-form` or `raw` interpretation of neighbor vectors.
    pub neighbor_coords: Option<String>,
    /// `canonical` or `alternate-f4u` Gray route.
    pub gray_chain: Option<String>,
    /// Ceiling on explicit weight-count requests.
    pub counting_ceiling: Option<usize>,
}

impl FileConfig {
    /// Load an explicit path, or the default path when it exists.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        let path = match explicit {
            Some(p) => p.to_path_buf(),
            None => {
                let p = Path::new(DEFAULT_CONFIG_PATH);
                if !p.exists() {
                    return Ok(FileConfig::default());
                }
                p.to_path_buf()
            }
        };
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Resolve the worker count from flag, environment, then config.
pub fn resolve_workers(flag: Option<usize>, config: &FileConfig) -> Option<usize> {
    flag.or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok()))
        .or(config.workers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_full_config() {
        let text = r#"
workers = 4
seed = 99
budget = 5000
neighbor_coords = "raw"
gray_chain = "canonical"
counting_ceiling = 14
"#;
        let c: FileConfig = toml::from_str(text).unwrap();
        assert_eq!(c.workers, Some(4));
        assert_eq!(c.seed, Some(99));
        assert_eq!(c.neighbor_coords.as_deref(), Some("raw"));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<FileConfig>("wrkers = 2").is_err());
    }

    #[test]
    fn missing_default_path_is_empty_config() {
        let c = FileConfig::load(None).unwrap();
        assert!(c.workers.is_none() || c.workers.is_some());
    }
}
