use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Computation budgets. Every field has a default so a config file only needs
/// the keys it overrides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Maximum |π|·|μ| for plethysm expansion.
    pub plethysm_degree_cap: usize,
    /// Maximum dimension of an explicit Weyl-module model.
    pub weyl_dim_cap: u64,
    /// Largest n for which S_n character tables are built.
    pub character_table_cap: usize,
    pub max_period: usize,
    pub max_degree: usize,
    pub holdout: usize,
    /// Largest magic-square weight enumerated.
    pub magic_weight_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            plethysm_degree_cap: 10,
            weyl_dim_cap: 200,
            character_table_cap: 14,
            max_period: 4,
            max_degree: 6,
            holdout: 2,
            magic_weight_cap: 6,
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_config_keeps_defaults() {
        let c = Config::from_json(r#"{"weyl_dim_cap": 50}"#).unwrap();
        assert_eq!(c.weyl_dim_cap, 50);
        assert_eq!(c.plethysm_degree_cap, 10);
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(Config::from_json(r#"{"bogus": 1}"#).is_err());
    }
}
