use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::samplers::parse_key_values;

/// Thresholds calibrated from pilot runs, stored as `name = value` lines.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PilotManifest {
    values: BTreeMap<String, f64>,
}

impl PilotManifest {
    pub fn parse(text: &str) -> Result<Self> {
        let values = parse_key_values(text)?
            .into_iter()
            .map(|(k, v)| {
                v.parse::<f64>()
                    .map(|x| (k.clone(), x))
                    .map_err(|_| Error::Parse(format!("manifest value {k} = {v:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, key: &str) -> Result<f64> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("manifest has no entry {key}")))
    }
}
