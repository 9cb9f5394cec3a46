//! Flat `key=value` configuration files with `#` comments. Commands consume
//! the keys they understand; leftovers are reported as config errors so
//! typos never pass silently.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use super::HarnessError;

#[derive(Debug, Default, Clone)]
pub struct ConfigMap {
    entries: BTreeMap<String, String>,
}

impl ConfigMap {
    pub fn from_file(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str_contents(&text)
    }

    pub fn from_str_contents(text: &str) -> Result<Self, HarnessError> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                HarnessError::Config(format!("line {}: expected key=value, got `{line}`", lineno + 1))
            })?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    /// Remove and parse a scalar value.
    pub fn take<T: FromStr>(&mut self, key: &str) -> Result<Option<T>, HarnessError> {
        match self.entries.remove(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                HarnessError::Config(format!("key `{key}`: cannot parse `{raw}`"))
            }),
        }
    }

    /// Remove and parse a comma-separated list.
    pub fn take_list<T: FromStr>(&mut self, key: &str) -> Result<Option<Vec<T>>, HarnessError> {
        match self.entries.remove(key) {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|item| {
                    item.trim().parse::<T>().map_err(|_| {
                        HarnessError::Config(format!("key `{key}`: cannot parse item `{item}`"))
                    })
                })
                .collect::<Result<Vec<T>, _>>()
                .map(Some),
        }
    }

    /// Error out on keys no command consumed.
    pub fn finish(self) -> Result<(), HarnessError> {
        if let Some(key) = self.entries.keys().next() {
            return Err(HarnessError::Config(format!("unknown config key `{key}`")));
        }
        Ok(())
    }
}
