//! Plain-text `key = value` configuration for search budgets.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::CliError;
use crate::embeddings::DEFAULT_N_MAX;
use crate::hypermetrics::DEFAULT_TUPLE_BUDGET;
use crate::skeletons::DEFAULT_VERTEX_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    Default,
    /// Skips the searches that take minutes rather than seconds.
    Tiny,
}

impl FromStr for Budget {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "default" => Ok(Budget::Default),
            "tiny" => Ok(Budget::Tiny),
            other => Err(CliError::Usage(format!("unknown budget {other:?}; expected default or tiny"))),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Budget::Default => "default",
            Budget::Tiny => "tiny",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Subsets examined by a hypermetric search before giving up.
    pub max_tuples: u64,
    /// Largest graph handed to the cut-cone search.
    pub n_max: usize,
    /// Vertex cap for tiling patches.
    pub vertex_cap: usize,
    /// Largest scale tried when none is given (order 1, 2, 4, ...).
    pub max_scale: u32,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    pub budget: Budget,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_tuples: DEFAULT_TUPLE_BUDGET,
            n_max: DEFAULT_N_MAX,
            vertex_cap: DEFAULT_VERTEX_CAP,
            max_scale: 4,
            threads: 0,
            budget: Budget::Default,
        }
    }
}

impl Config {
    /// Parses `key = value` lines; `#` starts a comment. Unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Usage(format!("config line {}: {msg}", i + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value".into()))?;
            c.set(key.trim(), value.trim()).map_err(|e| bad(e.to_string()))?;
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
            value.parse().map_err(|_| CliError::Usage(format!("{key}: not a number: {value:?}")))
        }
        match key {
            "max_tuples" => self.max_tuples = num(key, value)?,
            "n_max" => self.n_max = num(key, value)?,
            "vertex_cap" => self.vertex_cap = num(key, value)?,
            "max_scale" => self.max_scale = num(key, value)?,
            "threads" => self.threads = num(key, value)?,
            "budget" => self.budget = value.parse()?,
            _ => return Err(CliError::Usage(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Scales 1, 2, 4, ... up to `max_scale`.
    pub fn scales(&self) -> Vec<u32> {
        std::iter::successors(Some(1u32), |s| s.checked_mul(2)).take_while(|&s| s <= self.max_scale).collect()
    }

    pub fn to_text(&self) -> String {
        format!(
            "max_tuples = {}\nn_max = {}\nvertex_cap = {}\nmax_scale = {}\nthreads = {}\nbudget = {}\n",
            self.max_tuples, self.n_max, self.vertex_cap, self.max_scale, self.threads, self.budget
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        let c = Config::parse("# budgets\nn_max = 10\nbudget = tiny  # quick\n\nmax_scale=2\n").unwrap();
        assert_eq!((c.n_max, c.budget, c.max_scale), (10, Budget::Tiny, 2));
        assert_eq!(c.max_tuples, DEFAULT_TUPLE_BUDGET);
        assert_eq!(Config::parse(&c.to_text()).unwrap(), c);
        assert_eq!(c.scales(), vec![1, 2]);
        assert_eq!(Config::default().scales(), vec![1, 2, 4]);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("n_max 10").is_err());
        assert!(Config::parse("n_max = ten").is_err());
        assert!(Config::parse("budget = huge").is_err());
    }
}
