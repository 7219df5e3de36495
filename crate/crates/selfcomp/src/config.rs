//! `key = value` configuration files; command-line flags override them.

use std::path::Path;

use crate::error::{AppError, AppResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

impl OutputFormat {
    pub fn parse(s: &str) -> AppResult<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            _ => Err(AppError::Invalid(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub series_upto: u32,
    pub alpha_norm_bound: u32,
    pub subgroup_order_cap: usize,
    pub truncation_order: u32,
    pub output: OutputFormat,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            series_upto: 64,
            alpha_norm_bound: 8,
            subgroup_order_cap: 256,
            truncation_order: 16,
            output: OutputFormat::Json,
        }
    }
}

fn positive<T: std::str::FromStr + PartialOrd + Default>(key: &str, v: &str) -> AppResult<T> {
    match v.parse::<T>() {
        Ok(x) if x > T::default() => Ok(x),
        _ => Err(AppError::Invalid(format!("{key} must be a positive integer, got {v:?}"))),
    }
}

impl Config {
    /// Lines are `key = value`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> AppResult<Config> {
        let mut c = Config::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| AppError::Invalid(format!("config line {}: expected key = value", no + 1)))?;
            c.set(k.trim(), v.trim())?;
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> AppResult<Config> {
        Config::parse(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, key: &str, value: &str) -> AppResult<()> {
        match key {
            "series_upto" => self.series_upto = positive(key, value)?,
            "alpha_norm_bound" => self.alpha_norm_bound = positive(key, value)?,
            "subgroup_order_cap" => self.subgroup_order_cap = positive(key, value)?,
            "truncation_order" => self.truncation_order = positive(key, value)?,
            "output" => self.output = OutputFormat::parse(value)?,
            _ => return Err(AppError::Invalid(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }
}
