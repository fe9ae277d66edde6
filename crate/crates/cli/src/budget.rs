//! Enumeration and scan budgets with their sources.

use serde::Serialize;

use gcqc::classical::DEFAULT_BUDGET;
use gcqc::distance::DEFAULT_SCAN_BUDGET;

use crate::spec::BudgetSpec;
use crate::CliError;

pub const BUDGET_ENV: &str = "GCQ_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetSource {
    Default,
    Environment,
    SpecFile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Cap on words enumerated by exact computations.
    pub enumeration: u64,
    pub enumeration_source: BudgetSource,
    /// Cap on vectors visited by a low-weight scan.
    pub scan: u64,
    pub scan_source: BudgetSource,
}

impl Budgets {
    /// Defaults, replaced by `env` for enumeration, then by the spec file.
    pub fn resolve(env: Option<u64>, spec: Option<BudgetSpec>) -> Self {
        let mut b = Budgets {
            enumeration: DEFAULT_BUDGET,
            enumeration_source: BudgetSource::Default,
            scan: DEFAULT_SCAN_BUDGET,
            scan_source: BudgetSource::Default,
        };
        if let Some(v) = env {
            b.enumeration = v;
            b.enumeration_source = BudgetSource::Environment;
        }
        let spec = spec.unwrap_or_default();
        if let Some(v) = spec.enumeration {
            b.enumeration = v;
            b.enumeration_source = BudgetSource::SpecFile;
        }
        if let Some(v) = spec.scan {
            b.scan = v;
            b.scan_source = BudgetSource::SpecFile;
        }
        b
    }

    /// Reads the environment override.
    pub fn from_env(spec: Option<BudgetSpec>) -> Result<Self, CliError> {
        let env = match std::env::var(BUDGET_ENV) {
            Ok(s) => {
                Some(parse_count(&s).ok_or_else(|| CliError::Input(format!("{BUDGET_ENV}={s:?} is not a count")))?)
            }
            Err(_) => None,
        };
        Ok(Self::resolve(env, spec))
    }
}

/// A positive integer, optionally written `2^k`.
pub fn parse_count(s: &str) -> Option<u64> {
    let s = s.trim();
    let v = match s.split_once('^') {
        Some((base, exp)) => base.trim().parse::<u64>().ok()?.checked_pow(exp.trim().parse().ok()?)?,
        None => s.replace('_', "").parse().ok()?,
    };
    (v > 0).then_some(v)
}
