//! Randomized verification of the perturbation inequalities.
//!
//! Each [`TheoremId`] has one checker. A checker draws a random instance from
//! a per-trial seed, evaluates both sides of its inequality or identity and
//! reports the smallest slack. Trials run in parallel; every trial seed is a
//! function of `(master seed, theorem, trial index)` only, so reports do not
//! depend on scheduling.

mod checkers;
mod instance;
mod random;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tol;

pub use checkers::{angle_change_sides, evaluate, generate, one_dimensional_sides, AngleQuantity};
pub use instance::Instance;
pub use random::{
    gaussian_matrix, gaussian_symmetric, random_orthogonal, random_subspace, random_symmetric, rng_from_seed, sub_seed,
    symmetric_with_spectrum, TrialRng,
};

pub const DEFAULT_SEED: u64 = 0x5EED_0001;

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok(TheoremId::$variant),)*
                    other => Err(Error::UnknownTheorem(other.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    Ineq1dAngle => "INEQ-1D-ANGLE",
    Ineq1dSin => "INEQ-1D-SIN",
    Ineq1dCos => "INEQ-1D-COS",
    Ineq1dSq => "INEQ-1D-SQ",
    Thm21 => "THM-2-1",
    Cor22 => "COR-2-2",
    Thm23Lidskii => "THM-2-3-LIDSKII",
    Cor24 => "COR-2-4",
    Cor25 => "COR-2-5",
    Thm26Pinch => "THM-2-6-PINCH",
    Thm27 => "THM-2-7",
    Lem28 => "LEM-2-8",
    Thm29 => "THM-2-9",
    Thm31Angles => "THM-3-1-ANGLES",
    Thm32Sin => "THM-3-2-SIN",
    Thm32Cos => "THM-3-2-COS",
    Thm33Sq => "THM-3-3-SQ",
    Thm41Ritz => "THM-4-1-RITZ",
    Cor4Dilation => "COR-4-DILATION",
    Thm52Graph => "THM-5-2-GRAPH",
}

impl TheoremId {
    fn stream(self) -> u64 {
        TheoremId::ALL.iter().position(|t| *t == self).unwrap_or(0) as u64 + 1
    }

    /// Parses a comma-separated list; `all` selects the whole registry.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ambient dimension range for generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub min_n: usize,
    pub max_n: usize,
}

impl Default for Dims {
    fn default() -> Self {
        Self { min_n: 2, max_n: 12 }
    }
}

impl Dims {
    fn validate(&self) -> Result<()> {
        if self.min_n < 2 || self.min_n > self.max_n {
            return Err(Error::BadDims(format!(
                "ambient range [{}, {}] must satisfy 2 <= min <= max",
                self.min_n, self.max_n
            )));
        }
        Ok(())
    }
}

/// Slack of a single trial; the trial fails when `margin < -tolerance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub margin: f64,
    pub tolerance: f64,
}

impl TrialOutcome {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn failed(&self) -> bool {
        !(self.margin >= -self.tolerance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckConfig {
    pub trials: usize,
    pub dims: Dims,
    pub seed: u64,
    /// Replaces the `1e-8` base factor of the weak-majorization slack.
    pub tol_factor: f64,
    /// Where failing instances are written; nothing is written when `None`.
    pub repro_dir: Option<PathBuf>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            dims: Dims::default(),
            seed: DEFAULT_SEED,
            tol_factor: tol::MAJORIZATION_REL,
            repro_dir: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub trials: usize,
    pub failures: usize,
    /// Smallest slack over all trials (`+inf` when no trials ran).
    pub worst_margin: f64,
    pub seed: u64,
    pub elapsed: Duration,
    pub repro_files: Vec<PathBuf>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn run_trial(id: TheoremId, trial: usize, config: &CheckConfig) -> (Instance, TrialOutcome) {
    let seed = sub_seed(config.seed, id.stream(), trial as u64);
    let instance = generate(id, seed, trial, config.dims);
    let outcome = evaluate(&instance, config.tol_factor).unwrap_or(TrialOutcome {
        margin: f64::NEG_INFINITY,
        tolerance: 0.0,
    });
    (instance, outcome)
}

pub fn check(id: TheoremId, config: &CheckConfig) -> Result<CheckReport> {
    config.dims.validate()?;
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(config.tol_factor > 0.0) {
        return Err(Error::BadDims(format!(
            "tolerance factor must be positive, got {}",
            config.tol_factor
        )));
    }
    let start = Instant::now();
    let results: Vec<(Instance, TrialOutcome)> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(id, t, config))
        .collect();

    let mut failures = 0;
    let mut worst_margin = f64::INFINITY;
    let mut repro_files = Vec::new();
    for (instance, outcome) in &results {
        worst_margin = worst_margin.min(outcome.margin);
        if outcome.failed() {
            failures += 1;
            if let Some(dir) = &config.repro_dir {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("{}-trial{}.txt", id, instance.trial));
                instance.write_to(&path)?;
                repro_files.push(path);
            }
        }
    }
    Ok(CheckReport {
        theorem: id,
        trials: config.trials,
        failures,
        worst_margin,
        seed: config.seed,
        elapsed: start.elapsed(),
        repro_files,
    })
}

/// Regenerates nothing: evaluates a stored instance exactly as the checker did.
pub fn replay(instance: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    evaluate(instance, tol_factor)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub theorems: Vec<TheoremId>,
    pub check: CheckConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            theorems: TheoremId::ALL.to_vec(),
            check: CheckConfig::default(),
        }
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    config.theorems.iter().map(|&id| check(id, &config.check)).collect()
}

pub fn suite_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_twenty_distinct_ids() {
        assert_eq!(TheoremId::ALL.len(), 20);
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), *id);
        }
        assert_eq!(TheoremId::parse_list("all").unwrap().len(), 20);
        assert_eq!(
            TheoremId::parse_list("THM-3-3-SQ,COR-2-2").unwrap(),
            vec![TheoremId::Thm33Sq, TheoremId::Cor22]
        );
        assert_eq!(
            "THM-9-9".parse::<TheoremId>(),
            Err(Error::UnknownTheorem("THM-9-9".into()))
        );
    }

    #[test]
    fn empty_suite() {
        let cfg = SuiteConfig {
            theorems: vec![],
            ..Default::default()
        };
        assert!(run_suite(&cfg).unwrap().is_empty());
    }

    #[test]
    fn bad_dims_rejected() {
        let cfg = CheckConfig {
            dims: Dims { min_n: 1, max_n: 4 },
            ..Default::default()
        };
        assert!(matches!(check(TheoremId::Thm21, &cfg), Err(Error::BadDims(_))));
    }

    #[test]
    fn nan_margin_counts_as_failure() {
        assert!(TrialOutcome {
            margin: f64::NAN,
            tolerance: 1.0
        }
        .failed());
        assert!(!TrialOutcome {
            margin: -0.5,
            tolerance: 1.0
        }
        .failed());
    }
}
