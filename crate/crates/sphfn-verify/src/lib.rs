//! Invariant batteries over `sphfn-core` with JSON reports, and the
//! acceptance criteria built on them.

pub mod acceptance;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sphfn_core::specfun::SeriesBudget;
use sphfn_core::{Error, Result};

pub use report::{worst, worst_of, Check, Report, Status, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hypercomplex,
    Liealg,
    So4,
    So14,
    Principal,
    Hyperboloid,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Hypercomplex, Suite::Liealg, Suite::So4, Suite::So14, Suite::Principal, Suite::Hyperboloid];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hypercomplex => "hypercomplex",
            Suite::Liealg => "liealg",
            Suite::So4 => "so4",
            Suite::So14 => "so14",
            Suite::Principal => "principal",
            Suite::Hyperboloid => "hyperboloid",
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Multipliers on each suite's built-in tolerances.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub hypercomplex: f64,
    pub liealg: f64,
    pub so4: f64,
    pub so14: f64,
    pub principal: f64,
    pub hyperboloid: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { hypercomplex: 1.0, liealg: 1.0, so4: 1.0, so14: 1.0, principal: 1.0, hyperboloid: 1.0 }
    }
}

impl Tolerances {
    pub fn scale(&self, s: Suite) -> f64 {
        match s {
            Suite::Hypercomplex => self.hypercomplex,
            Suite::Liealg => self.liealg,
            Suite::So4 => self.so4,
            Suite::So14 => self.so14,
            Suite::Principal => self.principal,
            Suite::Hyperboloid => self.hyperboloid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureCaps {
    pub nodes: usize,
    pub t_tau: f64,
    pub t_exp: f64,
}

impl Default for QuadratureCaps {
    fn default() -> Self {
        QuadratureCaps { nodes: 64, t_tau: 12.0, t_exp: 30.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub seed: u64,
    /// Random samples per randomized check.
    pub samples: usize,
    pub tolerances: Tolerances,
    pub budget: SeriesBudget,
    pub quadrature: QuadratureCaps,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 100,
            tolerances: Tolerances::default(),
            budget: SeriesBudget::default(),
            quadrature: QuadratureCaps::default(),
            format: OutputFormat::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let t = &self.tolerances;
        for (name, v) in [
            ("tolerances.hypercomplex", t.hypercomplex),
            ("tolerances.liealg", t.liealg),
            ("tolerances.so4", t.so4),
            ("tolerances.so14", t.so14),
            ("tolerances.principal", t.principal),
            ("tolerances.hyperboloid", t.hyperboloid),
            ("budget.rel_tol", self.budget.rel_tol),
            ("quadrature.t_tau", self.quadrature.t_tau),
            ("quadrature.t_exp", self.quadrature.t_exp),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Range { name, value: v, range: "(0, inf)" });
            }
        }
        if self.samples == 0 || self.budget.max_terms == 0 || self.quadrature.nodes == 0 {
            return Err(Error::Domain("samples, budget.max_terms and quadrature.nodes must be positive".into()));
        }
        Ok(())
    }

    /// Generator for one suite, independent of which other suites run.
    pub(crate) fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(suite.stream());
        r
    }
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> SuiteReport {
    let scale = cfg.tolerances.scale(suite);
    match suite {
        Suite::Hypercomplex => suites::hypercomplex::run(cfg, scale),
        Suite::Liealg => suites::liealg::run(cfg, scale),
        Suite::So4 => suites::so4::run(cfg, scale),
        Suite::So14 => suites::so14::run(cfg, scale),
        Suite::Principal => suites::principal::run(cfg, scale),
        Suite::Hyperboloid => suites::hyperboloid::run(cfg, scale),
    }
}

/// Runs the given suites in order and collects one report.
pub fn run(which: &[Suite], cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let suites: Vec<SuiteReport> = which.iter().map(|&s| run_suite(s, cfg)).collect();
    let passed = suites.iter().all(|s| s.passed);
    Ok(Report { seed: cfg.seed, passed, suites })
}
