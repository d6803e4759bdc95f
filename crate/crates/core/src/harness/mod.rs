//! Desk-scale property suites behind the acceptance criteria, shared by the
//! `acceptance` test target and the `svcfc harness` command.

mod criteria;
pub mod generate;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use criteria::CRITERIA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessConfig {
    /// Seed for every randomized sample; each item derives its own stream.
    pub seed: u64,
    /// Wall-clock limit per criterion. A criterion that runs out fails.
    pub budget: Option<Duration>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: 20_240_917,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Verifier,
    Props,
    Reduction,
    Classes,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
            Suite::Verifier => &[1],
            Suite::Props => &[2, 3, 4, 5, 11],
            Suite::Reduction => &[6, 7, 10],
            Suite::Classes => &[8, 9],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "verifier" => Suite::Verifier,
            "props" => Suite::Props,
            "reduction" => Suite::Reduction,
            "classes" => Suite::Classes,
            _ => {
                return Err(format!(
                    "unknown suite {s:?} (all, verifier, props, reduction, classes)"
                ))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Individual comparisons performed.
    pub checks: u64,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: {} checks in {:.1}s; {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks,
            self.elapsed_ms as f64 / 1000.0,
            self.detail
        )
    }
}

pub(crate) struct Ctx {
    pub seed: u64,
    deadline: Option<Instant>,
}

impl Ctx {
    pub fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() > d)
    }

    pub fn check_time(&self) -> Result<(), String> {
        if self.out_of_time() {
            Err("budget exhausted".into())
        } else {
            Ok(())
        }
    }
}

/// What a criterion found: the check count and a summary, or why it failed.
pub(crate) type Outcome = Result<(u64, String), String>;

/// Id and short name of every criterion.
pub fn criteria() -> impl Iterator<Item = (u8, &'static str)> {
    CRITERIA.iter().map(|&(id, name, _)| (id, name))
}

/// Runs one criterion by id (1..=11).
pub fn run_criterion(id: u8, cfg: &HarnessConfig) -> Option<CriterionReport> {
    let &(_, name, check) = CRITERIA.iter().find(|(i, _, _)| *i == id)?;
    let start = Instant::now();
    let ctx = Ctx {
        seed: cfg.seed,
        deadline: cfg.budget.map(|b| start + b),
    };
    let (passed, checks, detail) = match check(&ctx) {
        Ok((checks, detail)) => (true, checks, detail),
        Err(why) => (false, 0, why),
    };
    Some(CriterionReport {
        id,
        name,
        passed,
        checks,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

pub fn run_suite(suite: Suite, cfg: &HarnessConfig) -> Vec<CriterionReport> {
    suite
        .criteria()
        .iter()
        .filter_map(|&id| run_criterion(id, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_cover_every_criterion_once() {
        let mut ids: Vec<u8> = [
            Suite::Verifier,
            Suite::Props,
            Suite::Reduction,
            Suite::Classes,
        ]
        .iter()
        .flat_map(|s| s.criteria().iter().copied())
        .collect();
        ids.sort();
        assert_eq!(ids, Suite::All.criteria());
        assert_eq!(CRITERIA.len(), 11);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn fast_criteria_pass() {
        let cfg = HarnessConfig::default();
        for id in [2, 5] {
            let report = run_criterion(id, &cfg).unwrap();
            assert!(report.passed, "{report}");
        }
        assert!(run_criterion(12, &cfg).is_none());
    }

    #[test]
    fn zero_budget_fails_honestly() {
        let cfg = HarnessConfig {
            budget: Some(Duration::ZERO),
            ..Default::default()
        };
        std::thread::sleep(Duration::from_millis(2));
        let report = run_criterion(1, &cfg).unwrap();
        assert!(!report.passed);
        assert!(report.detail.contains("budget"));
    }
}
