//! Runs every acceptance criterion at exact tolerance and prints one
//! pass/fail line per criterion. Set `SVCFC_SEED` to vary random samples.

use std::process::ExitCode;

use svcfc_core::harness::{run_suite, HarnessConfig, Suite};

fn main() -> ExitCode {
    let mut cfg = HarnessConfig::default();
    if let Ok(seed) = std::env::var("SVCFC_SEED") {
        cfg.seed = seed.parse().expect("SVCFC_SEED must be an integer");
    }
    println!("acceptance criteria (seed {})", cfg.seed);
    let reports = run_suite(Suite::All, &cfg);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", reports.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
