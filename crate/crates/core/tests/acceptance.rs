//! Runs the eleven acceptance criteria and prints one line per criterion.
//! Exits nonzero when any criterion fails.

use std::process::ExitCode;

use chibound::suite::{run_criterion, SuiteConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = SuiteConfig {
        chi_limit: chibound::cli::desk_limit().expect("valid desk limit"),
        ..SuiteConfig::default()
    };
    println!("acceptance suite, seed {}", cfg.seed);
    let mut failed = 0;
    for &(id, _) in CRITERIA.iter() {
        let outcome = run_criterion(id, &cfg);
        println!("{}", outcome.line());
        for f in outcome.failures.iter().skip(1) {
            println!("       {f}");
        }
        if !outcome.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: {} of {} criteria passed", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", CRITERIA.len());
        ExitCode::FAILURE
    }
}
