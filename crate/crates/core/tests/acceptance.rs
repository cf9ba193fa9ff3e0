use std::process::ExitCode;
use std::time::Instant;

use parahoric::checks::{criterion, CRITERIA};

/// Exact-match criteria carry no numeric tolerance; the wall-time budget is
/// the only pinned threshold.
const WALL_TIME_BUDGET_SECS: f64 = 300.0;

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    for n in 1..=CRITERIA.len() {
        let t = Instant::now();
        let c = criterion(n);
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{status} {} ({:.1}s) {}", c.name, t.elapsed().as_secs_f64(), c.detail);
        if !c.passed {
            failed += 1;
        }
    }
    let total = start.elapsed().as_secs_f64();
    let within = total < WALL_TIME_BUDGET_SECS;
    println!(
        "{} wall time {total:.1}s (budget {WALL_TIME_BUDGET_SECS}s)",
        if within { "PASS" } else { "FAIL" }
    );
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 && within {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
