//! Runs every verification suite at the default configuration and prints one
//! summary line per acceptance criterion. Exits non-zero if any check fails.

use std::process::ExitCode;
use std::time::Instant;

use opdam_a1::verify::{run_all, VerifyConfig};

const CRITERIA: [(u8, &str); 10] = [
    (1, "orthogonality and norms"),
    (2, "structural identities"),
    (3, "eigen-equations"),
    (4, "basis structure"),
    (5, "Poisson kernel"),
    (6, "Poisson semigroup"),
    (7, "product structure"),
    (8, "fractional integral (reporting)"),
    (9, "Hilbert transform"),
    (10, "classical limit"),
];

fn main() -> ExitCode {
    let start = Instant::now();
    let reports = match run_all(&VerifyConfig::default()) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance: verification aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    for r in &reports {
        println!("{}", r.line());
    }
    println!();

    let mut all_ok = true;
    for (c, title) in CRITERIA {
        let checks: Vec<_> = reports.iter().filter(|r| r.criterion == c).collect();
        let failed = checks.iter().filter(|r| !r.passed).count();
        let info = checks.iter().filter(|r| r.reporting_only).count();
        let ok = !checks.is_empty() && failed == 0;
        all_ok &= ok;
        println!(
            "criterion {c:>2} {:<4} {title}: {} checks, {failed} failed, {info} reporting-only",
            if ok { "PASS" } else { "FAIL" },
            checks.len()
        );
    }
    let stray = reports.iter().filter(|r| !(1..=10).contains(&r.criterion)).count();
    if stray > 0 {
        println!("acceptance: {stray} checks carry no criterion number");
        all_ok = false;
    }
    println!("acceptance: {} checks in {:.1} s", reports.len(), start.elapsed().as_secs_f64());

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
