//! Run a filtered suite and emit the deterministic JSON report.
use summation_core::identities::{run_suite, suite_json};

fn main() {
    let pattern = std::env::args().nth(1).unwrap_or_else(|| "theta-*".into());
    let reports = run_suite(Some(&pattern));
    print!("{}", suite_json(&reports));
    let passed = reports.iter().filter(|r| r.passed).count();
    eprintln!("{passed}/{} passed", reports.len());
}
