//! Cross-checks every representation on all small parameters.
//!
//! cargo run --release --example verify_sweep -- 6

use supernomial::sweep::{verify_sweep, SweepSpec};

fn main() {
    let max = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("size"))
        .unwrap_or(5);
    let spec = SweepSpec {
        max_total_size: max,
        ..SweepSpec::default()
    };
    let report = verify_sweep(&spec);
    for bad in report.instances.iter().filter(|r| !r.passed) {
        println!(
            "{} lambda {:?} mu {}: {:?}",
            bad.mode, bad.lambda, bad.mu, bad.mismatch
        );
    }
    print!("{}", report.summary());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
