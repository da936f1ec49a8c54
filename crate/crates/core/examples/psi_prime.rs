//! The bijection from single-column multitableaux to antisymmetric rigged
//! configurations, with the per-letter bookkeeping check.

use supernomial::bijection::{delta_check, psi_prime_inverse, psi_trace, tableau_from_words};
use supernomial::rigged::Mode;
use supernomial::tableau::inversions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = tableau_from_words(
        &[vec![3, 4], vec![2], vec![1, 3, 4]],
        4,
        Mode::Antisymmetric,
    )?;
    let (trace, rc) = psi_trace(&t, Mode::Antisymmetric)?;
    print!("{}", trace.render_ascii());
    println!("after inverting the labels:\n{}", rc.render_ascii());
    println!(
        "statistic {} = inversions {}",
        rc.statistic(),
        inversions(&t)
    );

    let report = delta_check(&t, Mode::Antisymmetric)?;
    println!(
        "increment check over {} letters: {}",
        report.steps.len(),
        if report.passed() { "ok" } else { "FAILED" }
    );
    assert_eq!(psi_prime_inverse(&rc, &[2, 1, 3])?, t);
    Ok(())
}
