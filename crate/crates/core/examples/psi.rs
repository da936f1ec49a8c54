//! The bijection from single-row multitableaux to rigged configurations,
//! stage by stage, and its inverse.

use supernomial::bijection::{inverse_trace, psi_trace, tableau_from_words};
use supernomial::rigged::Mode;
use supernomial::tableau::inversions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = tableau_from_words(&[vec![2, 3], vec![1, 1], vec![1, 3, 4]], 4, Mode::Symmetric)?;
    let (trace, rc) = psi_trace(&t, Mode::Symmetric)?;
    print!("{}", trace.render_ascii());
    println!("after inverting the labels:\n{}", rc.render_ascii());
    println!(
        "statistic {} = inversions {}",
        rc.statistic(),
        inversions(&t)
    );

    let (back, recovered) = inverse_trace(&rc, &[2, 2, 3])?;
    println!(
        "\ninverse takes {} steps and recovers {recovered}",
        back.steps.len()
    );
    assert_eq!(recovered, t);
    Ok(())
}
