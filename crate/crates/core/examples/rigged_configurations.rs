//! Configurations, vacancy numbers and riggings, with the statistic of
//! each rigged configuration.

use supernomial::partition::Partition;
use supernomial::qpoly::QPolynomial;
use supernomial::rigged::{enumerate_configurations, enumerate_riggings, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = [2, 2, 1];
    let mu = Partition::new(vec![2, 2, 1])?;
    for mode in [Mode::Symmetric, Mode::Antisymmetric] {
        println!("== {mode} ==");
        let mut total = QPolynomial::zero();
        for config in enumerate_configurations(&lambda, &mu, 3, mode)? {
            let term = config.formula_term();
            let nus: Vec<String> = config
                .intermediate()
                .iter()
                .map(ToString::to_string)
                .collect();
            println!("configuration {} contributes {term}", nus.join(" "));
            for rc in enumerate_riggings(&config) {
                println!("statistic {}", rc.statistic());
                println!("{}", rc.render_ascii());
            }
            total = total + term;
        }
        println!("total {total}\n");
    }
    Ok(())
}
