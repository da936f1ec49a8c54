//! The same q-supernomial computed every available way.
//!
//! cargo run --example golden_supernomials -- 2,2,1 2,2,1

use supernomial::oracle::path_count_oracle;
use supernomial::partition::{Partition, SkewShape};
use supernomial::ribbon::{cospin_gf, quot_inverse};
use supernomial::rigged::{supernomial_formula, supernomial_via_rc, Mode};
use supernomial::sweep::multipartition_for;
use supernomial::tableau::inv_generating_function;

fn list(arg: Option<String>, default: &[usize]) -> Vec<usize> {
    arg.map(|s| {
        s.split(',')
            .map(|x| x.trim().parse().expect("nonnegative integer"))
            .collect()
    })
    .unwrap_or_else(|| default.to_vec())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lambda = list(args.next(), &[2, 2, 1]);
    let mu = Partition::new(list(args.next(), &[2, 2, 1]))?;
    let n = lambda.len();
    println!("lambda = {lambda:?}, mu = {mu}, n = {n}");
    for mode in [Mode::Symmetric, Mode::Antisymmetric] {
        let shape = multipartition_for(mode, mu.parts());
        let l = shape.len();
        let outer = quot_inverse(&shape, l)?;
        println!("\n{mode}:");
        println!(
            "  formula            {}",
            supernomial_formula(&lambda, &mu, n, mode)?
        );
        println!(
            "  rigged configs     {}",
            supernomial_via_rc(&lambda, &mu, n, mode)?
        );
        println!(
            "  multitableau inv   {}",
            inv_generating_function(&shape, &lambda)
        );
        println!(
            "  ribbon cospin      {} (shape {outer}, L = {l})",
            cospin_gf(&SkewShape::straight(outer.clone()), &lambda, l)?
        );
        println!(
            "  path count at q=1  {}",
            path_count_oracle(&lambda, mu.parts(), n, mode)
        );
    }
    Ok(())
}
