//! A 3-ribbon tableau: its strips, spin, cospin, core and quotient.

use supernomial::partition::{Partition, SkewShape};
use supernomial::ribbon::{
    core, cospin_gf, enumerate_ribbon_tableaux, maxspin, quot, quot_inverse, RibbonTableau,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("partition")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = RibbonTableau::new(
        3,
        vec![
            Partition::empty(),
            p(&[3, 2, 1]),
            p(&[3, 3, 3, 1, 1, 1]),
            p(&[6, 6, 3, 2, 2, 2]),
            p(&[6, 6, 4, 4, 4, 3]),
        ],
    )?;
    println!("{}", t.render_ascii());
    println!("weight {:?}", t.weight());
    for (k, strip) in t.strips().iter().enumerate() {
        let spins: Vec<usize> = strip.iter().map(|r| r.spin()).collect();
        println!("strip {}: ribbon spins {spins:?}", k + 1);
    }
    println!(
        "spin {}, maxspin {}, cospin {}",
        t.spin(),
        maxspin(&t.shape(), 3)?,
        t.cospin()?
    );

    let shape = t.shape().outer().clone();
    let q = quot(&shape, 3)?;
    println!(
        "3-core {}, 3-quotient {q}, back to {}",
        core(&shape, 3),
        quot_inverse(&q, 3)?
    );

    let straight = SkewShape::straight(shape);
    let weight = t.weight();
    println!(
        "{} tableaux of this shape and weight, cospin generating function {}",
        enumerate_ribbon_tableaux(&straight, &weight, 3).len(),
        cospin_gf(&straight, &weight, 3)?
    );
    Ok(())
}
