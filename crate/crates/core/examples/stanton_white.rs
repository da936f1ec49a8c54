//! The correspondence between ribbon tableaux and multitableaux, which
//! carries cospin to inversions.

use supernomial::partition::{Partition, SkewShape};
use supernomial::ribbon::{
    enumerate_ribbon_tableaux, standardize_ribbon, stanton_white, stanton_white_inverse,
};
use supernomial::tableau::{inversions, standardize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = SkewShape::straight(Partition::new(vec![6, 6, 4, 4, 4, 3])?);
    let weight = [2, 2, 3, 2];
    let all = enumerate_ribbon_tableaux(&shape, &weight, 3);
    println!(
        "{} ribbon tableaux of shape {} and weight {weight:?}",
        all.len(),
        shape.outer()
    );
    for t in all.iter().take(4) {
        let m = stanton_white(t)?;
        println!("{}", t.render_ascii());
        println!("image {m}, cospin {} = inv {}", t.cospin()?, inversions(&m));
        let st = stanton_white(&standardize_ribbon(t))?;
        println!("standardizing first: {st}; afterwards: {}", standardize(&m));
        assert_eq!(&stanton_white_inverse(&m, 3)?, t);
        println!();
    }
    Ok(())
}
