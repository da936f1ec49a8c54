//! Multitableaux of single-row and single-column shapes and their
//! inversion counts.

use supernomial::tableau::{
    enumerate_multitableaux, inv_generating_function, inversions, standardize, MultiPartition,
};

fn main() {
    let weight = [2, 2, 1];
    for shape in [
        MultiPartition::rows(&[2, 2, 1]),
        MultiPartition::columns(&[2, 2, 1]),
    ] {
        println!("shape {shape}");
        for t in enumerate_multitableaux(&shape, &weight) {
            println!(
                "  {t}  inv {}  standardized {}",
                inversions(&t),
                standardize(&t)
            );
        }
        println!(
            "  generating function {}\n",
            inv_generating_function(&shape, &weight)
        );
    }
}
