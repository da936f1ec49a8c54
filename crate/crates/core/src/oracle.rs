//! Coefficient of `x^lambda` in `h_{mu_1} ... h_{mu_L}` or
//! `e_{mu_1} ... e_{mu_L}` over `n` variables.
//!
//! Deliberately self-contained: no partitions, tableaux or
//! configurations, just a dynamic program over content vectors.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rigged::Mode;

/// `mu` may be given in any order; entries of `lambda` beyond `n` must
/// be zero for a nonzero answer.
pub fn path_count_oracle(lambda: &[usize], mu: &[usize], n: usize, mode: Mode) -> BigInt {
    if lambda.iter().skip(n).any(|&x| x != 0) {
        return BigInt::zero();
    }
    let target: Vec<usize> = (0..n)
        .map(|k| lambda.get(k).copied().unwrap_or(0))
        .collect();
    let mut layer: HashMap<Vec<usize>, BigInt> = HashMap::new();
    layer.insert(vec![0; n], BigInt::from(1));
    for &part in mu {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (content, count) in &layer {
            let mut exps = vec![0; n];
            spread(part, 0, &target, content, mode, &mut exps, &mut |e| {
                let key: Vec<usize> = content.iter().zip(e).map(|(c, x)| c + x).collect();
                *next.entry(key).or_insert_with(BigInt::zero) += count;
            });
        }
        layer = next;
    }
    layer.remove(&target).unwrap_or_else(BigInt::zero)
}

/// Visits every exponent vector of a monomial of degree `left` (entries at
/// most 1 in the antisymmetric case) that keeps `content` below `target`.
fn spread(
    left: usize,
    k: usize,
    target: &[usize],
    content: &[usize],
    mode: Mode,
    exps: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if k == exps.len() {
        if left == 0 {
            visit(exps);
        }
        return;
    }
    let room = target[k] - content[k];
    let cap = match mode {
        Mode::Symmetric => left.min(room),
        Mode::Antisymmetric => left.min(room).min(1),
    };
    for x in 0..=cap {
        exps[k] = x;
        spread(left - x, k + 1, target, content, mode, exps, visit);
    }
    exps[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(
            path_count_oracle(&[2, 2, 1], &[2, 2, 1], 3, Mode::Symmetric),
            11.into()
        );
        assert_eq!(
            path_count_oracle(&[2, 2, 1], &[2, 2, 1], 3, Mode::Antisymmetric),
            5.into()
        );
        // (x1 + x2)^5
        assert_eq!(
            path_count_oracle(&[2, 3], &[1; 5], 2, Mode::Symmetric),
            10.into()
        );
        assert_eq!(path_count_oracle(&[], &[], 1, Mode::Symmetric), 1.into());
        assert_eq!(
            path_count_oracle(&[3], &[2, 1], 1, Mode::Antisymmetric),
            0.into()
        );
        assert_eq!(
            path_count_oracle(&[1, 1], &[2], 3, Mode::Symmetric),
            1.into()
        );
    }
}
