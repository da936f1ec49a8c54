//! Integer partitions, skew shapes and horizontal strips.
//!
//! Rows and columns are 1-indexed. Diagrams are read in French convention:
//! row 1 is the bottom (longest) row, so the cell "above" `(i, j)` is
//! `(i + 1, j)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so equality and hashing see the canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "rows are 1-indexed");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// `true` iff `inner[i] <= self[i]` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row) >= cell.col
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Adds one cell at the end of row `i`, if the result is a partition.
    pub fn add_cell(&self, row: usize) -> Option<Partition> {
        let current = self.part(row);
        if row > 1 && self.part(row - 1) <= current {
            return None;
        }
        let mut parts = self.0.clone();
        if row > parts.len() {
            if row != parts.len() + 1 {
                return None;
            }
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn diag(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// The cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkew {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer
            .cells()
            .filter(move |c| !self.inner.contains_cell(*c))
    }

    /// A horizontal `p`-strip has exactly `p` cells and at most one per column.
    pub fn is_horizontal_strip(&self, p: usize) -> bool {
        self.size() == p
            && (1..=self.outer.len()).all(|i| self.inner.part(i) >= self.outer.part(i + 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `n(mu) = sum_{i<j} min(mu_i, mu_j)`.
pub fn costat_n(mu: &Partition) -> usize {
    let parts = mu.parts();
    // parts are sorted, so min(mu_i, mu_j) = mu_j for i < j
    parts.iter().enumerate().map(|(j, &p)| j * p).sum()
}

/// Every `nu` contained in `bound` with `|nu| = size`, in lexicographically
/// decreasing order of the part sequence.
pub fn enumerate_subpartitions(bound: &Partition, size: usize) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    if size <= bound.size() {
        let caps = bound.parts().to_vec();
        // suffix capacity bounds the remaining size for pruning
        let mut suffix = vec![0usize; caps.len() + 1];
        for i in (0..caps.len()).rev() {
            suffix[i] = suffix[i + 1] + caps[i];
        }
        let mut current = Vec::new();
        subpartitions_rec(&caps, &suffix, size, usize::MAX, &mut current, &mut out);
    }
    out.into_iter()
}

fn subpartitions_rec(
    caps: &[usize],
    suffix: &[usize],
    remaining: usize,
    prev: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(current.clone()));
        return;
    }
    let row = current.len();
    if row >= caps.len() || suffix[row] < remaining {
        return;
    }
    let hi = caps[row].min(prev).min(remaining);
    for part in (1..=hi).rev() {
        // the rest must fit under min(part, caps) in the remaining rows
        let room: usize = caps[row + 1..].iter().map(|&c| c.min(part)).sum();
        if part + room < remaining {
            break;
        }
        current.push(part);
        subpartitions_rec(caps, suffix, remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let bound = Partition(vec![n; n]);
    enumerate_subpartitions(&bound, n).collect()
}

/// All sequences of `len` nonnegative integers summing to `total`, in
/// lexicographically decreasing order.
pub fn weak_compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if len == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=total).rev() {
            cur.push(first);
            rec(total - first, len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, len, &mut Vec::new(), &mut out);
    out
}

/// All sequences of positive integers summing to `total`.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=total).rev() {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // columns of (6,6,4,4,4,3): heights 6,6,6,5,2,2
        assert_eq!(p(&[6, 6, 4, 4, 4, 3]).conjugate(), p(&[6, 6, 6, 5, 2, 2]));
    }

    #[test]
    fn containment() {
        assert!(p(&[2, 2]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
        assert!(p(&[3, 2]).contains(&p(&[3, 2])));
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn horizontal_strips() {
        let s = SkewShape::new(p(&[2, 2]), p(&[2])).unwrap();
        assert!(s.is_horizontal_strip(2));
        let s = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert!(!s.is_horizontal_strip(3));
        let s = SkewShape::new(p(&[3, 1]), p(&[3, 1])).unwrap();
        assert!(s.is_horizontal_strip(0));
    }

    #[test]
    fn costatistic() {
        assert_eq!(costat_n(&p(&[2, 2, 1])), 4);
        assert_eq!(costat_n(&p(&[5])), 0);
        assert_eq!(costat_n(&p(&[1, 1, 1])), 3);
    }

    #[test]
    fn subpartitions_examples() {
        let got: Vec<_> = enumerate_subpartitions(&p(&[2, 2]), 2).collect();
        assert_eq!(got, vec![p(&[2]), p(&[1, 1])]);
        let got: Vec<_> = enumerate_subpartitions(&p(&[3, 2, 1]), 0).collect();
        assert_eq!(got, vec![Partition::empty()]);
        let got: Vec<_> = enumerate_subpartitions(&p(&[2, 2, 1]), 3).collect();
        assert_eq!(got, vec![p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_subpartitions(&p(&[1]), 2).count(), 0);
    }

    #[test]
    fn add_cell_respects_shape() {
        assert_eq!(p(&[2, 1]).add_cell(2), Some(p(&[2, 2])));
        assert_eq!(p(&[2, 2]).add_cell(2), None);
        assert_eq!(p(&[2, 2]).add_cell(3), Some(p(&[2, 2, 1])));
        assert_eq!(p(&[2, 2]).add_cell(4), None);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            weak_compositions(3, 2),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(compositions(4).len(), 8);
    }
}
