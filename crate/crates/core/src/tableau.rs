//! Young tableaux as chains of partitions, `L`-multitableaux, their
//! standardization and the inversion statistic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use crate::qpoly::QPolynomial;

/// A semistandard tableau `alpha^0 ⊂ alpha^1 ⊂ ... ⊂ alpha^r`, where each
/// step is a horizontal strip.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    chain: Vec<Partition>,
}

impl YoungTableau {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidTableau("empty chain".into()));
        }
        for w in chain.windows(2) {
            let strip = SkewShape::new(w[1].clone(), w[0].clone())
                .map_err(|e| Error::InvalidTableau(e.to_string()))?;
            if !strip.is_horizontal_strip(strip.size()) {
                return Err(Error::InvalidTableau(format!(
                    "{strip} is not a horizontal strip"
                )));
            }
        }
        Ok(YoungTableau { chain })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("nonempty chain")
    }

    pub fn weight(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| w[1].size() - w[0].size())
            .collect()
    }
}

/// An `L`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn empty(l: usize) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); l],
        }
    }

    /// Components that are single rows of the given lengths.
    pub fn rows(sizes: &[usize]) -> Self {
        MultiPartition::new(
            sizes
                .iter()
                .map(|&s| Partition::from_parts_unchecked(vec![s]))
                .collect(),
        )
    }

    /// Components that are single columns of the given heights.
    pub fn columns(sizes: &[usize]) -> Self {
        MultiPartition::new(
            sizes
                .iter()
                .map(|&s| Partition::from_parts_unchecked(vec![1; s]))
                .collect(),
        )
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Componentwise containment.
    pub fn contains(&self, inner: &MultiPartition) -> bool {
        self.len() == inner.len()
            && self
                .components
                .iter()
                .zip(&inner.components)
                .all(|(a, b)| a.contains(b))
    }

    pub fn contains_cell(&self, cell: MultiCell) -> bool {
        cell.pos < self.len()
            && self.components[cell.pos].contains_cell(Cell::new(cell.row, cell.col))
    }

    pub fn cells(&self) -> impl Iterator<Item = MultiCell> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| p.cells().map(move |c| MultiCell::new(c.row, c.col, pos)))
    }

    /// `true` iff `self / inner` is an `L`-tuple of horizontal strips.
    pub fn is_multistrip_over(&self, inner: &MultiPartition) -> bool {
        self.contains(inner)
            && self.components.iter().zip(&inner.components).all(|(o, i)| {
                let s = SkewShape::new(o.clone(), i.clone()).expect("checked containment");
                s.is_horizontal_strip(s.size())
            })
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A cell `(row, col)` of component `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiCell {
    pub row: usize,
    pub col: usize,
    pub pos: usize,
}

impl MultiCell {
    pub fn new(row: usize, col: usize, pos: usize) -> Self {
        MultiCell { row, col, pos }
    }

    pub fn diag(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// The cell directly above (next row up, same column).
    pub fn up(&self) -> MultiCell {
        MultiCell::new(self.row + 1, self.col, self.pos)
    }

    /// Strict `≼`: smaller diagonal, or equal diagonal and smaller position.
    pub fn precedes(&self, other: &MultiCell) -> bool {
        self.order_key() < other.order_key()
    }

    fn order_key(&self) -> (i64, usize) {
        (self.diag(), self.pos)
    }

    /// Total order refining `≼`, used for sorting; ties within `≼` are
    /// broken by row.
    pub fn cmp_standard(&self, other: &MultiCell) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then(self.row.cmp(&other.row))
    }
}

/// A chain of multipartitions whose steps are horizontal multistrips.
/// `chain[0]` is the inner shape; step `i` adds the cells filled with `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiTableau {
    chain: Vec<MultiPartition>,
}

impl MultiTableau {
    pub fn new(chain: Vec<MultiPartition>) -> Result<Self> {
        let Some(first) = chain.first() else {
            return Err(Error::InvalidTableau("empty chain".into()));
        };
        if first.is_empty() {
            return Err(Error::InvalidTableau(
                "a multipartition needs at least one component".into(),
            ));
        }
        for (i, w) in chain.windows(2).enumerate() {
            if w[1].len() != w[0].len() {
                return Err(Error::InvalidTableau(
                    "component count changes along the chain".into(),
                ));
            }
            if !w[1].is_multistrip_over(&w[0]) {
                return Err(Error::InvalidTableau(format!(
                    "step {} from {} to {} is not a horizontal multistrip",
                    i + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(MultiTableau { chain })
    }

    pub(crate) fn from_chain_unchecked(chain: Vec<MultiPartition>) -> Self {
        MultiTableau { chain }
    }

    pub fn from_components(tableaux: &[YoungTableau]) -> Result<Self> {
        let steps = tableaux.iter().map(|t| t.chain.len()).max().unwrap_or(0);
        if tableaux.is_empty() || tableaux.iter().any(|t| t.chain.len() != steps) {
            return Err(Error::InvalidTableau(
                "components need chains of equal length".into(),
            ));
        }
        let chain = (0..steps)
            .map(|s| MultiPartition::new(tableaux.iter().map(|t| t.chain[s].clone()).collect()))
            .collect();
        MultiTableau::new(chain)
    }

    /// Builds a straight-shape multitableau from row-major fillings (row 1
    /// first) over the alphabet `1..=n`.
    pub fn from_fillings(fillings: &[Vec<Vec<usize>>], n: usize) -> Result<Self> {
        if fillings.is_empty() {
            return Err(Error::InvalidTableau(
                "a multipartition needs at least one component".into(),
            ));
        }
        for (pos, rows) in fillings.iter().enumerate() {
            check_semistandard(rows, n)
                .map_err(|m| Error::InvalidTableau(format!("component {pos}: {m}")))?;
        }
        let chain = (0..=n)
            .map(|a| {
                MultiPartition::new(
                    fillings
                        .iter()
                        .map(|rows| {
                            Partition::from_parts_unchecked(
                                rows.iter()
                                    .map(|r| r.iter().filter(|&&v| v <= a).count())
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        MultiTableau::new(chain)
    }

    pub fn chain(&self) -> &[MultiPartition] {
        &self.chain
    }

    pub fn inner(&self) -> &MultiPartition {
        &self.chain[0]
    }

    pub fn shape(&self) -> &MultiPartition {
        self.chain.last().expect("nonempty chain")
    }

    /// Number of components `L`.
    pub fn num_components(&self) -> usize {
        self.chain[0].len()
    }

    /// Alphabet size (number of chain steps).
    pub fn alphabet(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn weight(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| w[1].size() - w[0].size())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        self.weight().iter().all(|&w| w == 1)
    }

    /// Row-major fillings per component, row 1 first. Cells of the inner
    /// shape read as 0.
    pub fn fillings(&self) -> Vec<Vec<Vec<usize>>> {
        let shape = self.shape();
        let mut out: Vec<Vec<Vec<usize>>> = shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (value, w) in self.chain.windows(2).enumerate() {
            for (pos, (o, i)) in w[1].components().iter().zip(w[0].components()).enumerate() {
                for row in 1..=o.len() {
                    for col in i.part(row) + 1..=o.part(row) {
                        out[pos][row - 1][col - 1] = value + 1;
                    }
                }
            }
        }
        out
    }

    /// The cells added at step `value` (1-based).
    pub fn strip_cells(&self, value: usize) -> Vec<MultiCell> {
        let (outer, inner) = (&self.chain[value], &self.chain[value - 1]);
        let mut cells = Vec::new();
        for (pos, (o, i)) in outer
            .components()
            .iter()
            .zip(inner.components())
            .enumerate()
        {
            for row in 1..=o.len() {
                for col in i.part(row) + 1..=o.part(row) {
                    cells.push(MultiCell::new(row, col, pos));
                }
            }
        }
        cells
    }
}

fn check_semistandard(rows: &[Vec<usize>], n: usize) -> std::result::Result<(), String> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(format!("row {} is empty", r + 1));
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(format!("row {} is longer than the row below it", r + 1));
        }
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(format!("letter {v} outside the alphabet 1..={n}"));
            }
            if c > 0 && row[c - 1] > v {
                return Err(format!("row {} is not weakly increasing", r + 1));
            }
            if r > 0 && rows[r - 1][c] >= v {
                return Err(format!("column {} is not strictly increasing", c + 1));
            }
        }
    }
    Ok(())
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fillings = self.fillings();
        write!(f, "(")?;
        for (k, rows) in fillings.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            // top row first, rows separated by '/'
            let text: Vec<String> = rows
                .iter()
                .rev()
                .map(|r| {
                    r.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            write!(f, "[{}]", text.join(" / "))?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct MultiTableauJson {
    shape: MultiPartition,
    fillings: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

impl Serialize for MultiTableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        MultiTableauJson {
            shape: self.shape().clone(),
            fillings: self.fillings(),
            n: Some(self.alphabet()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiTableau {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MultiTableauJson::deserialize(deserializer)?;
        let max_letter = raw
            .fillings
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0);
        let n = raw.n.unwrap_or(max_letter).max(max_letter);
        let t = MultiTableau::from_fillings(&raw.fillings, n).map_err(D::Error::custom)?;
        if t.shape() != &raw.shape {
            return Err(D::Error::custom(format!(
                "fillings have shape {} but shape {} was given",
                t.shape(),
                raw.shape
            )));
        }
        Ok(t)
    }
}

/// All `beta` with `alpha ⊂ beta ⊂ bound` and `beta / alpha` a horizontal
/// strip, paired with the strip size.
pub(crate) fn horizontal_strips_between(
    alpha: &Partition,
    bound: &Partition,
) -> Vec<(usize, Partition)> {
    let rows = bound.len();
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    fn rec(
        i: usize,
        rows: usize,
        alpha: &Partition,
        bound: &Partition,
        added: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<(usize, Partition)>,
    ) {
        if i > rows {
            out.push((added, Partition::from_parts_unchecked(parts.clone())));
            return;
        }
        let lo = alpha.part(i);
        let hi = if i == 1 {
            bound.part(1)
        } else {
            bound.part(i).min(alpha.part(i - 1))
        };
        for v in (lo..=hi).rev() {
            parts.push(v);
            rec(i + 1, rows, alpha, bound, added + v - lo, parts, out);
            parts.pop();
        }
    }
    if bound.contains(alpha) {
        rec(1, rows, alpha, bound, 0, &mut parts, &mut out);
    }
    out
}

/// Visits every multitableau of shape `outer / inner` and the given weight,
/// in lexicographic order of the chosen multistrips.
pub fn for_each_multitableau<F: FnMut(&MultiTableau)>(
    inner: &MultiPartition,
    outer: &MultiPartition,
    weight: &[usize],
    mut visit: F,
) {
    if inner.len() != outer.len() || !outer.contains(inner) {
        return;
    }
    if outer.size() - inner.size() != weight.iter().sum::<usize>() {
        return;
    }
    let mut chain = vec![inner.clone()];
    multitableau_rec(outer, weight, &mut chain, &mut visit);
}

fn multitableau_rec<F: FnMut(&MultiTableau)>(
    outer: &MultiPartition,
    weight: &[usize],
    chain: &mut Vec<MultiPartition>,
    visit: &mut F,
) {
    let step = chain.len() - 1;
    if step == weight.len() {
        if chain.last() == Some(outer) {
            visit(&MultiTableau::from_chain_unchecked(chain.clone()));
        }
        return;
    }
    let current = chain.last().expect("nonempty").clone();
    let options: Vec<Vec<(usize, Partition)>> = current
        .components()
        .iter()
        .zip(outer.components())
        .map(|(a, b)| horizontal_strips_between(a, b))
        .collect();
    let mut picked = Vec::with_capacity(options.len());
    pick_multistrip(&options, 0, weight[step], &mut picked, &mut |next| {
        chain.push(next);
        multitableau_rec(outer, weight, chain, visit);
        chain.pop();
    });
}

fn pick_multistrip<F: FnMut(MultiPartition)>(
    options: &[Vec<(usize, Partition)>],
    pos: usize,
    remaining: usize,
    picked: &mut Vec<Partition>,
    emit: &mut F,
) {
    if pos == options.len() {
        if remaining == 0 {
            emit(MultiPartition::new(picked.clone()));
        }
        return;
    }
    for (added, p) in &options[pos] {
        if *added <= remaining {
            picked.push(p.clone());
            pick_multistrip(options, pos + 1, remaining - added, picked, emit);
            picked.pop();
        }
    }
}

/// `Tab^L(shape, weight)` for a straight shape.
pub fn enumerate_multitableaux(shape: &MultiPartition, weight: &[usize]) -> Vec<MultiTableau> {
    let mut out = Vec::new();
    for_each_multitableau(&MultiPartition::empty(shape.len()), shape, weight, |t| {
        out.push(t.clone())
    });
    out
}

/// Refines every multistrip into single cells added in `≼`-increasing order.
pub fn standardize(t: &MultiTableau) -> MultiTableau {
    let mut chain = vec![t.inner().clone()];
    for value in 1..=t.alphabet() {
        let mut cells = t.strip_cells(value);
        cells.sort_by(|a, b| a.cmp_standard(b));
        for cell in cells {
            let mut comps = chain.last().expect("nonempty").components().to_vec();
            comps[cell.pos] = comps[cell.pos]
                .add_cell(cell.row)
                .expect("strip cells add in order");
            chain.push(MultiPartition::new(comps));
        }
    }
    MultiTableau::from_chain_unchecked(chain)
}

/// The step at which `cell` enters a standard multitableau.
pub fn tableau_value(t: &MultiTableau, cell: MultiCell) -> Result<usize> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(
            "tableau_value needs a standard multitableau".into(),
        ));
    }
    if !t.shape().contains_cell(cell) || t.inner().contains_cell(cell) {
        return Err(Error::OutOfRange(format!(
            "cell (row {}, col {}, pos {}) is not in the shape",
            cell.row, cell.col, cell.pos
        )));
    }
    Ok(t.chain()
        .iter()
        .position(|m| m.contains_cell(cell))
        .expect("cell is in the outer shape"))
}

/// Value of each cell of a standard multitableau; `None` outside the
/// shape. Indexed `[pos][row-1][col-1]`.
struct Values(Vec<Vec<Vec<usize>>>);

impl Values {
    fn of(t: &MultiTableau) -> Self {
        Values(t.fillings())
    }

    fn get(&self, c: MultiCell) -> Option<usize> {
        self.0.get(c.pos)?.get(c.row - 1)?.get(c.col - 1).copied()
    }
}

/// Inversion count of the standardization of `t`.
pub fn inversions(t: &MultiTableau) -> usize {
    let st = if t.is_standard() {
        t.clone()
    } else {
        standardize(t)
    };
    let values = Values::of(&st);
    let cells: Vec<MultiCell> = st
        .shape()
        .cells()
        .filter(|c| !st.inner().contains_cell(*c))
        .collect();
    let mut count = 0;
    for s in &cells {
        let vs = values.get(*s).expect("in shape");
        for t in &cells {
            let adjacent = (s.diag() == t.diag() && s.pos < t.pos)
                || (s.diag() == t.diag() - 1 && s.pos > t.pos);
            if !adjacent || s.row > t.row {
                continue;
            }
            let vt = values.get(*t).expect("in shape");
            // a missing cell above t is unbounded
            let above_ok = match values.get(t.up()) {
                Some(v) => vs < v,
                None => true,
            };
            if vt < vs && above_ok {
                count += 1;
            }
        }
    }
    count
}

/// `sum q^{inv(T)}` over `Tab^L(shape, weight)`.
pub fn inv_generating_function(shape: &MultiPartition, weight: &[usize]) -> QPolynomial {
    let mut out = QPolynomial::zero();
    for_each_multitableau(&MultiPartition::empty(shape.len()), shape, weight, |t| {
        out.add_term(inversions(t), 1);
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(comps: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(comps.iter().map(|c| p(c)).collect())
    }

    /// The 3-multitableau obtained from the 3-ribbon tableau of shape
    /// (6,6,4,4,4,3), weight (2,2,3,2).
    fn three_multi() -> MultiTableau {
        MultiTableau::from_fillings(
            &[
                vec![vec![1], vec![2]],
                vec![vec![2, 3], vec![3, 4]],
                vec![vec![1, 3], vec![4]],
            ],
            4,
        )
        .unwrap()
    }

    #[test]
    fn fillings_round_trip() {
        let t = three_multi();
        assert_eq!(t.shape(), &mp(&[&[1, 1], &[2, 2], &[2, 1]]));
        assert_eq!(t.weight(), vec![2, 2, 3, 2]);
        assert_eq!(MultiTableau::from_fillings(&t.fillings(), 4).unwrap(), t);
    }

    #[test]
    fn rejects_non_semistandard_fillings() {
        assert!(MultiTableau::from_fillings(&[vec![vec![2, 1]]], 2).is_err());
        assert!(MultiTableau::from_fillings(&[vec![vec![1], vec![1]]], 2).is_err());
        assert!(MultiTableau::from_fillings(&[vec![vec![3]]], 2).is_err());
        assert!(MultiTableau::from_fillings(&[vec![vec![1], vec![2, 3]]], 3).is_err());
    }

    #[test]
    fn standardization_matches_worked_example() {
        let st = standardize(&three_multi());
        assert!(st.is_standard());
        assert_eq!(
            st.fillings(),
            vec![
                vec![vec![1], vec![3]],
                vec![vec![4, 6], vec![5, 9]],
                vec![vec![2, 7], vec![8]],
            ]
        );
        assert_eq!(standardize(&st), st);
        assert_eq!(tableau_value(&st, MultiCell::new(1, 1, 2)).unwrap(), 2);
        assert_eq!(tableau_value(&st, MultiCell::new(2, 1, 0)).unwrap(), 3);
        assert_eq!(tableau_value(&st, MultiCell::new(1, 1, 0)).unwrap(), 1);
        assert!(tableau_value(&st, MultiCell::new(3, 1, 0)).is_err());
        assert!(tableau_value(&three_multi(), MultiCell::new(1, 1, 0)).is_err());
    }

    #[test]
    fn single_row_standardizes_left_to_right() {
        let t = MultiTableau::from_fillings(&[vec![vec![1, 1]]], 1).unwrap();
        assert_eq!(standardize(&t).fillings(), vec![vec![vec![1, 2]]]);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&three_multi()), 1);
        let rc_sym = MultiTableau::from_fillings(
            &[vec![vec![2, 3]], vec![vec![1, 1]], vec![vec![1, 3, 4]]],
            4,
        )
        .unwrap();
        assert_eq!(inversions(&rc_sym), 3);
        let rc_anti = MultiTableau::from_fillings(
            &[
                vec![vec![3], vec![4]],
                vec![vec![2]],
                vec![vec![1], vec![3], vec![4]],
            ],
            4,
        )
        .unwrap();
        assert_eq!(inversions(&rc_anti), 2);
        let single = MultiTableau::from_fillings(&[vec![vec![1, 2, 2], vec![3, 3]]], 3).unwrap();
        assert_eq!(inversions(&single), 0);
    }

    #[test]
    fn enumeration_small_cases() {
        let one = enumerate_multitableaux(&mp(&[&[1]]), &[1]);
        assert_eq!(one.len(), 1);
        assert_eq!(
            inv_generating_function(&mp(&[&[1]]), &[1]),
            QPolynomial::one()
        );
        let ts = enumerate_multitableaux(&mp(&[&[2], &[2], &[3]]), &[3, 1, 2, 1]);
        let target = MultiTableau::from_fillings(
            &[vec![vec![2, 3]], vec![vec![1, 1]], vec![vec![1, 3, 4]]],
            4,
        )
        .unwrap();
        assert!(ts.contains(&target));
        // no duplicates
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ts.len());
        assert!(
            inv_generating_function(&mp(&[&[2], &[2], &[3]]), &[3, 1, 2, 1]).coeff(3) >= 1.into()
        );
    }

    #[test]
    fn json_form() {
        let t = MultiTableau::from_fillings(
            &[vec![vec![2, 3]], vec![vec![1, 1]], vec![vec![1, 3, 4]]],
            4,
        )
        .unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"{"shape":[[2],[2],[3]],"fillings":[[[2,3]],[[1,1]],[[1,3,4]]],"n":4}"#
        );
        let back: MultiTableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
        let bare: MultiTableau = serde_json::from_str(
            r#"{"shape":[[2],[2],[3]],"fillings":[[[2,3]],[[1,1]],[[1,3,4]]]}"#,
        )
        .unwrap();
        assert_eq!(bare, t);
        assert!(
            serde_json::from_str::<MultiTableau>(r#"{"shape":[[3]],"fillings":[[[1,2]]]}"#)
                .is_err()
        );
    }
}
