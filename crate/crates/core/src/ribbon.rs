//! `L`-ribbons, `L`-cores and quotients, ribbon tableaux with spin and
//! cospin, and the Stanton–White correspondence with multitableaux.
//!
//! Ribbon moves are done on beta-numbers: a partition with `N` parts
//! (padded with zeros) is the bead set `{lambda_k + N - k}`. Removing an
//! `L`-ribbon slides one bead from `x` to a free `x - L`; the ribbon's
//! height is one more than the number of beads strictly between.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use crate::qpoly::QPolynomial;
use crate::tableau::{MultiPartition, MultiTableau};

fn beads(p: &Partition, n: usize) -> Vec<usize> {
    debug_assert!(n >= p.len());
    (1..=n).map(|k| p.part(k) + n - k).collect()
}

fn from_beads(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let n = beads.len();
    Partition::from_parts_unchecked(
        beads
            .iter()
            .enumerate()
            .map(|(k, &x)| x + k + 1 - n)
            .collect(),
    )
}

/// A connected skew shape of `L` cells with no 2x2 square.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Ribbon {
    cells: Vec<Cell>,
    origin: Cell,
    height: usize,
}

impl Ribbon {
    /// Checks the ribbon conditions on an arbitrary skew shape.
    pub fn from_skew(shape: &SkewShape) -> Option<Ribbon> {
        let cells: Vec<Cell> = shape.cells().collect();
        if cells.is_empty() {
            return None;
        }
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let has = |r: usize, c: usize| r >= 1 && c >= 1 && set.contains(&Cell::new(r, c));
        if cells
            .iter()
            .any(|c| has(c.row + 1, c.col) && has(c.row, c.col + 1) && has(c.row + 1, c.col + 1))
        {
            return None;
        }
        // connectivity by flood fill
        let mut seen = BTreeSet::new();
        let mut stack = vec![cells[0]];
        while let Some(c) = stack.pop() {
            if !seen.insert(c) {
                continue;
            }
            for (dr, dc) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
                let (r, col) = (c.row as i64 + dr, c.col as i64 + dc);
                if r >= 1 && col >= 1 && has(r as usize, col as usize) {
                    stack.push(Cell::new(r as usize, col as usize));
                }
            }
        }
        if seen.len() != cells.len() {
            return None;
        }
        Some(Ribbon::from_cells(cells))
    }

    fn from_cells(mut cells: Vec<Cell>) -> Ribbon {
        cells.sort();
        let low = cells.iter().map(|c| c.row).min().expect("nonempty");
        let high = cells.iter().map(|c| c.row).max().expect("nonempty");
        let origin = *cells
            .iter()
            .filter(|c| c.row == low)
            .max_by_key(|c| c.col)
            .expect("nonempty");
        Ribbon {
            cells,
            origin,
            height: high - low + 1,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The rightmost and lowermost cell.
    pub fn origin(&self) -> Cell {
        self.origin
    }

    /// Number of rows occupied.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn spin(&self) -> usize {
        self.height - 1
    }
}

fn ribbon_between(outer: &Partition, inner: &Partition) -> Ribbon {
    let cells = SkewShape::new(outer.clone(), inner.clone())
        .expect("cover relation implies containment")
        .cells()
        .collect();
    Ribbon::from_cells(cells)
}

/// All `nu` with `nu ⋖_L mu`, together with the removed ribbon.
pub fn ribbon_covers(mu: &Partition, l: usize) -> Vec<(Partition, Ribbon)> {
    assert!(l >= 1, "ribbon length must be positive");
    let n = mu.len();
    let set = beads(mu, n);
    let occupied: BTreeSet<usize> = set.iter().copied().collect();
    let mut out = Vec::new();
    for (k, &x) in set.iter().enumerate() {
        if x < l || occupied.contains(&(x - l)) {
            continue;
        }
        let mut next = set.clone();
        next[k] = x - l;
        let nu = from_beads(next);
        let ribbon = ribbon_between(mu, &nu);
        debug_assert_eq!(ribbon.height(), 1 + occupied.range(x - l + 1..x).count());
        out.push((nu, ribbon));
    }
    out
}

/// All `beta` with `alpha ⋖_L beta ⊂ bound`, with the added ribbon.
pub fn ribbon_additions(
    alpha: &Partition,
    bound: &Partition,
    l: usize,
) -> Vec<(Partition, Ribbon)> {
    assert!(l >= 1, "ribbon length must be positive");
    let n = bound.len().max(alpha.len());
    let set = beads(alpha, n);
    let occupied: BTreeSet<usize> = set.iter().copied().collect();
    let mut out = Vec::new();
    for (k, &x) in set.iter().enumerate() {
        if occupied.contains(&(x + l)) {
            continue;
        }
        let mut next = set.clone();
        next[k] = x + l;
        let beta = from_beads(next);
        if bound.contains(&beta) {
            let ribbon = ribbon_between(&beta, alpha);
            out.push((beta, ribbon));
        }
    }
    out
}

pub fn is_core(lambda: &Partition, l: usize) -> bool {
    ribbon_covers(lambda, l).is_empty()
}

/// The `L`-core: slide every bead down its runner of the `L`-abacus.
pub fn core(lambda: &Partition, l: usize) -> Partition {
    assert!(l >= 1, "ribbon length must be positive");
    let n = lambda.len();
    let mut counts = vec![0usize; l];
    for x in beads(lambda, n) {
        counts[x % l] += 1;
    }
    let settled = (0..l)
        .flat_map(|r| (0..counts[r]).map(move |j| r + j * l))
        .collect();
    from_beads(settled)
}

/// Littlewood `L`-quotient with staircase normalization: pad to `mL`
/// parts, add `(mL-1, ..., 1, 0)`, and read residue class `i` as
/// `L (lambda^i + rho^(m)) + i`.
pub fn quot(lambda: &Partition, l: usize) -> Result<MultiPartition> {
    quot_padded(lambda, l, lambda.len().div_ceil(l))
}

/// [`quot`] computed with an explicit number `m` of parts per residue.
pub fn quot_padded(lambda: &Partition, l: usize, m: usize) -> Result<MultiPartition> {
    assert!(l >= 1, "ribbon length must be positive");
    if m * l < lambda.len() {
        return Err(Error::InvalidInput(format!(
            "{m} parts per residue cannot hold the {} parts of {lambda}",
            lambda.len()
        )));
    }
    let set = beads(lambda, m * l);
    let mut by_residue: Vec<Vec<usize>> = vec![Vec::new(); l];
    for &x in &set {
        by_residue[x % l].push(x);
    }
    if by_residue.iter().any(|r| r.len() != m) {
        return Err(Error::NonEmptyCore {
            partition: lambda.clone(),
            l,
            core: core(lambda, l),
        });
    }
    let components = by_residue
        .into_iter()
        .enumerate()
        .map(|(i, xs)| {
            // xs is decreasing since the bead list is
            let parts = xs
                .iter()
                .enumerate()
                .map(|(j, &x)| (x - i) / l - (m - 1 - j))
                .collect();
            Partition::from_parts_unchecked(parts)
        })
        .collect();
    Ok(MultiPartition::new(components))
}

/// The unique partition with empty `L`-core whose quotient is `q`.
pub fn quot_inverse(q: &MultiPartition, l: usize) -> Result<Partition> {
    if q.len() != l {
        return Err(Error::InvalidShape(format!(
            "a {l}-quotient needs {l} components, got {}",
            q.len()
        )));
    }
    let m = q.components().iter().map(Partition::len).max().unwrap_or(0);
    let mut set = Vec::with_capacity(m * l);
    for (i, comp) in q.components().iter().enumerate() {
        for j in 1..=m {
            set.push(l * (comp.part(j) + m - j) + i);
        }
    }
    Ok(from_beads(set))
}

/// The saturated `⋖_L` chain from `shape.inner` to `shape.outer` whose
/// ribbon origins are lowermost in their columns of the skew shape and
/// move strictly left to right; `None` if `shape` is not a horizontal
/// ribbon strip.
pub fn horizontal_ribbon_strip_chain(shape: &SkewShape, l: usize) -> Option<Vec<Partition>> {
    if !shape.size().is_multiple_of(l) {
        return None;
    }
    fn dfs(
        current: &Partition,
        shape: &SkewShape,
        l: usize,
        last_col: usize,
        path: &mut Vec<Partition>,
    ) -> bool {
        if current == shape.outer() {
            return true;
        }
        for (beta, ribbon) in ribbon_additions(current, shape.outer(), l) {
            if !origin_allowed(&ribbon, shape.inner(), last_col) {
                continue;
            }
            path.push(beta.clone());
            if dfs(&beta, shape, l, ribbon.origin().col, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![shape.inner().clone()];
    dfs(shape.inner(), shape, l, 0, &mut path).then_some(path)
}

fn origin_allowed(ribbon: &Ribbon, strip_inner: &Partition, last_col: usize) -> bool {
    let o = ribbon.origin();
    o.col > last_col && (o.row == 1 || strip_inner.contains_cell(Cell::new(o.row - 1, o.col)))
}

/// Every `beta ⊂ bound` such that `beta / alpha` is a horizontal ribbon
/// strip of `weight` ribbons.
pub fn horizontal_ribbon_strips_from(
    alpha: &Partition,
    bound: &Partition,
    weight: usize,
    l: usize,
) -> Vec<Partition> {
    fn dfs(
        current: &Partition,
        alpha: &Partition,
        bound: &Partition,
        remaining: usize,
        l: usize,
        last_col: usize,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let mut adds = ribbon_additions(current, bound, l);
        adds.sort_by_key(|(_, r)| r.origin().col);
        for (beta, ribbon) in adds {
            if origin_allowed(&ribbon, alpha, last_col) {
                dfs(
                    &beta,
                    alpha,
                    bound,
                    remaining - 1,
                    l,
                    ribbon.origin().col,
                    out,
                );
            }
        }
    }
    let mut out = Vec::new();
    dfs(alpha, alpha, bound, weight, l, 0, &mut out);
    out
}

/// A chain `alpha^0 ≤_L ... ≤_L alpha^n` whose steps are horizontal
/// `L`-ribbon strips.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonTableau {
    l: usize,
    chain: Vec<Partition>,
}

impl RibbonTableau {
    pub fn new(l: usize, chain: Vec<Partition>) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidInput("ribbon length must be positive".into()));
        }
        if chain.is_empty() {
            return Err(Error::InvalidTableau("empty chain".into()));
        }
        for (i, w) in chain.windows(2).enumerate() {
            let strip = SkewShape::new(w[1].clone(), w[0].clone())
                .map_err(|e| Error::InvalidTableau(format!("step {}: {e}", i + 1)))?;
            if horizontal_ribbon_strip_chain(&strip, l).is_none() {
                return Err(Error::InvalidTableau(format!(
                    "step {}: {strip} is not a horizontal {l}-ribbon strip",
                    i + 1
                )));
            }
        }
        Ok(RibbonTableau { l, chain })
    }

    pub(crate) fn from_chain_unchecked(l: usize, chain: Vec<Partition>) -> Self {
        RibbonTableau { l, chain }
    }

    pub fn ribbon_length(&self) -> usize {
        self.l
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(
            self.chain.last().expect("nonempty").clone(),
            self.chain[0].clone(),
        )
        .expect("chain is increasing")
    }

    pub fn weight(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| (w[1].size() - w[0].size()) / self.l)
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        self.weight().iter().all(|&w| w == 1)
    }

    /// The step that adds `cell`; `Some(0)` for cells of the inner shape.
    pub fn value_at(&self, cell: Cell) -> Option<usize> {
        self.chain.iter().position(|p| p.contains_cell(cell))
    }

    /// Canonical ribbon decomposition of every step.
    pub fn strips(&self) -> Vec<Vec<Ribbon>> {
        self.chain
            .windows(2)
            .map(|w| {
                let strip = SkewShape::new(w[1].clone(), w[0].clone()).expect("increasing");
                let sub = horizontal_ribbon_strip_chain(&strip, self.l).expect("validated strip");
                sub.windows(2)
                    .map(|s| ribbon_between(&s[1], &s[0]))
                    .collect()
            })
            .collect()
    }

    pub fn spin(&self) -> usize {
        self.strips().iter().flatten().map(Ribbon::spin).sum()
    }

    pub fn cospin(&self) -> Result<usize> {
        let max = maxspin(&self.shape(), self.l)?;
        cospin_from(max, self.spin())
    }

    /// Box drawing in French convention (row 1 at the bottom) with each
    /// ribbon's label in its origin cell.
    pub fn render_ascii(&self) -> String {
        let shape = self.shape();
        let mut owner: HashMap<Cell, usize> = HashMap::new();
        let mut labels: HashMap<Cell, usize> = HashMap::new();
        let mut id = 0;
        for (step, ribbons) in self.strips().iter().enumerate() {
            for r in ribbons {
                id += 1;
                for &c in r.cells() {
                    owner.insert(c, id);
                }
                labels.insert(r.origin(), step + 1);
            }
        }
        for c in shape.inner().cells() {
            owner.insert(c, 0);
        }
        render_grid(shape.outer(), &owner, |c| {
            if shape.inner().contains_cell(c) {
                Some("#".to_string())
            } else {
                labels.get(&c).map(|v| v.to_string())
            }
        })
    }
}

fn cospin_from(max: usize, spin: usize) -> Result<usize> {
    if spin > max || !(max - spin).is_multiple_of(2) {
        return Err(Error::InvalidTableau(format!(
            "spin {spin} is incompatible with maxspin {max}"
        )));
    }
    Ok((max - spin) / 2)
}

pub(crate) fn render_grid(
    outer: &Partition,
    owner: &HashMap<Cell, usize>,
    label: impl Fn(Cell) -> Option<String>,
) -> String {
    let rows = outer.len();
    let cols = outer.part(1).max(1);
    let get = |r: usize, c: usize| -> Option<usize> {
        if r == 0 || c == 0 {
            return None;
        }
        owner.get(&Cell::new(r, c)).copied()
    };
    let mut out = String::new();
    let border = |out: &mut String, upper: usize, lower: usize| {
        let mut line = String::new();
        for c in 1..=cols + 1 {
            let around = [
                get(upper, c - 1),
                get(upper, c),
                get(lower, c - 1),
                get(lower, c),
            ];
            line.push(if around.iter().any(Option::is_some) {
                '+'
            } else {
                ' '
            });
            if c <= cols {
                let (a, b) = (get(upper, c), get(lower, c));
                let wall = (a.is_some() || b.is_some()) && a != b;
                line.push_str(if wall { "---" } else { "   " });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    for r in (1..=rows).rev() {
        border(&mut out, r + 1, r);
        let mut line = String::new();
        for c in 1..=cols + 1 {
            let (a, b) = (get(r, c - 1), get(r, c));
            line.push(if (a.is_some() || b.is_some()) && a != b {
                '|'
            } else {
                ' '
            });
            if c <= cols {
                match b {
                    Some(_) => {
                        let text = label(Cell::new(r, c)).unwrap_or_default();
                        let _ = write!(line, "{text:^3}");
                    }
                    None => line.push_str("   "),
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    border(&mut out, 1, 0);
    out
}

/// `Tab_L(shape, weight)`.
pub fn enumerate_ribbon_tableaux(
    shape: &SkewShape,
    weight: &[usize],
    l: usize,
) -> Vec<RibbonTableau> {
    let mut out = Vec::new();
    for_each_ribbon_tableau(shape, weight, l, |t| out.push(t.clone()));
    out
}

pub fn for_each_ribbon_tableau<F: FnMut(&RibbonTableau)>(
    shape: &SkewShape,
    weight: &[usize],
    l: usize,
    mut visit: F,
) {
    assert!(l >= 1, "ribbon length must be positive");
    if shape.size() != l * weight.iter().sum::<usize>() {
        return;
    }
    fn rec<F: FnMut(&RibbonTableau)>(
        shape: &SkewShape,
        weight: &[usize],
        l: usize,
        chain: &mut Vec<Partition>,
        visit: &mut F,
    ) {
        let step = chain.len() - 1;
        let current = chain.last().expect("nonempty").clone();
        if step == weight.len() {
            if &current == shape.outer() {
                visit(&RibbonTableau::from_chain_unchecked(l, chain.clone()));
            }
            return;
        }
        for next in horizontal_ribbon_strips_from(&current, shape.outer(), weight[step], l) {
            chain.push(next);
            rec(shape, weight, l, chain, visit);
            chain.pop();
        }
    }
    let mut chain = vec![shape.inner().clone()];
    rec(shape, weight, l, &mut chain, &mut visit);
}

/// Largest spin over all standard ribbon tableaux of the shape.
pub fn maxspin(shape: &SkewShape, l: usize) -> Result<usize> {
    fn best(
        alpha: &Partition,
        outer: &Partition,
        l: usize,
        memo: &mut HashMap<Partition, Option<usize>>,
    ) -> Option<usize> {
        if alpha == outer {
            return Some(0);
        }
        if let Some(v) = memo.get(alpha) {
            return *v;
        }
        let v = ribbon_additions(alpha, outer, l)
            .into_iter()
            .filter_map(|(beta, r)| best(&beta, outer, l, memo).map(|s| s + r.spin()))
            .max();
        memo.insert(alpha.clone(), v);
        v
    }
    if l == 0 || !shape.size().is_multiple_of(l) {
        return Err(Error::NoRibbonTableaux(format!(
            "{shape} with ribbon length {l}"
        )));
    }
    let mut memo = HashMap::new();
    best(shape.inner(), shape.outer(), l, &mut memo)
        .ok_or_else(|| Error::NoRibbonTableaux(format!("{shape} with ribbon length {l}")))
}

/// `R_L(shape, weight) = sum q^{spin(T)}`.
pub fn spin_gf(shape: &SkewShape, weight: &[usize], l: usize) -> QPolynomial {
    let mut out = QPolynomial::zero();
    for_each_ribbon_tableau(shape, weight, l, |t| out.add_term(t.spin(), 1));
    out
}

/// `sum q^{cospin(T)}`; zero when the shape has no ribbon tableaux.
pub fn cospin_gf(shape: &SkewShape, weight: &[usize], l: usize) -> Result<QPolynomial> {
    let Ok(max) = maxspin(shape, l) else {
        return Ok(QPolynomial::zero());
    };
    let mut out = QPolynomial::zero();
    let mut failure = None;
    for_each_ribbon_tableau(shape, weight, l, |t| match cospin_from(max, t.spin()) {
        Ok(c) => out.add_term(c, 1),
        Err(e) => failure = Some(e),
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Joins the saturated chains of all strips.
pub fn standardize_ribbon(t: &RibbonTableau) -> RibbonTableau {
    let mut chain = vec![t.chain[0].clone()];
    for w in t.chain.windows(2) {
        let strip = SkewShape::new(w[1].clone(), w[0].clone()).expect("increasing");
        let sub = horizontal_ribbon_strip_chain(&strip, t.l).expect("validated strip");
        chain.extend(sub.into_iter().skip(1));
    }
    RibbonTableau::from_chain_unchecked(t.l, chain)
}

/// Applies the `L`-quotient to every partition of the chain.
pub fn stanton_white(t: &RibbonTableau) -> Result<MultiTableau> {
    let chain = t
        .chain
        .iter()
        .map(|p| quot(p, t.l))
        .collect::<Result<Vec<_>>>()?;
    MultiTableau::new(chain)
}

pub fn stanton_white_inverse(t: &MultiTableau, l: usize) -> Result<RibbonTableau> {
    if t.num_components() != l {
        return Err(Error::InvalidShape(format!(
            "expected {l} components, got {}",
            t.num_components()
        )));
    }
    let chain = t
        .chain()
        .iter()
        .map(|m| quot_inverse(m, l))
        .collect::<Result<Vec<_>>>()?;
    RibbonTableau::new(l, chain)
}

#[derive(Serialize, Deserialize)]
struct RibbonTableauJson {
    #[serde(rename = "L")]
    l: usize,
    shape: Partition,
    chain: Vec<Partition>,
}

impl Serialize for RibbonTableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RibbonTableauJson {
            l: self.l,
            shape: self.shape().outer().clone(),
            chain: self.chain.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RibbonTableau {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RibbonTableauJson::deserialize(deserializer)?;
        if raw.chain.last() != Some(&raw.shape) {
            return Err(D::Error::custom("chain must end at the shape"));
        }
        RibbonTableau::new(raw.l, raw.chain).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example_tableau() -> RibbonTableau {
        RibbonTableau::new(
            3,
            vec![
                Partition::empty(),
                p(&[3, 2, 1]),
                p(&[3, 3, 3, 1, 1, 1]),
                p(&[6, 6, 3, 2, 2, 2]),
                p(&[6, 6, 4, 4, 4, 3]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn covers_examples() {
        let c = ribbon_covers(&p(&[3]), 3);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].0.clone(), c[0].1.spin()), (Partition::empty(), 0));
        let c = ribbon_covers(&p(&[1, 1, 1]), 3);
        assert_eq!((c[0].0.clone(), c[0].1.spin()), (Partition::empty(), 2));
        let c = ribbon_covers(&p(&[2, 2]), 3);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].0, p(&[1]));
        assert_eq!(c[0].1.spin(), 1);
        assert_eq!(c[0].1.origin(), Cell::new(1, 2));
    }

    #[test]
    fn cores() {
        assert!(is_core(&Partition::empty(), 3));
        assert!(is_core(&p(&[1]), 2));
        assert!(!is_core(&p(&[6, 6, 4, 4, 4, 3]), 3));
        assert_eq!(core(&p(&[2, 1, 1]), 2), Partition::empty());
        assert_eq!(core(&p(&[3, 1, 1]), 2), p(&[1]));
        assert_eq!(core(&p(&[2, 1]), 2), p(&[2, 1]));
        assert_eq!(core(&p(&[6, 6, 4, 4, 4, 3]), 3), Partition::empty());
    }

    #[test]
    fn quotient_examples() {
        let q = quot(&p(&[6, 6, 4, 4, 4, 3]), 3).unwrap();
        assert_eq!(
            q,
            MultiPartition::new(vec![p(&[1, 1]), p(&[2, 2]), p(&[2, 1])])
        );
        assert_eq!(quot_padded(&p(&[6, 6, 4, 4, 4, 3]), 3, 4).unwrap(), q);
        assert_eq!(
            quot(&Partition::empty(), 3).unwrap(),
            MultiPartition::empty(3)
        );
        // (2,1,1) loses a vertical domino to (2), then (2) to the empty core
        assert_eq!(
            quot(&p(&[2, 1, 1]), 2).unwrap(),
            MultiPartition::new(vec![Partition::empty(), p(&[1, 1])])
        );
        assert_eq!(
            quot(&p(&[3, 1, 1]), 2),
            Err(Error::NonEmptyCore {
                partition: p(&[3, 1, 1]),
                l: 2,
                core: p(&[1])
            })
        );
        assert_eq!(quot_inverse(&q, 3).unwrap(), p(&[6, 6, 4, 4, 4, 3]));
        assert_eq!(
            quot_inverse(&MultiPartition::empty(2), 2).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn quotient_inverse_of_two_single_cells() {
        // oracle: the only partition of 4 with empty 2-core and quotient ((1),(1))
        let target = MultiPartition::new(vec![p(&[1]), p(&[1])]);
        let found: Vec<Partition> = crate::partition::partitions_of(4)
            .into_iter()
            .filter(|lam| quot(lam, 2).ok().as_ref() == Some(&target))
            .collect();
        assert_eq!(found.len(), 1);
        assert_eq!(quot_inverse(&target, 2).unwrap(), found[0]);
    }

    #[test]
    fn strip_chains() {
        let single = SkewShape::straight(p(&[3]));
        assert_eq!(
            horizontal_ribbon_strip_chain(&single, 3),
            Some(vec![Partition::empty(), p(&[3])])
        );
        let column = SkewShape::straight(p(&[1, 1, 1]));
        assert!(horizontal_ribbon_strip_chain(&column, 3).is_some());
        // the strip of 4s: two ribbons, the vertical one in column 3 first
        let step = SkewShape::new(p(&[6, 6, 4, 4, 4, 3]), p(&[6, 6, 3, 2, 2, 2])).unwrap();
        let chain = horizontal_ribbon_strip_chain(&step, 3).unwrap();
        assert_eq!(
            chain,
            vec![
                p(&[6, 6, 3, 2, 2, 2]),
                p(&[6, 6, 3, 3, 3, 3]),
                p(&[6, 6, 4, 4, 4, 3])
            ]
        );
        // two vertical dominoes side by side are a strip, stacked ones are not
        assert!(horizontal_ribbon_strip_chain(&SkewShape::straight(p(&[2, 2])), 2).is_some());
        assert!(horizontal_ribbon_strip_chain(&SkewShape::straight(p(&[1, 1, 1, 1])), 2).is_none());
    }

    #[test]
    fn worked_ribbon_example() {
        let t = example_tableau();
        assert_eq!(t.weight(), vec![2, 2, 3, 2]);
        assert_eq!(t.spin(), 14);
        assert_eq!(maxspin(&t.shape(), 3).unwrap(), 16);
        assert_eq!(t.cospin().unwrap(), 1);
        let st = standardize_ribbon(&t);
        assert!(st.is_standard());
        assert_eq!(st.spin(), 14);
        assert_eq!(standardize_ribbon(&st), st);
        let all = enumerate_ribbon_tableaux(&t.shape(), &[2, 2, 3, 2], 3);
        assert!(all.contains(&t));
        assert!(spin_gf(&t.shape(), &[2, 2, 3, 2], 3).coeff(14) >= 1.into());
    }

    #[test]
    fn trivial_enumerations() {
        let one = enumerate_ribbon_tableaux(&SkewShape::straight(p(&[4])), &[1], 4);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].spin(), 0);
        assert_eq!(
            spin_gf(&SkewShape::straight(p(&[4])), &[1], 4),
            QPolynomial::one()
        );
        assert!(enumerate_ribbon_tableaux(&SkewShape::straight(p(&[4])), &[1], 3).is_empty());
        assert!(maxspin(&SkewShape::straight(p(&[2, 1])), 2).is_err());
    }

    #[test]
    fn stanton_white_on_example() {
        let t = example_tableau();
        let m = stanton_white(&t).unwrap();
        assert_eq!(
            m.fillings(),
            vec![
                vec![vec![1], vec![2]],
                vec![vec![2, 3], vec![3, 4]],
                vec![vec![1, 3], vec![4]],
            ]
        );
        assert_eq!(stanton_white_inverse(&m, 3).unwrap(), t);
        assert!(stanton_white_inverse(&m, 2).is_err());
    }

    #[test]
    fn ribbon_check() {
        let hook = SkewShape::straight(p(&[2, 1]));
        assert!(Ribbon::from_skew(&hook).is_some());
        let square = SkewShape::straight(p(&[2, 2]));
        assert!(Ribbon::from_skew(&square).is_none());
        let apart = SkewShape::new(p(&[3, 1]), p(&[2])).unwrap();
        assert!(Ribbon::from_skew(&apart).is_none());
    }

    #[test]
    fn json_and_render() {
        let t = example_tableau();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.starts_with(r#"{"L":3,"shape":[6,6,4,4,4,3],"chain":[[],[3,2,1]"#));
        let back: RibbonTableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
        let art = t.render_ascii();
        assert_eq!(art.lines().count(), 13);
        assert!(art.lines().next().unwrap().starts_with("+---+---+---+"));
    }
}
