//! The statistic-preserving bijections from single-row multitableaux to
//! rigged configurations (`psi`) and from single-column multitableaux to
//! antisymmetric rigged configurations (`psi_prime`), with inverses,
//! step traces and a per-step check of the inversion increments.
//!
//! Letters are added component by component, `k = L-1` down to `0`,
//! each component from its first (smallest) letter on. During the
//! construction quantum numbers are kept uninverted; the final pass
//! replaces every label `j` by `p - j`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rigged::{render_rigged, Configuration, Mode, RiggedConfiguration};
use crate::tableau::{inversions, MultiTableau};

/// Scratch state: `nu[a]` for `0 <= a <= n` as row lengths and
/// uninverted labels `labels[a][i-1]`.
#[derive(Debug, Clone)]
struct State {
    n: usize,
    nu: Vec<Vec<usize>>,
    labels: Vec<Vec<Vec<usize>>>,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            n,
            nu: vec![Vec::new(); n + 1],
            labels: vec![Vec::new(); n + 1],
        }
    }

    fn from_rc(rc: &RiggedConfiguration) -> Self {
        let config = rc.config();
        let n = config.n();
        let mut state = State::new(n);
        for a in 0..=n {
            state.nu[a] = config.nu(a).parts().to_vec();
        }
        for a in 1..n {
            for i in 1..=config.rows() {
                let p = state.vac(a, i);
                for &j in rc.labels(a, i) {
                    state.labels_mut(a, i).push(p - j);
                }
            }
        }
        state
    }

    fn row(&self, a: usize, i: usize) -> usize {
        self.nu[a].get(i - 1).copied().unwrap_or(0)
    }

    fn vac(&self, a: usize, i: usize) -> usize {
        self.row(a + 1, i)
            .checked_sub(self.row(a, i))
            .expect("nu^(a) stays inside nu^(a+1)")
    }

    fn labels(&self, a: usize, i: usize) -> &[usize] {
        self.labels[a].get(i - 1).map_or(&[], Vec::as_slice)
    }

    fn labels_mut(&mut self, a: usize, i: usize) -> &mut Vec<usize> {
        let rows = &mut self.labels[a];
        if rows.len() < i {
            rows.resize(i, Vec::new());
        }
        &mut rows[i - 1]
    }

    fn add_box(&mut self, a: usize, i: usize) -> Result<()> {
        if i > 1 && self.row(a, i - 1) <= self.row(a, i) {
            return Err(Error::Bijection(format!(
                "adding a box to row {i} of nu^({a}) breaks the partition shape"
            )));
        }
        let rows = &mut self.nu[a];
        if rows.len() < i {
            rows.push(0);
        }
        rows[i - 1] += 1;
        Ok(())
    }

    fn remove_box(&mut self, a: usize, i: usize) -> Result<()> {
        if self.row(a, i) == 0 || self.row(a, i) <= self.row(a, i + 1) {
            return Err(Error::Bijection(format!(
                "row {i} of nu^({a}) has no removable box"
            )));
        }
        let rows = &mut self.nu[a];
        rows[i - 1] -= 1;
        if rows[i - 1] == 0 {
            rows.pop();
        }
        Ok(())
    }

    fn has_singular(&self, a: usize, i: usize) -> bool {
        let p = self.vac(a, i);
        self.labels(a, i).contains(&p)
    }

    fn take_singular(&mut self, a: usize, i: usize) -> Result<()> {
        let p = self.vac(a, i);
        let row = self.labels_mut(a, i);
        match row.iter().position(|&j| j == p) {
            Some(pos) => {
                row.swap_remove(pos);
                Ok(())
            }
            None => Err(Error::Bijection(format!(
                "no singular label in row {i} of nu^({a})"
            ))),
        }
    }

    fn push_singular(&mut self, a: usize, i: usize) {
        let p = self.vac(a, i);
        self.labels_mut(a, i).push(p);
    }

    /// `c~` (or `c~'`) of the configuration obtained by inverting now.
    fn inverted_statistic(&self, mode: Mode) -> usize {
        let n = self.n;
        let mut total = 0;
        for a in 1..n {
            for (i0, row) in self.labels[a].iter().enumerate() {
                let p = self.vac(a, i0 + 1);
                total += row.iter().map(|&j| p - j).sum::<usize>();
            }
            if mode == Mode::Symmetric {
                for i in 1..=self.nu[a + 1].len() {
                    total += self.row(a, i + 1) * self.vac(a, i);
                }
            }
        }
        total
    }

    fn is_empty(&self) -> bool {
        self.nu.iter().all(Vec::is_empty) && self.labels.iter().flatten().all(Vec::is_empty)
    }

    fn snapshot(&self) -> Snapshot {
        let mut labels = Vec::with_capacity(self.n.saturating_sub(1));
        for a in 1..self.n {
            let rows = self.nu[a].len();
            labels.push(
                (1..=rows)
                    .map(|i| {
                        let mut row = self.labels(a, i).to_vec();
                        row.sort_unstable_by(|x, y| y.cmp(x));
                        row
                    })
                    .collect(),
            );
        }
        Snapshot {
            nu: self.nu[1..]
                .iter()
                .map(|r| Partition::from_parts_unchecked(r.clone()))
                .collect(),
            labels,
        }
    }

    fn forward_step(&mut self, mode: Mode, t: usize, i: usize) -> Result<()> {
        let n = self.n;
        for a in t..=n {
            self.add_box(a, i)?;
        }
        match mode {
            Mode::Symmetric => {
                for a in t..n {
                    if i > 1 {
                        self.take_singular(a, i - 1)?;
                    }
                    self.push_singular(a, i);
                }
            }
            Mode::Antisymmetric => {
                for a in t..n {
                    self.push_singular(a, i);
                }
                if i > 1 {
                    for a in t.saturating_sub(1).max(1)..n {
                        self.take_singular(a, i - 1)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Undoes the step that added the last letter in row `i`, returning it.
    fn backward_step(&mut self, mode: Mode, i: usize) -> Result<usize> {
        let n = self.n;
        let mut t = n;
        while t > 1 && self.has_singular(t - 1, i) {
            t -= 1;
        }
        for a in t..n {
            self.take_singular(a, i)?;
        }
        for a in t..=n {
            self.remove_box(a, i)?;
        }
        if i > 1 {
            let from = match mode {
                Mode::Symmetric => t,
                Mode::Antisymmetric => t.saturating_sub(1).max(1),
            };
            for a in from..n {
                self.push_singular(a, i - 1);
            }
        }
        Ok(t)
    }

    fn into_rigged(
        self,
        mode: Mode,
        lambda: Vec<usize>,
        mu: Partition,
    ) -> Result<RiggedConfiguration> {
        let n = self.n;
        let rows = mu.part(1);
        let mut riggings = vec![vec![Vec::new(); rows]; n - 1];
        for a in 1..n {
            for i in 1..=rows {
                let p = self.vac(a, i);
                riggings[a - 1][i - 1] = self.labels(a, i).iter().map(|&j| p - j).collect();
            }
        }
        let nu = (1..n)
            .map(|a| Partition::from_parts_unchecked(self.nu[a].clone()))
            .collect();
        let config = Configuration::new(mode, lambda, mu, nu)
            .map_err(|e| Error::Bijection(format!("final configuration is not admissible: {e}")))?;
        RiggedConfiguration::new(config, riggings)
            .map_err(|e| Error::Bijection(format!("final rigging is not admissible: {e}")))
    }
}

/// The configuration after one letter, before quantum numbers are
/// inverted: `nu^(1), ..., nu^(n)` and the labels of `nu^(1..n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub nu: Vec<Partition>,
    pub labels: Vec<Vec<Vec<usize>>>,
}

impl Snapshot {
    pub fn render_ascii(&self) -> String {
        let n = self.nu.len();
        let inner: Vec<&Partition> = self.nu[..n.saturating_sub(1)].iter().collect();
        let vac = |a: usize, i: usize| self.nu[a].part(i) - self.nu[a - 1].part(i);
        let mut out = render_rigged(
            &inner,
            |a, i| self.labels[a - 1].get(i - 1).map_or(&[][..], |v| v),
            vac,
        );
        if let Some(top) = self.nu.last() {
            let _ = writeln!(out, "nu({n}) = {top}");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub letter: usize,
    /// 1-based, like `position`.
    pub component: usize,
    pub position: usize,
    /// Forward: letters inserted so far. Backward: letters recovered so far
    /// (a suffix of the current component).
    pub words: Vec<Vec<usize>>,
    pub state: Snapshot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    pub mode: Mode,
    pub direction: Direction,
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for (s, step) in self.steps.iter().enumerate() {
            let words: Vec<String> = step
                .words
                .iter()
                .map(|w| w.iter().map(usize::to_string).collect::<String>())
                .collect();
            let _ = writeln!(
                out,
                "stage {}: letter {} at position {} of component {}   T = ({})",
                s + 1,
                step.letter,
                step.position,
                step.component,
                words.join(", ")
            );
            out.push_str(&step.state.render_ascii());
            out.push('\n');
        }
        out
    }
}

/// Component words of a single-row (symmetric) or single-column
/// (antisymmetric) multitableau, smallest letter first.
pub fn component_words(t: &MultiTableau, mode: Mode) -> Result<Vec<Vec<usize>>> {
    let fillings = t.fillings();
    let mut words = Vec::with_capacity(fillings.len());
    for (k, (comp, shape)) in fillings.iter().zip(t.shape().components()).enumerate() {
        if !t.inner().components()[k].is_empty() {
            return Err(Error::InvalidShape(format!("component {} is skew", k + 1)));
        }
        let word = match mode {
            Mode::Symmetric => {
                if shape.len() > 1 {
                    return Err(Error::InvalidShape(format!(
                        "component {} ({shape}) is not a single row",
                        k + 1
                    )));
                }
                comp.first().cloned().unwrap_or_default()
            }
            Mode::Antisymmetric => {
                if shape.parts().iter().any(|&x| x != 1) {
                    return Err(Error::InvalidShape(format!(
                        "component {} ({shape}) is not a single column",
                        k + 1
                    )));
                }
                comp.iter().map(|row| row[0]).collect()
            }
        };
        words.push(word);
    }
    Ok(words)
}

/// Inverse of [`component_words`].
pub fn tableau_from_words(words: &[Vec<usize>], n: usize, mode: Mode) -> Result<MultiTableau> {
    let fillings: Vec<Vec<Vec<usize>>> = words
        .iter()
        .map(|w| match mode {
            Mode::Symmetric if w.is_empty() => Vec::new(),
            Mode::Symmetric => vec![w.clone()],
            Mode::Antisymmetric => w.iter().map(|&x| vec![x]).collect(),
        })
        .collect();
    MultiTableau::from_fillings(&fillings, n)
}

fn partition_of_sizes(sizes: &[usize]) -> Partition {
    Partition::from_unsorted(sizes.to_vec())
}

struct Forward {
    rc: RiggedConfiguration,
    steps: Vec<TraceStep>,
}

fn run_forward(t: &MultiTableau, mode: Mode, record: bool) -> Result<Forward> {
    let words = component_words(t, mode)?;
    let n = t.alphabet().max(1);
    let mut lambda = t.weight();
    lambda.resize(n, 0);
    let mu = partition_of_sizes(&words.iter().map(Vec::len).collect::<Vec<_>>());
    let mut state = State::new(n);
    let mut steps = Vec::new();
    let mut built: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for k in (0..words.len()).rev() {
        for (i0, &letter) in words[k].iter().enumerate() {
            state.forward_step(mode, letter, i0 + 1)?;
            if record {
                built[k].push(letter);
                steps.push(TraceStep {
                    letter,
                    component: k + 1,
                    position: i0 + 1,
                    words: built.clone(),
                    state: state.snapshot(),
                });
            }
        }
    }
    Ok(Forward {
        rc: state.into_rigged(mode, lambda, mu)?,
        steps,
    })
}

fn check_mode(t: &MultiTableau, mode: Mode) -> Result<()> {
    component_words(t, mode).map(|_| ())
}

/// Single-row multitableaux to symmetric rigged configurations.
pub fn psi(t: &MultiTableau) -> Result<RiggedConfiguration> {
    check_mode(t, Mode::Symmetric)?;
    Ok(run_forward(t, Mode::Symmetric, false)?.rc)
}

/// Single-column multitableaux to antisymmetric rigged configurations.
pub fn psi_prime(t: &MultiTableau) -> Result<RiggedConfiguration> {
    check_mode(t, Mode::Antisymmetric)?;
    Ok(run_forward(t, Mode::Antisymmetric, false)?.rc)
}

/// Forward map in either mode.
pub fn bijection(t: &MultiTableau, mode: Mode) -> Result<RiggedConfiguration> {
    Ok(run_forward(t, mode, false)?.rc)
}

/// Every intermediate configuration of the forward map, uninverted.
pub fn psi_trace(t: &MultiTableau, mode: Mode) -> Result<(BijectionTrace, RiggedConfiguration)> {
    let fwd = run_forward(t, mode, true)?;
    Ok((
        BijectionTrace {
            mode,
            direction: Direction::Forward,
            steps: fwd.steps,
        },
        fwd.rc,
    ))
}

fn run_backward(
    rc: &RiggedConfiguration,
    component_sizes: &[usize],
    record: bool,
) -> Result<(MultiTableau, Vec<TraceStep>)> {
    let mode = rc.mode();
    let config = rc.config();
    if partition_of_sizes(component_sizes) != *config.mu() {
        return Err(Error::InvalidInput(format!(
            "component sizes {component_sizes:?} do not match mu = {}",
            config.mu()
        )));
    }
    let n = config.n();
    let mut state = State::from_rc(rc);
    let mut words: Vec<Vec<usize>> = component_sizes.iter().map(|&s| vec![0; s]).collect();
    let mut steps = Vec::new();
    for (k, &size) in component_sizes.iter().enumerate() {
        let mut bound = usize::MAX;
        for i in (1..=size).rev() {
            let t = state.backward_step(mode, i)?;
            let ok = match mode {
                Mode::Symmetric => t <= bound,
                Mode::Antisymmetric => t < bound,
            };
            if !ok {
                return Err(Error::Bijection(format!(
                    "letter {t} at position {i} of component {} breaks the order with the next letter {bound}",
                    k + 1
                )));
            }
            words[k][i - 1] = t;
            bound = t;
            if record {
                let present = words
                    .iter()
                    .enumerate()
                    .map(|(kk, w)| match kk.cmp(&k) {
                        std::cmp::Ordering::Less => w.clone(),
                        std::cmp::Ordering::Equal => w[i - 1..].to_vec(),
                        std::cmp::Ordering::Greater => Vec::new(),
                    })
                    .collect();
                steps.push(TraceStep {
                    letter: t,
                    component: k + 1,
                    position: i,
                    words: present,
                    state: state.snapshot(),
                });
            }
        }
    }
    if !state.is_empty() {
        return Err(Error::Bijection(
            "configuration is not exhausted by the letters".into(),
        ));
    }
    let t = tableau_from_words(&words, n, mode)?;
    if t.weight() != config.lambda() {
        return Err(Error::Bijection(format!(
            "recovered content {:?} differs from {:?}",
            t.weight(),
            config.lambda()
        )));
    }
    Ok((t, steps))
}

pub fn psi_inverse(rc: &RiggedConfiguration, component_sizes: &[usize]) -> Result<MultiTableau> {
    require_mode(rc, Mode::Symmetric)?;
    Ok(run_backward(rc, component_sizes, false)?.0)
}

/// Recovers the single-column multitableau. The construction mirrors
/// [`psi_inverse`]: the letter is the smallest `t` such that row `i`
/// of `nu^(a)` has a singular label for every `t <= a < n`.
pub fn psi_prime_inverse(
    rc: &RiggedConfiguration,
    component_sizes: &[usize],
) -> Result<MultiTableau> {
    require_mode(rc, Mode::Antisymmetric)?;
    Ok(run_backward(rc, component_sizes, false)?.0)
}

/// Inverse in either mode, with the snapshots after every removal.
pub fn inverse_trace(
    rc: &RiggedConfiguration,
    component_sizes: &[usize],
) -> Result<(BijectionTrace, MultiTableau)> {
    let (t, steps) = run_backward(rc, component_sizes, true)?;
    Ok((
        BijectionTrace {
            mode: rc.mode(),
            direction: Direction::Backward,
            steps,
        },
        t,
    ))
}

fn require_mode(rc: &RiggedConfiguration, mode: Mode) -> Result<()> {
    if rc.mode() != mode {
        return Err(Error::ModeMismatch {
            expected: mode.name(),
            found: rc.mode().name(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaStep {
    /// 1-based, like `position`.
    pub component: usize,
    pub position: usize,
    pub letter: usize,
    pub predicted: usize,
    pub inversions: usize,
    pub statistic: usize,
    pub content_relation: bool,
}

impl DeltaStep {
    pub fn passed(&self) -> bool {
        self.content_relation
            && self.predicted == self.inversions
            && self.predicted == self.statistic
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub steps: Vec<DeltaStep>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(DeltaStep::passed)
    }

    pub fn first_failure(&self) -> Option<&DeltaStep> {
        self.steps.iter().find(|s| !s.passed())
    }
}

/// Replays the forward map and compares, letter by letter, the
/// closed-form increment with the observed change of the inversion count
/// of the partial multitableau and of the would-be rigged statistic.
/// Also checks that `nu_i^(a) - nu_i^(a-1)` counts the letters `a` on
/// the diagonal `i - 1` (rows) or `1 - i` (columns).
pub fn delta_check(t: &MultiTableau, mode: Mode) -> Result<DeltaReport> {
    let words = component_words(t, mode)?;
    let n = t.alphabet().max(1);
    let mut state = State::new(n);
    let mut built: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    let mut prev_inv = 0;
    let mut prev_stat = 0;
    let mut steps = Vec::new();
    for k in (0..words.len()).rev() {
        for (i0, &a) in words[k].iter().enumerate() {
            let i = i0 + 1;
            state.forward_step(mode, a, i)?;
            built[k].push(a);
            let predicted = match mode {
                Mode::Symmetric => {
                    let below = if i > 1 {
                        state.row(n, i - 1) - state.row(a, i - 1)
                    } else {
                        0
                    };
                    state.row(a - 1, i) + below
                }
                Mode::Antisymmetric => state.row(a - 1, i) - state.row(a, i + 1),
            };
            let inv = inversions(&tableau_from_words(&built, n, mode)?);
            let stat = state.inverted_statistic(mode);
            steps.push(DeltaStep {
                component: k + 1,
                position: i,
                letter: a,
                predicted,
                inversions: inv - prev_inv,
                statistic: stat - prev_stat,
                content_relation: content_relation_holds(&state, &built),
            });
            prev_inv = inv;
            prev_stat = stat;
        }
    }
    Ok(DeltaReport { steps })
}

/// In both modes the letter at position `i` lies on a diagonal that
/// determines `i`, so the relation reduces to counting letters by value
/// and position.
fn content_relation_holds(state: &State, words: &[Vec<usize>]) -> bool {
    let n = state.n;
    let rows = words.iter().map(Vec::len).max().unwrap_or(0);
    (1..=n).all(|a| {
        (1..=rows + 1).all(|i| {
            let count = words.iter().filter(|w| w.get(i - 1) == Some(&a)).count();
            state.row(a, i) - state.row(a - 1, i) == count
        })
    })
}
