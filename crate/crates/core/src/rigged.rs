//! Configurations, rigged configurations and the explicit supernomial
//! formulas in both the symmetric and the antisymmetric setting.
//!
//! A configuration stores the whole chain `nu^(0) = ∅ ⊂ ... ⊂ nu^(n) = mu^t`.
//! Riggings are kept as weakly decreasing label lists, one per
//! `(a, i)` with `1 <= a < n` and `1 <= i <= mu_1`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_subpartitions, Partition, SkewShape};
use crate::qpoly::{qbinomial, QPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "sym")]
    Symmetric,
    #[serde(rename = "anti")]
    Antisymmetric,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symmetric => "sym",
            Mode::Antisymmetric => "anti",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" | "symmetric" => Ok(Mode::Symmetric),
            "anti" | "antisymmetric" => Ok(Mode::Antisymmetric),
            other => Err(Error::InvalidInput(format!(
                "unknown mode {other:?}, expected sym or anti"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    mode: Mode,
    lambda: Vec<usize>,
    mu: Partition,
    chain: Vec<Partition>,
}

fn pad_lambda(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "alphabet size must be at least 1".into(),
        ));
    }
    if lambda.len() > n {
        if lambda[n..].iter().any(|&x| x != 0) {
            return Err(Error::InvalidInput(format!(
                "content {lambda:?} has more than n = {n} nonzero entries"
            )));
        }
        return Ok(lambda[..n].to_vec());
    }
    let mut out = lambda.to_vec();
    out.resize(n, 0);
    Ok(out)
}

impl Configuration {
    /// Builds and validates a configuration from `nu^(1), ..., nu^(n-1)`
    /// where `n = lambda.len()`.
    pub fn new(mode: Mode, lambda: Vec<usize>, mu: Partition, nu: Vec<Partition>) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::InvalidInput(
                "content must have at least one entry".into(),
            ));
        }
        if nu.len() != n - 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} intermediate partitions for n = {n}, got {}",
                n - 1,
                nu.len()
            )));
        }
        let mut chain = Vec::with_capacity(n + 1);
        chain.push(Partition::empty());
        chain.extend(nu);
        chain.push(mu.conjugate());
        let config = Configuration {
            mode,
            lambda,
            mu,
            chain,
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.lambda.iter().sum::<usize>() != self.mu.size() {
            return Err(Error::InvalidInput(format!(
                "content {:?} and {} have different sizes",
                self.lambda, self.mu
            )));
        }
        let mut partial = 0;
        for a in 1..=n {
            let (lo, hi) = (&self.chain[a - 1], &self.chain[a]);
            let strip = SkewShape::new(hi.clone(), lo.clone())?;
            partial += self.lambda[a - 1];
            let ok = match self.mode {
                Mode::Symmetric => hi.size() == partial,
                Mode::Antisymmetric => strip.is_horizontal_strip(self.lambda[a - 1]),
            };
            if !ok {
                return Err(Error::InvalidInput(format!(
                    "step {a} ({strip}) violates the {} constraint for content {:?}",
                    self.mode, self.lambda
                )));
            }
        }
        Ok(())
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Alphabet size.
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// `nu^(a)` for `0 <= a <= n`.
    pub fn nu(&self, a: usize) -> &Partition {
        &self.chain[a]
    }

    /// `nu^(1), ..., nu^(n-1)`.
    pub fn intermediate(&self) -> &[Partition] {
        &self.chain[1..self.n()]
    }

    /// Number of rows `i` that can carry labels, i.e. `mu_1`.
    pub fn rows(&self) -> usize {
        self.mu.part(1)
    }

    fn check_index(&self, a: usize, i: usize) -> Result<()> {
        if a == 0 || a >= self.n() || i == 0 || i > self.rows() {
            return Err(Error::OutOfRange(format!(
                "(a, i) = ({a}, {i}) with n = {} and mu_1 = {}",
                self.n(),
                self.rows()
            )));
        }
        Ok(())
    }

    pub(crate) fn vac(&self, a: usize, i: usize) -> usize {
        self.chain[a + 1].part(i) - self.chain[a].part(i)
    }

    pub(crate) fn mult(&self, a: usize, i: usize) -> usize {
        match self.mode {
            Mode::Symmetric => self.chain[a].part(i) - self.chain[a].part(i + 1),
            Mode::Antisymmetric => self.chain[a].part(i) - self.chain[a + 1].part(i + 1),
        }
    }

    /// `p_i^(a) = nu_i^(a+1) - nu_i^(a)`.
    pub fn vacancy(&self, a: usize, i: usize) -> Result<usize> {
        self.check_index(a, i)?;
        Ok(self.vac(a, i))
    }

    /// Number of labels carried by row `i` of `nu^(a)`.
    pub fn multiplicity(&self, a: usize, i: usize) -> Result<usize> {
        self.check_index(a, i)?;
        Ok(self.mult(a, i))
    }

    /// `q`-weight of this configuration in the explicit formula.
    pub fn formula_term(&self) -> QPolynomial {
        let mut term = match self.mode {
            Mode::Symmetric => QPolynomial::monomial(phi_unchecked(self)),
            Mode::Antisymmetric => QPolynomial::one(),
        };
        for a in 1..self.n() {
            for i in 1..=self.rows() {
                term = &term * &qbinomial(self.mult(a, i) as i64, self.vac(a, i) as i64);
            }
        }
        term
    }
}

fn phi_unchecked(config: &Configuration) -> usize {
    (1..config.n())
        .flat_map(|a| (1..=config.rows()).map(move |i| (a, i)))
        .map(|(a, i)| config.chain[a].part(i + 1) * config.vac(a, i))
        .sum()
}

pub fn vacancy(config: &Configuration, a: usize, i: usize) -> Result<usize> {
    config.vacancy(a, i)
}

pub fn multiplicity(config: &Configuration, a: usize, i: usize) -> Result<usize> {
    config.multiplicity(a, i)
}

/// `Phi(nu) = sum nu_{i+1}^(a) (nu_i^(a+1) - nu_i^(a))`.
pub fn phi(config: &Configuration) -> Result<usize> {
    if config.mode != Mode::Symmetric {
        return Err(Error::ModeMismatch {
            expected: "sym",
            found: config.mode.name(),
        });
    }
    Ok(phi_unchecked(config))
}

/// Every admissible sequence `nu^(1), ..., nu^(n-1)`, built from
/// `nu^(n) = mu^t` downwards. Content shorter than `n` is padded with
/// zeros.
pub fn enumerate_configurations(
    lambda: &[usize],
    mu: &Partition,
    n: usize,
    mode: Mode,
) -> Result<Vec<Configuration>> {
    let lambda = pad_lambda(lambda, n)?;
    if lambda.iter().sum::<usize>() != mu.size() {
        return Ok(Vec::new());
    }
    let partial: Vec<usize> = lambda
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut chain = vec![Partition::empty(); n + 1];
    chain[n] = mu.conjugate();
    let mut chains = Vec::new();
    if n == 1 {
        let top = &chain[1];
        let ok = match mode {
            Mode::Symmetric => true,
            Mode::Antisymmetric => SkewShape::straight(top.clone()).is_horizontal_strip(lambda[0]),
        };
        if ok {
            chains.push(chain.clone());
        }
    } else {
        rec_top(n - 1, &lambda, &partial, mode, &mut chain, &mut chains);
    }
    fn rec_top(
        a: usize,
        lambda: &[usize],
        partial: &[usize],
        mode: Mode,
        chain: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let above = chain[a + 1].clone();
        for nu in enumerate_subpartitions(&above, partial[a - 1]) {
            if mode == Mode::Antisymmetric {
                let strip = SkewShape::new(above.clone(), nu.clone()).expect("subpartition");
                if !strip.is_horizontal_strip(lambda[a]) {
                    continue;
                }
                if a == 1 && !SkewShape::straight(nu.clone()).is_horizontal_strip(lambda[0]) {
                    continue;
                }
            }
            chain[a] = nu;
            if a == 1 {
                out.push(chain.clone());
            } else {
                rec_top(a - 1, lambda, partial, mode, chain, out);
            }
        }
    }
    Ok(chains
        .into_iter()
        .map(|chain| Configuration {
            mode,
            lambda: lambda.clone(),
            mu: mu.clone(),
            chain,
        })
        .collect())
}

/// All weakly decreasing lists of `m` integers in `[0, p]`.
pub(crate) fn boxed_label_lists(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in (0..=max).rev() {
            cur.push(v);
            rec(m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, p, &mut Vec::with_capacity(m), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    config: Configuration,
    riggings: Vec<Vec<Vec<usize>>>,
}

impl RiggedConfiguration {
    /// `riggings[a-1][i-1]` holds the labels of row `i` of `nu^(a)` in any
    /// order; they are stored sorted in decreasing order.
    pub fn new(config: Configuration, mut riggings: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let n = config.n();
        let rows = config.rows();
        if riggings.len() != n - 1 {
            return Err(Error::InvalidRigging(format!(
                "expected riggings for {} partitions, got {}",
                n - 1,
                riggings.len()
            )));
        }
        for (a0, per_row) in riggings.iter_mut().enumerate() {
            let a = a0 + 1;
            per_row.resize(rows.max(per_row.len()), Vec::new());
            if per_row.len() > rows {
                return Err(Error::InvalidRigging(format!(
                    "nu^({a}) has labels beyond row {rows}"
                )));
            }
            for (i0, labels) in per_row.iter_mut().enumerate() {
                let i = i0 + 1;
                let (m, p) = (config.mult(a, i), config.vac(a, i));
                if labels.len() != m {
                    return Err(Error::InvalidRigging(format!(
                        "row {i} of nu^({a}) needs {m} labels, got {}",
                        labels.len()
                    )));
                }
                if let Some(&bad) = labels.iter().find(|&&j| j > p) {
                    return Err(Error::InvalidRigging(format!(
                        "label {bad} in row {i} of nu^({a}) exceeds the vacancy number {p}"
                    )));
                }
                labels.sort_unstable_by(|x, y| y.cmp(x));
            }
        }
        Ok(RiggedConfiguration { config, riggings })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn mode(&self) -> Mode {
        self.config.mode
    }

    /// Labels of row `i` of `nu^(a)`, decreasing.
    pub fn labels(&self, a: usize, i: usize) -> &[usize] {
        &self.riggings[a - 1][i - 1]
    }

    pub fn riggings(&self) -> &[Vec<Vec<usize>>] {
        &self.riggings
    }

    /// Total size of all rigging partitions.
    pub fn rigging_size(&self) -> usize {
        self.riggings.iter().flatten().flatten().sum()
    }

    /// `c~` or `c~'` depending on the mode.
    pub fn statistic(&self) -> usize {
        match self.mode() {
            Mode::Symmetric => phi_unchecked(&self.config) + self.rigging_size(),
            Mode::Antisymmetric => self.rigging_size(),
        }
    }

    pub fn render_ascii(&self) -> String {
        let config = &self.config;
        let nus: Vec<&Partition> = (1..config.n()).map(|a| config.nu(a)).collect();
        render_rigged(
            &nus,
            |a, i| self.riggings[a - 1].get(i - 1).map_or(&[][..], |v| v),
            |a, i| config.vac(a, i),
        )
    }
}

/// Draws `nu^(1), ..., nu^(k)` with row 1 at the bottom, labels in the
/// last boxes of each row and the vacancy number to the right.
pub(crate) fn render_rigged<'a>(
    nus: &[&Partition],
    labels: impl Fn(usize, usize) -> &'a [usize],
    vacancy: impl Fn(usize, usize) -> usize,
) -> String {
    let mut out = String::new();
    for (a0, nu) in nus.iter().enumerate() {
        let a = a0 + 1;
        if nu.is_empty() {
            let _ = writeln!(out, "nu({a}) = ()");
            continue;
        }
        let _ = writeln!(out, "nu({a}) = {nu}");
        for i in (1..=nu.len()).rev() {
            let len = nu.part(i);
            let row_labels = labels(a, i);
            let start = len.saturating_sub(row_labels.len());
            let mut line = String::from("|");
            for c in 0..len {
                if c >= start {
                    let _ = write!(line, "{:^3}|", row_labels[c - start]);
                } else {
                    line.push_str("   |");
                }
            }
            let _ = writeln!(out, "{line}  {}", vacancy(a, i));
        }
    }
    out
}

pub fn enumerate_riggings(config: &Configuration) -> Vec<RiggedConfiguration> {
    let n = config.n();
    let rows = config.rows();
    let slots: Vec<(usize, usize)> = (1..n)
        .flat_map(|a| (1..=rows).map(move |i| (a, i)))
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = slots
        .iter()
        .map(|&(a, i)| boxed_label_lists(config.mult(a, i), config.vac(a, i)))
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; slots.len()];
    loop {
        let mut riggings = vec![vec![Vec::new(); rows]; n - 1];
        for (s, &(a, i)) in slots.iter().enumerate() {
            riggings[a - 1][i - 1] = choices[s][pick[s]].clone();
        }
        out.push(RiggedConfiguration {
            config: config.clone(),
            riggings,
        });
        // odometer over the slot choices
        let mut s = slots.len();
        loop {
            if s == 0 {
                return out;
            }
            s -= 1;
            pick[s] += 1;
            if pick[s] < choices[s].len() {
                break;
            }
            pick[s] = 0;
        }
    }
}

pub fn statistic_sym(rc: &RiggedConfiguration) -> Result<usize> {
    match rc.mode() {
        Mode::Symmetric => Ok(rc.statistic()),
        found => Err(Error::ModeMismatch {
            expected: "sym",
            found: found.name(),
        }),
    }
}

pub fn statistic_anti(rc: &RiggedConfiguration) -> Result<usize> {
    match rc.mode() {
        Mode::Antisymmetric => Ok(rc.statistic()),
        found => Err(Error::ModeMismatch {
            expected: "anti",
            found: found.name(),
        }),
    }
}

/// Explicit formula for `S~_{lambda mu}(q)`.
pub fn supernomial_sym(lambda: &[usize], mu: &Partition, n: usize) -> Result<QPolynomial> {
    supernomial_formula(lambda, mu, n, Mode::Symmetric)
}

/// Explicit formula for `S~'_{lambda mu}(q)`.
pub fn supernomial_anti(lambda: &[usize], mu: &Partition, n: usize) -> Result<QPolynomial> {
    supernomial_formula(lambda, mu, n, Mode::Antisymmetric)
}

pub fn supernomial_formula(
    lambda: &[usize],
    mu: &Partition,
    n: usize,
    mode: Mode,
) -> Result<QPolynomial> {
    Ok(enumerate_configurations(lambda, mu, n, mode)?
        .iter()
        .map(Configuration::formula_term)
        .sum())
}

/// Sum of `q^statistic` over every rigged configuration.
pub fn supernomial_via_rc(
    lambda: &[usize],
    mu: &Partition,
    n: usize,
    mode: Mode,
) -> Result<QPolynomial> {
    let mut out = QPolynomial::zero();
    for config in enumerate_configurations(lambda, mu, n, mode)? {
        for rc in enumerate_riggings(&config) {
            out.add_term(rc.statistic(), 1);
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct RiggedJson {
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<usize>>,
    mu: Partition,
    nu: Vec<Partition>,
    riggings: Vec<Vec<Vec<usize>>>,
}

impl Serialize for RiggedConfiguration {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RiggedJson {
            mode: self.mode(),
            lambda: Some(self.config.lambda.clone()),
            mu: self.config.mu.clone(),
            nu: self.config.intermediate().to_vec(),
            riggings: self.riggings.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RiggedConfiguration {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RiggedJson::deserialize(deserializer)?;
        let lambda = match raw.lambda {
            Some(l) => l,
            None => content_from_chain(raw.mode, &raw.mu, &raw.nu),
        };
        let config =
            Configuration::new(raw.mode, lambda, raw.mu, raw.nu).map_err(D::Error::custom)?;
        RiggedConfiguration::new(config, raw.riggings).map_err(D::Error::custom)
    }
}

/// Content read off the sizes along the chain; used when JSON omits it.
fn content_from_chain(_mode: Mode, mu: &Partition, nu: &[Partition]) -> Vec<usize> {
    let mut sizes = vec![0];
    sizes.extend(nu.iter().map(Partition::size));
    sizes.push(mu.size());
    sizes
        .windows(2)
        .map(|w| w[1].saturating_sub(w[0]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn config(mode: Mode, nu: &[&[usize]]) -> Configuration {
        Configuration::new(
            mode,
            vec![2, 2, 1],
            p(&[2, 2, 1]),
            nu.iter().map(|x| p(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn symmetric_example_configurations() {
        let all = enumerate_configurations(&[2, 2, 1], &p(&[2, 2, 1]), 3, Mode::Symmetric).unwrap();
        let mut seen: Vec<Vec<Partition>> = all.iter().map(|c| c.intermediate().to_vec()).collect();
        seen.sort();
        let mut expected = vec![
            vec![p(&[2]), p(&[2, 2])],
            vec![p(&[2]), p(&[3, 1])],
            vec![p(&[1, 1]), p(&[3, 1])],
            vec![p(&[1, 1]), p(&[2, 2])],
        ];
        expected.sort();
        assert_eq!(seen, expected);
        let phis: Vec<usize> = [
            config(Mode::Symmetric, &[&[2], &[2, 2]]),
            config(Mode::Symmetric, &[&[2], &[3, 1]]),
            config(Mode::Symmetric, &[&[1, 1], &[3, 1]]),
            config(Mode::Symmetric, &[&[1, 1], &[2, 2]]),
        ]
        .iter()
        .map(|c| phi(c).unwrap())
        .collect();
        assert_eq!(phis, vec![2, 0, 2, 3]);
    }

    #[test]
    fn antisymmetric_example_configurations() {
        let all =
            enumerate_configurations(&[2, 2, 1], &p(&[2, 2, 1]), 3, Mode::Antisymmetric).unwrap();
        let mut seen: Vec<Vec<Partition>> = all.iter().map(|c| c.intermediate().to_vec()).collect();
        seen.sort();
        assert_eq!(
            seen,
            vec![vec![p(&[2]), p(&[2, 2])], vec![p(&[2]), p(&[3, 1])]]
        );
        let second = config(Mode::Antisymmetric, &[&[2], &[3, 1]]);
        assert_eq!(second.multiplicity(1, 1).unwrap(), 1);
        assert_eq!(enumerate_riggings(&second).len(), 4);
        assert!(phi(&second).is_err());
    }

    #[test]
    fn vacancy_and_multiplicity() {
        let second = config(Mode::Symmetric, &[&[2], &[3, 1]]);
        assert_eq!(second.vacancy(1, 1).unwrap(), 1);
        assert_eq!(second.vacancy(2, 2).unwrap(), 1);
        assert_eq!(second.vacancy(2, 1).unwrap(), 0);
        assert!(second.vacancy(0, 1).is_err());
        assert!(second.vacancy(3, 1).is_err());
        assert!(second.vacancy(1, 3).is_err());
        let first = config(Mode::Symmetric, &[&[2], &[2, 2]]);
        assert_eq!(first.multiplicity(2, 1).unwrap(), 0);
        assert_eq!(first.multiplicity(2, 2).unwrap(), 2);
        assert_eq!(enumerate_riggings(&second).len(), 6);
    }

    #[test]
    fn example_riggings() {
        let second = config(Mode::Symmetric, &[&[2], &[3, 1]]);
        let rc = RiggedConfiguration::new(
            second,
            vec![vec![vec![0, 1], vec![]], vec![vec![0, 0], vec![1]]],
        )
        .unwrap();
        assert_eq!(rc.labels(1, 1), &[1, 0]);
        assert_eq!(statistic_sym(&rc).unwrap(), 2);
        assert!(statistic_anti(&rc).is_err());
        let anti = config(Mode::Antisymmetric, &[&[2], &[3, 1]]);
        // box labels 0 | 0 and 1; the 1 beside each row is a vacancy number
        let rc =
            RiggedConfiguration::new(anti, vec![vec![vec![0], vec![]], vec![vec![0], vec![1]]])
                .unwrap();
        assert_eq!(statistic_anti(&rc).unwrap(), 1);
        let first = config(Mode::Symmetric, &[&[2], &[2, 2]]);
        let zero = RiggedConfiguration::new(
            first,
            vec![vec![vec![0, 0], vec![]], vec![vec![], vec![0, 0]]],
        )
        .unwrap();
        assert_eq!(zero.statistic(), 2);
    }

    #[test]
    fn rejects_bad_riggings() {
        let second = config(Mode::Symmetric, &[&[2], &[3, 1]]);
        assert!(RiggedConfiguration::new(
            second.clone(),
            vec![vec![vec![2, 0], vec![]], vec![vec![0, 0], vec![1]]]
        )
        .is_err());
        assert!(RiggedConfiguration::new(
            second,
            vec![vec![vec![0], vec![]], vec![vec![0, 0], vec![1]]]
        )
        .is_err());
        assert!(Configuration::new(
            Mode::Symmetric,
            vec![2, 2, 1],
            p(&[2, 2, 1]),
            vec![p(&[3]), p(&[3, 1])]
        )
        .is_err());
    }

    #[test]
    fn golden_polynomials() {
        let mu = p(&[2, 2, 1]);
        let sym = QPolynomial::from_coeffs([1, 2, 4, 3, 1]);
        let anti = QPolynomial::from_coeffs([2, 2, 1]);
        assert_eq!(supernomial_sym(&[2, 2, 1], &mu, 3).unwrap(), sym);
        assert_eq!(
            supernomial_via_rc(&[2, 2, 1], &mu, 3, Mode::Symmetric).unwrap(),
            sym
        );
        assert_eq!(supernomial_anti(&[2, 2, 1], &mu, 3).unwrap(), anti);
        assert_eq!(
            supernomial_via_rc(&[2, 2, 1], &mu, 3, Mode::Antisymmetric).unwrap(),
            anti
        );
    }

    #[test]
    fn degenerate_inputs() {
        assert!(supernomial_sym(&[2, 1], &p(&[2, 2]), 2).unwrap().is_zero());
        assert!(supernomial_anti(&[3], &p(&[1, 1]), 1).unwrap().is_zero());
        assert_eq!(
            supernomial_sym(&[0], &Partition::empty(), 1).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            supernomial_anti(&[2], &p(&[1, 1]), 1).unwrap(),
            QPolynomial::one()
        );
        assert!(enumerate_configurations(&[1, 1, 1], &p(&[3]), 2, Mode::Symmetric).is_err());
    }

    #[test]
    fn binomial_specialization() {
        // (x1 + x2)^4: coefficient of x1^1 x2^3 at q = 1 is 4
        let f = supernomial_sym(&[1, 3], &p(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(f.evaluate_at_one(), 4.into());
    }

    #[test]
    fn json_round_trip() {
        let rc = enumerate_riggings(&config(Mode::Symmetric, &[&[2], &[3, 1]]))
            .into_iter()
            .max_by_key(RiggedConfiguration::statistic)
            .unwrap();
        let text = serde_json::to_string(&rc).unwrap();
        assert!(text.starts_with(
            r#"{"mode":"sym","lambda":[2,2,1],"mu":[2,2,1],"nu":[[2],[3,1]],"riggings":"#
        ));
        assert_eq!(
            serde_json::from_str::<RiggedConfiguration>(&text).unwrap(),
            rc
        );
        let bare =
            r#"{"mode":"sym","mu":[2,2,1],"nu":[[2],[3,1]],"riggings":[[[1,0],[]],[[0,0],[1]]]}"#;
        assert_eq!(
            serde_json::from_str::<RiggedConfiguration>(bare)
                .unwrap()
                .statistic(),
            2
        );
        assert!(rc.render_ascii().contains("nu(2) = (3,1)"));
    }
}
