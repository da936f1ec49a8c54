//! Cross-checks every representation of the supernomials against each
//! other over a bounded range of parameters.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::bijection::{bijection, delta_check, psi_inverse, psi_prime_inverse};
use crate::error::{Error, Result};
use crate::oracle::path_count_oracle;
use crate::partition::{partitions_of, weak_compositions, Partition, SkewShape};
use crate::qpoly::QPolynomial;
use crate::ribbon::{cospin_gf, for_each_ribbon_tableau, maxspin, quot_inverse, stanton_white};
use crate::rigged::{
    enumerate_configurations, enumerate_riggings, supernomial_formula, supernomial_via_rc, Mode,
};
use crate::tableau::{enumerate_multitableaux, inversions, MultiPartition, MultiTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Explicit formula against the rigged configuration sum.
    FormulaRc,
    /// Inversion generating function against the formula.
    MultitabInv,
    /// Bijectivity, statistic preservation, round trip and step increments.
    Bijection,
    /// Cospin generating function and `cospin = inv` through the quotient.
    Ribbon,
    /// Value at `q = 1` against the monomial expansion count.
    Oracle,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::FormulaRc,
        Check::MultitabInv,
        Check::Bijection,
        Check::Ribbon,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FormulaRc => "formula-rc",
            Check::MultitabInv => "multitab-inv",
            Check::Bijection => "bijection",
            Check::Ribbon => "ribbon",
            Check::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub max_total_size: usize,
    pub max_alphabet: usize,
    /// Largest number of parts of `mu`, i.e. of multitableau components.
    pub max_components: usize,
    pub modes: Vec<Mode>,
    pub checks: Vec<Check>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            max_total_size: 5,
            max_alphabet: 3,
            max_components: 3,
            modes: vec![Mode::Symmetric, Mode::Antisymmetric],
            checks: Check::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub mode: Mode,
    pub n: usize,
    pub lambda: Vec<usize>,
    pub lambda_sorted: Vec<usize>,
    pub mu: Partition,
    pub polynomials: BTreeMap<String, QPolynomial>,
    #[serde(serialize_with = "integer_json")]
    pub oracle: Option<BigInt>,
    pub checks: BTreeMap<String, bool>,
    /// Whether the formula is unchanged by sorting `lambda`.
    pub lambda_symmetric: bool,
    pub mismatch: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: SweepSpec,
    pub instances: Vec<InstanceReport>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub lambda_symmetric_everywhere: bool,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// One JSON object per instance.
    pub fn to_json_lines(&self) -> String {
        self.instances
            .iter()
            .map(|i| serde_json::to_string(i).expect("report serializes") + "\n")
            .collect()
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} instances, {} passed, {} failed; formula symmetric in lambda: {}; {} ms\n",
            self.total,
            self.passed,
            self.failed,
            if self.lambda_symmetric_everywhere {
                "yes"
            } else {
                "no"
            },
            self.elapsed_ms
        );
        for inst in self.instances.iter().filter(|i| !i.passed).take(10) {
            out.push_str(&format!(
                "FAIL {} n={} lambda={:?} mu={}: {}\n",
                inst.mode,
                inst.n,
                inst.lambda,
                inst.mu,
                inst.mismatch.as_deref().unwrap_or("")
            ));
        }
        out
    }
}

type Key = (Mode, usize, Partition, Vec<usize>);

fn instances(spec: &SweepSpec) -> Vec<Key> {
    let mut out = Vec::new();
    for &mode in &spec.modes {
        for n in 1..=spec.max_alphabet {
            for size in 0..=spec.max_total_size {
                for mu in partitions_of(size) {
                    if mu.len() > spec.max_components {
                        continue;
                    }
                    for lambda in weak_compositions(size, n) {
                        out.push((mode, n, mu.clone(), lambda));
                    }
                }
            }
        }
    }
    out
}

pub fn verify_sweep(spec: &SweepSpec) -> VerificationReport {
    let start = Instant::now();
    let keys = instances(spec);
    let mut reports: Vec<InstanceReport> = keys
        .into_par_iter()
        .map(|(mode, n, mu, lambda)| run_instance(mode, n, &lambda, &mu, &spec.checks))
        .collect();
    reports.sort_by(|a, b| (a.mode, a.n, &a.mu, &a.lambda).cmp(&(b.mode, b.n, &b.mu, &b.lambda)));
    let passed = reports.iter().filter(|r| r.passed).count();
    VerificationReport {
        spec: spec.clone(),
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        lambda_symmetric_everywhere: reports.iter().all(|r| r.lambda_symmetric),
        instances: reports,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// The single-row (symmetric) or single-column (antisymmetric)
/// multipartition with component sizes `sizes`; no sizes at all give a
/// single empty component.
pub fn multipartition_for(mode: Mode, sizes: &[usize]) -> MultiPartition {
    let sizes = if sizes.is_empty() { &[0][..] } else { sizes };
    match mode {
        Mode::Symmetric => MultiPartition::rows(sizes),
        Mode::Antisymmetric => MultiPartition::columns(sizes),
    }
}

pub fn run_instance(
    mode: Mode,
    n: usize,
    lambda: &[usize],
    mu: &Partition,
    checks: &[Check],
) -> InstanceReport {
    let mut lambda_sorted = lambda.to_vec();
    lambda_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut report = InstanceReport {
        mode,
        n,
        lambda: lambda.to_vec(),
        lambda_sorted: lambda_sorted.clone(),
        mu: mu.clone(),
        polynomials: BTreeMap::new(),
        oracle: None,
        checks: BTreeMap::new(),
        lambda_symmetric: true,
        mismatch: None,
        passed: true,
    };
    let outcome = (|| -> Result<()> {
        let formula = supernomial_formula(lambda, mu, n, mode)?;
        let sorted = supernomial_formula(&lambda_sorted, mu, n, mode)?;
        report.lambda_symmetric = formula == sorted;
        report.polynomials.insert("formula".into(), formula.clone());
        report.polynomials.insert("formula-sorted".into(), sorted);
        let shape = multipartition_for(mode, mu.parts());
        for &check in checks {
            let verdict = match check {
                Check::FormulaRc => {
                    let rc = supernomial_via_rc(lambda, mu, n, mode)?;
                    let ok = rc == formula;
                    report.polynomials.insert("rc".into(), rc);
                    Ok(ok)
                }
                Check::MultitabInv => {
                    let inv = crate::tableau::inv_generating_function(&shape, lambda);
                    let ok = inv == formula;
                    report.polynomials.insert("inv".into(), inv);
                    Ok(ok)
                }
                Check::Bijection => {
                    bijection_check(mode, n, lambda, mu, &shape).map(|(gf, detail)| {
                        let ok = detail.is_none() && gf == formula;
                        if let Some(d) = detail {
                            report.mismatch.get_or_insert(d);
                        }
                        report.polynomials.insert("bijection".into(), gf);
                        ok
                    })
                }
                Check::Ribbon => ribbon_check(lambda, &shape).map(|res| match res {
                    None => true,
                    Some((gf, detail)) => {
                        if let Some(d) = detail.clone() {
                            report.mismatch.get_or_insert(d);
                        }
                        let ok = detail.is_none() && gf == formula;
                        report.polynomials.insert("ribbon".into(), gf);
                        ok
                    }
                }),
                Check::Oracle => {
                    let count = path_count_oracle(lambda, mu.parts(), n, mode);
                    let ok = count == formula.evaluate_at_one();
                    report.oracle = Some(count);
                    Ok(ok)
                }
            };
            let ok = match verdict {
                Ok(ok) => ok,
                Err(e) => {
                    report.mismatch.get_or_insert(format!("{check}: {e}"));
                    false
                }
            };
            if !ok {
                report
                    .mismatch
                    .get_or_insert(format!("{check}: polynomials differ"));
            }
            report.checks.insert(check.name().into(), ok);
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        report.mismatch = Some(e.to_string());
        report.passed = false;
    }
    report.passed &= report.checks.values().all(|&ok| ok);
    report
}

/// Runs the forward map over `Tab(shape, lambda)` and compares the image
/// with the enumerated rigged configurations. Returns the generating
/// function of the statistic over the image and the first problem found.
pub fn bijection_check(
    mode: Mode,
    n: usize,
    lambda: &[usize],
    mu: &Partition,
    shape: &MultiPartition,
) -> Result<(QPolynomial, Option<String>)> {
    let sizes: Vec<usize> = shape.components().iter().map(Partition::size).collect();
    let mut weight = lambda.to_vec();
    weight.resize(n, 0);
    let tableaux = enumerate_multitableaux(shape, &weight);
    let targets: HashSet<_> = enumerate_configurations(lambda, mu, n, mode)?
        .iter()
        .flat_map(enumerate_riggings)
        .collect();
    let mut images = HashSet::new();
    let mut gf = QPolynomial::zero();
    let mut problem = None;
    for t in &tableaux {
        let rc = bijection(t, mode)?;
        let inv = inversions(t);
        let back = match mode {
            Mode::Symmetric => psi_inverse(&rc, &sizes)?,
            Mode::Antisymmetric => psi_prime_inverse(&rc, &sizes)?,
        };
        let detail = if rc.statistic() != inv {
            Some(format!(
                "statistic {} but {inv} inversions for {t}",
                rc.statistic()
            ))
        } else if &back != t {
            Some(format!("round trip sends {t} to {back}"))
        } else if !targets.contains(&rc) {
            Some(format!(
                "image of {t} is not an enumerated rigged configuration"
            ))
        } else {
            delta_check(t, mode)?
                .first_failure()
                .map(|step| format!("increment check fails for {t} at {step:?}"))
        };
        if problem.is_none() {
            problem = detail;
        }
        gf.add_term(rc.statistic(), 1);
        images.insert(rc);
    }
    if problem.is_none() && images.len() != tableaux.len() {
        problem = Some(format!(
            "{} tableaux but {} distinct images",
            tableaux.len(),
            images.len()
        ));
    }
    if problem.is_none() && images.len() != targets.len() {
        problem = Some(format!(
            "{} images but {} rigged configurations",
            images.len(),
            targets.len()
        ));
    }
    Ok((gf, problem))
}

/// Cospin generating function over the ribbon tableaux whose quotient
/// shape is `shape`, with a per-tableau comparison of cospin and
/// inversions. `None` when there are no components.
pub fn ribbon_check(
    lambda: &[usize],
    shape: &MultiPartition,
) -> Result<Option<(QPolynomial, Option<String>)>> {
    let l = shape.len();
    if l == 0 {
        return Ok(None);
    }
    let outer = SkewShape::straight(quot_inverse(shape, l)?);
    let gf = cospin_gf(&outer, lambda, l)?;
    let mut problem = None;
    if let Ok(max) = maxspin(&outer, l) {
        for_each_ribbon_tableau(&outer, lambda, l, |t| {
            if problem.is_some() {
                return;
            }
            let cospin = (max - t.spin()) / 2;
            match stanton_white(t) {
                Ok(m) if inversions(&m) == cospin => {}
                Ok(m) => {
                    problem = Some(format!(
                        "cospin {cospin} but {} inversions for {m}",
                        inversions(&m)
                    ))
                }
                Err(e) => problem = Some(e.to_string()),
            }
        });
    }
    Ok(Some((gf, problem)))
}

/// All single-row or single-column multitableaux with the given component
/// sizes over an alphabet of size `n`, every content.
pub fn all_multitableaux(mode: Mode, sizes: &[usize], n: usize) -> Vec<MultiTableau> {
    let shape = multipartition_for(mode, sizes);
    weak_compositions(shape.size(), n)
        .into_iter()
        .flat_map(|w| enumerate_multitableaux(&shape, &w))
        .collect()
}

fn integer_json<S: Serializer>(
    value: &Option<BigInt>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    value
        .as_ref()
        .map(|v| serde_json::Number::from_str(&v.to_string()).expect("integer literal"))
        .serialize(serializer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_is_vacuous() {
        let spec = SweepSpec {
            modes: vec![],
            ..SweepSpec::default()
        };
        let report = verify_sweep(&spec);
        assert_eq!(report.total, 0);
        assert!(report.all_passed());
    }

    #[test]
    fn small_sweep_passes() {
        let spec = SweepSpec {
            max_total_size: 5,
            ..SweepSpec::default()
        };
        let report = verify_sweep(&spec);
        assert!(report.total > 0);
        assert!(report.all_passed(), "{}", report.summary());
    }

    #[test]
    fn checks_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }
}
