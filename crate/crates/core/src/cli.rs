//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code with captured output, so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage
//! errors (bad flags, malformed input, violated preconditions).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bijection::{self, inverse_trace, psi_trace, tableau_from_words};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::qpoly::QPolynomial;
use crate::ribbon::{self, maxspin, quot, quot_inverse, RibbonTableau};
use crate::rigged::{
    enumerate_configurations, enumerate_riggings, supernomial_formula, supernomial_via_rc, Mode,
    RiggedConfiguration,
};
use crate::sweep::{multipartition_for, verify_sweep, Check, SweepSpec};
use crate::tableau::{
    enumerate_multitableaux, inv_generating_function, inversions, standardize, MultiPartition,
    MultiTableau,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "supernomial",
    version,
    about = "q-supernomial coefficients and the combinatorics behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a supernomial polynomial (also the default when the first argument is a flag).
    Supernomial(SupernomialArgs),
    /// Rigged configurations.
    #[command(subcommand)]
    Rc(RcCommand),
    /// Ribbon tableaux, cores and quotients.
    #[command(subcommand)]
    Ribbon(RibbonCommand),
    /// Multitableaux and the inversion statistic.
    #[command(subcommand)]
    Multitab(MultitabCommand),
    /// The bijections between multitableaux and rigged configurations.
    #[command(subcommand)]
    Bij(BijCommand),
    /// Cross-check all representations over a range of parameters.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON instead of the text rendering.
    #[arg(long, global = true)]
    json: bool,
    /// Text rendering style.
    #[arg(long, value_enum, global = true)]
    render: Option<Render>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Render {
    Ascii,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Via {
    Formula,
    Rc,
    Multitab,
    Ribbon,
}

#[derive(Args, Debug)]
struct Content {
    /// Content, e.g. 2,2,1 (entries may be zero; order matters).
    #[arg(long, value_parser = parse_list)]
    lambda: IntList,
    /// Partition of step sizes, e.g. 2,2,1.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Alphabet size; defaults to the length of lambda.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "sym")]
    mode: Mode,
}

impl Content {
    fn n(&self) -> usize {
        self.n.unwrap_or(self.lambda.len().max(1))
    }
}

#[derive(Args, Debug)]
struct SupernomialArgs {
    #[command(flatten)]
    content: Content,
    #[arg(long, value_enum, default_value = "formula")]
    via: Via,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum RcCommand {
    /// List every rigged configuration with its statistic.
    Enumerate {
        #[command(flatten)]
        content: Content,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum RibbonCommand {
    /// List the ribbon tableaux of a shape and weight.
    Enumerate {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        #[arg(long, value_parser = parse_list)]
        weight: IntList,
        #[arg(long = "L", visible_alias = "l")]
        l: usize,
        #[command(flatten)]
        output: Output,
    },
    /// L-quotient of a partition with empty L-core.
    Quot {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long = "L", visible_alias = "l")]
        l: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Partition with empty L-core and the given quotient.
    Unquot {
        /// Quotient as JSON, e.g. [[1,1],[2,2],[2,1]].
        #[arg(long)]
        quotient: String,
        #[arg(long = "L", visible_alias = "l")]
        l: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Spin, maxspin and cospin of a ribbon tableau.
    Spin {
        /// Ribbon tableau as JSON: {"L":3,"shape":[...],"chain":[[...],...]}.
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct MultiShape {
    /// Multipartition as JSON, e.g. [[2],[2],[1]].
    #[arg(long, conflicts_with_all = ["rows", "columns"])]
    shape: Option<String>,
    /// Single-row components of these sizes.
    #[arg(long, value_parser = parse_list, conflicts_with = "columns")]
    rows: Option<IntList>,
    /// Single-column components of these sizes.
    #[arg(long, value_parser = parse_list)]
    columns: Option<IntList>,
}

impl MultiShape {
    fn resolve(&self) -> Result<MultiPartition> {
        match (&self.shape, &self.rows, &self.columns) {
            (Some(json), _, _) => from_json(json, "multipartition"),
            (_, Some(rows), _) => Ok(MultiPartition::rows(rows)),
            (_, _, Some(cols)) => Ok(MultiPartition::columns(cols)),
            _ => Err(Error::InvalidInput(
                "one of --shape, --rows or --columns is required".into(),
            )),
        }
    }
}

#[derive(Subcommand, Debug)]
enum MultitabCommand {
    /// List multitableaux of a shape and weight with their inversions.
    Enumerate {
        #[command(flatten)]
        shape: MultiShape,
        #[arg(long, value_parser = parse_list)]
        weight: IntList,
        #[command(flatten)]
        output: Output,
    },
    /// Inversion count of a multitableau.
    Inv {
        /// Multitableau as JSON: {"shape":[[...]],"fillings":[[[...]]],"n":4}.
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        output: Output,
    },
    /// Standardization of a multitableau.
    Standardize {
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct TableauInput {
    /// Multitableau as JSON.
    #[arg(long, conflicts_with = "words")]
    tableau: Option<String>,
    /// Component words as JSON, smallest letter first, e.g. [[2,3],[1,1],[1,3,4]].
    #[arg(long, requires = "n")]
    words: Option<String>,
    /// Alphabet size for --words.
    #[arg(long)]
    n: Option<usize>,
    /// Print every intermediate configuration.
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct RcInput {
    /// Rigged configuration as JSON.
    #[arg(long)]
    rc: String,
    /// Component sizes in order, e.g. 2,2,3.
    #[arg(long, value_parser = parse_list)]
    sizes: IntList,
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum BijCommand {
    /// Single-row multitableau to symmetric rigged configuration.
    Psi(TableauInput),
    /// Symmetric rigged configuration back to a single-row multitableau.
    PsiInv(RcInput),
    /// Single-column multitableau to antisymmetric rigged configuration.
    PsiPrime(TableauInput),
    /// Antisymmetric rigged configuration back to a single-column multitableau.
    PsiPrimeInv(RcInput),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_components: usize,
    /// Modes to sweep; both by default.
    #[arg(long)]
    mode: Vec<Mode>,
    /// Checks to run; all by default.
    #[arg(long)]
    check: Vec<Check>,
    #[command(flatten)]
    output: Output,
}

/// Comma-separated nonnegative integers, optionally bracketed.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntList(Vec<usize>);

impl std::ops::Deref for IntList {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

fn parse_list(s: &str) -> std::result::Result<IntList, String> {
    let trimmed = s
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    if trimmed.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    trimmed
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("{x:?} is not a nonnegative integer: {e}"))
        })
        .collect::<std::result::Result<_, _>>()
        .map(IntList)
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    Partition::new(parse_list(s)?.0).map_err(|e| e.to_string())
}

fn from_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed {what} JSON: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

struct Sink {
    out: String,
    err: String,
}

impl Sink {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        if !s.as_ref().ends_with('\n') {
            self.out.push('\n');
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut args: Vec<String> = argv.into_iter().map(Into::into).collect();
    if let Some(first) = args.get(1) {
        let bare = first.starts_with("--") && !matches!(first.as_str(), "--help" | "--version");
        if bare {
            args.insert(1, "supernomial".into());
        }
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut sink = Sink {
        out: String::new(),
        err: String::new(),
    };
    let code = match dispatch(cli.command, &mut sink) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(sink.err, "error: {e}");
            2
        }
    };
    CliOutput {
        code,
        stdout: sink.out,
        stderr: sink.err,
    }
}

fn polynomial_text(p: &QPolynomial, output: &Output) -> String {
    if output.render == Some(Render::Ascii) && !output.json {
        p.to_string()
    } else {
        to_json(p)
    }
}

fn dispatch(command: Command, sink: &mut Sink) -> Result<i32> {
    match command {
        Command::Supernomial(args) => {
            let c = &args.content;
            let n = c.n();
            let poly = match args.via {
                Via::Formula => supernomial_formula(&c.lambda, &c.mu, n, c.mode)?,
                Via::Rc => supernomial_via_rc(&c.lambda, &c.mu, n, c.mode)?,
                Via::Multitab => {
                    let weight = padded(&c.lambda, n)?;
                    inv_generating_function(&multipartition_for(c.mode, c.mu.parts()), &weight)
                }
                Via::Ribbon => {
                    let weight = padded(&c.lambda, n)?;
                    let shape = multipartition_for(c.mode, c.mu.parts());
                    let outer = quot_inverse(&shape, shape.len())?;
                    ribbon::cospin_gf(&SkewShape::straight(outer), &weight, shape.len())?
                }
            };
            sink.line(polynomial_text(&poly, &args.output));
        }
        Command::Rc(RcCommand::Enumerate { content, output }) => {
            let configs =
                enumerate_configurations(&content.lambda, &content.mu, content.n(), content.mode)?;
            for config in &configs {
                for rc in enumerate_riggings(config) {
                    if output.json {
                        sink.line(to_json(&rc));
                    } else {
                        sink.line(format!("statistic {}", rc.statistic()));
                        sink.line(rc.render_ascii());
                    }
                }
            }
        }
        Command::Ribbon(cmd) => ribbon_command(cmd, sink)?,
        Command::Multitab(cmd) => multitab_command(cmd, sink)?,
        Command::Bij(cmd) => bij_command(cmd, sink)?,
        Command::Verify(args) => {
            let spec = SweepSpec {
                max_total_size: args.max_size,
                max_alphabet: args.max_n,
                max_components: args.max_components,
                modes: if args.mode.is_empty() {
                    vec![Mode::Symmetric, Mode::Antisymmetric]
                } else {
                    args.mode
                },
                checks: if args.check.is_empty() {
                    Check::ALL.to_vec()
                } else {
                    args.check
                },
            };
            let report = verify_sweep(&spec);
            if args.output.json {
                sink.out.push_str(&report.to_json_lines());
                sink.err.push_str(&report.summary());
            } else {
                sink.out.push_str(&report.summary());
            }
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn padded(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    if lambda.len() > n && lambda[n..].iter().any(|&x| x != 0) {
        return Err(Error::InvalidInput(format!(
            "content {lambda:?} uses letters beyond n = {n}"
        )));
    }
    let mut w = lambda.to_vec();
    w.resize(n, 0);
    Ok(w)
}

fn ribbon_command(cmd: RibbonCommand, sink: &mut Sink) -> Result<()> {
    match cmd {
        RibbonCommand::Enumerate {
            shape,
            inner,
            weight,
            l,
            output,
        } => {
            check_length(l)?;
            let skew = SkewShape::new(shape, inner)?;
            for t in ribbon::enumerate_ribbon_tableaux(&skew, &weight, l) {
                if output.json {
                    sink.line(to_json(&t));
                } else {
                    sink.line(format!("spin {} cospin {}", t.spin(), t.cospin()?));
                    sink.line(t.render_ascii());
                }
            }
        }
        RibbonCommand::Quot { shape, l, .. } => {
            check_length(l)?;
            sink.line(to_json(&quot(&shape, l)?));
        }
        RibbonCommand::Unquot { quotient, l, .. } => {
            let q: MultiPartition = from_json(&quotient, "quotient")?;
            let l = l.unwrap_or(q.len());
            check_length(l)?;
            sink.line(to_json(&quot_inverse(&q, l)?));
        }
        RibbonCommand::Spin { tableau, output } => {
            let t: RibbonTableau = from_json(&tableau, "ribbon tableau")?;
            let max = maxspin(&t.shape(), t.ribbon_length())?;
            let cospin = t.cospin()?;
            if output.json {
                sink.line(to_json(
                    &serde_json::json!({"spin": t.spin(), "maxspin": max, "cospin": cospin}),
                ));
            } else {
                if output.render == Some(Render::Ascii) {
                    sink.line(t.render_ascii());
                }
                sink.line(format!("spin {}\nmaxspin {max}\ncospin {cospin}", t.spin()));
            }
        }
    }
    Ok(())
}

fn check_length(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidInput("--L must be positive".into()));
    }
    Ok(())
}

fn multitab_command(cmd: MultitabCommand, sink: &mut Sink) -> Result<()> {
    match cmd {
        MultitabCommand::Enumerate {
            shape,
            weight,
            output,
        } => {
            let shape = shape.resolve()?;
            for t in enumerate_multitableaux(&shape, &weight) {
                if output.json {
                    sink.line(to_json(&t));
                } else {
                    sink.line(format!("inv {}", inversions(&t)));
                    sink.line(t.to_string());
                }
            }
        }
        MultitabCommand::Inv { tableau, .. } => {
            let t: MultiTableau = from_json(&tableau, "multitableau")?;
            sink.line(inversions(&t).to_string());
        }
        MultitabCommand::Standardize { tableau, output } => {
            let t: MultiTableau = from_json(&tableau, "multitableau")?;
            let s = standardize(&t);
            sink.line(if output.json {
                to_json(&s)
            } else {
                s.to_string()
            });
        }
    }
    Ok(())
}

fn tableau_input(input: &TableauInput, mode: Mode) -> Result<MultiTableau> {
    match (&input.tableau, &input.words) {
        (Some(json), _) => from_json(json, "multitableau"),
        (None, Some(words)) => {
            let words: Vec<Vec<usize>> = from_json(words, "words")?;
            let n = input
                .n
                .ok_or_else(|| Error::InvalidInput("--words needs --n".into()))?;
            tableau_from_words(&words, n, mode)
        }
        (None, None) => Err(Error::InvalidInput(
            "one of --tableau or --words is required".into(),
        )),
    }
}

fn bij_command(cmd: BijCommand, sink: &mut Sink) -> Result<()> {
    match cmd {
        BijCommand::Psi(input) => forward(&input, Mode::Symmetric, sink),
        BijCommand::PsiPrime(input) => forward(&input, Mode::Antisymmetric, sink),
        BijCommand::PsiInv(input) => backward(&input, Mode::Symmetric, sink),
        BijCommand::PsiPrimeInv(input) => backward(&input, Mode::Antisymmetric, sink),
    }
}

fn forward(input: &TableauInput, mode: Mode, sink: &mut Sink) -> Result<()> {
    let t = tableau_input(input, mode)?;
    let (trace, rc) = psi_trace(&t, mode)?;
    let json = input.output.json;
    if json && input.trace {
        sink.line(to_json(&serde_json::json!({"trace": trace, "result": rc})));
    } else if json {
        sink.line(to_json(&rc));
    } else {
        if input.trace {
            sink.out.push_str(&trace.render_ascii());
            sink.line("result (quantum numbers inverted):");
        }
        sink.line(format!(
            "statistic {} (inversions {})",
            rc.statistic(),
            inversions(&t)
        ));
        sink.line(rc.render_ascii());
    }
    Ok(())
}

fn backward(input: &RcInput, mode: Mode, sink: &mut Sink) -> Result<()> {
    let rc: RiggedConfiguration = from_json(&input.rc, "rigged configuration")?;
    if rc.mode() != mode {
        return Err(Error::ModeMismatch {
            expected: mode.name(),
            found: rc.mode().name(),
        });
    }
    let (trace, t) = if input.trace {
        inverse_trace(&rc, &input.sizes)?
    } else {
        let t = match mode {
            Mode::Symmetric => bijection::psi_inverse(&rc, &input.sizes)?,
            Mode::Antisymmetric => bijection::psi_prime_inverse(&rc, &input.sizes)?,
        };
        (
            bijection::BijectionTrace {
                mode,
                direction: bijection::Direction::Backward,
                steps: Vec::new(),
            },
            t,
        )
    };
    let json = input.output.json;
    if json && input.trace {
        sink.line(to_json(&serde_json::json!({"trace": trace, "result": t})));
    } else if json {
        sink.line(to_json(&t));
    } else {
        if input.trace {
            sink.out.push_str(&trace.render_ascii());
        }
        sink.line(t.to_string());
    }
    Ok(())
}
