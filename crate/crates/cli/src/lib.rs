//! Command surface of the `adjinv` binary: tables, weights, evaluation,
//! verification suites, Jacobian ranks, and invariant-monomial lattices.
//!
//! [`run`] is pure apart from reading the matrix file, so the binary and the
//! tests share one code path.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use adjinv::characters::{kernel_lattice, weight_matrix, weight_table};
use adjinv::invariants::{generator_table, stage_generators, GeneratorContext, InvariantId, Stage};
use adjinv::verify::{independence_rank, GeneratorSystem, SuiteConfig, SuiteRegistry, VerificationReport};
use adjinv::{Error, Matrix, Rational};
use serde::Serialize;

/// Largest `n` accepted without `allow_large`.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Table { stage: Stage },
    Weights { stage: Stage },
    Eval { id: String, matrix_path: PathBuf },
    Verify { suite: String },
    Rank { system: GeneratorSystem },
    Lattice { stage: Stage },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub n: usize,
    pub seed: u64,
    pub trials: u64,
    pub bound: u64,
    pub format: Format,
    pub allow_large: bool,
}

impl CliConfig {
    pub fn new(command: Command, n: usize) -> Self {
        CliConfig {
            command,
            n,
            seed: 0,
            trials: 50,
            bound: 10,
            format: Format::Json,
            allow_large: false,
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegeneratePoint(_)
            | Error::SamplingExhausted { .. }
            | Error::DivisionByZero
            | Error::Overflow(_) => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub fn run(config: &CliConfig) -> Outcome {
    match execute(config) {
        Ok((passed, stdout)) => Outcome {
            code: if passed { EXIT_OK } else { EXIT_FAILED },
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Failed(msg)) => Outcome {
            code: EXIT_FAILED,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn validate(config: &CliConfig) -> Result<(), CliError> {
    if config.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if config.n > DEFAULT_MAX_N && !config.allow_large {
        return Err(CliError::Usage(format!(
            "--n {} exceeds the default cap of {DEFAULT_MAX_N}; pass --allow-large to override",
            config.n
        )));
    }
    if config.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if config.bound == 0 {
        return Err(CliError::Usage("--bound must be at least 1".into()));
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable output");
    out.push('\n');
    out
}

fn execute(config: &CliConfig) -> Result<(bool, String), CliError> {
    validate(config)?;
    let n = config.n;
    let text = config.format == Format::Text;
    match &config.command {
        Command::Table { stage } => {
            let table = generator_table(n, *stage);
            let out = if text {
                table.iter().map(|col| join(col) + "\n").collect()
            } else {
                json(&table)
            };
            Ok((true, out))
        }
        Command::Weights { stage } => {
            let table = weight_table(n, *stage)?;
            let out = if text {
                table.iter().map(|col| join(col) + "\n").collect()
            } else {
                json(&table)
            };
            Ok((true, out))
        }
        Command::Eval { id, matrix_path } => {
            let id: InvariantId = id.parse()?;
            id.validate(n)?;
            let x = read_matrix(matrix_path, n)?;
            let value = GeneratorContext::new(&x)?.evaluate(&id)?;
            let out = if text {
                format!("{value}\n")
            } else {
                json(&EvalOutput { id, n, value })
            };
            Ok((true, out))
        }
        Command::Verify { suite } => {
            let registry = SuiteRegistry::builtin();
            let suite = registry.get(suite)?;
            let report = suite.run(&SuiteConfig::new(n, config.trials, config.seed, config.bound))?;
            let out = if text { report_text(&report) } else { json(&report) };
            Ok((report.passed(), out))
        }
        Command::Rank { system } => {
            let ids = system.ids(n);
            let report = independence_rank(&ids, n, config.seed, config.bound)?;
            let out = if text {
                format!(
                    "system={system} n={n} rank={} expected={} attempts={} certified={}\n",
                    report.rank,
                    report.expected,
                    report.attempts,
                    report.certified()
                )
            } else {
                json(&report)
            };
            Ok((report.certified(), out))
        }
        Command::Lattice { stage } => {
            let generators = stage_generators(n, *stage);
            let basis = kernel_lattice(&weight_matrix(n, &generators)?)?;
            let out = if text {
                let mut s = format!("generators: {}\n", join(&generators));
                for v in &basis.vectors {
                    let _ = writeln!(s, "{}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
                }
                s
            } else {
                json(&LatticeOutput {
                    n,
                    stage: stage.name(),
                    generators,
                    rank: basis.rank,
                    basis: basis.vectors,
                })
            };
            Ok((true, out))
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn read_matrix(path: &PathBuf, n: usize) -> Result<Matrix<Rational>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let m: Matrix<Rational> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed matrix file {}: {e}", path.display())))?;
    if m.rows() != n || m.cols() != n {
        return Err(CliError::Usage(format!(
            "matrix in {} is {}x{}, expected {n}x{n}",
            path.display(),
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

fn report_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "check={} n={} trials={} seed={} passes={} failures={}\n",
        report.check,
        report.n,
        report.trials,
        report.seed,
        report.passes,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(s, "  trial {}: {} lhs={} rhs={}", f.trial, f.target, f.lhs, f.rhs);
        for (name, m) in &f.witnesses {
            let _ = writeln!(s, "    {name} = {m}");
        }
    }
    s
}

#[derive(Serialize)]
struct EvalOutput {
    id: InvariantId,
    n: usize,
    value: Rational,
}

#[derive(Serialize)]
struct LatticeOutput {
    n: usize,
    stage: &'static str,
    generators: Vec<InvariantId>,
    rank: usize,
    basis: Vec<Vec<i64>>,
}
