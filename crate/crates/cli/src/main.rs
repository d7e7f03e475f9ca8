use std::path::PathBuf;
use std::process::ExitCode;

use adjinv::invariants::Stage;
use adjinv::verify::GeneratorSystem;
use adjinv_cli::{run, CliConfig, Command, Format};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "adjinv",
    version,
    about = "Exact invariants of the adjoint action of GL(n) under Borel subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Matrix dimension.
    #[arg(long, global = true, default_value_t = 0, hide_default_value = true)]
    n: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, default_value_t = 50)]
    trials: u64,

    /// Bound on sampled numerators and denominators.
    #[arg(long, global = true, default_value_t = 10)]
    bound: u64,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Accept n above the default cap of 6.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generator triangle at a chain stage.
    Table {
        #[arg(long, default_value = "base", value_parser = parse_stage)]
        stage: Stage,
    },
    /// Torus weights of the generator triangle.
    Weights {
        #[arg(long, default_value = "base", value_parser = parse_stage)]
        stage: Stage,
    },
    /// Evaluate one generator at a matrix read from a JSON file.
    Eval {
        #[arg(long)]
        id: String,
        #[arg(long = "matrix")]
        matrix_path: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        /// One of u-invariance, b-invariance, semi-invariance, chain-identity, adjugate, n2-closed-forms.
        #[arg(long)]
        suite: String,
    },
    /// Jacobian rank of the J or B generator system.
    Rank {
        #[arg(long, value_parser = parse_system)]
        system: GeneratorSystem,
    },
    /// Basis of the invariant-monomial lattice of a stage.
    Lattice {
        #[arg(long, default_value = "final", value_parser = parse_stage)]
        stage: Stage,
    },
}

fn parse_stage(s: &str) -> Result<Stage, String> {
    s.parse().map_err(|e: adjinv::Error| e.to_string())
}

fn parse_system(s: &str) -> Result<GeneratorSystem, String> {
    s.parse().map_err(|e: adjinv::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Table { stage } => Command::Table { stage },
        Cmd::Weights { stage } => Command::Weights { stage },
        Cmd::Eval { id, matrix_path } => Command::Eval { id, matrix_path },
        Cmd::Verify { suite } => Command::Verify { suite },
        Cmd::Rank { system } => Command::Rank { system },
        Cmd::Lattice { stage } => Command::Lattice { stage },
    };
    let c = cli.common;
    let config = CliConfig {
        command,
        n: c.n,
        seed: c.seed,
        trials: c.trials,
        bound: c.bound,
        format: match c.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
        allow_large: c.allow_large,
    };
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
