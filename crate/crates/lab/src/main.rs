use std::path::PathBuf;
use std::process::ExitCode;

use bonnesen_lab::config::{parse_vertex_range, DEFAULT_DENOM_BOUND};
use bonnesen_lab::{run_campaign, ExperimentConfig, Field, LabError, Mode};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Chain,
    Certify,
    Lemma,
    Convergence,
}

/// Random experiments on sumset volume bounds for convex bodies.
///
/// LAB_MODE=exact|float selects the scalar field for planar runs.
#[derive(Debug, Parser)]
#[command(name = "lab", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 2)]
    dim: u32,
    #[arg(long)]
    out: PathBuf,
    /// Largest denominator of random rational coordinates.
    #[arg(long, default_value_t = DEFAULT_DENOM_BOUND)]
    denom_bound: i64,
    /// Vertex counts as MIN..MAX (inclusive).
    #[arg(long)]
    vertices: Option<String>,
}

fn config(cli: Cli) -> Result<ExperimentConfig, LabError> {
    let mode = match cli.command {
        Command::Chain => Mode::Chain,
        Command::Certify => Mode::Certify,
        Command::Lemma => Mode::Lemma,
        Command::Convergence => Mode::Convergence,
    };
    let mut c = ExperimentConfig::new(mode, cli.seed, cli.trials, cli.dim, cli.out);
    c.denom_bound = cli.denom_bound;
    c.field = Field::from_env()?;
    if let Some(v) = cli.vertices {
        c.vertex_range = parse_vertex_range(&v)?;
    }
    c.validate()?;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let summary = config(cli).and_then(|c| run_campaign(&c));
    match summary {
        Ok(s) => {
            println!("{}", s.render());
            for e in s.errors.iter().take(10) {
                eprintln!("{e}");
            }
            ExitCode::from(u8::from(s.violations() > 0))
        }
        Err(e) => {
            eprintln!("lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
