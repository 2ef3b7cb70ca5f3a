use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use jordan_strata::report::{cmd_classify, cmd_embed, cmd_reduce, EmbedKind};
use jordan_strata::verify::cmd_verify;
use jordan_strata::{json, Report};
use serde_json::Value;

/// Exact checks on rank-3 Jordan algebras, their strata and momentum maps.
#[derive(Parser, Debug)]
#[command(name = "jordan-strata", version)]
struct Cli {
    /// Format of the summary written to standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the full JSON report to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stratum, det and sharp of a Jordan element (JSON file, or stdin).
    Classify { input: Option<PathBuf> },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, env = "JORDAN_STRATA_SEED", default_value_t = 1)]
        seed: u64,
    },
    /// Reduce an oscillator configuration (JSON file, or stdin).
    Reduce { input: Option<PathBuf> },
    /// Embed vectors given as JSON arrays: veronese u | segre u w | plucker u w | octonionic [A].
    Embed {
        #[arg(value_enum)]
        kind: Kind,
        vectors: Vec<String>,
        #[arg(long, env = "JORDAN_STRATA_SEED", default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Veronese,
    Segre,
    Plucker,
    Octonionic,
}

impl From<Kind> for EmbedKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Veronese => EmbedKind::Veronese,
            Kind::Segre => EmbedKind::Segre,
            Kind::Plucker => EmbedKind::Plucker,
            Kind::Octonionic => EmbedKind::Octonionic,
        }
    }
}

const EXIT_MATH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
    }
    Ok(text)
}

fn parse_input(path: Option<&Path>) -> anyhow::Result<Value> {
    Ok(json::parse_text(&read_input(path)?)?)
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    Ok(match &cli.command {
        Command::Classify { input } => cmd_classify(&parse_input(input.as_deref())?)?,
        Command::Reduce { input } => cmd_reduce(&parse_input(input.as_deref())?)?,
        Command::Verify { suite, case, samples, seed } => cmd_verify(suite, case.as_deref(), *samples, *seed)?,
        Command::Embed { kind, vectors, seed } => {
            let values = vectors
                .iter()
                .enumerate()
                .map(|(i, v)| json::parse_text(v).with_context(|| format!("vector {i}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            cmd_embed((*kind).into(), &values, *seed)?
        }
    })
}

fn emit(cli: &Cli, report: &Report) -> anyhow::Result<()> {
    if let Some(path) = &cli.out {
        fs::write(path, report.to_json_string()).with_context(|| format!("writing {}", path.display()))?;
    }
    let summary = match cli.format {
        Format::Json => report.to_json_string(),
        Format::Text => report.to_text(),
    };
    io::stdout().write_all(summary.as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MATH)
    }
}
