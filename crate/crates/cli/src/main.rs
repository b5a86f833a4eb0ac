use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cotame_core::verify::{
    self, centralizer, foundations, words, Config, Format, Mode, Object, Report,
};

#[derive(Parser)]
#[command(
    name = "cotame",
    version,
    about = "Replay exact checks on the exponential automorphism and its lifts"
)]
struct Cli {
    /// Also write the structured report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Term budget for materialized polynomials in word checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_BUDGET)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identities for Δ, the scalings, the lifted flow and π.
    Foundations,
    /// One case or case group, e.g. `L6.viii` or `L4.ii(2,3)`.
    Lemma {
        id: String,
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: u32,
    },
    /// Degrees of words of length 1 or 2.
    #[command(alias = "theorem1")]
    Words {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        s: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Scalings commuting with the flow.
    Centralizer,
    /// Print a named object.
    Emit {
        object: ObjectArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// List case ids.
    Cases,
    /// Every check.
    All {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectArg {
    F,
    R,
    G,
    Delta,
    DeltaPrime,
    Phi,
    PhiPrime,
    Pi,
    Beta,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

impl From<ObjectArg> for Object {
    fn from(o: ObjectArg) -> Self {
        match o {
            ObjectArg::F => Object::F,
            ObjectArg::R => Object::R,
            ObjectArg::G => Object::G,
            ObjectArg::Delta => Object::Delta,
            ObjectArg::DeltaPrime => Object::DeltaPrime,
            ObjectArg::Phi => Object::Phi,
            ObjectArg::PhiPrime => Object::PhiPrime,
            ObjectArg::Pi => Object::Pi,
            ObjectArg::Beta => Object::Beta,
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let reports: Vec<Report> = match cli.command {
        Command::Emit { object, format } => {
            print!("{}", verify::emit(object.into(), format.into())?);
            return Ok(true);
        }
        Command::Cases => {
            for spec in verify::roster() {
                println!("{}", spec.id);
            }
            return Ok(true);
        }
        Command::Foundations => foundations::verify_foundations(),
        Command::Lemma {
            id,
            numeric,
            seed,
            trials,
        } => {
            let mode = if numeric {
                Mode::Numeric { seed, trials }
            } else {
                Mode::Symbolic
            };
            verify::verify_lemma(&id, mode)?
        }
        Command::Words { s, seed } => words::verify_words(s, seed, cli.budget)?,
        Command::Centralizer => centralizer::verify_centralizer(),
        Command::All { seed, trials } => verify::run_all(&Config {
            seed,
            trials,
            budget: cli.budget,
            ..Config::default()
        }),
    };
    print!("{}", verify::to_text(&reports));
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} checks, {failed} not passing", reports.len());
    if let Some(path) = &cli.report {
        fs::write(path, verify::emit_reports(&reports, Format::Structured))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(failed == 0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
