//! `submaj` command-line front end.
//!
//! Exit codes: 0 the checked relation holds, 1 it is violated, 2 bad input,
//! 3 an iteration failed to converge.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use submaj::tol::MAJORIZATION_REL;
use submaj::verify::DEFAULT_SEED;

use commands::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "submaj",
    version,
    about = "Principal angles, Ritz values and Laplacian spectra under perturbation"
)]
struct Cli {
    /// Emit a JSON report (schema 1) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Principal angles between the column spans of two matrices.
    Angles { x: PathBuf, y: PathBuf },

    /// Change of Ritz values of A between trial subspaces X and Y.
    Ritz {
        a: PathBuf,
        x: PathBuf,
        y: PathBuf,
        /// Use the spectral spread of A over X + Y instead of the global spread.
        #[arg(long)]
        local_spread: bool,
        /// Base factor of the majorization slack.
        #[arg(long, default_value_t = MAJORIZATION_REL, value_parser = positive)]
        tol: f64,
    },

    /// Laplacian spectra of two graphs with the same vertex and edge counts.
    GraphCompare {
        g1: PathBuf,
        g2: PathBuf,
        /// Base factor of the comparison slack.
        #[arg(long, default_value_t = MAJORIZATION_REL, value_parser = positive)]
        tol: f64,
    },

    /// Dilate A (spectrum in [0, 1]) to an orthogonal projector of twice the size.
    Dilate {
        a: PathBuf,
        /// Shift and scale the spectrum of A onto [0, 1] first.
        #[arg(long)]
        normalize: bool,
        /// Trial subspace (matrix file) for the Ritz-preservation check.
        #[arg(long)]
        trial: Option<PathBuf>,
        /// Write the projector here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Randomized check of every registered inequality.
    Verify {
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = "SUBMAJ_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Base factor of the majorization slack.
        #[arg(long, default_value_t = MAJORIZATION_REL, value_parser = positive)]
        tol: f64,
        #[arg(long, default_value_t = 2)]
        min_dim: usize,
        #[arg(long, default_value_t = 12)]
        max_dim: usize,
        /// Directory for reproduction files of failing trials.
        #[arg(long, default_value = "submaj-repro")]
        out: PathBuf,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be positive and finite, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Angles { x, y } => commands::angles(x, y, json),
        Command::Ritz {
            a,
            x,
            y,
            local_spread,
            tol,
        } => commands::ritz(a, x, y, *local_spread, *tol, json),
        Command::GraphCompare { g1, g2, tol } => commands::graph_compare(g1, g2, *tol, json),
        Command::Dilate {
            a,
            normalize,
            trial,
            out,
        } => commands::dilate(a, *normalize, trial.as_deref(), out.as_deref(), json),
        Command::Verify {
            theorems,
            trials,
            seed,
            tol,
            min_dim,
            max_dim,
            out,
        } => {
            let opts = commands::VerifyOptions {
                theorems,
                trials: *trials,
                seed: *seed,
                tol: *tol,
                min_dim: *min_dim,
                max_dim: *max_dim,
                out,
            };
            commands::verify(&opts, json)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Angles { .. } => "angles",
        Command::Ritz { .. } => "ritz",
        Command::GraphCompare { .. } => "graph-compare",
        Command::Dilate { .. } => "dilate",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.holds { 0 } else { 1 })
        }
        Err(failure) => {
            if cli.json {
                println!("{}", failure.to_json(command_name(&cli.command)));
            }
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
