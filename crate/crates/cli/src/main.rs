use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qshuffle::Window;
use qshuffle_cli::commands::{self, Outcome, RunConfig};
use qshuffle_cli::input::{parse_cartan, parse_orientation, parse_window};
use qshuffle_cli::{selftest, CliError};

#[derive(Parser)]
#[command(
    name = "qshuffle",
    version,
    about = "Exact shuffle-algebra computations"
)]
struct Cli {
    /// Builtin type (A2, B2, C3, D4, G2, A1xA1, ...) or a Cartan JSON file
    #[arg(long, global = true, default_value = "A2")]
    cartan: String,
    /// Pole orientation of the canonical form: default or printed
    #[arg(long, global = true, default_value = "default")]
    orientation: String,
    /// Exponent window lo:hi for series checks
    #[arg(
        long,
        global = true,
        default_value = "-8:8",
        allow_hyphen_values = true
    )]
    window: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    json: Option<std::path::PathBuf>,
    /// Leave wall-clock times out of reports
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Image of a word under the generator map
    Product { word: String },
    /// Image of a quantum Serre relation
    Serre {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        modes: Vec<i32>,
        #[arg(long, allow_negative_numbers = true)]
        s: i32,
    },
    /// Wheel conditions of a word's image for every pair of roots
    Wheel { word: String },
    /// Vanishing of the delta-function identity's left side
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Also compare both sides as distributions on the window
        #[arg(long)]
        window_check: bool,
    },
    /// Seeded randomized property checks
    Selftest {
        #[arg(long, default_value_t = 50)]
        cases: u32,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let window: Window = parse_window(&cli.window)?;
    let cfg = RunConfig {
        cartan_spec: cli.cartan.clone(),
        cartan: parse_cartan(&cli.cartan)?,
        orientation: parse_orientation(&cli.orientation)?,
        window,
        seed: cli.seed,
        timing: !cli.no_timing,
    };
    match &cli.command {
        Command::Product { word } => commands::cmd_product(&cfg, word),
        Command::Serre {
            alpha,
            beta,
            modes,
            s,
        } => commands::cmd_serre(&cfg, *alpha, *beta, modes, *s),
        Command::Wheel { word } => commands::cmd_wheel(&cfg, word),
        Command::Identities { m, window_check } => {
            commands::cmd_identities(&cfg, *m, *window_check)
        }
        Command::Selftest { cases } => Ok(selftest::run(cfg.seed, *cases)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.json).expect("reports serialize");
    text.push('\n');
    let written = match &cli.json {
        Some(path) => std::fs::write(path, &text).map_err(|e| (path.display().to_string(), e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| ("stdout".into(), e)),
    };
    if let Err((path, e)) = written {
        eprintln!("error: {path}: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::from(outcome.exit as u8)
}
