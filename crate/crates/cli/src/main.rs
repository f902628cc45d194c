//! `hodokit` command line: classify, sample, verify, sweep.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{SuiteArg, SweepParam};
use config::RunConfig;
use error::CliResult;

#[derive(Parser, Debug)]
#[command(name = "hodokit", version, about = "Relativistic and Newtonian Coulomb hodographs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// JSON run configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,

    #[command(flatten)]
    run: RunConfig,
}

impl Common {
    fn resolve(&self) -> CliResult<RunConfig> {
        let base = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        Ok(base.overlay(&self.run))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print regime, orbit class and orbit invariants as JSON.
    Classify(Common),
    /// Sample hodograph and orbit to CSV, JSON or SVG.
    Sample(Common),
    /// Run a verification suite over the built-in parameter matrix.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,

        /// Overrides every threshold (default: HODOKIT_TOL, then per-suite values).
        #[arg(long)]
        tolerance: Option<f64>,

        /// JSON run configuration; only `tolerance` is used.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Tabulate orbit properties while one parameter varies.
    Sweep {
        #[arg(long, value_enum)]
        param: SweepParam,

        #[arg(long, allow_negative_numbers = true)]
        from: f64,

        #[arg(long, allow_negative_numbers = true)]
        to: f64,

        #[arg(long, default_value_t = 11)]
        steps: usize,

        #[command(flatten)]
        common: Common,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Classify(common) => {
            let cfg = common.resolve()?;
            commands::emit(&commands::cmd_classify(&cfg)?, None)
        }
        Command::Sample(common) => {
            let cfg = common.resolve()?;
            commands::emit(&commands::cmd_sample(&cfg)?, cfg.output.as_deref())
        }
        Command::Verify { suite, tolerance, config } => {
            let file = match config {
                Some(path) => RunConfig::from_file(&path)?,
                None => RunConfig::default(),
            };
            let merged = file.overlay(&RunConfig { tolerance, ..Default::default() });
            commands::cmd_verify(suite, merged.tolerance()?, &mut std::io::stdout())
        }
        Command::Sweep { param, from, to, steps, common } => {
            let cfg = common.resolve()?;
            commands::emit(&commands::cmd_sweep(&cfg, param, from, to, steps)?, cfg.output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
