use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pandemos::harness::{replay_manifest, single_result, write_outputs, BatchResult, Manifest, SCENARIOS};
use pandemos::{builtin, parse_config, run_batch, run_single, ScenarioConfig, SimError};

#[derive(Parser)]
#[command(
    name = "pandemos",
    version,
    about = "Agent-based epidemic, behaviour and economy simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation.
    Run {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run a batch of simulations with consecutive seeds and aggregate them.
    Batch {
        #[command(flatten)]
        config: ConfigArg,
        /// Defaults to the `runs` value of the configuration.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        runs: Option<u64>,
        #[arg(long, default_value_t = 0)]
        base_seed: u64,
        #[command(flatten)]
        out: OutArg,
        /// Worker threads. Defaults to one per core.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        parallel: Option<u64>,
    },
    /// Check a configuration without running it.
    Validate {
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Rerun the batch described by a manifest.
    Replay {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        out: OutArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        parallel: Option<u64>,
    },
    /// Built-in scenarios.
    Scenarios {
        #[command(subcommand)]
        action: ScenariosAction,
    },
}

#[derive(Subcommand)]
enum ScenariosAction {
    List,
    /// Print a built-in scenario as TOML.
    Show {
        name: String,
    },
}

#[derive(Args)]
struct ConfigArg {
    /// TOML file or the name of a built-in scenario.
    #[arg(long)]
    config: String,
}

#[derive(Args)]
struct OutArg {
    #[arg(long, env = "PANDEMOS_OUT", default_value = "out")]
    out: PathBuf,
}

fn load_config(arg: &str) -> Result<ScenarioConfig, SimError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| SimError::Argument(format!("{arg}: {e}")))?;
        return parse_config(&text);
    }
    builtin(arg).ok_or_else(|| SimError::Argument(format!("{arg}: no such file or built-in scenario")))
}

fn report(result: &BatchResult, written: &[PathBuf], out: &Path) {
    for (name, s) in result.summary.scalars() {
        println!("{name:>14} {:10.2} ± {:.2}", s.mean, s.ci95);
    }
    println!("wrote {} files to {}", written.len(), out.display());
}

fn threads(parallel: Option<u64>) -> Option<usize> {
    parallel.map(|n| n as usize)
}

fn execute(command: Command) -> Result<(), SimError> {
    match command {
        Command::Run { config, seed, out } => {
            let config = load_config(&config.config)?;
            let result = single_result(run_single(&config, seed)?);
            let written = write_outputs(&out.out, &Manifest::new(&config, 1, seed), &result)?;
            report(&result, &written, &out.out);
        }
        Command::Batch {
            config,
            runs,
            base_seed,
            out,
            parallel,
        } => {
            let config = load_config(&config.config)?;
            let runs = runs.map_or(config.runs, |r| r as usize);
            let result = run_batch(&config, runs, base_seed, threads(parallel))?;
            let written = write_outputs(&out.out, &Manifest::new(&config, runs, base_seed), &result)?;
            report(&result, &written, &out.out);
        }
        Command::Validate { config } => {
            let c = load_config(&config.config)?;
            println!(
                "{}: ok ({} agents, {} ticks, {} policies)",
                c.name,
                c.population.target,
                c.ticks_total,
                c.policies.len()
            );
        }
        Command::Replay {
            manifest,
            out,
            parallel,
        } => {
            let m = Manifest::read(&manifest)?;
            let result = replay_manifest(&m, threads(parallel))?;
            let written = write_outputs(&out.out, &m, &result)?;
            report(&result, &written, &out.out);
        }
        Command::Scenarios { action } => match action {
            ScenariosAction::List => {
                for (name, about) in SCENARIOS {
                    println!("{name:<20} {about}");
                }
            }
            ScenariosAction::Show { name } => {
                let c = builtin(&name).ok_or_else(|| SimError::Argument(format!("unknown scenario {name}")))?;
                print!("{}", c.to_toml());
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 1 } else { 2 })
        }
    }
}
