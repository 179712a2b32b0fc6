use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use tdapipe::pipeline::{execute, output_dir, Pipeline, PipelineError, RunConfig, Stage};

/// Persistence-diagram classification experiments from a TOML config.
#[derive(Debug, Parser)]
#[command(version)]
struct Cli {
    /// Stage to run: generate, diagrams, vectorize, train, stats, plot or
    /// run (all stages).
    #[arg(value_name = "STAGE")]
    stage_arg: Option<String>,
    /// Same as the positional STAGE.
    #[arg(long)]
    stage: Option<String>,
    /// TOML run configuration.
    #[arg(long, value_name = "FILE")]
    config: PathBuf,
    /// Overrides the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; defaults to the config value, then one per core.
    #[arg(long)]
    threads: Option<usize>,
    /// Output directory; overrides TDAPIPE_OUT and the config.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

fn main_inner(cli: Cli) -> Result<(), PipelineError> {
    let stage = match (cli.stage_arg.as_deref(), cli.stage.as_deref()) {
        (Some(a), Some(b)) if a != b => {
            return Err(PipelineError::Config(format!("conflicting stages `{a}` and `{b}`")))
        }
        (Some(s), _) | (None, Some(s)) => Some(s),
        (None, None) => None,
    };
    let stages: Vec<Stage> = match stage {
        None | Some("run") => Vec::new(),
        Some(s) => vec![s.parse()?],
    };
    let mut config = RunConfig::from_file(&cli.config)?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if cli.threads == Some(0) {
        return Err(PipelineError::Config("--threads must be at least 1".into()));
    }
    let threads = cli.threads.or(config.threads);
    let out = output_dir(cli.out.as_deref(), &config);
    let pipeline = Pipeline::new(config, &out)?;
    execute(&pipeline, &stages, threads)?;
    eprintln!("results in {}", out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match main_inner(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
