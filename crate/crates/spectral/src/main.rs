use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spectral::harness::{
    cmd_bench, cmd_convergence, cmd_diffusion, cmd_poisson, cmd_transform_demo, cmd_wave,
    write_bench_csv, BenchConfig, ConfigMap, ConvergenceConfig, DiffusionConfig, HarnessError,
    PoissonConfig, WaveConfig,
};

/// Spectral PDE experiment harness.
#[derive(Parser)]
#[command(name = "spectral", version, about)]
struct Cli {
    /// Optional key=value config file overriding experiment defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory for CSV artifacts.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,

    /// RNG seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker thread count (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time the naive DFT against the FFT over a range of sizes.
    Bench,
    /// Write the Gaussian spectrum demo in natural and centered layouts.
    TransformDemo,
    /// Solve the Gaussian-sourced Poisson equation.
    Poisson,
    /// Evolve the periodic diffusion equation.
    Diffusion,
    /// Evolve the periodic wave equation (pulse and/or orbiting source).
    Wave,
    /// Estimate the RK4 self-convergence factor from three resolutions.
    Convergence,
}

fn load_config(cli: &Cli) -> Result<ConfigMap, HarnessError> {
    match &cli.config {
        Some(path) => ConfigMap::from_file(path),
        None => Ok(ConfigMap::default()),
    }
}

fn run(cli: Cli) -> Result<(), HarnessError> {
    let mut map = load_config(&cli)?;
    match cli.command {
        Command::Bench => {
            let mut cfg = BenchConfig { seed: cli.seed, ..Default::default() };
            if let Some(v) = map.take_list("sizes")? {
                cfg.sizes = v;
            }
            if let Some(v) = map.take("repetitions")? {
                cfg.repetitions = v;
            }
            map.finish()?;
            let records = cmd_bench(&cfg)?;
            std::fs::create_dir_all(&cli.out)?;
            write_bench_csv(&records, &cli.out.join("bench.csv"))?;
        }
        Command::TransformDemo => {
            map.finish()?;
            cmd_transform_demo(&cli.out)?;
        }
        Command::Poisson => {
            let mut cfg = PoissonConfig {
                out_dir: cli.out.clone(),
                seed: cli.seed,
                ..Default::default()
            };
            cfg.apply_map(&mut map)?;
            map.finish()?;
            cmd_poisson(&cfg)?;
        }
        Command::Diffusion => {
            let mut cfg = DiffusionConfig {
                out_dir: cli.out.clone(),
                seed: cli.seed,
                ..Default::default()
            };
            cfg.apply_map(&mut map)?;
            map.finish()?;
            cmd_diffusion(&cfg)?;
        }
        Command::Wave => {
            let mut cfg = WaveConfig {
                out_dir: cli.out.clone(),
                seed: cli.seed,
                ..Default::default()
            };
            cfg.apply_map(&mut map)?;
            map.finish()?;
            cmd_wave(&cfg)?;
        }
        Command::Convergence => {
            let mut cfg = ConvergenceConfig {
                out_dir: cli.out.clone(),
                seed: cli.seed,
                ..Default::default()
            };
            cfg.apply_map(&mut map)?;
            map.finish()?;
            cmd_convergence(&cfg)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure thread pool: {err}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
