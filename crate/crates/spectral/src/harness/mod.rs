//! Experiment front end: configuration, benchmarking, experiment runners,
//! convergence testing, and file I/O. The `spectral` binary is a thin CLI
//! over this module.

pub mod bench;
pub mod commands;
pub mod config;
pub mod gridio;

pub use bench::{cmd_bench, loglog_fit, log_model_r2, write_bench_csv, BenchConfig, BenchRecord};
pub use commands::{
    cmd_convergence, cmd_diffusion, cmd_poisson, cmd_transform_demo, cmd_wave, ConvergenceConfig,
    ConvergenceReport, DiffusionConfig, DiffusionMethod, PoissonConfig, WaveConfig, WaveMode,
};
pub use config::ConfigMap;
pub use gridio::{read_grid_csv, write_grid_csv, GridIoError};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Grid(#[from] GridIoError),
}

impl HarnessError {
    /// Process exit code: 2 config, 3 numeric, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) => 2,
            HarnessError::Numeric(_) => 3,
            HarnessError::Io(_) | HarnessError::Grid(_) => 4,
        }
    }
}

impl From<crate::pde::SolveError> for HarnessError {
    fn from(err: crate::pde::SolveError) -> Self {
        HarnessError::Numeric(err.to_string())
    }
}

impl From<crate::fourier1d::TransformError> for HarnessError {
    fn from(err: crate::fourier1d::TransformError) -> Self {
        HarnessError::Numeric(err.to_string())
    }
}
