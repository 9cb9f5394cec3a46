//! Spectral solvers for the Poisson, diffusion and wave equations on 2D
//! periodic domains. Diffusion coefficient and wave speed are fixed to 1;
//! other values follow by rescaling time as `t → ct`.

mod diffusion;
mod poisson;
mod wave;

pub use diffusion::{solve_diffusion_closed, solve_diffusion_ode, DiffusionProblem};
pub use poisson::{poisson_residual, solve_poisson, PoissonProblem};
pub use wave::{solve_wave_closed, solve_wave_rk4, wave_mode_closed, WaveProblem, WaveSource};

use thiserror::Error;

use crate::fourier2d::{Grid2D, GridMeta, Transform2Error};
use crate::integrate::{rk4_step, Derivative, IntegrationError, OdeState};
use crate::Complex;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Transform(#[from] Transform2Error),
    #[error("grids do not share metadata")]
    MetadataMismatch,
    #[error("the closed-form path does not support {0}")]
    UnsupportedSource(&'static str),
    #[error("output times must ascend within [0, t_final]; offending value {0}")]
    BadOutputTime(f64),
    #[error("integration became non-finite at t = {time} (time step too large?)")]
    Unstable { time: f64 },
    #[error("time step must be positive, got {0}")]
    NonPositiveDt(f64),
}

impl From<IntegrationError> for SolveError {
    fn from(err: IntegrationError) -> Self {
        match err {
            IntegrationError::NonFinite { time } => SolveError::Unstable { time },
            IntegrationError::NonPositiveDt(dt) => SolveError::NonPositiveDt(dt),
        }
    }
}

/// A source term evaluated on a grid at a given time.
pub trait TimeSource: Sync {
    fn eval(&self, t: f64, meta: &GridMeta) -> Grid2D;
}

impl<F> TimeSource for F
where
    F: Fn(f64, f64, f64) -> f64 + Sync,
{
    fn eval(&self, t: f64, meta: &GridMeta) -> Grid2D {
        Grid2D::from_fn(*meta, |x, y| self(t, x, y))
    }
}

/// Gaussian source orbiting the origin while oscillating in time:
/// `A·exp(-[(x-x₀)² + (y-y₀)²]/σ_s²)·cos(γt)` with
/// `(x₀, y₀) = r_s·(cos Ωt, sin Ωt)`.
#[derive(Debug, Clone, Copy)]
pub struct OrbitingGaussianSource {
    pub amplitude: f64,
    pub sigma: f64,
    pub orbit_radius: f64,
    pub orbit_omega: f64,
    pub gamma: f64,
}

impl OrbitingGaussianSource {
    pub fn new(amplitude: f64, sigma: f64, orbit_radius: f64, orbit_omega: f64, gamma: f64) -> Self {
        assert!(sigma > 0.0, "source width must be positive");
        assert!(orbit_radius >= 0.0, "orbit radius must be non-negative");
        Self { amplitude, sigma, orbit_radius, orbit_omega, gamma }
    }
}

/// Sample an orbiting Gaussian source on a grid at time `t`.
pub fn orbiting_source_eval(src: &OrbitingGaussianSource, t: f64, meta: &GridMeta) -> Grid2D {
    let x0 = src.orbit_radius * (src.orbit_omega * t).cos();
    let y0 = src.orbit_radius * (src.orbit_omega * t).sin();
    let osc = (src.gamma * t).cos();
    let inv_sigma_sq = 1.0 / (src.sigma * src.sigma);
    Grid2D::from_fn(*meta, |x, y| {
        let r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
        src.amplitude * (-r2 * inv_sigma_sq).exp() * osc
    })
}

impl TimeSource for OrbitingGaussianSource {
    fn eval(&self, t: f64, meta: &GridMeta) -> Grid2D {
        orbiting_source_eval(self, t, meta)
    }
}

/// Pairwise (cascade) summation; suppresses cancellation noise in the small
/// differences the convergence test divides.
pub fn pairwise_sum(values: &[Complex]) -> Complex {
    if values.len() <= 16 {
        let mut acc = Complex::new(0.0, 0.0);
        for v in values {
            acc += v;
        }
        acc
    } else {
        let (lo, hi) = values.split_at(values.len() / 2);
        pairwise_sum(lo) + pairwise_sum(hi)
    }
}

/// Arithmetic mean of all samples, the discrete `(1/V)∫·dⁿx` on a uniform grid.
pub fn grid_mean(grid: &Grid2D) -> Complex {
    pairwise_sum(&grid.values) / grid.meta.len() as f64
}

pub(crate) fn validate_output_times(times: &[f64], t_final: f64) -> Result<(), SolveError> {
    let mut prev = 0.0;
    for &t in times {
        if !t.is_finite() || t < 0.0 || t > t_final || t < prev {
            return Err(SolveError::BadOutputTime(t));
        }
        prev = t;
    }
    Ok(())
}

/// March RK4 from `state` hitting every output time exactly (the last step
/// before an output time is shortened if needed), invoking `capture` at each.
pub(crate) fn march_with_outputs(
    mut state: OdeState,
    dt: f64,
    output_times: &[f64],
    rhs: impl Fn(f64, &[Vec<Complex>]) -> Derivative,
    mut capture: impl FnMut(&OdeState),
) -> Result<(), SolveError> {
    if dt <= 0.0 {
        return Err(SolveError::NonPositiveDt(dt));
    }
    for &t_out in output_times {
        let eps = 1e-12 * t_out.max(1.0);
        while state.time < t_out - eps {
            let step = dt.min(t_out - state.time);
            state = rk4_step(&state, step, &rhs)?;
        }
        capture(&state);
    }
    Ok(())
}
