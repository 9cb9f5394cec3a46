//! The diffusion equation `∂u/∂t = ∇²u + s` on a periodic domain.
//!
//! In Fourier space each mode obeys `dû/dt = -ω²û + ŝ`; without a source the
//! closed form `û(t) = f̂·e^{-ω²t}` applies and the grid mean is conserved.

use crate::fourier2d::{build_wavenumbers, fft2_forward, fft2_inverse, Grid2D, Spectrum2D};
use crate::integrate::OdeState;
use crate::pde::{march_with_outputs, validate_output_times, SolveError, TimeSource};
use crate::Complex;

pub struct DiffusionProblem {
    pub initial: Grid2D,
    /// Space-time reaction term; `None` enables the closed-form path.
    pub source: Option<Box<dyn TimeSource>>,
    pub t_final: f64,
    /// Time step, used only on the ODE path.
    pub dt: f64,
    pub output_times: Vec<f64>,
}

fn inverse_frames(
    meta: &crate::fourier2d::GridMeta,
    spectra: Vec<Vec<Complex>>,
) -> Result<Vec<Grid2D>, SolveError> {
    spectra
        .into_iter()
        .map(|values| {
            fft2_inverse(&Spectrum2D {
                meta: *meta,
                values,
                layout: crate::fourier1d::Layout::Natural,
            })
            .map_err(SolveError::from)
        })
        .collect()
}

/// Exact per-mode decay `û(t) = f̂·e^{-ω²t}` (sourceless problems only).
pub fn solve_diffusion_closed(problem: &DiffusionProblem) -> Result<Vec<Grid2D>, SolveError> {
    if problem.source.is_some() {
        return Err(SolveError::UnsupportedSource("a source term (use the ODE path)"));
    }
    validate_output_times(&problem.output_times, problem.t_final)?;
    let initial_hat = fft2_forward(&problem.initial)?;
    let table = build_wavenumbers(&problem.initial.meta);
    let spectra = problem
        .output_times
        .iter()
        .map(|&t| {
            initial_hat
                .values
                .iter()
                .zip(&table.omega_sq)
                .map(|(f_hat, &w2)| f_hat * (-w2 * t).exp())
                .collect()
        })
        .collect();
    inverse_frames(&problem.initial.meta, spectra)
}

/// RK4 integration of `dû/dt = -ω²û + ŝ(t)` in spectral space.
///
/// The physical source is sampled and transformed at every stage time. A
/// warning is logged when `dt·ω²_max` exceeds the RK4 real-axis stability
/// limit of 2.8; blowup surfaces as [`SolveError::Unstable`].
pub fn solve_diffusion_ode(problem: &DiffusionProblem) -> Result<Vec<Grid2D>, SolveError> {
    if problem.dt <= 0.0 {
        return Err(SolveError::NonPositiveDt(problem.dt));
    }
    validate_output_times(&problem.output_times, problem.t_final)?;
    let meta = problem.initial.meta;
    let table = build_wavenumbers(&meta);
    let omega_sq_max = table.omega_sq.iter().cloned().fold(0.0, f64::max);
    if problem.dt * omega_sq_max > 2.8 {
        log::warn!(
            "diffusion time step dt = {} exceeds the RK4 stability bound {:.3e}",
            problem.dt,
            2.8 / omega_sq_max
        );
    }
    let initial_hat = fft2_forward(&problem.initial)?;
    let state = OdeState::new(vec![initial_hat.values], 0.0);
    let source = problem.source.as_deref();
    let rhs = |t: f64, y: &[Vec<Complex>]| {
        let mut du: Vec<Complex> = y[0]
            .iter()
            .zip(&table.omega_sq)
            .map(|(u_hat, &w2)| -w2 * u_hat)
            .collect();
        if let Some(src) = source {
            let s_hat = fft2_forward(&src.eval(t, &meta))
                .expect("source grid shares the validated metadata");
            for (d, s) in du.iter_mut().zip(&s_hat.values) {
                *d += s;
            }
        }
        vec![du]
    };
    let mut spectra = Vec::with_capacity(problem.output_times.len());
    march_with_outputs(state, problem.dt, &problem.output_times, rhs, |s| {
        spectra.push(s.components[0].clone());
    })?;
    inverse_frames(&meta, spectra)
}
