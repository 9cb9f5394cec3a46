//! Spectral solution of `∇²u = s` with periodic boundaries.
//!
//! The zero-frequency component of the right-hand side is removed by mean
//! subtraction, and the free constant of the potential is fixed by the
//! zero-mean gauge `û(0,0) = 0`.

use crate::fourier2d::{build_wavenumbers, fft2_forward, fft2_inverse, Grid2D, Spectrum2D};
use crate::pde::{grid_mean, SolveError};

#[derive(Debug, Clone)]
pub struct PoissonProblem {
    pub source: Grid2D,
}

/// Solve `∇²u = s - s̄`; the returned potential has zero mean.
pub fn solve_poisson(problem: &PoissonProblem) -> Result<Grid2D, SolveError> {
    let source = &problem.source;
    let mean = grid_mean(source);
    let balanced = Grid2D::new(
        source.meta,
        source.values.iter().map(|v| v - mean).collect(),
    );
    let mut spectrum = fft2_forward(&balanced)?;
    divide_by_minus_omega_sq(&mut spectrum);
    Ok(fft2_inverse(&spectrum)?)
}

/// û = -ĝ/ω² away from the zero mode; û(0,0) = 0 is the gauge choice.
fn divide_by_minus_omega_sq(spectrum: &mut Spectrum2D) {
    let table = build_wavenumbers(&spectrum.meta);
    for (value, &w2) in spectrum.values.iter_mut().zip(&table.omega_sq) {
        if w2 == 0.0 {
            *value = crate::Complex::new(0.0, 0.0);
        } else {
            *value = -*value / w2;
        }
    }
}

/// Max-norm of `(spectral Laplacian of u) - (s - s̄)`.
pub fn poisson_residual(u: &Grid2D, s: &Grid2D) -> Result<f64, SolveError> {
    if u.meta != s.meta {
        return Err(SolveError::MetadataMismatch);
    }
    let mut spectrum = fft2_forward(u)?;
    let table = build_wavenumbers(&spectrum.meta);
    for (value, &w2) in spectrum.values.iter_mut().zip(&table.omega_sq) {
        *value *= -w2;
    }
    let laplacian = fft2_inverse(&spectrum)?;
    let s_mean = grid_mean(s);
    let residual = laplacian
        .values
        .iter()
        .zip(&s.values)
        .map(|(lap, src)| (lap - (src - s_mean)).norm())
        .fold(0.0, f64::max);
    Ok(residual)
}
