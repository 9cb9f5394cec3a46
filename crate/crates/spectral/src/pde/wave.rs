//! The wave equation `∂²u/∂t² - ∇²u = s` (unit wave speed) on a periodic
//! domain. Each Fourier mode is a forced harmonic oscillator
//! `û'' + ω²û = ŝ`, integrated either in closed form (static sources) or as
//! the first-order system `(û' = v, v' = -ω²û + ŝ(t))` with RK4.

use crate::fourier2d::{build_wavenumbers, fft2_forward, fft2_inverse, Grid2D, GridMeta, Spectrum2D};
use crate::integrate::OdeState;
use crate::pde::{march_with_outputs, validate_output_times, SolveError, TimeSource};
use crate::Complex;

pub enum WaveSource {
    None,
    Static(Grid2D),
    Dynamic(Box<dyn TimeSource>),
}

pub struct WaveProblem {
    /// `u(0, x)`
    pub initial_u: Grid2D,
    /// `∂u/∂t(0, x)`
    pub initial_v: Grid2D,
    pub source: WaveSource,
    pub t_final: f64,
    pub dt: f64,
    pub output_times: Vec<f64>,
}

impl WaveProblem {
    fn validate(&self) -> Result<(), SolveError> {
        if self.initial_u.meta != self.initial_v.meta {
            return Err(SolveError::MetadataMismatch);
        }
        if let WaveSource::Static(grid) = &self.source {
            if grid.meta != self.initial_u.meta {
                return Err(SolveError::MetadataMismatch);
            }
        }
        validate_output_times(&self.output_times, self.t_final)
    }
}

/// Closed-form evolution of one forced oscillator mode; returns `(û, û')`.
///
/// For `ω ≠ 0` the particular solution offsets the cosine branch:
/// `û(t) = (f̂ - ŝ/ω²)·cos ωt + (ĝ/ω)·sin ωt + ŝ/ω²`, which satisfies both
/// the oscillator equation and `û(0) = f̂`. For `ω = 0` the mode is ballistic:
/// `û(t) = ŝt²/2 + ĝt + f̂`.
pub fn wave_mode_closed(
    f_hat: Complex,
    g_hat: Complex,
    s_hat: Complex,
    omega: f64,
    t: f64,
) -> (Complex, Complex) {
    if omega == 0.0 {
        (f_hat + g_hat * t + s_hat * (0.5 * t * t), g_hat + s_hat * t)
    } else {
        let (sin, cos) = (omega * t).sin_cos();
        let offset = s_hat / (omega * omega);
        let u = (f_hat - offset) * cos + g_hat / omega * sin + offset;
        let v = -(f_hat - offset) * omega * sin + g_hat * cos;
        (u, v)
    }
}

fn static_source_spectrum(
    source: &WaveSource,
    meta: &GridMeta,
) -> Result<Vec<Complex>, SolveError> {
    match source {
        WaveSource::None => Ok(vec![Complex::new(0.0, 0.0); meta.len()]),
        WaveSource::Static(grid) => Ok(fft2_forward(grid)?.values),
        WaveSource::Dynamic(_) => {
            Err(SolveError::UnsupportedSource("a time-dependent source (use the RK4 path)"))
        }
    }
}

/// Exact mode-by-mode solution for sourceless or static-source problems.
pub fn solve_wave_closed(problem: &WaveProblem) -> Result<Vec<Grid2D>, SolveError> {
    problem.validate()?;
    let meta = problem.initial_u.meta;
    let s_hat = static_source_spectrum(&problem.source, &meta)?;
    let f_hat = fft2_forward(&problem.initial_u)?;
    let g_hat = fft2_forward(&problem.initial_v)?;
    let table = build_wavenumbers(&meta);
    problem
        .output_times
        .iter()
        .map(|&t| {
            let values = f_hat
                .values
                .iter()
                .zip(&g_hat.values)
                .zip(&s_hat)
                .zip(&table.omega_sq)
                .map(|(((&f, &g), &s), &w2)| wave_mode_closed(f, g, s, w2.sqrt(), t).0)
                .collect();
            fft2_inverse(&Spectrum2D {
                meta,
                values,
                layout: crate::fourier1d::Layout::Natural,
            })
            .map_err(SolveError::from)
        })
        .collect()
}

/// RK4 integration of the first-order system, re-transforming a dynamic
/// source at every stage time (four transforms per step).
///
/// Warns when `dt·ω_max` exceeds the RK4 imaginary-axis stability limit 2.8.
pub fn solve_wave_rk4(problem: &WaveProblem) -> Result<Vec<Grid2D>, SolveError> {
    problem.validate()?;
    if problem.dt <= 0.0 {
        return Err(SolveError::NonPositiveDt(problem.dt));
    }
    let meta = problem.initial_u.meta;
    let table = build_wavenumbers(&meta);
    let omega_max = table.omega_sq.iter().cloned().fold(0.0, f64::max).sqrt();
    if problem.dt * omega_max > 2.8 {
        log::warn!(
            "wave time step dt = {} exceeds the RK4 stability bound {:.3e}",
            problem.dt,
            2.8 / omega_max
        );
    }
    let f_hat = fft2_forward(&problem.initial_u)?;
    let g_hat = fft2_forward(&problem.initial_v)?;
    let static_hat = match &problem.source {
        WaveSource::Static(grid) => Some(fft2_forward(grid)?.values),
        _ => None,
    };
    let state = OdeState::new(vec![f_hat.values, g_hat.values], 0.0);
    let rhs = |t: f64, y: &[Vec<Complex>]| {
        let du = y[1].clone();
        let mut dv: Vec<Complex> = y[0]
            .iter()
            .zip(&table.omega_sq)
            .map(|(u_hat, &w2)| -w2 * u_hat)
            .collect();
        match (&problem.source, &static_hat) {
            (WaveSource::Dynamic(src), _) => {
                let s_hat = fft2_forward(&src.eval(t, &meta))
                    .expect("source grid shares the validated metadata");
                for (d, s) in dv.iter_mut().zip(&s_hat.values) {
                    *d += s;
                }
            }
            (_, Some(s_hat)) => {
                for (d, s) in dv.iter_mut().zip(s_hat) {
                    *d += s;
                }
            }
            _ => {}
        }
        vec![du, dv]
    };
    let mut spectra = Vec::with_capacity(problem.output_times.len());
    march_with_outputs(state, problem.dt, &problem.output_times, rhs, |s| {
        spectra.push(s.components[0].clone());
    })?;
    spectra
        .into_iter()
        .map(|values| {
            fft2_inverse(&Spectrum2D {
                meta,
                values,
                layout: crate::fourier1d::Layout::Natural,
            })
            .map_err(SolveError::from)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::{grid_mean, OrbitingGaussianSource};
    use std::f64::consts::PI;

    fn gaussian(meta: GridMeta, sigma: f64) -> Grid2D {
        Grid2D::from_fn(meta, move |x, y| (-(x * x + y * y) / (sigma * sigma)).exp())
    }

    fn max_diff(a: &Grid2D, b: &Grid2D) -> f64 {
        a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn single_mode_standing_wave() {
        let lx = 2.0;
        let meta = GridMeta::square(32, -1.0, 1.0);
        let k = 2.0 * PI / lx;
        let initial_u = Grid2D::from_fn(meta, |x, _| (k * x).sin());
        let times = [0.5, 1.0, 1.7];
        let problem = WaveProblem {
            initial_u: initial_u.clone(),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: 2.0,
            dt: 0.01,
            output_times: times.to_vec(),
        };
        let frames = solve_wave_closed(&problem).unwrap();
        for (frame, &t) in frames.iter().zip(&times) {
            let expected = Grid2D::from_fn(meta, |x, _| (k * x).sin() * (k * t).cos());
            assert!(max_diff(frame, &expected) < 1e-9);
        }
    }

    #[test]
    fn zero_data_stays_zero() {
        let meta = GridMeta::square(16, -1.0, 1.0);
        let problem = WaveProblem {
            initial_u: Grid2D::zeros(meta),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: 1.0,
            dt: 0.01,
            output_times: vec![0.5, 1.0],
        };
        for frame in solve_wave_closed(&problem).unwrap() {
            assert_eq!(frame.max_abs(), 0.0);
        }
    }

    #[test]
    fn gaussian_pulse_conserves_the_mean() {
        let meta = GridMeta::square(128, -1.0, 1.0);
        let initial_u = gaussian(meta, 0.1);
        let f_bar = grid_mean(&initial_u);
        let problem = WaveProblem {
            initial_u,
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: 2.0,
            dt: 0.01,
            output_times: vec![0.5, 1.0, 1.5, 2.0],
        };
        for frame in solve_wave_closed(&problem).unwrap() {
            let ratio = grid_mean(&frame).re / f_bar.re;
            assert!((ratio - 1.0).abs() < 1e-12, "ratio {ratio}");
        }
    }

    #[test]
    fn rk4_matches_closed_form_single_mode() {
        let meta = GridMeta::square(32, -1.0, 1.0);
        let k = 2.0 * PI / 2.0;
        let initial_u = Grid2D::from_fn(meta, |x, y| (k * x).sin() + 0.5 * (k * y).cos());
        let h = meta.dx;
        let problem = WaveProblem {
            initial_u,
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: 2.0,
            dt: 0.25 * h,
            output_times: vec![0.5, 1.0, 1.5, 2.0],
        };
        let rk4 = solve_wave_rk4(&problem).unwrap();
        let closed = solve_wave_closed(&problem).unwrap();
        for (a, b) in rk4.iter().zip(&closed) {
            assert!(max_diff(a, b) < 1e-6, "difference {}", max_diff(a, b));
        }
    }

    #[test]
    fn rk4_matches_closed_form_with_static_source() {
        let meta = GridMeta::square(64, -1.0, 1.0);
        let initial_u = gaussian(meta, 0.3);
        let source = Grid2D::from_fn(meta, |x, y| {
            0.5 * (-(x * x + y * y) / 0.09).exp()
        });
        let h = meta.dx;
        let problem = WaveProblem {
            initial_u,
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::Static(source),
            t_final: 2.0,
            dt: 0.25 * h,
            output_times: vec![1.0, 2.0],
        };
        let rk4 = solve_wave_rk4(&problem).unwrap();
        let closed = solve_wave_closed(&problem).unwrap();
        for (a, b) in rk4.iter().zip(&closed) {
            assert!(max_diff(a, b) < 1e-6, "difference {}", max_diff(a, b));
        }
    }

    #[test]
    fn closed_form_declines_dynamic_sources() {
        let meta = GridMeta::square(16, -2.0, 2.0);
        let problem = WaveProblem {
            initial_u: Grid2D::zeros(meta),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::Dynamic(Box::new(OrbitingGaussianSource::new(
                1.0, 0.1, 1.0, 5.0, 10.0,
            ))),
            t_final: 1.0,
            dt: 0.01,
            output_times: vec![1.0],
        };
        assert!(matches!(
            solve_wave_closed(&problem).unwrap_err(),
            SolveError::UnsupportedSource(_)
        ));
    }

    #[test]
    fn orbiting_source_run_produces_finite_frames() {
        let n = 64;
        let meta = GridMeta::square(n, -2.0, 2.0);
        let h = meta.dx;
        let problem = WaveProblem {
            initial_u: Grid2D::zeros(meta),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::Dynamic(Box::new(OrbitingGaussianSource::new(
                1.0, 0.1, 1.0, 5.0, 10.0,
            ))),
            t_final: 2.5,
            dt: 0.25 * h,
            output_times: vec![0.5, 1.5, 2.5],
        };
        let frames = solve_wave_rk4(&problem).unwrap();
        assert_eq!(frames.len(), 3);
        for frame in &frames {
            assert!(frame.values.iter().all(|v| v.re.is_finite() && v.im.is_finite()));
        }
        // the source injects energy; the field should not stay identically zero
        assert!(frames[2].max_abs() > 1e-3);
    }

    #[test]
    fn modal_energy_is_conserved_on_the_closed_path() {
        // |v̂|² + ω²|û|² is the oscillator invariant for s = 0.
        let meta = GridMeta::square(32, -1.0, 1.0);
        let initial_u = gaussian(meta, 0.3);
        let f_hat = fft2_forward(&initial_u).unwrap();
        let table = build_wavenumbers(&meta);
        let zero = Complex::new(0.0, 0.0);
        for &t in &[0.3, 1.1, 2.4] {
            for (f, &w2) in f_hat.values.iter().zip(&table.omega_sq) {
                let omega = w2.sqrt();
                let (u, v) = wave_mode_closed(*f, zero, zero, omega, t);
                let e0 = w2 * f.norm_sqr();
                let e = v.norm_sqr() + w2 * u.norm_sqr();
                if e0 > 1e-20 {
                    assert!((e - e0).abs() < 1e-8 * e0, "mode energy drift at t={t}");
                }
            }
        }
    }

    #[test]
    fn output_at_t0_reproduces_initial_data() {
        let meta = GridMeta::square(32, -1.0, 1.0);
        let initial_u = gaussian(meta, 0.2);
        let problem = WaveProblem {
            initial_u: initial_u.clone(),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: 1.0,
            dt: 0.01,
            output_times: vec![0.0],
        };
        let closed = solve_wave_closed(&problem).unwrap();
        assert!(max_diff(&closed[0], &initial_u) < 1e-12);
        let rk4 = solve_wave_rk4(&problem).unwrap();
        assert!(max_diff(&rk4[0], &initial_u) < 1e-12);
    }
}
