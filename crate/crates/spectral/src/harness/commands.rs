//! Experiment runners behind the CLI subcommands. Each command writes
//! plain-text CSV artifacts plus a `manifest.txt` echoing the resolved
//! configuration so runs are reproducible.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::gridio::write_grid_csv;
use super::HarnessError;
use crate::fourier1d::{fft_forward, shift_center, spectrum_physical_scale, SampleVector1D};
use crate::fourier2d::{Grid2D, GridMeta};
use crate::pde::{
    grid_mean, solve_diffusion_closed, solve_diffusion_ode, solve_poisson, solve_wave_closed,
    solve_wave_rk4, poisson_residual, DiffusionProblem, OrbitingGaussianSource, PoissonProblem,
    WaveProblem, WaveSource,
};
use crate::Complex;

fn ensure_dir(dir: &Path) -> Result<(), HarnessError> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

fn write_manifest(dir: &Path, entries: &[(&str, String)]) -> Result<(), HarnessError> {
    let mut out = BufWriter::new(File::create(dir.join("manifest.txt"))?);
    for (key, value) in entries {
        writeln!(out, "{key}={value}")?;
    }
    out.flush()?;
    Ok(())
}

fn join_f64(values: &[f64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// One `t,mean_re,mean_im,max_abs` diagnostics line.
#[derive(Debug, Clone)]
pub struct DiagnosticsRow {
    pub t: f64,
    pub mean: Complex,
    pub max_abs: f64,
}

pub fn write_diagnostics(rows: &[DiagnosticsRow], path: &Path) -> Result<(), HarnessError> {
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "t,mean_re,mean_im,max_abs")?;
    for row in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e}",
            row.t, row.mean.re, row.mean.im, row.max_abs
        )?;
    }
    out.flush()?;
    Ok(())
}

fn frame_rows(frames: &[Grid2D], times: &[f64]) -> Vec<DiagnosticsRow> {
    frames
        .iter()
        .zip(times)
        .map(|(frame, &t)| DiagnosticsRow { t, mean: grid_mean(frame), max_abs: frame.max_abs() })
        .collect()
}

fn write_frames(
    frames: &[Grid2D],
    times: &[f64],
    dir: &Path,
    prefix: &str,
) -> Result<(), HarnessError> {
    for (frame, &t) in frames.iter().zip(times) {
        write_grid_csv(frame, t, &dir.join(format!("{prefix}_t{t:.4}.csv")))?;
    }
    Ok(())
}

fn centered_gaussian(meta: GridMeta, amplitude: f64, sigma: f64) -> Grid2D {
    Grid2D::from_fn(meta, move |x, y| amplitude * (-(x * x + y * y) / (sigma * sigma)).exp())
}

// ---------------------------------------------------------------------------
// transform-demo

/// Reproduce the `e^{-t²}` spectrum demo: N = 32 samples on `[0, 20)`,
/// written in natural and centered layouts alongside the exact transform
/// `√π·e^{-(πf)²}` for comparison.
pub fn cmd_transform_demo(out_dir: &Path) -> Result<(), HarnessError> {
    ensure_dir(out_dir)?;
    let n = 32;
    let spacing = 20.0 / n as f64;
    let samples = SampleVector1D::from_fn(n, spacing, 0.0, |t| Complex::new((-t * t).exp(), 0.0));
    let natural = spectrum_physical_scale(&fft_forward(&samples)?, spacing);
    let centered = shift_center(&natural)?;

    let mut out = BufWriter::new(File::create(out_dir.join("transform_natural.csv"))?);
    writeln!(out, "f,re,im,abs")?;
    for (f, v) in natural.frequencies().iter().zip(&natural.values) {
        writeln!(out, "{:.16e},{:.16e},{:.16e},{:.16e}", f, v.re, v.im, v.norm())?;
    }
    out.flush()?;

    let mut out = BufWriter::new(File::create(out_dir.join("transform_centered.csv"))?);
    writeln!(out, "f,re,im,abs,exact")?;
    for (f, v) in centered.frequencies().iter().zip(&centered.values) {
        let exact = std::f64::consts::PI.sqrt() * (-(std::f64::consts::PI * f).powi(2)).exp();
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            f,
            v.re,
            v.im,
            v.norm(),
            exact
        )?;
    }
    out.flush()?;

    write_manifest(
        out_dir,
        &[
            ("experiment", "transform-demo".into()),
            ("n", n.to_string()),
            ("spacing", spacing.to_string()),
        ],
    )
}

// ---------------------------------------------------------------------------
// poisson

#[derive(Debug, Clone)]
pub struct PoissonConfig {
    pub resolutions: Vec<usize>,
    pub domain: (f64, f64),
    pub amplitude: f64,
    pub sigma: f64,
    pub out_dir: PathBuf,
    pub seed: u64,
}

impl Default for PoissonConfig {
    fn default() -> Self {
        Self {
            resolutions: vec![64, 128],
            domain: (-2.0, 2.0),
            amplitude: 1.0,
            sigma: 0.1,
            out_dir: PathBuf::from("out"),
            seed: 0,
        }
    }
}

impl PoissonConfig {
    pub fn apply_map(&mut self, map: &mut super::ConfigMap) -> Result<(), HarnessError> {
        if let Some(v) = map.take_list("resolutions")? {
            self.resolutions = v;
        }
        if let Some(v) = map.take("domain_min")? {
            self.domain.0 = v;
        }
        if let Some(v) = map.take("domain_max")? {
            self.domain.1 = v;
        }
        if let Some(v) = map.take("amplitude")? {
            self.amplitude = v;
        }
        if let Some(v) = map.take("sigma")? {
            self.sigma = v;
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), HarnessError> {
        if self.resolutions.is_empty() {
            return Err(HarnessError::Config("resolutions: at least one value required".into()));
        }
        for &n in &self.resolutions {
            if !n.is_power_of_two() {
                return Err(HarnessError::Config(format!(
                    "resolutions: {n} is not a power of two"
                )));
            }
        }
        if self.domain.1 <= self.domain.0 {
            return Err(HarnessError::Config("domain_max must exceed domain_min".into()));
        }
        if self.sigma <= 0.0 {
            return Err(HarnessError::Config("sigma must be positive".into()));
        }
        Ok(())
    }
}

/// Solve the Gaussian-sourced Poisson problem at each configured resolution.
pub fn cmd_poisson(cfg: &PoissonConfig) -> Result<(), HarnessError> {
    cfg.validate()?;
    ensure_dir(&cfg.out_dir)?;
    let mut out = BufWriter::new(File::create(cfg.out_dir.join("poisson_diagnostics.csv"))?);
    writeln!(out, "n,mean_re,mean_im,max_abs,residual")?;
    for &n in &cfg.resolutions {
        let meta = GridMeta::square(n, cfg.domain.0, cfg.domain.1);
        let source = centered_gaussian(meta, cfg.amplitude, cfg.sigma);
        let solution = solve_poisson(&PoissonProblem { source: source.clone() })?;
        let residual = poisson_residual(&solution, &source)?;
        write_grid_csv(&solution, 0.0, &cfg.out_dir.join(format!("poisson_n{n}.csv")))?;
        let mean = grid_mean(&solution);
        writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e},{:.16e}",
            n,
            mean.re,
            mean.im,
            solution.max_abs(),
            residual
        )?;
    }
    out.flush()?;
    write_manifest(
        &cfg.out_dir,
        &[
            ("experiment", "poisson".into()),
            ("resolutions", cfg.resolutions.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")),
            ("domain", format!("{},{}", cfg.domain.0, cfg.domain.1)),
            ("amplitude", cfg.amplitude.to_string()),
            ("sigma", cfg.sigma.to_string()),
            ("seed", cfg.seed.to_string()),
        ],
    )
}

// ---------------------------------------------------------------------------
// diffusion

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffusionMethod {
    Closed,
    Ode,
}

impl std::str::FromStr for DiffusionMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed" => Ok(Self::Closed),
            "ode" => Ok(Self::Ode),
            other => Err(format!("unknown method `{other}` (expected closed|ode)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiffusionConfig {
    pub n: usize,
    pub domain: (f64, f64),
    pub amplitude: f64,
    pub sigma: f64,
    pub t_final: f64,
    pub output_times: Vec<f64>,
    pub method: DiffusionMethod,
    /// ODE-path time step; `None` picks a quarter of the RK4 stability bound.
    pub dt: Option<f64>,
    pub out_dir: PathBuf,
    pub seed: u64,
}

impl Default for DiffusionConfig {
    fn default() -> Self {
        Self {
            n: 128,
            domain: (-1.0, 1.0),
            amplitude: 1.0,
            sigma: 0.1,
            t_final: 10.0,
            output_times: vec![0.0, 0.5, 1.0, 2.0, 5.0, 10.0],
            method: DiffusionMethod::Closed,
            dt: None,
            out_dir: PathBuf::from("out"),
            seed: 0,
        }
    }
}

impl DiffusionConfig {
    pub fn apply_map(&mut self, map: &mut super::ConfigMap) -> Result<(), HarnessError> {
        if let Some(v) = map.take("n")? {
            self.n = v;
        }
        if let Some(v) = map.take("domain_min")? {
            self.domain.0 = v;
        }
        if let Some(v) = map.take("domain_max")? {
            self.domain.1 = v;
        }
        if let Some(v) = map.take("amplitude")? {
            self.amplitude = v;
        }
        if let Some(v) = map.take("sigma")? {
            self.sigma = v;
        }
        if let Some(v) = map.take("t_final")? {
            self.t_final = v;
        }
        if let Some(v) = map.take_list("output_times")? {
            self.output_times = v;
        }
        if let Some(v) = map.take::<String>("method")? {
            self.method = v.parse().map_err(HarnessError::Config)?;
        }
        if let Some(v) = map.take("dt")? {
            self.dt = Some(v);
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), HarnessError> {
        if !self.n.is_power_of_two() {
            return Err(HarnessError::Config(format!("n: {} is not a power of two", self.n)));
        }
        if self.domain.1 <= self.domain.0 {
            return Err(HarnessError::Config("domain_max must exceed domain_min".into()));
        }
        if self.t_final < 0.0 {
            return Err(HarnessError::Config("t_final must be non-negative".into()));
        }
        if self.sigma <= 0.0 {
            return Err(HarnessError::Config("sigma must be positive".into()));
        }
        Ok(())
    }
}

/// Evolve the Gaussian diffusion problem and record mean-conservation
/// diagnostics at every output time.
pub fn cmd_diffusion(cfg: &DiffusionConfig) -> Result<(), HarnessError> {
    cfg.validate()?;
    ensure_dir(&cfg.out_dir)?;
    let meta = GridMeta::square(cfg.n, cfg.domain.0, cfg.domain.1);
    let initial = centered_gaussian(meta, cfg.amplitude, cfg.sigma);
    let omega_sq_max = {
        let table = crate::fourier2d::build_wavenumbers(&meta);
        table.omega_sq.iter().cloned().fold(0.0, f64::max)
    };
    let dt = cfg.dt.unwrap_or(0.25 * 2.8 / omega_sq_max);
    let problem = DiffusionProblem {
        initial,
        source: None,
        t_final: cfg.t_final,
        dt,
        output_times: cfg.output_times.clone(),
    };
    let frames = match cfg.method {
        DiffusionMethod::Closed => solve_diffusion_closed(&problem)?,
        DiffusionMethod::Ode => solve_diffusion_ode(&problem)?,
    };
    write_frames(&frames, &cfg.output_times, &cfg.out_dir, "diffusion")?;
    write_diagnostics(
        &frame_rows(&frames, &cfg.output_times),
        &cfg.out_dir.join("diffusion_diagnostics.csv"),
    )?;
    write_manifest(
        &cfg.out_dir,
        &[
            ("experiment", "diffusion".into()),
            ("n", cfg.n.to_string()),
            ("domain", format!("{},{}", cfg.domain.0, cfg.domain.1)),
            ("amplitude", cfg.amplitude.to_string()),
            ("sigma", cfg.sigma.to_string()),
            ("t_final", cfg.t_final.to_string()),
            ("output_times", join_f64(&cfg.output_times)),
            ("method", format!("{:?}", cfg.method).to_lowercase()),
            ("dt", dt.to_string()),
            ("seed", cfg.seed.to_string()),
        ],
    )
}

// ---------------------------------------------------------------------------
// wave

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveMode {
    Pulse,
    Orbit,
    Both,
}

impl std::str::FromStr for WaveMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pulse" => Ok(Self::Pulse),
            "orbit" => Ok(Self::Orbit),
            "both" => Ok(Self::Both),
            other => Err(format!("unknown mode `{other}` (expected pulse|orbit|both)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WaveConfig {
    pub mode: WaveMode,
    /// Sourceless Gaussian pulse run on `[-1,1]²` (closed-form path).
    pub pulse_n: usize,
    pub pulse_domain: (f64, f64),
    pub sigma: f64,
    /// Orbiting-source run on `[-2,2]²` (RK4 path).
    pub orbit_n: usize,
    pub orbit_domain: (f64, f64),
    pub sigma_s: f64,
    pub amplitude: f64,
    pub r_s: f64,
    pub omega: f64,
    pub gamma: f64,
    /// Time step as a fraction of the grid spacing, dt = courant·h.
    pub courant: f64,
    pub t_final: f64,
    pub output_times: Vec<f64>,
    pub out_dir: PathBuf,
    pub seed: u64,
}

impl Default for WaveConfig {
    fn default() -> Self {
        Self {
            mode: WaveMode::Both,
            pulse_n: 128,
            pulse_domain: (-1.0, 1.0),
            sigma: 0.1,
            orbit_n: 128,
            orbit_domain: (-2.0, 2.0),
            sigma_s: 0.1,
            amplitude: 1.0,
            r_s: 1.0,
            omega: 5.0,
            gamma: 10.0,
            courant: 0.25,
            t_final: 2.5,
            output_times: vec![0.0, 0.5, 1.0, 1.5, 2.0, 2.5],
            out_dir: PathBuf::from("out"),
            seed: 0,
        }
    }
}

impl WaveConfig {
    pub fn apply_map(&mut self, map: &mut super::ConfigMap) -> Result<(), HarnessError> {
        if let Some(v) = map.take::<String>("mode")? {
            self.mode = v.parse().map_err(HarnessError::Config)?;
        }
        if let Some(v) = map.take("pulse_n")? {
            self.pulse_n = v;
        }
        if let Some(v) = map.take("orbit_n")? {
            self.orbit_n = v;
        }
        if let Some(v) = map.take("sigma")? {
            self.sigma = v;
        }
        if let Some(v) = map.take("sigma_s")? {
            self.sigma_s = v;
        }
        if let Some(v) = map.take("amplitude")? {
            self.amplitude = v;
        }
        if let Some(v) = map.take("r_s")? {
            self.r_s = v;
        }
        if let Some(v) = map.take("omega")? {
            self.omega = v;
        }
        if let Some(v) = map.take("gamma")? {
            self.gamma = v;
        }
        if let Some(v) = map.take("courant")? {
            self.courant = v;
        }
        if let Some(v) = map.take("t_final")? {
            self.t_final = v;
        }
        if let Some(v) = map.take_list("output_times")? {
            self.output_times = v;
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), HarnessError> {
        for (name, n) in [("pulse_n", self.pulse_n), ("orbit_n", self.orbit_n)] {
            if !n.is_power_of_two() {
                return Err(HarnessError::Config(format!("{name}: {n} is not a power of two")));
            }
        }
        if self.courant <= 0.0 {
            return Err(HarnessError::Config("courant must be positive".into()));
        }
        if self.sigma <= 0.0 || self.sigma_s <= 0.0 {
            return Err(HarnessError::Config("source widths must be positive".into()));
        }
        if self.r_s < 0.0 {
            return Err(HarnessError::Config("r_s must be non-negative".into()));
        }
        Ok(())
    }
}

/// Run the sourceless pulse and/or orbiting-source wave experiments.
pub fn cmd_wave(cfg: &WaveConfig) -> Result<(), HarnessError> {
    cfg.validate()?;
    ensure_dir(&cfg.out_dir)?;
    if matches!(cfg.mode, WaveMode::Pulse | WaveMode::Both) {
        let meta = GridMeta::square(cfg.pulse_n, cfg.pulse_domain.0, cfg.pulse_domain.1);
        let problem = WaveProblem {
            initial_u: centered_gaussian(meta, cfg.amplitude, cfg.sigma),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::None,
            t_final: cfg.t_final,
            dt: cfg.courant * meta.dx,
            output_times: cfg.output_times.clone(),
        };
        let frames = solve_wave_closed(&problem)?;
        write_frames(&frames, &cfg.output_times, &cfg.out_dir, "wave_pulse")?;
        write_diagnostics(
            &frame_rows(&frames, &cfg.output_times),
            &cfg.out_dir.join("wave_pulse_diagnostics.csv"),
        )?;
    }
    if matches!(cfg.mode, WaveMode::Orbit | WaveMode::Both) {
        let meta = GridMeta::square(cfg.orbit_n, cfg.orbit_domain.0, cfg.orbit_domain.1);
        let problem = WaveProblem {
            initial_u: Grid2D::zeros(meta),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::Dynamic(Box::new(OrbitingGaussianSource::new(
                cfg.amplitude,
                cfg.sigma_s,
                cfg.r_s,
                cfg.omega,
                cfg.gamma,
            ))),
            t_final: cfg.t_final,
            dt: cfg.courant * meta.dx,
            output_times: cfg.output_times.clone(),
        };
        let frames = solve_wave_rk4(&problem)?;
        write_frames(&frames, &cfg.output_times, &cfg.out_dir, "wave_orbit")?;
        write_diagnostics(
            &frame_rows(&frames, &cfg.output_times),
            &cfg.out_dir.join("wave_orbit_diagnostics.csv"),
        )?;
    }
    write_manifest(
        &cfg.out_dir,
        &[
            ("experiment", "wave".into()),
            ("mode", format!("{:?}", cfg.mode).to_lowercase()),
            ("pulse_n", cfg.pulse_n.to_string()),
            ("orbit_n", cfg.orbit_n.to_string()),
            ("sigma", cfg.sigma.to_string()),
            ("sigma_s", cfg.sigma_s.to_string()),
            ("amplitude", cfg.amplitude.to_string()),
            ("r_s", cfg.r_s.to_string()),
            ("omega", cfg.omega.to_string()),
            ("gamma", cfg.gamma.to_string()),
            ("courant", cfg.courant.to_string()),
            ("t_final", cfg.t_final.to_string()),
            ("output_times", join_f64(&cfg.output_times)),
            ("seed", cfg.seed.to_string()),
        ],
    )
}

// ---------------------------------------------------------------------------
// convergence

#[derive(Debug, Clone)]
pub struct ConvergenceConfig {
    /// Must be in 1:2:4 ratio; the time step halves with the grid spacing.
    pub resolutions: [usize; 3],
    pub domain: (f64, f64),
    pub courant: f64,
    pub times: Vec<f64>,
    pub amplitude: f64,
    pub sigma_s: f64,
    pub r_s: f64,
    pub omega: f64,
    pub gamma: f64,
    pub out_dir: PathBuf,
    pub seed: u64,
}

impl Default for ConvergenceConfig {
    fn default() -> Self {
        Self {
            resolutions: [64, 128, 256],
            domain: (-2.0, 2.0),
            courant: 0.25,
            times: (2..=10).map(|i| i as f64 * 0.25).collect(),
            amplitude: 1.0,
            sigma_s: 0.1,
            r_s: 1.0,
            omega: 5.0,
            gamma: 10.0,
            out_dir: PathBuf::from("out"),
            seed: 0,
        }
    }
}

impl ConvergenceConfig {
    pub fn apply_map(&mut self, map: &mut super::ConfigMap) -> Result<(), HarnessError> {
        if let Some(v) = map.take_list::<usize>("resolutions")? {
            if v.len() != 3 {
                return Err(HarnessError::Config("resolutions: exactly three values required".into()));
            }
            self.resolutions = [v[0], v[1], v[2]];
        }
        if let Some(v) = map.take("domain_min")? {
            self.domain.0 = v;
        }
        if let Some(v) = map.take("domain_max")? {
            self.domain.1 = v;
        }
        if let Some(v) = map.take("courant")? {
            self.courant = v;
        }
        if let Some(v) = map.take_list("times")? {
            self.times = v;
        }
        if let Some(v) = map.take("amplitude")? {
            self.amplitude = v;
        }
        if let Some(v) = map.take("sigma_s")? {
            self.sigma_s = v;
        }
        if let Some(v) = map.take("r_s")? {
            self.r_s = v;
        }
        if let Some(v) = map.take("omega")? {
            self.omega = v;
        }
        if let Some(v) = map.take("gamma")? {
            self.gamma = v;
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), HarnessError> {
        let [n1, n2, n3] = self.resolutions;
        if n2 != 2 * n1 || n3 != 2 * n2 {
            return Err(HarnessError::Config(format!(
                "resolutions {n1},{n2},{n3} are not in 1:2:4 ratio"
            )));
        }
        if !n1.is_power_of_two() {
            return Err(HarnessError::Config(format!("resolution {n1} is not a power of two")));
        }
        if self.times.is_empty() {
            return Err(HarnessError::Config("times: at least one sample required".into()));
        }
        Ok(())
    }
}

/// Per-time self-convergence factors from three halved-resolution runs.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub times: Vec<f64>,
    /// Ratio of pair differences of grid means.
    pub q_mean: Vec<f64>,
    /// Variant from RMS differences after restriction to the coarse grid.
    pub q_grid: Vec<f64>,
}

fn restrict(fine: &Grid2D, factor: usize, coarse_meta: &GridMeta) -> Vec<Complex> {
    let mut values = Vec::with_capacity(coarse_meta.len());
    for k in 0..coarse_meta.ny {
        for j in 0..coarse_meta.nx {
            values.push(fine.values[fine.meta.idx(j * factor, k * factor)]);
        }
    }
    values
}

fn rms_diff(a: &[Complex], b: &[Complex]) -> f64 {
    let sum: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    (sum / a.len() as f64).sqrt()
}

/// Run the orbiting-source wave problem at three resolutions and evaluate
/// the self-convergence factor `(ū₂-ū₁)/(ū₃-ū₂)` at the shared times.
pub fn cmd_convergence(cfg: &ConvergenceConfig) -> Result<ConvergenceReport, HarnessError> {
    cfg.validate()?;
    ensure_dir(&cfg.out_dir)?;
    let source = OrbitingGaussianSource::new(
        cfg.amplitude,
        cfg.sigma_s,
        cfg.r_s,
        cfg.omega,
        cfg.gamma,
    );
    let t_final = cfg.times.iter().cloned().fold(0.0, f64::max);
    let mut runs = Vec::with_capacity(3);
    for &n in &cfg.resolutions {
        let meta = GridMeta::square(n, cfg.domain.0, cfg.domain.1);
        let problem = WaveProblem {
            initial_u: Grid2D::zeros(meta),
            initial_v: Grid2D::zeros(meta),
            source: WaveSource::Dynamic(Box::new(source)),
            t_final,
            dt: cfg.courant * meta.dx,
            output_times: cfg.times.clone(),
        };
        runs.push(solve_wave_rk4(&problem)?);
        log::info!("convergence run n={n} complete");
    }
    let coarse_meta = runs[0][0].meta;
    let mut q_mean = Vec::with_capacity(cfg.times.len());
    let mut q_grid = Vec::with_capacity(cfg.times.len());
    for i in 0..cfg.times.len() {
        let (u1, u2, u3) = (&runs[0][i], &runs[1][i], &runs[2][i]);
        let (m1, m2, m3) = (grid_mean(u1).re, grid_mean(u2).re, grid_mean(u3).re);
        q_mean.push((m2 - m1) / (m3 - m2));
        let u2c = restrict(u2, 2, &coarse_meta);
        let u3c = restrict(u3, 4, &coarse_meta);
        q_grid.push(rms_diff(&u2c, &u1.values) / rms_diff(&u3c, &u2c));
    }
    let report = ConvergenceReport { times: cfg.times.clone(), q_mean, q_grid };

    let mut out = BufWriter::new(File::create(cfg.out_dir.join("convergence.csv"))?);
    writeln!(out, "t,q_mean,q_grid")?;
    for ((t, qm), qg) in report.times.iter().zip(&report.q_mean).zip(&report.q_grid) {
        writeln!(out, "{:.16e},{:.16e},{:.16e}", t, qm, qg)?;
    }
    out.flush()?;
    write_manifest(
        &cfg.out_dir,
        &[
            ("experiment", "convergence".into()),
            (
                "resolutions",
                cfg.resolutions.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
            ),
            ("domain", format!("{},{}", cfg.domain.0, cfg.domain.1)),
            ("courant", cfg.courant.to_string()),
            ("times", join_f64(&cfg.times)),
            ("amplitude", cfg.amplitude.to_string()),
            ("sigma_s", cfg.sigma_s.to_string()),
            ("r_s", cfg.r_s.to_string()),
            ("omega", cfg.omega.to_string()),
            ("gamma", cfg.gamma.to_string()),
            ("seed", cfg.seed.to_string()),
        ],
    )?;
    Ok(report)
}
