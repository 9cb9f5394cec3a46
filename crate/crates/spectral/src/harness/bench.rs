//! DFT-vs-FFT timing harness and complexity-model fits.
//!
//! Methodology: per size, identical seeded random inputs; one warm-up, then
//! the median of the repeated measurements (monotonic wall time). Small sizes
//! are timed over an auto-calibrated number of inner iterations so timer
//! granularity does not dominate. The CSV reports raw seconds plus columns
//! normalized to the largest measured time.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HarnessError;
use crate::fourier1d::{dft_sum, fft_in_place, kernel_table};
use crate::Complex;

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub n: usize,
    pub dft_seconds: f64,
    pub fft_seconds: f64,
    pub repetitions: usize,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self { sizes: (3..=15).map(|m| 1usize << m).collect(), repetitions: 5, seed: 0 }
    }
}

fn median(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Median of `repetitions` measurements of `op`, each averaged over enough
/// inner iterations to exceed ~2 ms of wall time.
fn time_median(repetitions: usize, mut op: impl FnMut()) -> f64 {
    const TARGET: f64 = 2e-3;
    // warm-up plus iteration calibration
    let start = Instant::now();
    op();
    let once = start.elapsed().as_secs_f64().max(1e-9);
    let iterations = ((TARGET / once).ceil() as usize).clamp(1, 1_000_000);
    let samples = (0..repetitions)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..iterations {
                op();
            }
            start.elapsed().as_secs_f64() / iterations as f64
        })
        .collect();
    median(samples)
}

/// Time the naive DFT and the FFT on identical seeded random inputs.
pub fn cmd_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, HarnessError> {
    if cfg.repetitions < 3 {
        return Err(HarnessError::Config("benchmark needs at least 3 repetitions".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut records = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        if !n.is_power_of_two() {
            return Err(HarnessError::Config(format!("bench size {n} is not a power of two")));
        }
        let values: Vec<Complex> = (0..n)
            .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        // The kernel table is hoisted so the measurement isolates the O(N²)
        // summation the scaling fit is about.
        let kernel = kernel_table(n);
        let dft_seconds = time_median(cfg.repetitions, || {
            std::hint::black_box(dft_sum(&values, &kernel));
        });
        let mut scratch = values.clone();
        let fft_seconds = time_median(cfg.repetitions, || {
            scratch.copy_from_slice(&values);
            fft_in_place(&mut scratch);
            std::hint::black_box(&scratch);
        });
        records.push(BenchRecord { n, dft_seconds, fft_seconds, repetitions: cfg.repetitions });
        log::info!("bench n={n}: dft {dft_seconds:.3e} s, fft {fft_seconds:.3e} s");
    }
    Ok(records)
}

pub fn write_bench_csv(records: &[BenchRecord], path: &Path) -> Result<(), HarnessError> {
    let mut out = BufWriter::new(File::create(path)?);
    let t_max = records
        .iter()
        .flat_map(|r| [r.dft_seconds, r.fft_seconds])
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    writeln!(out, "n,dft_seconds,fft_seconds,repetitions,dft_normalized,fft_normalized")?;
    for r in records {
        writeln!(
            out,
            "{},{:.6e},{:.6e},{},{:.6e},{:.6e}",
            r.n,
            r.dft_seconds,
            r.fft_seconds,
            r.repetitions,
            r.dft_seconds / t_max,
            r.fft_seconds / t_max
        )?;
    }
    out.flush()?;
    Ok(())
}

/// Least-squares fit of `log t = intercept + slope·log n`; returns
/// `(slope, intercept, R²)` with R² computed in log space.
pub fn loglog_fit(ns: &[f64], ts: &[f64]) -> (f64, f64, f64) {
    assert_eq!(ns.len(), ts.len());
    let xs: Vec<f64> = ns.iter().map(|&n| n.ln()).collect();
    let ys: Vec<f64> = ts.iter().map(|&t| t.ln()).collect();
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    (slope, intercept, 1.0 - ss_res / ss_tot)
}

/// R² (in log space) of the one-parameter model `t = c·model(n)` with `c`
/// chosen by least squares on `log t - log model(n)`.
pub fn log_model_r2(ns: &[f64], ts: &[f64], model: impl Fn(f64) -> f64) -> f64 {
    assert_eq!(ns.len(), ts.len());
    let ys: Vec<f64> = ts.iter().map(|&t| t.ln()).collect();
    let ms: Vec<f64> = ns.iter().map(|&n| model(n).ln()).collect();
    let n = ys.len() as f64;
    let log_c = ys.iter().zip(&ms).map(|(y, m)| y - m).sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let ss_res: f64 = ys.iter().zip(&ms).map(|(y, m)| (y - (m + log_c)).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    1.0 - ss_res / ss_tot
}
