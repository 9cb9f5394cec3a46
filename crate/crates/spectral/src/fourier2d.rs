//! Multi-dimensional transforms by sequential 1D passes, plus wavenumber
//! tables for spectral differentiation.
//!
//! Storage is row-major with x the fastest-varying index: sample `(j, k)`
//! lives at `values[k·nx + j]`. The per-axis loop generalizes to any rank;
//! only the 1D/2D surfaces are exposed.

use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

use crate::fourier1d::{fft_in_place, Layout};
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Error, PartialEq)]
pub enum Transform2Error {
    #[error("axis {axis:?}: length {n} is not a power of two; the radix-2 FFT requires N = 2^m")]
    NotPowerOfTwo { axis: Axis, n: usize },
    #[error("spectrum has {found:?} layout, expected {expected:?}")]
    WrongLayout { expected: Layout, found: Layout },
    #[error("input contains a non-finite value at index {0}")]
    NonFinite(usize),
}

/// Shape and placement of a uniform 2D grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMeta {
    pub nx: usize,
    pub ny: usize,
    pub dx: f64,
    pub dy: f64,
    pub x0: f64,
    pub y0: f64,
}

impl GridMeta {
    pub fn new(nx: usize, ny: usize, dx: f64, dy: f64, x0: f64, y0: f64) -> Self {
        assert!(nx >= 1 && ny >= 1, "grid must have at least one sample per axis");
        assert!(dx > 0.0 && dy > 0.0, "grid spacing must be positive");
        Self { nx, ny, dx, dy, x0, y0 }
    }

    /// Square grid covering `[lo, hi)` on both axes with `n` samples per axis.
    pub fn square(n: usize, lo: f64, hi: f64) -> Self {
        assert!(hi > lo);
        let d = (hi - lo) / n as f64;
        Self::new(n, n, d, d, lo, lo)
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn idx(&self, j: usize, k: usize) -> usize {
        k * self.nx + j
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x0 + j as f64 * self.dx
    }

    pub fn y(&self, k: usize) -> f64 {
        self.y0 + k as f64 * self.dy
    }
}

/// Uniformly sampled complex values on a 2D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D {
    pub meta: GridMeta,
    pub values: Vec<Complex>,
}

impl Grid2D {
    pub fn new(meta: GridMeta, values: Vec<Complex>) -> Self {
        assert_eq!(values.len(), meta.len(), "values length must equal nx·ny");
        Self { meta, values }
    }

    pub fn zeros(meta: GridMeta) -> Self {
        Self { meta, values: vec![Complex::new(0.0, 0.0); meta.len()] }
    }

    /// Sample `f(x, y)` at every grid point.
    pub fn from_fn(meta: GridMeta, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = Vec::with_capacity(meta.len());
        for k in 0..meta.ny {
            for j in 0..meta.nx {
                values.push(Complex::new(f(meta.x(j), meta.y(k)), 0.0));
            }
        }
        Self { meta, values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }
}

/// 2D spectrum with the same shape metadata as its grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum2D {
    pub meta: GridMeta,
    pub values: Vec<Complex>,
    pub layout: Layout,
}

/// Per-axis angular wavenumbers with negative-frequency folding, plus the
/// precomputed `ω² = ωx² + ωy²` table used by the spectral Laplacian.
#[derive(Debug, Clone)]
pub struct WavenumberTable {
    pub omega_x: Vec<f64>,
    pub omega_y: Vec<f64>,
    pub omega_sq: Vec<f64>,
}

fn folded_omega(n: usize, spacing: f64) -> Vec<f64> {
    (0..n)
        .map(|a| {
            let signed = if a <= n / 2 { a as f64 } else { a as f64 - n as f64 };
            2.0 * PI * signed / (n as f64 * spacing)
        })
        .collect()
}

/// Angular wavenumbers `ω = 2π·f` per axis; indices above `N/2` fold to the
/// negative branch, and the Nyquist bin carries `+π/Δ`.
pub fn build_wavenumbers(meta: &GridMeta) -> WavenumberTable {
    let omega_x = folded_omega(meta.nx, meta.dx);
    let omega_y = folded_omega(meta.ny, meta.dy);
    let mut omega_sq = Vec::with_capacity(meta.len());
    for wy in &omega_y {
        for wx in &omega_x {
            omega_sq.push(wx * wx + wy * wy);
        }
    }
    WavenumberTable { omega_x, omega_y, omega_sq }
}

fn check_axes(meta: &GridMeta) -> Result<(), Transform2Error> {
    if !meta.nx.is_power_of_two() {
        return Err(Transform2Error::NotPowerOfTwo { axis: Axis::X, n: meta.nx });
    }
    if !meta.ny.is_power_of_two() {
        return Err(Transform2Error::NotPowerOfTwo { axis: Axis::Y, n: meta.ny });
    }
    Ok(())
}

fn ensure_finite(values: &[Complex]) -> Result<(), Transform2Error> {
    for (i, v) in values.iter().enumerate() {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Transform2Error::NonFinite(i));
        }
    }
    Ok(())
}

fn transpose(values: &[Complex], rows: usize, cols: usize, out: &mut [Complex]) {
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = values[r * cols + c];
        }
    }
}

/// Forward-transform every length-`cols` row in place, rows independently in
/// parallel. Row transforms share no state, so the result is bitwise
/// independent of the schedule.
fn fft_rows(values: &mut [Complex], cols: usize) {
    values.par_chunks_exact_mut(cols).for_each(fft_in_place);
}

/// One forward pass per axis: x rows first, then y columns via transpose.
pub(crate) fn fft2_in_place(values: &mut Vec<Complex>, nx: usize, ny: usize) {
    fft_rows(values, nx);
    let mut scratch = vec![Complex::new(0.0, 0.0); values.len()];
    transpose(values, ny, nx, &mut scratch);
    fft_rows(&mut scratch, ny);
    transpose(&scratch, nx, ny, values);
}

/// 2D forward transform as `nx + ny` sequential 1D FFTs.
pub fn fft2_forward(grid: &Grid2D) -> Result<Spectrum2D, Transform2Error> {
    check_axes(&grid.meta)?;
    ensure_finite(&grid.values)?;
    let mut values = grid.values.clone();
    fft2_in_place(&mut values, grid.meta.nx, grid.meta.ny);
    Ok(Spectrum2D { meta: grid.meta, values, layout: Layout::Natural })
}

/// 2D inverse transform via `(1/(nx·ny))·conj(FFT2(conj(S)))`.
pub fn fft2_inverse(spectrum: &Spectrum2D) -> Result<Grid2D, Transform2Error> {
    check_axes(&spectrum.meta)?;
    if spectrum.layout != Layout::Natural {
        return Err(Transform2Error::WrongLayout {
            expected: Layout::Natural,
            found: spectrum.layout,
        });
    }
    ensure_finite(&spectrum.values)?;
    let mut values: Vec<Complex> = spectrum.values.iter().map(|v| v.conj()).collect();
    fft2_in_place(&mut values, spectrum.meta.nx, spectrum.meta.ny);
    let scale = 1.0 / spectrum.meta.len() as f64;
    for v in &mut values {
        *v = v.conj() * scale;
    }
    Ok(Grid2D { meta: spectrum.meta, values })
}
