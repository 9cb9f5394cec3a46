//! One-dimensional discrete Fourier analysis.
//!
//! The forward transform is `P_k = Σ_j p_j ω_N^{jk}` with `ω_N = e^{2πi/N}`,
//! the inverse is `p_j = (1/N) Σ_k P_k ω_N^{-jk}`. Both a naive O(N²)
//! evaluation and a radix-2 O(N log N) FFT are provided; the FFT is
//! restricted to power-of-two lengths and the naive path serves all others.

use std::f64::consts::PI;

use thiserror::Error;

use crate::Complex;

/// Ordering of spectral bins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Bin `k` holds frequency `f_k = k/(NΔt)`, `k = 0..N-1`.
    Natural,
    /// Bins rotated so signed frequency ascends through zero.
    Centered,
}

#[derive(Debug, Error, PartialEq)]
pub enum TransformError {
    #[error("transform input is empty")]
    Empty,
    #[error("length {0} is not a power of two; the radix-2 FFT requires N = 2^m")]
    NotPowerOfTwo(usize),
    #[error("spectrum has {found:?} layout, expected {expected:?}")]
    WrongLayout { expected: Layout, found: Layout },
    #[error("matrix order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("input contains a non-finite value at index {0}")]
    NonFinite(usize),
}

/// Uniformly sampled complex values: sample `n` sits at `origin + n·spacing`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleVector1D {
    pub values: Vec<Complex>,
    pub spacing: f64,
    pub origin: f64,
}

impl SampleVector1D {
    pub fn new(values: Vec<Complex>, spacing: f64, origin: f64) -> Self {
        assert!(spacing > 0.0, "spacing must be positive");
        Self { values, spacing, origin }
    }

    /// Sample `f` at `n` uniformly spaced coordinates starting at `origin`.
    pub fn from_fn(n: usize, spacing: f64, origin: f64, f: impl Fn(f64) -> Complex) -> Self {
        let values = (0..n).map(|i| f(origin + i as f64 * spacing)).collect();
        Self::new(values, spacing, origin)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn coord(&self, n: usize) -> f64 {
        self.origin + n as f64 * self.spacing
    }
}

/// Transform-domain values plus their bin ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum1D {
    pub values: Vec<Complex>,
    pub freq_spacing: f64,
    pub layout: Layout,
}

impl Spectrum1D {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The frequency of each bin in storage order.
    ///
    /// Natural layout: `k·Δf`. Centered layout: `(m - ⌊N/2⌋)·Δf` so the
    /// column ascends from `-f_c` (even `N`) through zero.
    pub fn frequencies(&self) -> Vec<f64> {
        let n = self.values.len();
        match self.layout {
            Layout::Natural => (0..n).map(|k| k as f64 * self.freq_spacing).collect(),
            Layout::Centered => (0..n)
                .map(|m| (m as f64 - (n / 2) as f64) * self.freq_spacing)
                .collect(),
        }
    }
}

fn ensure_finite(values: &[Complex]) -> Result<(), TransformError> {
    for (i, v) in values.iter().enumerate() {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(TransformError::NonFinite(i));
        }
    }
    Ok(())
}

fn ensure_layout(spectrum: &Spectrum1D, expected: Layout) -> Result<(), TransformError> {
    if spectrum.layout != expected {
        return Err(TransformError::WrongLayout { expected, found: spectrum.layout });
    }
    Ok(())
}

/// Table of `ω_N^m = e^{2πi m/N}` for `m = 0..N-1`.
pub(crate) fn kernel_table(n: usize) -> Vec<Complex> {
    (0..n)
        .map(|m| Complex::from_polar(1.0, 2.0 * PI * m as f64 / n as f64))
        .collect()
}

/// The O(N²) summation core, shared by `dft_forward` and the benchmark
/// harness (which times it with the kernel table hoisted out).
pub(crate) fn dft_sum(values: &[Complex], kernel: &[Complex]) -> Vec<Complex> {
    let n = values.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex::new(0.0, 0.0);
            for (j, p) in values.iter().enumerate() {
                acc += p * kernel[(j * k) % n];
            }
            acc
        })
        .collect()
}

/// Naive O(N²) forward DFT.
pub fn dft_forward(x: &SampleVector1D) -> Result<Spectrum1D, TransformError> {
    if x.is_empty() {
        return Err(TransformError::Empty);
    }
    ensure_finite(&x.values)?;
    let n = x.len();
    let kernel = kernel_table(n);
    Ok(Spectrum1D {
        values: dft_sum(&x.values, &kernel),
        freq_spacing: 1.0 / (n as f64 * x.spacing),
        layout: Layout::Natural,
    })
}

/// Naive inverse DFT; requires Natural layout (unshift a centered spectrum first).
pub fn dft_inverse(spectrum: &Spectrum1D, spacing: f64) -> Result<SampleVector1D, TransformError> {
    if spectrum.is_empty() {
        return Err(TransformError::Empty);
    }
    ensure_layout(spectrum, Layout::Natural)?;
    ensure_finite(&spectrum.values)?;
    let n = spectrum.len();
    let kernel = kernel_table(n);
    let conj: Vec<Complex> = spectrum.values.iter().map(|v| v.conj()).collect();
    let scale = 1.0 / n as f64;
    let values = dft_sum(&conj, &kernel).into_iter().map(|v| v.conj() * scale).collect();
    Ok(SampleVector1D::new(values, spacing, 0.0))
}

/// In-place radix-2 decimation-in-time FFT with the `e^{+2πi/N}` kernel.
///
/// Twiddle factors are taken from the exponential at each level rather than
/// accumulated by repeated multiplication, keeping phase drift near roundoff.
pub(crate) fn fft_in_place(values: &mut [Complex]) {
    let n = values.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = (i.reverse_bits() >> (usize::BITS - bits)) as usize;
        if i < j {
            values.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let twiddle: Vec<Complex> = (0..half)
            .map(|k| Complex::from_polar(1.0, 2.0 * PI * k as f64 / len as f64))
            .collect();
        for chunk in values.chunks_exact_mut(len) {
            for k in 0..half {
                let odd = twiddle[k] * chunk[k + half];
                let even = chunk[k];
                chunk[k] = even + odd;
                chunk[k + half] = even - odd;
            }
        }
        len *= 2;
    }
}

fn check_radix2(n: usize) -> Result<(), TransformError> {
    if n == 0 {
        return Err(TransformError::Empty);
    }
    if !n.is_power_of_two() {
        return Err(TransformError::NotPowerOfTwo(n));
    }
    Ok(())
}

/// Radix-2 FFT; same contract as [`dft_forward`] but O(N log N) and
/// restricted to power-of-two lengths.
pub fn fft_forward(x: &SampleVector1D) -> Result<Spectrum1D, TransformError> {
    check_radix2(x.len())?;
    ensure_finite(&x.values)?;
    let mut values = x.values.clone();
    fft_in_place(&mut values);
    Ok(Spectrum1D {
        values,
        freq_spacing: 1.0 / (x.len() as f64 * x.spacing),
        layout: Layout::Natural,
    })
}

/// Inverse FFT via `(1/N)·conj(FFT(conj(X)))`.
pub fn fft_inverse(spectrum: &Spectrum1D, spacing: f64) -> Result<SampleVector1D, TransformError> {
    check_radix2(spectrum.len())?;
    ensure_layout(spectrum, Layout::Natural)?;
    ensure_finite(&spectrum.values)?;
    let n = spectrum.len();
    let mut values: Vec<Complex> = spectrum.values.iter().map(|v| v.conj()).collect();
    fft_in_place(&mut values);
    let scale = 1.0 / n as f64;
    for v in &mut values {
        *v = v.conj() * scale;
    }
    Ok(SampleVector1D::new(values, spacing, 0.0))
}

/// Frequencies `f_k = k/(N·spacing)` of the natural-layout bins.
pub fn frequency_axis(n: usize, spacing: f64) -> Vec<f64> {
    assert!(n >= 1, "frequency axis needs at least one bin");
    assert!(spacing > 0.0, "spacing must be positive");
    (0..n).map(|k| k as f64 / (n as f64 * spacing)).collect()
}

/// Rotate a natural-layout spectrum so signed frequency ascends through zero.
///
/// Bins `k ≥ ⌈N/2⌉` map to negative frequencies `f_k - 1/Δ` via the DFT
/// periodicity `P_{k+N} = P_k`.
pub fn shift_center(spectrum: &Spectrum1D) -> Result<Spectrum1D, TransformError> {
    ensure_layout(spectrum, Layout::Natural)?;
    let mut values = spectrum.values.clone();
    values.rotate_left(spectrum.len().div_ceil(2));
    Ok(Spectrum1D { values, freq_spacing: spectrum.freq_spacing, layout: Layout::Centered })
}

/// Undo [`shift_center`].
pub fn unshift_center(spectrum: &Spectrum1D) -> Result<Spectrum1D, TransformError> {
    ensure_layout(spectrum, Layout::Centered)?;
    let mut values = spectrum.values.clone();
    values.rotate_right(spectrum.len().div_ceil(2));
    Ok(Spectrum1D { values, freq_spacing: spectrum.freq_spacing, layout: Layout::Natural })
}

/// Dense DFT matrix with entry `(k, j) = ω_N^{jk}`.
#[derive(Debug, Clone)]
pub struct FourierMatrix {
    pub order: usize,
    entries: Vec<Complex>,
}

pub const FOURIER_MATRIX_CAP: usize = 1024;

impl FourierMatrix {
    pub fn entry(&self, k: usize, j: usize) -> Complex {
        self.entries[k * self.order + j]
    }

    /// Matrix-vector product; equals [`dft_forward`] applied to `x`.
    pub fn apply(&self, x: &[Complex]) -> Vec<Complex> {
        assert_eq!(x.len(), self.order);
        self.entries
            .chunks_exact(self.order)
            .map(|row| row.iter().zip(x).map(|(w, p)| w * p).sum())
            .collect()
    }
}

/// Build the order-`n` DFT matrix (capped at test-oracle scale).
pub fn build_fourier_matrix(n: usize) -> Result<FourierMatrix, TransformError> {
    if n == 0 {
        return Err(TransformError::Empty);
    }
    if n > FOURIER_MATRIX_CAP {
        return Err(TransformError::OrderTooLarge { order: n, cap: FOURIER_MATRIX_CAP });
    }
    let kernel = kernel_table(n);
    let mut entries = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            entries.push(kernel[(j * k) % n]);
        }
    }
    Ok(FourierMatrix { order: n, entries })
}

/// Multiply every bin by the sample spacing, turning the unitless DFT into
/// the Riemann-sum approximation of the continuous transform.
pub fn spectrum_physical_scale(spectrum: &Spectrum1D, spacing: f64) -> Spectrum1D {
    Spectrum1D {
        values: spectrum.values.iter().map(|v| v * spacing).collect(),
        freq_spacing: spectrum.freq_spacing,
        layout: spectrum.layout,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn reals(values: &[f64]) -> SampleVector1D {
        SampleVector1D::new(values.iter().map(|&v| c(v, 0.0)).collect(), 1.0, 0.0)
    }

    fn random_samples(rng: &mut ChaCha8Rng, n: usize) -> SampleVector1D {
        let values = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        SampleVector1D::new(values, 1.0, 0.0)
    }

    fn max_abs_diff(a: &[Complex], b: &[Complex]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn dft_constant_concentrates_at_zero() {
        let spectrum = dft_forward(&reals(&[1.0, 1.0, 1.0, 1.0])).unwrap();
        let expected = [c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(max_abs_diff(&spectrum.values, &expected) < 1e-12);
    }

    #[test]
    fn dft_impulse_is_flat() {
        let spectrum = dft_forward(&reals(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        let expected = [c(1.0, 0.0); 4];
        assert!(max_abs_diff(&spectrum.values, &expected) < 1e-12);
    }

    #[test]
    fn dft_shifted_impulse_walks_the_unit_circle() {
        // ω₄ = i, so a unit impulse at j=1 gives [1, i, -1, -i].
        let spectrum = dft_forward(&reals(&[0.0, 1.0, 0.0, 0.0])).unwrap();
        let expected = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        assert!(max_abs_diff(&spectrum.values, &expected) < 1e-12);
    }

    #[test]
    fn dft_rejects_empty_input() {
        let x = SampleVector1D::new(vec![], 1.0, 0.0);
        assert_eq!(dft_forward(&x).unwrap_err(), TransformError::Empty);
    }

    #[test]
    fn dft_rejects_non_finite_input() {
        let x = SampleVector1D::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)], 1.0, 0.0);
        assert_eq!(dft_forward(&x).unwrap_err(), TransformError::NonFinite(1));
    }

    #[test]
    fn inverse_of_constant_spectrum() {
        let spectrum = Spectrum1D {
            values: vec![c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            freq_spacing: 0.25,
            layout: Layout::Natural,
        };
        let x = dft_inverse(&spectrum, 1.0).unwrap();
        let expected = [c(1.0, 0.0); 4];
        assert!(max_abs_diff(&x.values, &expected) < 1e-12);
    }

    #[test]
    fn inverse_of_flat_spectrum_is_impulse() {
        let spectrum = Spectrum1D {
            values: vec![c(1.0, 0.0); 4],
            freq_spacing: 0.25,
            layout: Layout::Natural,
        };
        let x = dft_inverse(&spectrum, 1.0).unwrap();
        let expected = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(max_abs_diff(&x.values, &expected) < 1e-12);
    }

    #[test]
    fn dft_round_trip_n16() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = random_samples(&mut rng, 16);
        let back = dft_inverse(&dft_forward(&x).unwrap(), x.spacing).unwrap();
        assert!(max_abs_diff(&back.values, &x.values) < 1e-12);
    }

    #[test]
    fn dft_inverse_rejects_centered_layout() {
        let spectrum = Spectrum1D {
            values: vec![c(1.0, 0.0); 4],
            freq_spacing: 0.25,
            layout: Layout::Centered,
        };
        assert!(matches!(
            dft_inverse(&spectrum, 1.0).unwrap_err(),
            TransformError::WrongLayout { expected: Layout::Natural, .. }
        ));
    }

    #[test]
    fn fft_matches_trivial_dft() {
        let spectrum = fft_forward(&reals(&[1.0, 1.0, 1.0, 1.0])).unwrap();
        let expected = [c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(max_abs_diff(&spectrum.values, &expected) < 1e-12);
    }

    #[test]
    fn fft_matches_naive_dft_n64() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = random_samples(&mut rng, 64);
        let fast = fft_forward(&x).unwrap();
        let naive = dft_forward(&x).unwrap();
        let scale = naive.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        assert!(max_abs_diff(&fast.values, &naive.values) < 1e-10 * scale);
    }

    #[test]
    fn fft_rejects_non_power_of_two() {
        let x = reals(&[0.0; 12]);
        assert_eq!(fft_forward(&x).unwrap_err(), TransformError::NotPowerOfTwo(12));
        let spectrum = Spectrum1D {
            values: vec![c(0.0, 0.0); 6],
            freq_spacing: 1.0,
            layout: Layout::Natural,
        };
        assert_eq!(fft_inverse(&spectrum, 1.0).unwrap_err(), TransformError::NotPowerOfTwo(6));
    }

    #[test]
    fn fft_round_trip_n128() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_samples(&mut rng, 128);
        let back = fft_inverse(&fft_forward(&x).unwrap(), x.spacing).unwrap();
        assert!(max_abs_diff(&back.values, &x.values) < 1e-12);
    }

    #[test]
    fn fft_n1_is_identity() {
        let x = reals(&[3.5]);
        let spectrum = fft_forward(&x).unwrap();
        assert_eq!(spectrum.values, vec![c(3.5, 0.0)]);
    }

    #[test]
    fn frequency_axis_values() {
        assert_eq!(frequency_axis(4, 1.0), vec![0.0, 0.25, 0.5, 0.75]);
        // Gaussian demo domain [0,20) with N=32: f₁ = 1/20.
        let axis = frequency_axis(32, 20.0 / 32.0);
        assert!((axis[1] - 0.05).abs() < 1e-15);
        assert_eq!(frequency_axis(1, 1.0), vec![0.0]);
    }

    #[test]
    fn shift_center_rotates_by_half() {
        let spectrum = Spectrum1D {
            values: vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)],
            freq_spacing: 0.25,
            layout: Layout::Natural,
        };
        let centered = shift_center(&spectrum).unwrap();
        let expected = [c(2.0, 0.0), c(3.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert!(max_abs_diff(&centered.values, &expected) < 1e-15);
        assert_eq!(centered.frequencies(), vec![-0.5, -0.25, 0.0, 0.25]);
        let back = unshift_center(&centered).unwrap();
        assert_eq!(back.values, spectrum.values);
        assert!(shift_center(&centered).is_err());
        assert!(unshift_center(&spectrum).is_err());
    }

    #[test]
    fn shift_center_n1_is_identity() {
        let spectrum = Spectrum1D {
            values: vec![c(2.0, 1.0)],
            freq_spacing: 1.0,
            layout: Layout::Natural,
        };
        assert_eq!(shift_center(&spectrum).unwrap().values, spectrum.values);
    }

    #[test]
    fn fourier_matrix_small_orders() {
        let w2 = build_fourier_matrix(2).unwrap();
        assert!((w2.entry(0, 0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((w2.entry(1, 1) - c(-1.0, 0.0)).norm() < 1e-15);
        let w4 = build_fourier_matrix(4).unwrap();
        let row1 = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for (j, expected) in row1.iter().enumerate() {
            assert!((w4.entry(1, j) - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn fourier_matrix_inverse_property_n16() {
        // (1/N)·Wᴴ·W = I entrywise.
        let n = 16;
        let w = build_fourier_matrix(n).unwrap();
        for a in 0..n {
            for b in 0..n {
                let mut acc = c(0.0, 0.0);
                for k in 0..n {
                    acc += w.entry(k, a).conj() * w.entry(k, b);
                }
                acc /= n as f64;
                let expected = if a == b { c(1.0, 0.0) } else { c(0.0, 0.0) };
                assert!((acc - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn fourier_matrix_cap() {
        assert!(matches!(
            build_fourier_matrix(1025).unwrap_err(),
            TransformError::OrderTooLarge { order: 1025, cap: 1024 }
        ));
    }

    #[test]
    fn fourier_matrix_apply_matches_dft() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_samples(&mut rng, 12);
        let w = build_fourier_matrix(12).unwrap();
        let by_matrix = w.apply(&x.values);
        let by_dft = dft_forward(&x).unwrap();
        assert!(max_abs_diff(&by_matrix, &by_dft.values) < 1e-10);
    }

    #[test]
    fn physical_scale_multiplies_by_spacing() {
        let spectrum = Spectrum1D {
            values: vec![c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            freq_spacing: 0.5,
            layout: Layout::Natural,
        };
        let scaled = spectrum_physical_scale(&spectrum, 0.5);
        assert!((scaled.values[0] - c(2.0, 0.0)).norm() < 1e-15);
        let identity = spectrum_physical_scale(&spectrum, 1.0);
        assert_eq!(identity.values, spectrum.values);
    }

    #[test]
    fn physical_scale_gaussian_matches_riemann_sum_up_to_endpoint_term() {
        // The scaled DFT of e^{-t²} on [0,20) is a left-rectangle Riemann sum
        // of the one-sided integral, so it differs from a refined sum by the
        // endpoint term Δ/2·(p(0) - p(20)) plus O(Δ²).
        let n = 32;
        let spacing = 20.0 / n as f64;
        let x = SampleVector1D::from_fn(n, spacing, 0.0, |t| c((-t * t).exp(), 0.0));
        let scaled = spectrum_physical_scale(&fft_forward(&x).unwrap(), spacing);
        let oracle: f64 = {
            let m = 1_000_000usize;
            let dt = 20.0 / m as f64;
            (0..m).map(|i| (-(i as f64 * dt).powi(2)).exp() * dt).sum()
        };
        let endpoint = spacing / 2.0;
        assert!((scaled.values[0].re - (oracle + endpoint)).abs() < 0.05);
    }

    #[test]
    fn dft_periodicity_by_direct_summation() {
        // Evaluating the defining sum at index k+N reproduces entry k exactly.
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let x = random_samples(&mut rng, 8);
        let n = x.len();
        let spectrum = dft_forward(&x).unwrap();
        let eval = |k: usize| -> Complex {
            x.values
                .iter()
                .enumerate()
                .map(|(j, p)| p * Complex::from_polar(1.0, 2.0 * PI * ((j * k) % n) as f64 / n as f64))
                .sum()
        };
        for k in 0..n {
            assert!((eval(k + n) - spectrum.values[k]).norm() < 1e-12);
        }
    }

    #[test]
    fn dft_linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let x = random_samples(&mut rng, 16);
        let y = random_samples(&mut rng, 16);
        let (a, b) = (c(0.7, -0.2), c(-1.3, 0.4));
        let combo = SampleVector1D::new(
            x.values.iter().zip(&y.values).map(|(p, q)| a * p + b * q).collect(),
            1.0,
            0.0,
        );
        let lhs = dft_forward(&combo).unwrap();
        let px = dft_forward(&x).unwrap();
        let py = dft_forward(&y).unwrap();
        let rhs: Vec<Complex> =
            px.values.iter().zip(&py.values).map(|(p, q)| a * p + b * q).collect();
        assert!(max_abs_diff(&lhs.values, &rhs) < 1e-12);
    }

    #[test]
    fn parseval_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let x = random_samples(&mut rng, 64);
        let spectrum = fft_forward(&x).unwrap();
        let time_energy: f64 = x.values.iter().map(|v| v.norm_sqr()).sum();
        let freq_energy: f64 =
            spectrum.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / x.len() as f64;
        assert!((time_energy - freq_energy).abs() < 1e-10 * time_energy);
    }

    #[test]
    fn conjugate_symmetry_for_real_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let values: Vec<Complex> = (0..32).map(|_| c(rng.gen_range(-1.0..1.0), 0.0)).collect();
        let x = SampleVector1D::new(values, 1.0, 0.0);
        let spectrum = fft_forward(&x).unwrap();
        for k in 1..32 {
            assert!((spectrum.values[32 - k] - spectrum.values[k].conj()).norm() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn fft_round_trip_is_identity(exp in 0u32..8, seed in 0u64..1000) {
            let n = 1usize << exp;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_samples(&mut rng, n);
            let back = fft_inverse(&fft_forward(&x).unwrap(), x.spacing).unwrap();
            prop_assert!(max_abs_diff(&back.values, &x.values) < 1e-12);
        }

        #[test]
        fn shift_unshift_is_identity(n in 1usize..40, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_samples(&mut rng, n);
            let spectrum = dft_forward(&x).unwrap();
            let back = unshift_center(&shift_center(&spectrum).unwrap()).unwrap();
            prop_assert_eq!(back.values, spectrum.values);
        }
    }
}
