//! Sampling-theorem utilities: Nyquist frequency, truncated sinc
//! reconstruction, and aliasing prediction.

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SamplingError {
    #[error("sample spacing must be positive, got {0}")]
    NonPositiveSpacing(f64),
}

/// Real samples taken at uniform spacing starting at `origin`.
#[derive(Debug, Clone)]
pub struct BandlimitedSampleSet {
    pub samples: Vec<f64>,
    pub spacing: f64,
    pub origin: f64,
}

impl BandlimitedSampleSet {
    pub fn new(samples: Vec<f64>, spacing: f64, origin: f64) -> Self {
        assert!(spacing > 0.0, "spacing must be positive");
        assert!(samples.iter().all(|s| s.is_finite()), "samples must be finite");
        Self { samples, spacing, origin }
    }

    pub fn sample_time(&self, n: usize) -> f64 {
        self.origin + n as f64 * self.spacing
    }
}

/// The largest representable frequency magnitude, `f_c = 1/(2Δt)`.
pub fn nyquist_frequency(spacing: f64) -> Result<f64, SamplingError> {
    if spacing <= 0.0 {
        return Err(SamplingError::NonPositiveSpacing(spacing));
    }
    Ok(1.0 / (2.0 * spacing))
}

/// Evaluate the truncated sinc interpolation over the available window.
///
/// Each term is `Δt·p_n·sin(2πf_c(t - t_n))/(π(t - t_n))`; the removable
/// singularity at `t = t_n` takes its limit value so the sum returns `p_n`
/// exactly at sample points. Truncation error grows toward the window edges
/// like one over the distance to the edge; it is documented, not signaled.
pub fn sinc_reconstruct(set: &BandlimitedSampleSet, t: f64) -> f64 {
    let fc = 1.0 / (2.0 * set.spacing);
    let eps = 1e-9 * set.spacing;
    let mut acc = 0.0;
    for (n, &p) in set.samples.iter().enumerate() {
        let dt = t - set.sample_time(n);
        if dt.abs() < eps {
            // limit value: Δt·p·2f_c = p
            acc += p;
        } else {
            acc += set.spacing * p * (2.0 * PI * fc * dt).sin() / (PI * dt);
        }
    }
    acc
}

/// The unique `f' ∈ (-f_c, f_c]` indistinguishable from `f` at this spacing.
///
/// Ties at `±f_c` resolve to `+f_c`.
pub fn alias_of(f: f64, spacing: f64) -> Result<f64, SamplingError> {
    if spacing <= 0.0 {
        return Err(SamplingError::NonPositiveSpacing(spacing));
    }
    let fc = 1.0 / (2.0 * spacing);
    let mut folded = f - (f * spacing).round() / spacing;
    if folded <= -fc {
        folded += 2.0 * fc;
    }
    Ok(folded)
}
