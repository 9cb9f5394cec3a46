//! Sample e^{-t²} on [0, 20), transform it, and compare the scaled spectrum
//! against the exact continuous transform √π·e^{-(πf)²}.

use spectral::fourier1d::{fft_forward, shift_center, spectrum_physical_scale, SampleVector1D};
use spectral::Complex;

fn main() {
    let n = 32;
    let spacing = 20.0 / n as f64;
    let samples = SampleVector1D::from_fn(n, spacing, 0.0, |t| Complex::new((-t * t).exp(), 0.0));
    let spectrum = spectrum_physical_scale(&fft_forward(&samples).unwrap(), spacing);
    let centered = shift_center(&spectrum).unwrap();

    println!("{:>10} {:>12} {:>12} {:>12}", "f", "|P(f)|", "exact", "diff");
    for (f, v) in centered.frequencies().iter().zip(&centered.values) {
        let exact = std::f64::consts::PI.sqrt() * (-(std::f64::consts::PI * f).powi(2)).exp();
        println!("{:>10.4} {:>12.6} {:>12.6} {:>12.2e}", f, v.norm(), exact, (v.norm() - exact).abs());
    }
}
