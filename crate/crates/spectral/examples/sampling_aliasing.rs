//! Sinc reconstruction of a bandlimited signal and the aliasing map for
//! frequencies beyond the critical frequency.

use spectral::sampling::{alias_of, nyquist_frequency, sinc_reconstruct, BandlimitedSampleSet};

fn main() {
    let spacing = 1.0;
    let signal = |t: f64| (2.0 * std::f64::consts::PI * 0.3 * t).sin();
    let samples: Vec<f64> = (0..64).map(|n| signal(n as f64 * spacing)).collect();
    let set = BandlimitedSampleSet::new(samples, spacing, 0.0);

    println!("critical frequency: {} Hz", nyquist_frequency(spacing).unwrap());
    println!("\nreconstruction of sin(2π·0.3·t) at off-sample points:");
    for &t in &[10.5, 20.25, 31.75] {
        let rec = sinc_reconstruct(&set, t);
        println!("  t = {t:>6}: reconstructed {rec:>9.5}, exact {:>9.5}", signal(t));
    }

    println!("\naliasing under 1 Hz sampling:");
    for f in [0.3, 0.5, 0.7, 1.0, 1.3] {
        println!("  {f:>4} Hz appears as {:>5.2} Hz", alias_of(f, spacing).unwrap());
    }
}
