//! Time the O(N²) DFT against the FFT and fit both to power laws.

use spectral::harness::{cmd_bench, log_model_r2, loglog_fit, BenchConfig};

fn main() {
    let cfg = BenchConfig {
        sizes: (3..=12).map(|m| 1usize << m).collect(),
        repetitions: 5,
        seed: 0,
    };
    let records = cmd_bench(&cfg).unwrap();

    println!("{:>6} {:>12} {:>12} {:>8}", "n", "dft (s)", "fft (s)", "ratio");
    for r in &records {
        println!(
            "{:>6} {:>12.3e} {:>12.3e} {:>8.1}",
            r.n,
            r.dft_seconds,
            r.fft_seconds,
            r.dft_seconds / r.fft_seconds
        );
    }

    let ns: Vec<f64> = records.iter().map(|r| r.n as f64).collect();
    let dft: Vec<f64> = records.iter().map(|r| r.dft_seconds).collect();
    let fft: Vec<f64> = records.iter().map(|r| r.fft_seconds).collect();
    let (slope, _, r2) = loglog_fit(&ns, &dft);
    println!("\ndft log-log slope: {slope:.3} (R² = {r2:.5})");
    println!(
        "fft model fit: R²(n log n) = {:.5}, R²(n²) = {:.5}",
        log_model_r2(&ns, &fft, |n| n * n.log2()),
        log_model_r2(&ns, &fft, |n| n * n)
    );
}
