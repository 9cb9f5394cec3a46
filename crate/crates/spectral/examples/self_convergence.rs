//! Estimate the RK4 convergence order by running the orbiting-source wave
//! problem at three halved resolutions; the pair-difference ratio should sit
//! near 2⁴ = 16.

use spectral::harness::{cmd_convergence, ConvergenceConfig};

fn main() {
    // the narrow source needs the fine grids; coarser triples let spatial
    // sampling error of the Gaussian swamp the time-integration error
    let cfg = ConvergenceConfig {
        times: vec![0.5, 1.0, 1.5, 2.0, 2.5],
        out_dir: std::env::temp_dir().join("spectral_self_convergence"),
        ..Default::default()
    };
    let report = cmd_convergence(&cfg).unwrap();
    println!("{:>6} {:>10} {:>10}", "t", "q_mean", "q_grid");
    for ((t, qm), qg) in report.times.iter().zip(&report.q_mean).zip(&report.q_grid) {
        println!("{:>6.2} {:>10.3} {:>10.3}", t, qm, qg);
    }
    println!("\nexpected factor for a 4th-order method: 16");
}
