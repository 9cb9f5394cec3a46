//! End-to-end checks of the `spectral` binary: artifacts, exit codes, and
//! agreement between the diagnostics file and the frame files it describes.

use std::path::Path;
use std::process::Command;

use spectral::harness::read_grid_csv;
use spectral::pde::grid_mean;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spectral"))
}

#[test]
fn transform_demo_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .args(["--out", dir.path().to_str().unwrap(), "transform-demo"])
        .status()
        .unwrap();
    assert!(status.success());
    for name in ["transform_natural.csv", "transform_centered.csv", "manifest.txt"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
}

#[test]
fn unknown_config_key_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.cfg");
    std::fs::write(&config, "mystery_knob=1\n").unwrap();
    let output = bin()
        .args(["--config", config.to_str().unwrap(), "--out", dir.path().to_str().unwrap()])
        .arg("poisson")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("mystery_knob"), "stderr: {stderr}");
}

#[test]
fn invalid_resolution_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.cfg");
    std::fs::write(&config, "resolutions=60\n").unwrap();
    let output = bin()
        .args(["--config", config.to_str().unwrap(), "--out", dir.path().to_str().unwrap()])
        .arg("poisson")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

fn run_diffusion(dir: &Path) {
    let config = dir.join("diffusion.cfg");
    std::fs::write(&config, "n=32\nt_final=1.0\noutput_times=0.5,1.0\n").unwrap();
    let status = bin()
        .args(["--config", config.to_str().unwrap(), "--out", dir.to_str().unwrap()])
        .arg("diffusion")
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn diffusion_diagnostics_describe_the_frames() {
    let dir = tempfile::tempdir().unwrap();
    run_diffusion(dir.path());
    let diagnostics = std::fs::read_to_string(dir.path().join("diffusion_diagnostics.csv")).unwrap();
    let mut lines = diagnostics.lines();
    assert_eq!(lines.next().unwrap(), "t,mean_re,mean_im,max_abs");
    for line in lines {
        let fields: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let (frame, t) =
            read_grid_csv(&dir.path().join(format!("diffusion_t{:.4}.csv", fields[0]))).unwrap();
        assert_eq!(t, fields[0]);
        let mean = grid_mean(&frame);
        assert!((mean.re - fields[1]).abs() < 1e-14);
        assert!((mean.im - fields[2]).abs() < 1e-14);
        assert!((frame.max_abs() - fields[3]).abs() < 1e-14);
    }
}

#[test]
fn manifest_echoes_the_resolved_configuration() {
    let dir = tempfile::tempdir().unwrap();
    run_diffusion(dir.path());
    let manifest = std::fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    assert!(manifest.contains("experiment=diffusion"));
    assert!(manifest.contains("n=32"));
    assert!(manifest.contains("t_final=1"));
    assert!(manifest.contains("seed=0"));
}
