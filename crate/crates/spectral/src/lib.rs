//! Discrete Fourier analysis and pseudo-spectral PDE solvers on periodic domains.
//!
//! The crate is organized bottom-up:
//!
//! * [`fourier1d`] — naive DFT, radix-2 FFT, frequency axes, spectrum centering.
//! * [`fourier2d`] — 2D transforms by sequential 1D passes, wavenumber tables.
//! * [`sampling`] — Nyquist frequency, sinc reconstruction, aliasing.
//! * [`integrate`] — classical RK4 over complex state vectors.
//! * [`pde`] — spectral Poisson, diffusion and wave solvers.
//! * [`harness`] — experiment runners, benchmarking, convergence tests, CSV I/O.
//!
//! Sign convention: the forward transform kernel is `e^{+2πi jk/N}` and the
//! inverse uses the conjugate kernel with a `1/N` factor. The solvers depend
//! only on `ω²`, which is insensitive to this choice.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod fourier1d;
pub mod fourier2d;
pub mod harness;
pub mod integrate;
pub mod pde;
pub mod sampling;

/// The scalar of all spectra and solver state.
pub type Complex = num_complex::Complex64;
