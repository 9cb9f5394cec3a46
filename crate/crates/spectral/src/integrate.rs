//! Fixed-step explicit time integration over complex state vectors.

use thiserror::Error;

use crate::Complex;

#[derive(Debug, Error, PartialEq)]
pub enum IntegrationError {
    #[error("state became non-finite during the step starting at t = {time}")]
    NonFinite { time: f64 },
    #[error("time step must be positive, got {0}")]
    NonPositiveDt(f64),
}

/// One or more equal-length component sequences (e.g. the `(û, v̂)` pair of a
/// first-order oscillator system) plus the current time.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeState {
    pub components: Vec<Vec<Complex>>,
    pub time: f64,
}

impl OdeState {
    pub fn new(components: Vec<Vec<Complex>>, time: f64) -> Self {
        assert!(!components.is_empty(), "state needs at least one component");
        let len = components[0].len();
        assert!(components.iter().all(|c| c.len() == len), "components must share one length");
        assert!(time.is_finite());
        Self { components, time }
    }

    fn is_finite(&self) -> bool {
        self.components
            .iter()
            .flatten()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

/// Time derivative of each state component.
pub type Derivative = Vec<Vec<Complex>>;

fn stage(base: &[Vec<Complex>], k: &Derivative, factor: f64) -> Vec<Vec<Complex>> {
    base.iter()
        .zip(k)
        .map(|(b, kc)| b.iter().zip(kc).map(|(x, dx)| x + factor * dx).collect())
        .collect()
}

/// One classical 4th-order Runge-Kutta step.
///
/// Combines four stage evaluations as `(k₁ + 2k₂ + 2k₃ + k₄)/6`; local error
/// O(dt⁵), global O(dt⁴). Non-finite values coming out of `rhs` surface as
/// [`IntegrationError::NonFinite`].
pub fn rk4_step(
    state: &OdeState,
    dt: f64,
    rhs: impl Fn(f64, &[Vec<Complex>]) -> Derivative,
) -> Result<OdeState, IntegrationError> {
    if dt <= 0.0 {
        return Err(IntegrationError::NonPositiveDt(dt));
    }
    let t = state.time;
    let y = &state.components;
    let k1 = rhs(t, y);
    let k2 = rhs(t + dt / 2.0, &stage(y, &k1, dt / 2.0));
    let k3 = rhs(t + dt / 2.0, &stage(y, &k2, dt / 2.0));
    let k4 = rhs(t + dt, &stage(y, &k3, dt));
    let components: Vec<Vec<Complex>> = y
        .iter()
        .zip(&k1)
        .zip(&k2)
        .zip(&k3)
        .zip(&k4)
        .map(|((((yc, a), b), c), d)| {
            yc.iter()
                .zip(a)
                .zip(b)
                .zip(c)
                .zip(d)
                .map(|((((y0, ka), kb), kc), kd)| {
                    y0 + dt / 6.0 * (ka + 2.0 * kb + 2.0 * kc + kd)
                })
                .collect()
        })
        .collect();
    let next = OdeState { components, time: t + dt };
    if !next.is_finite() {
        return Err(IntegrationError::NonFinite { time: t });
    }
    Ok(next)
}
