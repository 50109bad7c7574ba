//! Orthonormal 1-D oscillator eigenfunctions.
//!
//! phi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}, evaluated by the
//! three-term recurrence on phi_n itself. Running the recurrence on the
//! functions rather than the polynomials keeps every intermediate value
//! representable: the Gaussian factor is absorbed before H_n can overflow.

use crate::error::{Error, Result};

/// Maximum order accepted by the public evaluator.
pub const HERMITE_N_MAX: usize = 64;

/// Evaluates phi_n(x).
pub fn hermite_fn(n: usize, x: f64) -> Result<f64> {
    if n > HERMITE_N_MAX {
        return Err(Error::OrderOverflow {
            n,
            max: HERMITE_N_MAX,
        });
    }
    let mut values = vec![0.0; n + 1];
    hermite_all(x, &mut values);
    Ok(values[n])
}

/// Fills `out[k] = phi_k(x)` for k = 0..out.len().
///
/// phi_0 = pi^{-1/4} e^{-x^2/2}, phi_1 = sqrt(2) x phi_0, and
/// phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1}.
/// The recurrence tracks the dominant solution, so forward iteration is
/// stable for every real x.
pub(crate) fn hermite_all(x: f64, out: &mut [f64]) {
    if out.is_empty() {
        return;
    }
    let phi0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    out[0] = phi0;
    if out.len() == 1 {
        return;
    }
    out[1] = std::f64::consts::SQRT_2 * x * phi0;
    for k in 1..out.len() - 1 {
        let kf = k as f64;
        out[k + 1] = (2.0 / (kf + 1.0)).sqrt() * x * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
    }
}
