//! Expansion of the boosted state over oscillator product states.
//!
//! The boosted Gaussian is a two-mode squeezed vacuum: expanded over products
//! phi_m(z) phi_n(t) of unit-frequency oscillator eigenfunctions it is purely
//! diagonal, psi_eta = sum_n c_n phi_n(z) phi_n(t), with geometrically
//! decaying coefficients. The basis is pinned by the eta = 0 case, where the
//! state is the single product phi_0 phi_0.
//!
//! Overlaps are computed by tensor Gauss-Hermite quadrature on the rotated
//! light-cone axes (unit Jacobian). The full cross matrix <phi_m phi_n | psi>
//! is evaluated so the diagonality claim is checked, not assumed.

use crate::error::{Error, Result};
use crate::lightcone::Rapidity;
use crate::wavefn::hermite::{hermite_all, HERMITE_N_MAX};
use crate::wavefn::quad::QuadratureRule;
use crate::wavefn::{policed_pair, psi, QUAD_AGREEMENT_TOL};

/// Largest tolerated off-diagonal overlap magnitude.
pub const OFF_DIAGONAL_TOL: f64 = 1e-10;

/// Coefficients must stand this far clear of the quadrature noise floor
/// (~1e-16 absolute) before a consecutive ratio is formed; below it the
/// induced ratio error would exceed 1e-9.
const RATIO_FLOOR: f64 = 1e-6;

/// Diagonal expansion coefficients of psi_eta, with diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionCoefficients {
    eta: f64,
    coefficients: Vec<f64>,
    max_off_diagonal: f64,
    quad_disagreement: f64,
}

impl ExpansionCoefficients {
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `c[n] = <phi_n(z) phi_n(t) | psi_eta>` for n = 0..=n_max.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Largest |<phi_m phi_n | psi_eta>| over m != n; zero for an exactly
    /// diagonal expansion.
    pub fn max_off_diagonal(&self) -> f64 {
        self.max_off_diagonal
    }

    /// Disagreement between the requested-order and doubled-order overlap
    /// matrices (largest entry difference).
    pub fn quad_disagreement(&self) -> f64 {
        self.quad_disagreement
    }

    /// sum of c_n^2; approaches 1 as the truncation grows.
    pub fn sum_of_squares(&self) -> f64 {
        self.coefficients.iter().map(|c| c * c).sum()
    }

    /// Consecutive ratios `c[n+1]/c[n]` wherever `|c[n]|` is above the noise
    /// floor. Geometric for the squeezed vacuum, with ratio tanh(eta/2).
    pub fn ratios(&self) -> Vec<f64> {
        self.coefficients
            .windows(2)
            .filter(|w| w[0].abs() > RATIO_FLOOR)
            .map(|w| w[1] / w[0])
            .collect()
    }
}

/// Expands psi_eta over phi_n(z) phi_n(t) up to `n_max`.
///
/// Fails with [`Error::QuadratureUnderResolved`] when the requested order is
/// below [`crate::wavefn::MIN_QUAD_ORDER`], when the doubled-order rerun
/// disagrees, or when the cross terms exceed [`OFF_DIAGONAL_TOL`].
pub fn squeeze_expansion(
    eta: Rapidity,
    n_max: usize,
    quad: &QuadratureRule,
) -> Result<ExpansionCoefficients> {
    if n_max > HERMITE_N_MAX {
        return Err(Error::OrderOverflow {
            n: n_max,
            max: HERMITE_N_MAX,
        });
    }
    let doubled = policed_pair(quad)?;
    let coarse = overlap_matrix(eta, n_max, quad);
    let fine = overlap_matrix(eta, n_max, &doubled);

    let quad_disagreement = coarse
        .iter()
        .zip(&fine)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if quad_disagreement > QUAD_AGREEMENT_TOL {
        return Err(Error::QuadratureUnderResolved(format!(
            "expansion overlaps at order {} and {} differ by {:e} (tol {:e})",
            quad.order(),
            doubled.order(),
            quad_disagreement,
            QUAD_AGREEMENT_TOL
        )));
    }

    let side = n_max + 1;
    let mut max_off_diagonal = 0.0f64;
    for m in 0..side {
        for n in 0..side {
            if m != n {
                max_off_diagonal = max_off_diagonal.max(fine[m * side + n].abs());
            }
        }
    }
    if max_off_diagonal > OFF_DIAGONAL_TOL {
        return Err(Error::QuadratureUnderResolved(format!(
            "cross terms reach {:e}, expected a diagonal expansion within {:e}",
            max_off_diagonal, OFF_DIAGONAL_TOL
        )));
    }

    let coefficients = (0..side).map(|n| fine[n * side + n]).collect();
    Ok(ExpansionCoefficients {
        eta: eta.value(),
        coefficients,
        max_off_diagonal,
        quad_disagreement,
    })
}

/// Overlap matrix M[m][n] = <phi_m(z) phi_n(t) | psi_eta>, flattened
/// row-major, computed on the rotated light-cone axes u, v where
/// z = (u + v)/sqrt(2) and t = (u - v)/sqrt(2).
fn overlap_matrix(eta: Rapidity, n_max: usize, quad: &QuadratureRule) -> Vec<f64> {
    let side = n_max + 1;
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut matrix = vec![0.0; side * side];
    let mut phi_z = vec![0.0; side];
    let mut phi_t = vec![0.0; side];
    for (&xu, &wu) in quad.nodes().iter().zip(quad.total_weights()) {
        for (&xv, &wv) in quad.nodes().iter().zip(quad.total_weights()) {
            let z = (xu + xv) * inv_sqrt2;
            let t = (xu - xv) * inv_sqrt2;
            let weight = wu * wv * psi(eta, z, t);
            if weight == 0.0 {
                continue;
            }
            hermite_all(z, &mut phi_z);
            hermite_all(t, &mut phi_t);
            for m in 0..side {
                let wm = weight * phi_z[m];
                for n in 0..side {
                    matrix[m * side + n] += wm * phi_t[n];
                }
            }
        }
    }
    matrix
}
