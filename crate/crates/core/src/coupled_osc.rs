//! Two identical oscillators with a bilinear coupling.
//!
//! The potential (A/2)(x1^2 + x2^2) + C x1 x2 decouples in the normal
//! coordinates (x1 +- x2). The frequency asymmetry between the two modes is
//! captured by an effective spring constant K = sqrt(A^2 - C^2) and a squeeze
//! parameter eta with e^{2 eta} = sqrt((A - C)/(A + C)), and the ground state
//! in the original coordinates is exactly the squeezed Gaussian family of
//! [`crate::wavefn::psi`] with x1, x2 in place of z, t.

use crate::error::{Error, Result};
use crate::lightcone::Rapidity;

/// Two equal-mass oscillators with spring constant `A` and coupling `C`.
///
/// Validated at construction: `mass > 0`, `A > 0`, and `|C| < A` (the
/// potential must be positive definite, otherwise K would be imaginary and
/// the ground state non-normalizable). Operations on a constructed system are
/// total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoupledOscillatorSystem {
    mass: f64,
    spring: f64,
    coupling: f64,
}

/// Normal-mode data derived from a [`CoupledOscillatorSystem`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalModeData {
    /// Effective spring constant K = sqrt(A^2 - C^2).
    pub k: f64,
    /// Squeeze parameter, eta = ln((A - C)/(A + C)) / 4.
    pub eta: Rapidity,
    /// Frequency of the (x1 + x2) mode, sqrt((A + C)/m).
    pub omega_plus: f64,
    /// Frequency of the (x1 - x2) mode, sqrt((A - C)/m).
    pub omega_minus: f64,
}

impl CoupledOscillatorSystem {
    pub fn new(mass: f64, spring: f64, coupling: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParameter {
                name: "mass",
                value: mass,
                reason: "must be finite and positive",
            });
        }
        if !(spring.is_finite() && spring > 0.0) {
            return Err(Error::InvalidParameter {
                name: "A",
                value: spring,
                reason: "must be finite and positive",
            });
        }
        if !coupling.is_finite() {
            return Err(Error::InvalidParameter {
                name: "C",
                value: coupling,
                reason: "must be finite",
            });
        }
        if coupling.abs() >= spring {
            return Err(Error::DegenerateCoupling {
                a: spring,
                c: coupling,
            });
        }
        let sys = CoupledOscillatorSystem {
            mass,
            spring,
            coupling,
        };
        // Near-degenerate couplings can push eta past the representable bound;
        // reject them here so that normal_modes stays total.
        sys.eta()?;
        Ok(sys)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spring(&self) -> f64 {
        self.spring
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    fn eta(&self) -> Result<Rapidity> {
        // e^{2 eta} = sqrt((A - C)/(A + C)), principal real logarithm.
        let ratio = (self.spring - self.coupling) / (self.spring + self.coupling);
        Rapidity::new(0.25 * ratio.ln())
    }

    /// Normal-mode decomposition.
    ///
    /// The mass enters only the mode frequencies; K and eta depend on (A, C)
    /// alone, and so does the ground state.
    pub fn normal_modes(&self) -> NormalModeData {
        let eta = self
            .eta()
            .expect("validated at construction; eta is in range");
        let k = (self.spring * self.spring - self.coupling * self.coupling).sqrt();
        NormalModeData {
            k,
            eta,
            omega_plus: ((self.spring + self.coupling) / self.mass).sqrt(),
            omega_minus: ((self.spring - self.coupling) / self.mass).sqrt(),
        }
    }

    /// Potential energy (A x1^2 + A x2^2 + 2 C x1 x2) / 2.
    pub fn potential_energy(&self, x1: f64, x2: f64) -> f64 {
        0.5 * (self.spring * x1 * x1 + self.spring * x2 * x2 + 2.0 * self.coupling * x1 * x2)
    }

    /// Same potential in normal-mode form,
    /// (K/4) { e^{-2 eta} (x1 + x2)^2 + e^{2 eta} (x1 - x2)^2 }.
    pub fn potential_energy_normal_form(&self, x1: f64, x2: f64) -> f64 {
        let nm = self.normal_modes();
        let eta = nm.eta.value();
        let plus = x1 + x2;
        let minus = x1 - x2;
        0.25 * nm.k * ((-2.0 * eta).exp() * plus * plus + (2.0 * eta).exp() * minus * minus)
    }

    /// Ground-state wavefunction
    /// (1/sqrt(pi)) exp{ -[e^{-eta} (x1 + x2)^2 + e^{eta} (x1 - x2)^2] / 4 }.
    ///
    /// Identical to [`crate::wavefn::psi`] evaluated at (x1, x2).
    pub fn ground_state(&self, x1: f64, x2: f64) -> f64 {
        let eta = self.normal_modes().eta.value();
        let plus = x1 + x2;
        let minus = x1 - x2;
        let exponent = -0.25 * ((-eta).exp() * plus * plus + eta.exp() * minus * minus);
        std::f64::consts::FRAC_2_SQRT_PI * 0.5 * exponent.exp()
    }
}
