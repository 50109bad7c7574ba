//! covosc: a numerical toolkit for the relativistic harmonic oscillator.
//!
//! The pieces fit together around one squeeze parameter, the rapidity eta:
//!
//! * [`lightcone`] — exact 2x2 boost kinematics; in light-cone coordinates a
//!   boost is the area-preserving squeeze (u, v) -> (e^{eta/2} u, e^{-eta/2} v).
//! * [`coupled_osc`] — two coupled oscillators; their normal-mode asymmetry
//!   defines the same eta, and their ground state is the same Gaussian.
//! * [`wavefn`] — the boosted Gaussian family psi_eta(z, t): evaluation,
//!   quadrature-verified normalization, density grids, the diagonal expansion
//!   over oscillator products, and a finite-difference check of the
//!   oscillator eigenvalue equation.
//! * [`desitter`] — two-mode step operators on a truncated Fock space and the
//!   ten quadratic generators, with numerical verification that their
//!   commutators close; exponentiating the two-mode squeeze reproduces the
//!   expansion coefficients of [`wavefn`].
//!
//! Everything is computed in natural units (c = 1). All operations are pure
//! and deterministic: fixed summation orders, no global state, no threads.

pub mod coupled_osc;
pub mod desitter;
pub mod error;
pub mod lightcone;
pub mod report;
pub mod wavefn;

pub use coupled_osc::{CoupledOscillatorSystem, NormalModeData};
pub use desitter::{
    build_generators, commutator, step_operators, verify_algebra, ClosureReport, FockOperator,
    GeneratorSet, StepOperators, TruncatedFockSpace,
};
pub use error::{Error, Result};
pub use lightcone::{
    boost_lightcone, boost_matrix, boost_point, from_lightcone, hadron_constituents,
    hadron_coordinates, to_lightcone, BoostMatrix, FourVector, LightConePoint, Rapidity,
    SpaceTimePoint, ETA_MAX,
};
pub use wavefn::{
    density_grid, ground_4d, ground_4d_normalized, hermite_fn, normalization, psi, residual_eq13,
    residual_eq13_4d, squeeze_expansion, CovariantWavefunction, DensityGrid, ExpansionCoefficients,
    GridSpec, MetricSignature, QuadratureRule, ResidualReport,
};
