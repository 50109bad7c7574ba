//! The ten quadratic generators on two modes.
//!
//! Every Hermitian quadratic in {a1, a2, a1t, a2t} is a combination of ten
//! independent operators: four that conserve total occupation (mode exchange,
//! plane rotation, occupation difference, occupation sum) and six built from
//! pair creation/annihilation (two quadratures of each single-mode squeeze
//! and two of the two-mode squeeze). Their commutators close on the same ten,
//! which is verified numerically in [`super::closure`] instead of being
//! hard-coded against any particular normalization.

use crate::desitter::{step_operators, FockOperator, TruncatedFockSpace};
use crate::error::{Error, Result};
use crate::lightcone::Rapidity;
use nalgebra::DVector;
use num_complex::Complex64;

pub const GENERATOR_COUNT: usize = 10;

/// Fixed report order of the generators.
pub const GENERATOR_NAMES: [&str; GENERATOR_COUNT] =
    ["J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"];

/// What each generator does, aligned with [`GENERATOR_NAMES`].
pub const GENERATOR_ROLES: [&str; GENERATOR_COUNT] = [
    "mode exchange (a1t a2 + a2t a1)/2",
    "rotation in the 1-2 mode plane (a1t a2 - a2t a1)/2i",
    "occupation difference (N1 - N2)/2",
    "occupation sum (N1 + N2 + 1)/2",
    "single-mode squeeze, real quadrature, mode difference",
    "single-mode squeeze, imaginary quadrature, mode sum",
    "two-mode squeeze, real quadrature (a1t a2t + a1 a2)/2",
    "single-mode squeeze, imaginary quadrature, mode difference",
    "single-mode squeeze, real quadrature, mode sum",
    "two-mode squeeze, imaginary quadrature i(a1t a2t - a1 a2)/2",
];

/// The ten generators on a common truncated space.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    space: TruncatedFockSpace,
    ops: Vec<FockOperator>,
}

impl GeneratorSet {
    pub fn space(&self) -> &TruncatedFockSpace {
        &self.space
    }

    pub fn n_max(&self) -> usize {
        self.space.n_max()
    }

    pub fn ops(&self) -> &[FockOperator] {
        &self.ops
    }

    pub fn op(&self, index: usize) -> &FockOperator {
        &self.ops[index]
    }

    /// The rotation generator in the 1-2 mode plane; annihilates |0,0>.
    pub fn plane_rotation(&self) -> &FockOperator {
        &self.ops[1]
    }

    /// (N1 + N2 + 1)/2; eigenvalue 1/2 on the vacuum.
    pub fn occupation_sum(&self) -> &FockOperator {
        &self.ops[3]
    }
}

/// Builds the ten generators from the step operators.
///
/// Requires n_max >= 4: below that the interior block is too small for any
/// commutator statement to be meaningful. Hermiticity of every generator is
/// checked at build time.
pub fn build_generators(space: &TruncatedFockSpace) -> Result<GeneratorSet> {
    if space.n_max() < 4 {
        return Err(Error::CutoffTooSmall {
            n_max: space.n_max(),
            min: 4,
        });
    }
    let steps = step_operators(space)?;
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);

    let n1 = steps.a1_dag.compose(&steps.a1)?;
    let n2 = steps.a2_dag.compose(&steps.a2)?;
    let exchange = steps.a1_dag.compose(&steps.a2)?;
    let exchange_dag = exchange.adjoint();
    let pair_up1 = steps.a1_dag.compose(&steps.a1_dag)?;
    let pair_dn1 = pair_up1.adjoint();
    let pair_up2 = steps.a2_dag.compose(&steps.a2_dag)?;
    let pair_dn2 = pair_up2.adjoint();
    let pair_up12 = steps.a1_dag.compose(&steps.a2_dag)?;
    let pair_dn12 = pair_up12.adjoint();
    let identity = FockOperator::identity(space);

    let j1 = exchange.add(&exchange_dag).scale(re(0.5));
    let j2 = exchange.sub(&exchange_dag).scale(im(-0.5));
    let j3 = n1.sub(&n2).scale(re(0.5));
    let s0 = n1.add(&n2).add(&identity).scale(re(0.5));
    let k1 = pair_up1
        .add(&pair_dn1)
        .sub(&pair_up2)
        .sub(&pair_dn2)
        .scale(re(-0.25));
    let k2 = pair_up1
        .sub(&pair_dn1)
        .add(&pair_up2)
        .sub(&pair_dn2)
        .scale(im(0.25));
    let k3 = pair_up12.add(&pair_dn12).scale(re(0.5));
    let q1 = pair_up1
        .sub(&pair_dn1)
        .sub(&pair_up2)
        .add(&pair_dn2)
        .scale(im(-0.25));
    let q2 = pair_up1
        .add(&pair_dn1)
        .add(&pair_up2)
        .add(&pair_dn2)
        .scale(re(-0.25));
    let q3 = pair_up12.sub(&pair_dn12).scale(im(0.5));

    let ops = vec![j1, j2, j3, s0, k1, k2, k3, q1, q2, q3];
    for (op, name) in ops.iter().zip(GENERATOR_NAMES) {
        let defect = op.hermiticity_defect();
        assert!(
            defect <= 1e-12,
            "generator {name} is not Hermitian on the truncated space: defect {defect:e}"
        );
    }
    Ok(GeneratorSet { space: *space, ops })
}

/// exp{ (eta/2) (a1t a2t - a1 a2) } |0,0>.
///
/// The exponent maps the diagonal-pair ladder into itself, so the result is
/// supported on |n, n> with geometric coefficients tanh^n(eta/2)/cosh(eta/2).
/// The action of the exponent is applied matrix-free (same matrix elements as
/// the dense step-operator products; see the equivalence test) through a
/// substepped Taylor series with a fixed summation order.
pub fn two_mode_squeeze_vacuum(space: &TruncatedFockSpace, eta: Rapidity) -> DVector<Complex64> {
    let r = 0.5 * eta.value();
    let mut state = space.basis_state(0, 0);
    if r == 0.0 {
        return state;
    }

    // Substep so each Taylor series runs at modest norm: the generator norm
    // grows like 2 |r| (n_max + 1).
    let substeps = (0.5 * r.abs() * (space.n_max() as f64 + 1.0))
        .ceil()
        .max(1.0) as usize;
    let step_r = r / substeps as f64;
    for _ in 0..substeps {
        let mut term = state.clone();
        let mut sum = state.clone();
        for k in 1..=400 {
            term = apply_pair_ladder(space, &term, step_r / k as f64);
            sum += &term;
            let term_norm: f64 = term.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            let sum_norm: f64 = sum.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if term_norm <= 1e-22 * sum_norm {
                break;
            }
        }
        state = sum;
    }
    state
}

/// v -> r (a1t a2t - a1 a2) v, written out entrywise.
fn apply_pair_ladder(
    space: &TruncatedFockSpace,
    v: &DVector<Complex64>,
    r: f64,
) -> DVector<Complex64> {
    let n_max = space.n_max();
    let mut out = DVector::zeros(space.dimension());
    for m1 in 0..n_max {
        for m2 in 0..n_max {
            let amp = r * (((m1 + 1) * (m2 + 1)) as f64).sqrt();
            out[space.flat_index(m1 + 1, m2 + 1)] += v[space.flat_index(m1, m2)] * amp;
        }
    }
    for m1 in 1..=n_max {
        for m2 in 1..=n_max {
            let amp = r * ((m1 * m2) as f64).sqrt();
            out[space.flat_index(m1 - 1, m2 - 1)] -= v[space.flat_index(m1, m2)] * amp;
        }
    }
    out
}

/// The |n, n> amplitudes of a state.
pub fn diagonal_coefficients(
    space: &TruncatedFockSpace,
    state: &DVector<Complex64>,
) -> Vec<Complex64> {
    (0..=space.n_max())
        .map(|n| state[space.flat_index(n, n)])
        .collect()
}

/// Largest |<n1, n2 | state>| with n1 != n2.
pub fn max_off_diagonal(space: &TruncatedFockSpace, state: &DVector<Complex64>) -> f64 {
    let mut max = 0.0f64;
    for idx in 0..space.dimension() {
        let (n1, n2) = space.occupations(idx);
        if n1 != n2 {
            max = max.max(state[idx].norm());
        }
    }
    max
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desitter::step_operators;
    use approx::assert_abs_diff_eq;

    #[test]
    fn needs_a_cutoff_of_at_least_four() {
        let space = TruncatedFockSpace::new(3).unwrap();
        assert!(matches!(
            build_generators(&space),
            Err(Error::CutoffTooSmall { min: 4, .. })
        ));
    }

    #[test]
    fn occupation_sum_on_vacuum_is_one_half() {
        let space = TruncatedFockSpace::new(5).unwrap();
        let gens = build_generators(&space).unwrap();
        let vacuum = space.basis_state(0, 0);
        let out = gens.occupation_sum().apply(&vacuum);
        assert_abs_diff_eq!(out[0].re, 0.5, epsilon = 1e-15);
        let diff: f64 = (&out - &vacuum.map(|c| c * Complex64::new(0.5, 0.0)))
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn plane_rotation_annihilates_vacuum() {
        let space = TruncatedFockSpace::new(5).unwrap();
        let gens = build_generators(&space).unwrap();
        let out = gens.plane_rotation().apply(&space.basis_state(0, 0));
        let norm: f64 = out.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        assert_eq!(norm, 0.0);
    }

    #[test]
    fn all_generators_are_hermitian() {
        let space = TruncatedFockSpace::new(6).unwrap();
        let gens = build_generators(&space).unwrap();
        for op in gens.ops() {
            assert!(op.hermiticity_defect() <= 1e-12);
        }
    }

    #[test]
    fn generators_have_real_spectra_on_the_interior() {
        // Eigendecompose each interior block and require the real-eigenvalue
        // reconstruction to reproduce it.
        let space = TruncatedFockSpace::new(8).unwrap();
        let gens = build_generators(&space).unwrap();
        let interior: Vec<usize> = (0..space.dimension())
            .filter(|&i| space.is_interior(i))
            .collect();
        for (op, name) in gens.ops().iter().zip(GENERATOR_NAMES) {
            let block = op.matrix().select_rows(&interior).select_columns(&interior);
            let eig = block.clone().symmetric_eigen();
            let diag =
                nalgebra::DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x, 0.0)));
            let recon = &eig.eigenvectors * diag * eig.eigenvectors.adjoint();
            let err: f64 = (&block - recon)
                .iter()
                .map(|c| c.norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(
                err <= 1e-10,
                "{name}: interior block not reproduced by a real spectrum (err {err:e})"
            );
        }
    }

    #[test]
    fn pair_ladder_matches_dense_operators() {
        let space = TruncatedFockSpace::new(6).unwrap();
        let steps = step_operators(&space).unwrap();
        let r = 0.37;
        let dense = steps
            .a1_dag
            .compose(&steps.a2_dag)
            .unwrap()
            .sub(&steps.a1.compose(&steps.a2).unwrap())
            .scale(Complex64::new(r, 0.0));
        let mut v = DVector::zeros(space.dimension());
        for (i, entry) in v.iter_mut().enumerate() {
            *entry = Complex64::new((i as f64 * 0.3).sin(), (i as f64 * 0.7).cos());
        }
        let fast = apply_pair_ladder(&space, &v, r);
        let slow = dense.apply(&v);
        let diff: f64 = (&fast - &slow)
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff <= 1e-13, "matrix-free action disagrees: {diff:e}");
    }

    #[test]
    fn squeezed_vacuum_is_diagonal_and_geometric() {
        let space = TruncatedFockSpace::new(20).unwrap();
        let eta = Rapidity::new(1.0).unwrap();
        let state = two_mode_squeeze_vacuum(&space, eta);
        assert!(max_off_diagonal(&space, &state) <= 1e-14);

        let coeffs = diagonal_coefficients(&space, &state);
        let expected_ratio = 0.5f64.tanh();
        for n in 0..8 {
            let ratio = coeffs[n + 1].re / coeffs[n].re;
            assert_abs_diff_eq!(ratio, expected_ratio, epsilon = 1e-10);
            assert!(coeffs[n].im.abs() <= 1e-15);
        }
        assert_abs_diff_eq!(coeffs[0].re, 1.0 / 0.5f64.cosh(), epsilon = 1e-12);

        // eta = 0 leaves the vacuum untouched
        let idle = two_mode_squeeze_vacuum(&space, Rapidity::zero());
        assert_eq!(idle[space.flat_index(0, 0)], Complex64::new(1.0, 0.0));
    }
}
