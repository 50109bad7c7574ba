//! Two-mode boson operators on a truncated Fock space.
//!
//! Step operators for two oscillator modes become finite complex matrices
//! once the per-mode occupation is capped at `n_max`. Away from the cutoff
//! the matrices multiply exactly like the untruncated operators; the top two
//! levels pick up truncation artifacts, which is why algebra checks restrict
//! themselves to the interior block (occupations at most n_max - 2).
//!
//! Matrices are dense on purpose: at the default cutoffs the dimension is a
//! few hundred and dense arithmetic keeps every verification a plain matrix
//! product.

mod closure;
mod generators;

pub use closure::{fit_commutator, verify_algebra, ClosureReport, PairClosure, SpanFit};
pub use generators::{
    build_generators, diagonal_coefficients, max_off_diagonal, two_mode_squeeze_vacuum,
    GeneratorSet, GENERATOR_COUNT, GENERATOR_NAMES, GENERATOR_ROLES,
};

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Occupation-number basis {|n1, n2> : n_i <= n_max} with the fixed flat
/// index n1 * (n_max + 1) + n2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedFockSpace {
    n_max: usize,
}

impl TruncatedFockSpace {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::CutoffTooSmall { n_max, min: 1 });
        }
        Ok(TruncatedFockSpace { n_max })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// (n_max + 1)^2.
    pub fn dimension(&self) -> usize {
        (self.n_max + 1) * (self.n_max + 1)
    }

    pub fn flat_index(&self, n1: usize, n2: usize) -> usize {
        debug_assert!(n1 <= self.n_max && n2 <= self.n_max);
        n1 * (self.n_max + 1) + n2
    }

    pub fn occupations(&self, index: usize) -> (usize, usize) {
        (index / (self.n_max + 1), index % (self.n_max + 1))
    }

    /// States at least two levels below the cutoff in both modes; truncated
    /// quadratic-operator products are exact there.
    pub fn is_interior(&self, index: usize) -> bool {
        let (n1, n2) = self.occupations(index);
        n1 + 2 <= self.n_max && n2 + 2 <= self.n_max
    }

    /// Basis vector |n1, n2>.
    pub fn basis_state(&self, n1: usize, n2: usize) -> DVector<Complex64> {
        let mut v = DVector::zeros(self.dimension());
        v[self.flat_index(n1, n2)] = Complex64::new(1.0, 0.0);
        v
    }
}

/// Dense complex operator on a [`TruncatedFockSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    n_max: usize,
    matrix: DMatrix<Complex64>,
}

impl FockOperator {
    pub(crate) fn from_matrix(space: &TruncatedFockSpace, matrix: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(matrix.nrows(), space.dimension());
        debug_assert_eq!(matrix.ncols(), space.dimension());
        FockOperator {
            n_max: space.n_max(),
            matrix,
        }
    }

    pub fn zeros(space: &TruncatedFockSpace) -> Self {
        Self::from_matrix(space, DMatrix::zeros(space.dimension(), space.dimension()))
    }

    pub fn identity(space: &TruncatedFockSpace) -> Self {
        Self::from_matrix(
            space,
            DMatrix::identity(space.dimension(), space.dimension()),
        )
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    /// Exact conjugate transpose.
    pub fn adjoint(&self) -> Self {
        FockOperator {
            n_max: self.n_max,
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        FockOperator {
            n_max: self.n_max,
            matrix: &self.matrix * factor,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dimension(), other.dimension());
        FockOperator {
            n_max: self.n_max,
            matrix: &self.matrix + &other.matrix,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dimension(), other.dimension());
        FockOperator {
            n_max: self.n_max,
            matrix: &self.matrix - &other.matrix,
        }
    }

    /// Matrix product self * other.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        Ok(FockOperator {
            n_max: self.n_max,
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        &self.matrix * v
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ||M - M^dagger|| in the Frobenius norm; zero for a Hermitian operator.
    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint())
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// The four step operators: a_i lowers mode i (a|n> = sqrt(n) |n-1>),
/// a_i^dagger raises it, each tensored with the identity on the other mode.
/// The raising matrices are exact conjugate transposes of the lowering ones.
#[derive(Debug, Clone)]
pub struct StepOperators {
    pub a1: FockOperator,
    pub a1_dag: FockOperator,
    pub a2: FockOperator,
    pub a2_dag: FockOperator,
}

/// Builds the step operators; needs n_max >= 2 so that both raising and
/// lowering have room to act.
pub fn step_operators(space: &TruncatedFockSpace) -> Result<StepOperators> {
    if space.n_max() < 2 {
        return Err(Error::CutoffTooSmall {
            n_max: space.n_max(),
            min: 2,
        });
    }
    let dim = space.dimension();
    let mut a1 = DMatrix::<Complex64>::zeros(dim, dim);
    let mut a2 = DMatrix::<Complex64>::zeros(dim, dim);
    for n1 in 0..=space.n_max() {
        for n2 in 0..=space.n_max() {
            let col = space.flat_index(n1, n2);
            if n1 >= 1 {
                a1[(space.flat_index(n1 - 1, n2), col)] = Complex64::new((n1 as f64).sqrt(), 0.0);
            }
            if n2 >= 1 {
                a2[(space.flat_index(n1, n2 - 1), col)] = Complex64::new((n2 as f64).sqrt(), 0.0);
            }
        }
    }
    let a1 = FockOperator::from_matrix(space, a1);
    let a2 = FockOperator::from_matrix(space, a2);
    Ok(StepOperators {
        a1_dag: a1.adjoint(),
        a2_dag: a2.adjoint(),
        a1,
        a2,
    })
}

/// ab - ba.
pub fn commutator(a: &FockOperator, b: &FockOperator) -> Result<FockOperator> {
    let ab = a.compose(b)?;
    let ba = b.compose(a)?;
    Ok(ab.sub(&ba))
}
