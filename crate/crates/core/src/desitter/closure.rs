//! Numerical closure of the ten-generator algebra.
//!
//! For every generator pair the commutator is computed on the truncated
//! space and projected, by least squares over interior matrix elements, onto
//! the span of the ten generators. On the interior block the truncated
//! products are exact, so a closing algebra shows residuals at rounding
//! level there while the boundary rows carry the truncation artifacts. The
//! fitted coefficients are the structure constants up to the basis
//! normalization; they are reported, not asserted against fixed values, so
//! the check does not depend on any particular convention.

use crate::desitter::{commutator, FockOperator, GeneratorSet, GENERATOR_NAMES};
use crate::error::{Error, Result};
use crate::report::Json;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Result of projecting one commutator onto a generator span.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanFit {
    /// Best-fit coefficients, aligned with the span.
    pub coefficients: Vec<Complex64>,
    /// Frobenius residual over entries with both states interior.
    pub interior_residual: f64,
    /// Frobenius residual over the remaining (boundary-touching) entries.
    pub boundary_residual: f64,
}

/// Closure data for one ordered generator pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PairClosure {
    pub left: &'static str,
    pub right: &'static str,
    pub fit: SpanFit,
}

/// Full closure report over all 45 unordered pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureReport {
    pub n_max: usize,
    pub dimension: usize,
    pub interior_dimension: usize,
    pub pairs: Vec<PairClosure>,
    pub max_interior_residual: f64,
    pub max_boundary_residual: f64,
}

/// Least-squares fit of `target` over `span`, using only interior matrix
/// elements (both row and column state interior). Residuals are reported for
/// the interior block and, with the same coefficients, for the boundary.
#[allow(clippy::needless_range_loop)]
pub fn fit_commutator(
    space: &crate::desitter::TruncatedFockSpace,
    target: &FockOperator,
    span: &[&FockOperator],
) -> Result<SpanFit> {
    if span.is_empty() {
        return Err(Error::InvalidParameter {
            name: "span",
            value: 0.0,
            reason: "need at least one operator to fit against",
        });
    }
    let dim = target.dimension();
    for op in span {
        if op.dimension() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: op.dimension(),
            });
        }
    }

    let interior: Vec<bool> = (0..dim).map(|i| space.is_interior(i)).collect();

    // Normal equations over the interior entries.
    let k = span.len();
    let mut gram = DMatrix::<Complex64>::zeros(k, k);
    let mut rhs = DVector::<Complex64>::zeros(k);
    for a in 0..k {
        for b in 0..k {
            gram[(a, b)] = interior_inner(span[a], span[b], &interior);
        }
        rhs[a] = interior_inner(span[a], target, &interior);
    }
    let coefficients = gram.lu().solve(&rhs).ok_or(Error::InvalidParameter {
        name: "span",
        value: k as f64,
        reason: "span operators are linearly dependent on the interior block",
    })?;

    // Residuals of target - sum_k c_k span_k, split interior/boundary.
    let mut interior_sq = 0.0;
    let mut boundary_sq = 0.0;
    for col in 0..dim {
        for row in 0..dim {
            let mut fitted = Complex64::new(0.0, 0.0);
            for (c, op) in coefficients.iter().zip(span) {
                fitted += c * op.entry(row, col);
            }
            let diff = (target.entry(row, col) - fitted).norm_sqr();
            if interior[row] && interior[col] {
                interior_sq += diff;
            } else {
                boundary_sq += diff;
            }
        }
    }

    Ok(SpanFit {
        coefficients: coefficients.iter().copied().collect(),
        interior_residual: interior_sq.sqrt(),
        boundary_residual: boundary_sq.sqrt(),
    })
}

#[allow(clippy::needless_range_loop)]
fn interior_inner(a: &FockOperator, b: &FockOperator, interior: &[bool]) -> Complex64 {
    let dim = a.dimension();
    let mut acc = Complex64::new(0.0, 0.0);
    for col in 0..dim {
        if !interior[col] {
            continue;
        }
        for row in 0..dim {
            if interior[row] {
                acc += a.entry(row, col).conj() * b.entry(row, col);
            }
        }
    }
    acc
}

/// Commutes every generator pair and fits the result back onto the ten
/// generators. Needs n_max >= 6 so the interior block is large enough to be
/// meaningful; residuals are always reported, never silently dropped.
pub fn verify_algebra(gens: &GeneratorSet) -> Result<ClosureReport> {
    let space = gens.space();
    if space.n_max() < 6 {
        return Err(Error::CutoffTooSmall {
            n_max: space.n_max(),
            min: 6,
        });
    }
    let span: Vec<&FockOperator> = gens.ops().iter().collect();
    let mut pairs = Vec::with_capacity(45);
    let mut max_interior = 0.0f64;
    let mut max_boundary = 0.0f64;
    #[allow(clippy::needless_range_loop)]
    for i in 0..gens.ops().len() {
        for j in (i + 1)..gens.ops().len() {
            let comm = commutator(gens.op(i), gens.op(j))?;
            let fit = fit_commutator(space, &comm, &span)?;
            max_interior = max_interior.max(fit.interior_residual);
            max_boundary = max_boundary.max(fit.boundary_residual);
            pairs.push(PairClosure {
                left: GENERATOR_NAMES[i],
                right: GENERATOR_NAMES[j],
                fit,
            });
        }
    }
    let interior_dimension = (0..space.dimension())
        .filter(|&i| space.is_interior(i))
        .count();
    Ok(ClosureReport {
        n_max: space.n_max(),
        dimension: space.dimension(),
        interior_dimension,
        pairs,
        max_interior_residual: max_interior,
        max_boundary_residual: max_boundary,
    })
}

impl ClosureReport {
    pub fn to_json(&self) -> Json {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for pair in &self.pairs {
            let mut coeffs = Json::obj();
            for (name, c) in GENERATOR_NAMES.iter().zip(&pair.fit.coefficients) {
                let mut entry = Json::obj();
                entry
                    .push("re", Json::Num(c.re))
                    .push("im", Json::Num(c.im));
                coeffs.push(name, entry);
            }
            let mut obj = Json::obj();
            obj.push("left", Json::Str(pair.left.into()))
                .push("right", Json::Str(pair.right.into()))
                .push("interior_residual", Json::Num(pair.fit.interior_residual))
                .push("boundary_residual", Json::Num(pair.fit.boundary_residual))
                .push("coefficients", coeffs);
            pairs.push(obj);
        }
        let mut root = Json::obj();
        root.push("n_max", Json::Int(self.n_max as i64))
            .push("dimension", Json::Int(self.dimension as i64))
            .push(
                "interior_dimension",
                Json::Int(self.interior_dimension as i64),
            )
            .push(
                "generators",
                Json::Arr(
                    GENERATOR_NAMES
                        .iter()
                        .map(|n| Json::Str((*n).into()))
                        .collect(),
                ),
            )
            .push(
                "max_interior_residual",
                Json::Num(self.max_interior_residual),
            )
            .push(
                "max_boundary_residual",
                Json::Num(self.max_boundary_residual),
            )
            .push("pairs", Json::Arr(pairs));
        root
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desitter::{build_generators, step_operators, TruncatedFockSpace};
    use approx::assert_abs_diff_eq;

    #[test]
    fn closure_needs_a_wide_enough_space() {
        let space = TruncatedFockSpace::new(5).unwrap();
        let gens = build_generators(&space).unwrap();
        assert!(matches!(
            verify_algebra(&gens),
            Err(Error::CutoffTooSmall { min: 6, .. })
        ));
    }

    #[test]
    fn algebra_closes_on_the_interior() {
        let space = TruncatedFockSpace::new(8).unwrap();
        let gens = build_generators(&space).unwrap();
        let report = verify_algebra(&gens).unwrap();
        assert_eq!(report.pairs.len(), 45);
        assert!(
            report.max_interior_residual <= 1e-10,
            "interior residual {:e}",
            report.max_interior_residual
        );
        // Truncation artifacts must show up at the boundary, well above the
        // interior level.
        assert!(report.max_boundary_residual > 1.0);
    }

    #[test]
    fn boost_boost_lands_in_the_rotation_sector() {
        let space = TruncatedFockSpace::new(8).unwrap();
        let gens = build_generators(&space).unwrap();
        let report = verify_algebra(&gens).unwrap();
        let pair = report
            .pairs
            .iter()
            .find(|p| p.left == "K1" && p.right == "K2")
            .unwrap();
        // [K1, K2] = -i J3 in this basis; everything outside the rotation
        // sector must vanish.
        for (name, c) in GENERATOR_NAMES.iter().zip(&pair.fit.coefficients) {
            match *name {
                "J3" => {
                    assert_abs_diff_eq!(c.re, 0.0, epsilon = 1e-10);
                    assert_abs_diff_eq!(c.im, -1.0, epsilon = 1e-10);
                }
                _ => assert!(c.norm() <= 1e-10, "{name} coefficient {c}"),
            }
        }
    }

    #[test]
    fn single_mode_triple_closes_like_o21() {
        // K0 = (N1 + 1/2)/2, Kx = (a1t^2 + a1^2)/4, Ky = (a1t^2 - a1^2)/4i
        // close with [Kx, Ky] = -i K0 (and cyclic partners with signs split
        // by the non-compact directions).
        let space = TruncatedFockSpace::new(10).unwrap();
        let steps = step_operators(&space).unwrap();
        let re = |x: f64| Complex64::new(x, 0.0);
        let im = |x: f64| Complex64::new(0.0, x);
        let n1 = steps.a1_dag.compose(&steps.a1).unwrap();
        let k0 = n1
            .add(&crate::desitter::FockOperator::identity(&space).scale(re(0.5)))
            .scale(re(0.5));
        let up = steps.a1_dag.compose(&steps.a1_dag).unwrap();
        let dn = up.adjoint();
        let kx = up.add(&dn).scale(re(0.25));
        let ky = up.sub(&dn).scale(im(-0.25));

        let span = [&k0, &kx, &ky];
        let comm = commutator(&kx, &ky).unwrap();
        let fit = fit_commutator(&space, &comm, &span).unwrap();
        assert!(fit.interior_residual <= 1e-10);
        assert_abs_diff_eq!(fit.coefficients[0].im, -1.0, epsilon = 1e-10);
        assert!(fit.coefficients[1].norm() <= 1e-10);
        assert!(fit.coefficients[2].norm() <= 1e-10);

        let comm = commutator(&k0, &kx).unwrap();
        let fit = fit_commutator(&space, &comm, &span).unwrap();
        assert!(fit.interior_residual <= 1e-10);
        assert_abs_diff_eq!(fit.coefficients[2].im, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn fit_rejects_linearly_dependent_spans() {
        let space = TruncatedFockSpace::new(6).unwrap();
        let gens = build_generators(&space).unwrap();
        let doubled = gens.op(0).scale(Complex64::new(2.0, 0.0));
        let span = [gens.op(0), &doubled];
        let comm = commutator(gens.op(0), gens.op(1)).unwrap();
        assert!(matches!(
            fit_commutator(&space, &comm, &span),
            Err(Error::InvalidParameter { name: "span", .. })
        ));
    }

    #[test]
    fn fit_rejects_bad_spans() {
        let space = TruncatedFockSpace::new(4).unwrap();
        let id = crate::desitter::FockOperator::identity(&space);
        assert!(fit_commutator(&space, &id, &[]).is_err());

        let other = TruncatedFockSpace::new(5).unwrap();
        let wrong = crate::desitter::FockOperator::identity(&other);
        assert!(matches!(
            fit_commutator(&space, &id, &[&wrong]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn report_serializes_with_all_pairs() {
        let space = TruncatedFockSpace::new(6).unwrap();
        let gens = build_generators(&space).unwrap();
        let report = verify_algebra(&gens).unwrap();
        let text = report.to_json().to_pretty_string();
        assert!(text.contains("\"max_interior_residual\""));
        assert!(text.contains("\"K1\""));
        assert_eq!(text.matches("\"interior_residual\"").count(), 45);
    }
}
