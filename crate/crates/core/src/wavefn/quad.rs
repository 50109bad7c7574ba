//! Gauss-Hermite quadrature: integration against the weight e^{-x^2}.
//!
//! Nodes come from the Golub-Welsch eigenproblem (the symmetrized Jacobi
//! matrix has sqrt(k/2) on the off-diagonal) and are then polished with one
//! Newton step on the orthonormal Hermite function phi_n, whose zeros are the
//! nodes. Weights are recovered through the Christoffel identity
//!
//!   w_i e^{x_i^2} = 1 / sum_{k < n} phi_k(x_i)^2,
//!
//! which never under- or overflows because the phi_k are evaluated with the
//! Gaussian already absorbed. The left-hand side is stored as the "total"
//! weight used to integrate plain (not e^{-x^2}-damped) integrands.

use crate::error::{Error, Result};
use crate::wavefn::hermite::hermite_all;
use nalgebra::DMatrix;

/// Largest supported order. Beyond this the extreme nodes push e^{-x^2/2}
/// below the subnormal range and the weight recovery would lose the sum.
pub const QUAD_ORDER_MAX: usize = 512;

/// A Gauss-Hermite rule of fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    total_weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds the rule of the given order (1..=512).
    pub fn gauss_hermite(order: usize) -> Result<Self> {
        if order == 0 || order > QUAD_ORDER_MAX {
            return Err(Error::InvalidParameter {
                name: "order",
                value: order as f64,
                reason: "quadrature order must be in 1..=512",
            });
        }

        let mut nodes = eigen_nodes(order);
        nodes.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));

        // One Newton step per node: x <- x - phi_n(x)/phi_n'(x) with
        // phi_n'(x) = sqrt(2n) phi_{n-1}(x) - x phi_n(x).
        let mut phi = vec![0.0; order + 1];
        for x in nodes.iter_mut() {
            hermite_all(*x, &mut phi);
            let deriv = (2.0 * order as f64).sqrt() * phi[order - 1] - *x * phi[order];
            if deriv != 0.0 {
                *x -= phi[order] / deriv;
            }
        }

        // Enforce exact symmetry about the origin.
        let n = order;
        for i in 0..n / 2 {
            let m = 0.5 * (nodes[n - 1 - i] - nodes[i]);
            nodes[i] = -m;
            nodes[n - 1 - i] = m;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }

        let mut total_weights = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for (i, &x) in nodes.iter().enumerate() {
            hermite_all(x, &mut phi);
            let sum: f64 = phi[..n].iter().map(|p| p * p).sum();
            total_weights[i] = 1.0 / sum;
            weights[i] = total_weights[i] * (-x * x).exp();
        }
        // Symmetric nodes carry identical weights; average out rounding.
        for i in 0..n / 2 {
            let w = 0.5 * (weights[i] + weights[n - 1 - i]);
            weights[i] = w;
            weights[n - 1 - i] = w;
            let tw = 0.5 * (total_weights[i] + total_weights[n - 1 - i]);
            total_weights[i] = tw;
            total_weights[n - 1 - i] = tw;
        }

        Ok(QuadratureRule {
            nodes,
            weights,
            total_weights,
        })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes in strictly increasing order, symmetric about 0.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights for integrands of the form e^{-x^2} f(x).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weights w_i e^{x_i^2} for integrating f(x) directly; f must decay at
    /// least as fast as e^{-x^2} for the sum to converge to the integral.
    pub fn total_weights(&self) -> &[f64] {
        &self.total_weights
    }

    /// Sum w_i f(x_i), approximating the integral of e^{-x^2} f(x) over R.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Eigenvalues of the symmetrized Jacobi matrix: the quadrature nodes.
fn eigen_nodes(order: usize) -> Vec<f64> {
    let mut jacobi = DMatrix::<f64>::zeros(order, order);
    for k in 0..order - 1 {
        let off = 0.5 * (k as f64 + 1.0);
        let off = off.sqrt();
        jacobi[(k, k + 1)] = off;
        jacobi[(k + 1, k)] = off;
    }
    jacobi
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect()
}
