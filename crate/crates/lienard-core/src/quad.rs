//! Gauss–Legendre quadrature with adaptive bisection.

use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};

/// A fixed-order Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes nodes and weights by Newton iteration on the Legendre
    /// polynomial `P_n`, seeded with the Chebyshev estimate.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Integrates `f` over `[a, b]` with the fixed rule.
    pub fn integrate(&self, a: f64, b: f64, f: &mut impl FnMut(f64) -> f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

/// `(P_n(x), P_n′(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Adaptively integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// A panel is accepted when one application of the base rule agrees with
/// its two-half refinement to within the panel's share of `tol`; the node
/// budget bounds the total work (`Error::QuadratureNoConvergence` when
/// exhausted).
pub fn adaptive(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    tol: f64,
    max_nodes: usize,
    f: &mut impl FnMut(f64) -> f64,
) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let whole = rule.integrate(a, b, f);
    let mut nodes_used = rule.order();
    let total_len = (b - a).abs();
    // Worklist of (a, b, coarse estimate).
    let mut stack = alloc::vec![(a, b, whole)];
    let mut sum = 0.0;
    while let Some((lo, hi, coarse)) = stack.pop() {
        nodes_used += 2 * rule.order();
        if nodes_used > max_nodes {
            return Err(Error::QuadratureNoConvergence);
        }
        let mid = 0.5 * (lo + hi);
        let left = rule.integrate(lo, mid, f);
        let right = rule.integrate(mid, hi, f);
        let fine = left + right;
        let share = tol * ((hi - lo).abs() / total_len).max(1e-3);
        if (fine - coarse).abs() <= share || (hi - lo).abs() <= 1e-14 * total_len {
            sum += fine;
        } else {
            stack.push((lo, mid, left));
            stack.push((mid, hi, right));
        }
    }
    Ok(sum)
}
