//! Dense univariate real polynomials.
//!
//! Coefficients are stored in ascending degree (`coeffs[i]` multiplies
//! `x^i`) and kept normalized: the trailing coefficient is nonzero unless
//! the polynomial is identically zero. All values are immutable after
//! construction, so a `Polynomial` can be shared freely between threads.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};

/// Dense univariate polynomial over `f64`, ascending coefficient order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

/// Whether a root is crossed (odd multiplicity) or touched (even).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootParity {
    /// The polynomial changes sign at the root.
    Odd,
    /// Tangency: the polynomial touches zero without changing sign.
    Even,
}

/// An isolated real root with its sign-change parity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub x: f64,
    pub parity: RootParity,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Constant polynomial `c`.
    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![0.0, 1.0] }
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: f64, k: usize) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Coefficient of `x^k` (0 beyond the stored degree).
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation of `Σ coeffs[i]·x^i`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Formal derivative.
    pub fn differentiate(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    /// Antiderivative `q` with `q(0) = 0` and `q′ = self`.
    pub fn antiderivative(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0];
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, &c)| c / (i + 1) as f64));
        Polynomial::new(coeffs)
    }

    /// The substitution `x ↦ x² + x0`, doubling the degree.
    pub fn compose_square_shift(&self, x0: f64) -> Polynomial {
        // Horner in t = x² + x0: result = (..(c_n·t + c_{n-1})·t + ..)·t + c_0.
        let t = Polynomial::new(vec![x0, 0.0, 1.0]);
        let mut result = Polynomial::zero();
        for &c in self.coeffs.iter().rev() {
            result = &(&result * &t) + &Polynomial::constant(c);
        }
        result
    }

    /// Scales every coefficient.
    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Whether the polynomial is odd (`p(−x) = −p(x)`) up to rounding dust.
    pub fn is_odd(&self) -> bool {
        let tol = 1e-14 * (1.0 + self.max_abs_coeff());
        self.coeffs.iter().step_by(2).all(|c| c.abs() <= tol)
    }

    /// Whether the polynomial is even (`p(−x) = p(x)`) up to rounding dust.
    pub fn is_even(&self) -> bool {
        let tol = 1e-14 * (1.0 + self.max_abs_coeff());
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.abs() <= tol)
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn root_bound(&self) -> f64 {
        match self.degree() {
            None | Some(0) => 1.0,
            Some(n) => {
                let lead = self.coeffs[n].abs();
                let m = self.coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
                1.0 + m / lead
            }
        }
    }

    /// All real roots in `[lo, hi]`, sorted strictly ascending, distinct,
    /// each refined to ~1e−12 relative accuracy and tagged with its
    /// sign-change parity.
    ///
    /// Roots are isolated by bisection on the monotone pieces between the
    /// derivative's roots; tangential roots show up at those critical
    /// points and are tagged [`RootParity::Even`].
    pub fn real_roots(&self, lo: f64, hi: f64) -> Result<Vec<RealRoot>> {
        if lo >= hi {
            return Err(Error::InvalidArgument("real_roots requires lo < hi"));
        }
        if self.is_zero() {
            return Err(Error::IndeterminateRoots);
        }
        let deg = self.degree().unwrap();
        if deg == 0 {
            return Ok(Vec::new());
        }
        if deg == 1 {
            let r = -self.coeffs[0] / self.coeffs[1];
            if r >= lo && r <= hi {
                return Ok(vec![RealRoot { x: r, parity: RootParity::Odd }]);
            }
            return Ok(Vec::new());
        }

        // Monotone partition from the derivative's roots.
        let crits = self.differentiate().real_roots(lo, hi)?;
        let mut pts = Vec::with_capacity(crits.len() + 2);
        pts.push(lo);
        for c in &crits {
            if c.x > lo && c.x < hi {
                pts.push(c.x);
            }
        }
        pts.push(hi);

        let zero_tol = |x: f64| {
            // Evaluation-magnitude scale, so detection is condition-aware.
            let scale: f64 = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.abs() * x.abs().max(1.0).powi(i as i32))
                .sum();
            1e-12 * (1.0 + scale)
        };

        let mut roots: Vec<RealRoot> = Vec::new();
        let vals: Vec<f64> = pts.iter().map(|&x| self.evaluate(x)).collect();

        // Roots at partition points (includes all tangential roots).
        for (i, (&x, &v)) in pts.iter().zip(vals.iter()).enumerate() {
            if v.abs() > zero_tol(x) {
                continue;
            }
            let d_left = if i > 0 { (x - pts[i - 1]) / 2.0 } else { (pts[1] - x) / 2.0 };
            let d_right =
                if i + 1 < pts.len() { (pts[i + 1] - x) / 2.0 } else { (x - pts[i - 1]) / 2.0 };
            let sl = self.evaluate(x - d_left);
            let sr = self.evaluate(x + d_right);
            let parity = if sl * sr < 0.0 { RootParity::Odd } else { RootParity::Even };
            roots.push(RealRoot { x, parity });
        }

        // One simple root per monotone piece with a sign change.
        for i in 0..pts.len() - 1 {
            let (a, b) = (pts[i], pts[i + 1]);
            let (fa, fb) = (vals[i], vals[i + 1]);
            if fa.abs() <= zero_tol(a) || fb.abs() <= zero_tol(b) {
                continue; // endpoint root already recorded
            }
            if fa * fb < 0.0 {
                let r = self.bisect_root(a, b, fa);
                roots.push(RealRoot { x: r, parity: RootParity::Odd });
            }
        }

        roots.sort_unstable_by(|p, q| p.x.partial_cmp(&q.x).unwrap());
        // Collapse duplicates from adjacent partition cells.
        roots.dedup_by(|b, a| (b.x - a.x).abs() <= 1e-11 * (1.0 + a.x.abs()));
        Ok(roots)
    }

    /// Bisection to ~1e−12 relative width; `fa = p(a)` with `fa·p(b) < 0`.
    fn bisect_root(&self, mut a: f64, mut b: f64, fa: f64) -> f64 {
        let neg_left = fa < 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a).abs() <= 1e-12 * mid.abs().max(1.0) || mid == a || mid == b {
                return mid;
            }
            let fm = self.evaluate(mid);
            if fm == 0.0 {
                return mid;
            }
            if (fm < 0.0) == neg_left {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + rhs.coeff(i);
        }
        Polynomial::new(coeffs)
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) - rhs.coeff(i);
        }
        Polynomial::new(coeffs)
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn vdp_f() -> Polynomial {
        // x³/3 − x
        Polynomial::new(vec![0.0, -1.0, 0.0, 1.0 / 3.0])
    }

    #[test]
    fn evaluate_cubic() {
        assert_relative_eq!(vdp_f().evaluate(2.0), 2.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn evaluate_zero_poly() {
        assert_eq!(Polynomial::zero().evaluate(5.0), 0.0);
    }

    #[test]
    fn evaluate_double_well_at_energy_ten() {
        // G(x) = x⁴/2 − 3.5x²; the root of G = 10 from the quadratic formula
        // in x² is x* = sqrt((7 + sqrt(129))/2).
        let g = Polynomial::new(vec![0.0, 0.0, -3.5, 0.0, 0.5]);
        let x_star = ((7.0 + 129.0f64.sqrt()) / 2.0).sqrt();
        assert_relative_eq!(g.evaluate(x_star), 10.0, max_relative = 1e-12);
        // The 4-decimal truncation of x* lands within 1e−2 of the level.
        assert!((g.evaluate(3.0296) - 10.0).abs() < 1e-2);
    }

    #[test]
    fn differentiate_cases() {
        let g = Polynomial::new(vec![0.0, 0.0, -3.5, 0.0, 0.5]);
        assert_eq!(g.differentiate(), Polynomial::new(vec![0.0, -7.0, 0.0, 2.0]));
        assert_eq!(Polynomial::constant(4.0).differentiate(), Polynomial::zero());
        assert_eq!(Polynomial::x().differentiate(), Polynomial::constant(1.0));
    }

    #[test]
    fn antiderivative_cases() {
        assert_eq!(Polynomial::x().antiderivative(), Polynomial::new(vec![0.0, 0.0, 0.5]));
        let dg = Polynomial::new(vec![0.0, -7.0, 0.0, 2.0]);
        assert_eq!(dg.antiderivative(), Polynomial::new(vec![0.0, 0.0, -3.5, 0.0, 0.5]));
        assert_eq!(Polynomial::zero().antiderivative(), Polynomial::zero());
    }

    #[test]
    fn compose_square_shift_identity() {
        let p = Polynomial::x().compose_square_shift(-3.5);
        assert_eq!(p, Polynomial::new(vec![-3.5, 0.0, 1.0]));
    }

    #[test]
    fn compose_square_shift_cubic() {
        // (x²−3.5)³/3 − (x²−3.5) expanded by the binomial theorem.
        let p = vdp_f().compose_square_shift(-3.5);
        assert_eq!(p.degree(), Some(6));
        let expected = [
            -42.875 / 3.0 + 3.5, // constant
            0.0,
            36.75 / 3.0 - 1.0, // x²
            0.0,
            -3.5, // x⁴
            0.0,
            1.0 / 3.0, // x⁶
        ];
        for (k, &e) in expected.iter().enumerate() {
            assert_relative_eq!(p.coeff(k), e, max_relative = 1e-14, epsilon = 1e-14);
        }
    }

    #[test]
    fn compose_square_shift_constant() {
        let p = Polynomial::constant(2.5).compose_square_shift(7.0);
        assert_eq!(p, Polynomial::constant(2.5));
    }

    #[test]
    fn real_roots_shifted_double_well() {
        // x⁴/2 − 3.5x² − 10 has roots ±sqrt((7+sqrt(129))/2).
        let p = Polynomial::new(vec![-10.0, 0.0, -3.5, 0.0, 0.5]);
        let roots = p.real_roots(-10.0, 10.0).unwrap();
        let x_star = ((7.0 + 129.0f64.sqrt()) / 2.0).sqrt();
        assert_eq!(roots.len(), 2);
        assert_relative_eq!(roots[0].x, -x_star, max_relative = 1e-11);
        assert_relative_eq!(roots[1].x, x_star, max_relative = 1e-11);
        assert!(roots.iter().all(|r| r.parity == RootParity::Odd));
    }

    #[test]
    fn real_roots_none() {
        let p = Polynomial::new(vec![1.0, 0.0, 1.0]);
        assert!(p.real_roots(-10.0, 10.0).unwrap().is_empty());
    }

    #[test]
    fn real_roots_cube_tangent_flag() {
        let p = Polynomial::monomial(1.0, 3);
        let roots = p.real_roots(-1.0, 1.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].x, 0.0);
        assert_eq!(roots[0].parity, RootParity::Odd);

        let q = Polynomial::monomial(1.0, 2);
        let roots = q.real_roots(-1.0, 1.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].parity, RootParity::Even);
    }

    #[test]
    fn real_roots_zero_poly_is_error() {
        assert_eq!(Polynomial::zero().real_roots(-1.0, 1.0), Err(Error::IndeterminateRoots));
    }

    #[test]
    fn degree_normalization() {
        let p = Polynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::zero().degree(), None);
    }
}
