//! Level-set analysis of `H(x,y) = ½y² + G(x)`.
//!
//! A coercive potential decomposes the plane into period annuli: nested
//! families of closed orbits around each well, plus an outer family above
//! the highest barrier. Orbits are parameterized by energy `h`; the module
//! locates the turning points `a(h) < b(h)` (roots of `G(x) = h`) that
//! bound each orbit.

use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RootParity};

/// Energies closer than this (relative) to a critical energy are treated
/// as outside the annulus; quadrature degenerates at homoclinic levels.
const CRITICAL_GUARD: f64 = 1e-9;

/// Potential `G` together with its restoring force `g = G′`.
#[derive(Debug, Clone)]
pub struct Potential {
    /// Restoring force `g(x)`.
    pub g: Polynomial,
    /// Potential energy `G(x) = ∫₀ˣ g`, so `G(0) = 0`.
    pub big_g: Polynomial,
    /// True when `deg G` is even with positive leading coefficient, i.e.
    /// `G(±∞) = +∞` and every level set is compact.
    pub coercive: bool,
    /// `l` with `deg G = 2l`, when coercive.
    pub half_degree: Option<u32>,
    /// Leading coefficient of `G`.
    pub leading_coeff: f64,
}

/// Classification of a critical point of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    Minimum,
    Maximum,
    Inflection,
}

/// A critical point of the potential with its energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub x: f64,
    pub energy: f64,
    pub kind: CriticalKind,
}

/// Which orbit family an annulus describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnulusKind {
    /// Orbits around a single well, below the adjacent barrier.
    InnerWell,
    /// Orbits enclosing every critical point (`h_max = +∞`).
    Outer,
}

/// A maximal family of nested closed orbits, parameterized by
/// `h ∈ (h_min, h_max)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodAnnulus {
    pub center_x: f64,
    pub h_min: f64,
    /// `f64::INFINITY` for the outer annulus.
    pub h_max: f64,
    pub kind: AnnulusKind,
}

impl PeriodAnnulus {
    /// Whether `h` lies strictly inside the energy window, away from the
    /// critical guard band.
    pub fn contains(&self, h: f64) -> bool {
        let lo_guard = CRITICAL_GUARD * (1.0 + self.h_min.abs());
        if h <= self.h_min + lo_guard {
            return false;
        }
        if self.h_max.is_finite() {
            let hi_guard = CRITICAL_GUARD * (1.0 + self.h_max.abs());
            h < self.h_max - hi_guard
        } else {
            true
        }
    }
}

/// Builds the potential of a restoring force: `G = ∫₀ˣ g`.
pub fn potential_of(g: &Polynomial) -> Potential {
    let big_g = g.antiderivative();
    let (coercive, half_degree, leading_coeff) = match big_g.degree() {
        Some(d) if d >= 2 && d % 2 == 0 && big_g.leading() > 0.0 => {
            (true, Some((d / 2) as u32), big_g.leading())
        }
        _ => (false, None, big_g.leading()),
    };
    Potential { g: g.clone(), big_g, coercive, half_degree, leading_coeff }
}

impl Potential {
    /// All real critical points of `G`, classified by the sign behaviour of
    /// `g = G′` across each root: an odd root of `g` going `− → +` is a
    /// minimum, `+ → −` a maximum, and an even root an inflection.
    pub fn critical_profile(&self) -> Result<Vec<CriticalPoint>> {
        if self.g.is_zero() {
            return Err(Error::IndeterminateRoots);
        }
        let bound = self.g.root_bound();
        let roots = self.g.real_roots(-bound, bound)?;
        let mut out = Vec::with_capacity(roots.len());
        for r in roots {
            let kind = match r.parity {
                RootParity::Even => CriticalKind::Inflection,
                RootParity::Odd => {
                    // Probe g just right of the root, clear of neighbours.
                    let step = 1e-6 * (1.0 + r.x.abs());
                    if self.g.evaluate(r.x + step) > 0.0 {
                        CriticalKind::Minimum
                    } else {
                        CriticalKind::Maximum
                    }
                }
            };
            out.push(CriticalPoint { x: r.x, energy: self.big_g.evaluate(r.x), kind });
        }
        Ok(out)
    }

    /// Decomposes the plane into period annuli: one inner-well annulus per
    /// local minimum (up to the lowest adjacent barrier) plus one outer
    /// annulus above the highest critical energy. A single-well potential
    /// yields one annulus tagged [`AnnulusKind::Outer`].
    pub fn annuli(&self) -> Result<Vec<PeriodAnnulus>> {
        if !self.coercive {
            return Err(Error::NonCoercive);
        }
        let crits = self.critical_profile()?;
        if let Some(c) = crits.iter().find(|c| c.kind == CriticalKind::Inflection) {
            return Err(Error::InflectionCritical { x: c.x });
        }
        let maxima: Vec<&CriticalPoint> =
            crits.iter().filter(|c| c.kind == CriticalKind::Maximum).collect();

        let mut out = Vec::new();
        if maxima.is_empty() {
            // Single well: the inner and outer families coincide.
            let min = crits
                .iter()
                .find(|c| c.kind == CriticalKind::Minimum)
                .ok_or(Error::InvalidArgument("coercive potential without a minimum"))?;
            out.push(PeriodAnnulus {
                center_x: min.x,
                h_min: min.energy,
                h_max: f64::INFINITY,
                kind: AnnulusKind::Outer,
            });
            return Ok(out);
        }

        for (i, c) in crits.iter().enumerate() {
            if c.kind != CriticalKind::Minimum {
                continue;
            }
            // Barrier: the lower of the adjacent maxima (criticals
            // alternate, so neighbours in the list are the maxima).
            let left = if i > 0 { Some(crits[i - 1].energy) } else { None };
            let right = if i + 1 < crits.len() { Some(crits[i + 1].energy) } else { None };
            let barrier = match (left, right) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => f64::INFINITY,
            };
            out.push(PeriodAnnulus {
                center_x: c.x,
                h_min: c.energy,
                h_max: barrier,
                kind: AnnulusKind::InnerWell,
            });
        }

        let top = maxima.iter().map(|c| c.energy).fold(f64::NEG_INFINITY, f64::max);
        let center = 0.5 * (crits.first().unwrap().x + crits.last().unwrap().x);
        out.push(PeriodAnnulus {
            center_x: center,
            h_min: top,
            h_max: f64::INFINITY,
            kind: AnnulusKind::Outer,
        });
        Ok(out)
    }

    /// Turning points `a < b` of the orbit at energy `h` inside the given
    /// annulus: the roots of `G(x) = h` adjacent to the annulus center (the
    /// outermost roots for the outer annulus).
    pub fn turning_points(&self, annulus: &PeriodAnnulus, h: f64) -> Result<(f64, f64)> {
        if !annulus.contains(h) {
            return Err(Error::EnergyOutOfAnnulus { h });
        }
        let shifted = &self.big_g - &Polynomial::constant(h);
        let bound = shifted.root_bound();
        let roots = shifted.real_roots(-bound, bound)?;
        match annulus.kind {
            AnnulusKind::Outer => {
                let a = roots.first().ok_or(Error::EnergyOutOfAnnulus { h })?.x;
                let b = roots.last().ok_or(Error::EnergyOutOfAnnulus { h })?.x;
                Ok((a, b))
            }
            AnnulusKind::InnerWell => {
                let c = annulus.center_x;
                let a = roots
                    .iter()
                    .filter(|r| r.x < c)
                    .last()
                    .ok_or(Error::EnergyOutOfAnnulus { h })?
                    .x;
                let b = roots
                    .iter()
                    .find(|r| r.x > c)
                    .ok_or(Error::EnergyOutOfAnnulus { h })?
                    .x;
                Ok((a, b))
            }
        }
    }

    /// Largest critical energy, `-∞` when there are no critical points.
    pub fn max_critical_energy(&self) -> Result<f64> {
        Ok(self
            .critical_profile()?
            .iter()
            .map(|c| c.energy)
            .fold(f64::NEG_INFINITY, f64::max))
    }
}
