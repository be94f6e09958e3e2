//! Geometry of the 2-simplex Δ₂ of energy distributions.
//!
//! The central sub-triangle δ₂ = {r : max r_i ≤ 1/2} (spanned by the three
//! edge midpoints of Δ₂) collects the triads whose states can reach an
//! orthogonal state at a finite time; its vertices are the qubit triads
//! {1/2, 1/2, 0} and permutations.

use crate::dynamics::{EnergyDistribution, Populations};
use crate::entanglement::concurrence;
use crate::error::{DimerError, Result};

/// Absolute tolerance on max r_i for boundary classification; barycentric
/// grid points land exactly on 1/2 for even n.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Concurrence threshold C_q = √3/2 attained on the δ₂ boundary.
pub fn qubit_threshold() -> f64 {
    3.0f64.sqrt() / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    InsideDelta2,
    OnDelta2Boundary,
    OutsideDelta2,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::InsideDelta2 => "inside",
            Region::OnDelta2Boundary => "boundary",
            Region::OutsideDelta2 => "outside",
        }
    }
}

/// A probability triad with its δ₂ classification and diagonal concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexPoint {
    pub r: [f64; 3],
    pub region: Region,
    pub concurrence: f64,
}

/// Classifies a triad relative to δ₂ by its largest component.
pub fn classify(r: [f64; 3]) -> Result<Region> {
    for ri in r {
        if !(ri >= 0.0) || !ri.is_finite() {
            return Err(DimerError::InvalidDistribution(format!(
                "negative or non-finite weight {ri}"
            )));
        }
    }
    let sum: f64 = r.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(DimerError::InvalidDistribution(format!(
            "weights sum to {sum}, expected 1"
        )));
    }
    let max = r.iter().fold(0.0f64, |a, &b| a.max(b));
    if (max - 0.5).abs() <= BOUNDARY_TOL {
        Ok(Region::OnDelta2Boundary)
    } else if max < 0.5 {
        Ok(Region::InsideDelta2)
    } else {
        Ok(Region::OutsideDelta2)
    }
}

/// Concurrence along a δ₂ edge triad {1/2, r, 1/2 − r}:
/// C = √{(3/4)[1 + 2r(1 − 2r)]}, maximal √15/4 at r = 1/4.
pub fn edge_concurrence(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 0.5) {
        return Err(DimerError::DomainError(format!(
            "edge parameter {r} outside (0, 1/2)"
        )));
    }
    Ok((0.75 * (1.0 + 2.0 * r * (1.0 - 2.0 * r))).sqrt())
}

/// Barycentric grid r = (a/n, b/n, c/n) with a + b + c = n, in lexicographic
/// (a, b) order, each point classified and tagged with its diagonal
/// concurrence. Yields (n+1)(n+2)/2 points.
pub fn sample_simplex(n: usize) -> Vec<SimplexPoint> {
    assert!(n >= 2, "grid resolution must be at least 2");
    let mut points = Vec::with_capacity((n + 1) * (n + 2) / 2);
    for a in 0..=n {
        for b in 0..=(n - a) {
            let c = n - a - b;
            let r = [
                a as f64 / n as f64,
                b as f64 / n as f64,
                c as f64 / n as f64,
            ];
            let region = classify(r).expect("grid point is a valid distribution");
            points.push(SimplexPoint {
                r,
                region,
                concurrence: concurrence(&Populations(r)),
            });
        }
    }
    points
}

/// Diagonal concurrence of a triad without phase data.
pub fn triad_concurrence(r: [f64; 3]) -> f64 {
    concurrence(&Populations(r))
}

/// Converts a simplex point into an energy distribution with zero phases.
pub fn to_distribution(p: &SimplexPoint) -> EnergyDistribution {
    EnergyDistribution::with_zero_phases(p.r).expect("simplex point is normalized")
}
