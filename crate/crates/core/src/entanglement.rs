//! Mode-entanglement measures from the reduced-state populations.
//!
//! Both reduced density matrices are diagonal with the same populations
//! {R_n}, so the qudit concurrence C = √{(d/(d−1))(1 − tr ρ²)} with d = 3
//! reduces to C = √{(3/2)(1 − Σ R_n²)}.

use crate::dynamics::{self, EnergyDistribution, Populations};
use crate::error::Result;
use crate::spectral::SpectralDecomposition;

/// Linear entropy S_L = 1 − Σ R_n², in [0, 2/3] for a qutrit.
pub fn linear_entropy(r: &Populations) -> f64 {
    1.0 - r.0.iter().map(|x| x * x).sum::<f64>()
}

/// Concurrence C = √{(3/2) S_L}, clipped to [0, 1] to absorb rounding
/// under the radical.
pub fn concurrence(r: &Populations) -> f64 {
    (1.5 * linear_entropy(r)).max(0.0).sqrt().min(1.0)
}

/// Concurrence for a diagonal Hamiltonian (J = K = 0): time- and
/// phase-independent, determined by the energy distribution alone.
pub fn diagonal_concurrence(dist: &EnergyDistribution) -> f64 {
    concurrence(&Populations(dist.r()))
}

/// Time unit attached to a concurrence series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeUnit {
    Absolute,
    OverTau(f64),
}

/// Concurrence sampled on a time grid.
#[derive(Debug, Clone)]
pub struct ConcurrenceSeries {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub time_unit: TimeUnit,
}

/// C(t) on the given absolute-time grid via prepare → evolve → to_fock →
/// populations → concurrence.
pub fn concurrence_series(
    dist: &EnergyDistribution,
    decomp: &SpectralDecomposition,
    grid: &[f64],
) -> Result<ConcurrenceSeries> {
    let values = grid
        .iter()
        .map(|&t| {
            let fock = dynamics::evolve_to_fock(dist, decomp, t);
            concurrence(&dynamics::populations(&fock))
        })
        .collect();
    Ok(ConcurrenceSeries {
        times: grid.to_vec(),
        values,
        time_unit: TimeUnit::Absolute,
    })
}
