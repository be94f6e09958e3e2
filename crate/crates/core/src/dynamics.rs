//! State preparation, exact unitary evolution, and derived observables.
//!
//! Initial states are specified by a probability triad {r_i} and phases
//! {θ_i} over the energy basis: ψ(0) = Σ √r_i e^{iθ_i} |E_i⟩. Evolution is
//! exact: amplitudes pick up e^{-iE_i t} (ħ = 1). An independent
//! scaling-and-squaring propagator in the Fock basis serves as a
//! cross-check of the spectral route.

use crate::error::{DimerError, Result};
use crate::hamiltonian::{SymmetricMatrix3, SQRT_2};
use crate::spectral::SpectralDecomposition;
use num_complex::Complex64;
use std::f64::consts::TAU;

pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Default tolerance on the survival-amplitude modulus when searching for
/// orthogonality times: well above accumulated rounding, far below any
/// physical near-miss.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;

/// Probability triad over the energy basis plus initial phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDistribution {
    r: [f64; 3],
    theta: [f64; 3],
}

impl EnergyDistribution {
    /// Validates normalization (within 1e-12) and non-negativity; phases are
    /// reduced mod 2π.
    pub fn new(r: [f64; 3], theta: [f64; 3]) -> Result<Self> {
        for ri in r {
            if !(ri >= 0.0) || !ri.is_finite() {
                return Err(DimerError::InvalidDistribution(format!(
                    "negative or non-finite weight {ri}"
                )));
            }
        }
        let sum: f64 = r.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(DimerError::InvalidDistribution(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        let theta = theta.map(|t| t.rem_euclid(TAU));
        Ok(Self { r, theta })
    }

    pub fn with_zero_phases(r: [f64; 3]) -> Result<Self> {
        Self::new(r, [0.0; 3])
    }

    pub fn r(&self) -> [f64; 3] {
        self.r
    }

    pub fn theta(&self) -> [f64; 3] {
        self.theta
    }
}

/// Basis tag for qutrit amplitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Fock,
    Energy,
}

/// Three complex amplitudes tagged with their basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritState {
    pub amps: [Complex64; 3],
    pub basis: Basis,
}

impl QutritState {
    pub fn new(amps: [Complex64; 3], basis: Basis) -> Self {
        let state = Self { amps, basis };
        // loose sanity bound: composed basis changes accumulate eigenvector
        // rounding beyond the single-operation 1e-12 contract
        debug_assert!(
            (state.norm() - 1.0).abs() < 1e-9,
            "state norm {} != 1",
            state.norm()
        );
        state
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ⟨self|other⟩ (bases must match).
    pub fn overlap(&self, other: &QutritState) -> Complex64 {
        assert_eq!(self.basis, other.basis, "overlap across different bases");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Probability distribution R_n of the reduced states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Populations(pub [f64; 3]);

/// ψ(0) = Σ √r_i e^{iθ_i} |E_i⟩.
pub fn prepare_state(dist: &EnergyDistribution) -> QutritState {
    let mut amps = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        amps[i] = Complex64::from_polar(dist.r[i].sqrt(), dist.theta[i]);
    }
    QutritState::new(amps, Basis::Energy)
}

/// Phase evolution in the energy basis: amps_i ↦ amps_i e^{-iE_i t}.
pub fn evolve(state: &QutritState, energies: &[f64; 3], t: f64) -> QutritState {
    assert_eq!(state.basis, Basis::Energy, "evolve needs the energy basis");
    let mut amps = state.amps;
    for (a, &e) in amps.iter_mut().zip(energies) {
        *a *= Complex64::from_polar(1.0, -e * t);
    }
    QutritState::new(amps, Basis::Energy)
}

/// Change of basis to Fock amplitudes: ⟨n|ψ⟩ = Σ_i amps_i c_{i,n}.
pub fn to_fock(state: &QutritState, eigvecs: &[[f64; 3]; 3]) -> QutritState {
    assert_eq!(state.basis, Basis::Energy);
    let mut amps = [Complex64::new(0.0, 0.0); 3];
    for n in 0..3 {
        for i in 0..3 {
            amps[n] += state.amps[i] * eigvecs[i][n];
        }
    }
    QutritState::new(amps, Basis::Fock)
}

/// Inverse change of basis: amps_i = Σ_n ⟨n|ψ⟩ c_{i,n}.
pub fn to_energy(state: &QutritState, eigvecs: &[[f64; 3]; 3]) -> QutritState {
    assert_eq!(state.basis, Basis::Fock);
    let mut amps = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        for n in 0..3 {
            amps[i] += state.amps[n] * eigvecs[i][n];
        }
    }
    QutritState::new(amps, Basis::Energy)
}

/// R_n = |⟨n|ψ⟩|².
pub fn populations(state: &QutritState) -> Populations {
    assert_eq!(state.basis, Basis::Fock);
    Populations(state.amps.map(|a| a.norm_sqr()))
}

/// Survival amplitude ⟨ψ(0)|ψ(t)⟩ = Σ_i r_i e^{-iE_i t}; the phases θ_i
/// cancel.
pub fn survival_amplitude(dist: &EnergyDistribution, energies: &[f64; 3], t: f64) -> Complex64 {
    dist.r
        .iter()
        .zip(energies)
        .map(|(&r, &e)| r * Complex64::from_polar(1.0, -e * t))
        .sum()
}

/// Smallest t in (0, t_max] where the survival modulus drops below `tol`.
///
/// Scans on a grid fine enough to resolve the fastest frequency (100 samples
/// per fastest period), then refines each local minimum of the modulus by
/// ternary search. Returns `None` when no minimum dips below `tol`, which is
/// a valid physical outcome for distributions outside δ₂.
pub fn find_orthogonality_time(
    dist: &EnergyDistribution,
    energies: &[f64; 3],
    t_max: f64,
    tol: f64,
) -> Option<f64> {
    assert!(t_max > 0.0 && tol > 0.0);
    let omega31 = energies[2] - energies[0];
    let step = if omega31 > 0.0 {
        (0.01f64).min(TAU / (100.0 * omega31))
    } else {
        0.01
    };
    let modulus = |t: f64| survival_amplitude(dist, energies, t).norm();
    let n = (t_max / step).ceil() as usize + 1;
    let mut prev2 = modulus(0.0);
    let mut prev = modulus(step.min(t_max));
    for i in 2..=n {
        let t = (i as f64 * step).min(t_max);
        let cur = modulus(t);
        if prev <= prev2 && prev <= cur {
            // local minimum bracketed in ((i-2)h, ih)
            let lo = (i as f64 - 2.0) * step;
            let hi = t;
            let t_min = ternary_min(&modulus, lo, hi);
            if modulus(t_min) < tol && t_min > 0.0 {
                return Some(t_min.min(t_max));
            }
        }
        if t >= t_max {
            break;
        }
        prev2 = prev;
        prev = cur;
    }
    None
}

fn ternary_min(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
        if hi - lo < f64::EPSILON * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// exp(-i·M·t) by scaling and squaring with a truncated power series.
/// Independent of the spectral decomposition; used as the cross-check route
/// for the evolution.
pub fn propagator_oracle(m: &SymmetricMatrix3, t: f64) -> [[Complex64; 3]; 3] {
    let mut a = [[Complex64::new(0.0, 0.0); 3]; 3];
    let rows = m.to_rows();
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = Complex64::new(0.0, -rows[i][j] * t);
        }
    }
    // scale so the max-norm of the scaled matrix is at most 0.5
    let norm = a.iter().flatten().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut s = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > 0.5 {
        scaled_norm /= 2.0;
        s += 1;
    }
    let scale = 2.0f64.powi(s as i32);
    for row in &mut a {
        for c in row.iter_mut() {
            *c /= scale;
        }
    }
    // power series until the term is negligible
    let mut result = identity();
    let mut term = identity();
    for k in 1..60 {
        term = mat_mul(&term, &a);
        for row in &mut term {
            for c in row.iter_mut() {
                *c /= k as f64;
            }
        }
        let mut max = 0.0f64;
        for (i, row) in term.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                result[i][j] += c;
                max = max.max(c.norm());
            }
        }
        if max < 1e-16 {
            break;
        }
    }
    for _ in 0..s {
        result = mat_mul(&result, &result);
    }
    result
}

fn identity() -> [[Complex64; 3]; 3] {
    let mut id = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    id
}

fn mat_mul(a: &[[Complex64; 3]; 3], b: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut c = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for (k, bk) in b.iter().enumerate() {
                c[i][j] += a[i][k] * bk[j];
            }
        }
    }
    c
}

/// Applies a 3×3 complex matrix to Fock amplitudes.
pub fn apply_propagator(u: &[[Complex64; 3]; 3], state: &QutritState) -> QutritState {
    assert_eq!(state.basis, Basis::Fock);
    let mut amps = [Complex64::new(0.0, 0.0); 3];
    for (i, row) in u.iter().enumerate() {
        for (j, uij) in row.iter().enumerate() {
            amps[i] += uij * state.amps[j];
        }
    }
    QutritState::new(amps, Basis::Fock)
}

/// Mean and variance of the particle number in site S1.
pub fn mode_occupation_stats(state: &QutritState) -> (f64, f64) {
    let Populations(r) = populations(state);
    let mean: f64 = r.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
    let second: f64 = r.iter().enumerate().map(|(n, p)| (n * n) as f64 * p).sum();
    (mean, second - mean * mean)
}

/// Decomposition over the symmetric Bell subspace {Φ⁺, Φ⁻, Ψ⁺} in the
/// first-quantized picture, with |0⟩ = |00⟩_AB, |2⟩ = |11⟩_AB, |1⟩ = Ψ⁺.
pub fn bell_decomposition(state: &QutritState) -> (Complex64, Complex64, Complex64) {
    assert_eq!(state.basis, Basis::Fock);
    let phi_plus = (state.amps[0] + state.amps[2]) / SQRT_2;
    let phi_minus = (state.amps[0] - state.amps[2]) / SQRT_2;
    let psi_plus = state.amps[1];
    (phi_plus, phi_minus, psi_plus)
}

/// Convenience: Fock-basis state of `dist` evolved to time `t`.
pub fn evolve_to_fock(
    dist: &EnergyDistribution,
    decomp: &SpectralDecomposition,
    t: f64,
) -> QutritState {
    let psi = evolve(&prepare_state(dist), &decomp.energies, t);
    to_fock(&psi, &decomp.eigvecs)
}
