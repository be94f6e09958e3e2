//! The three paradigmatic state families and their strong-tunneling limits.
//!
//! ψ_fast = (|E₁⟩+|E₃⟩)/√2 and ψ_slow = (|E₁⟩+|E₂⟩)/√2 sit at vertices of
//! δ₂ and orthogonalize at τ_fast = π/ω₃₁ and τ_slow = π/ω₂₁; ψ_ew at the
//! center of δ₂ orthogonalizes at τ_ew = 2π/(3ω₂₁) when the spectrum is
//! equally spaced, and is otherwise tracked in units of τ* = 4π/(3ω₃₁).
//!
//! The closed-form limiting states and concurrences of the strong-J and
//! strong-K regimes act as regression oracles for the numeric dynamics.
//!
//! Known decimal slip in the source analysis: the constant strong-K
//! concurrence of ψ_slow is quoted as √(15/16) ≈ 0.937 in prose, but
//! √(15/16) = √15/4 ≈ 0.968; the populations (1/4, 1/2, 1/4) confirm the
//! formula value, which is what this module implements.

use crate::dynamics::{Basis, EnergyDistribution, QutritState};
use crate::entanglement::concurrence_series;
use crate::error::Result;
use crate::hamiltonian::{build_tunneling_matrix, SQRT_2};
use crate::spectral::{SpectralDecomposition, TransitionFrequencies};
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Fast,
    Slow,
    EquallyWeighted,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Fast => "fast",
            FamilyKind::Slow => "slow",
            FamilyKind::EquallyWeighted => "ew",
        }
    }
}

/// Strong-tunneling regime selector: StrongJ means K = 0 and J ≫ ε₁;
/// StrongK means K ≫ J, ε₁ with J = ε₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    StrongJ,
    StrongK,
}

/// A (family, regime) pair together with its reference time scale
/// (τ_fast, τ_slow, τ_ew, or τ*).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeLimit {
    pub kind: FamilyKind,
    pub regime: Regime,
    pub tau_ref: f64,
}

impl RegimeLimit {
    pub fn new(kind: FamilyKind, regime: Regime, tau_ref: f64) -> Self {
        assert!(tau_ref > 0.0, "reference time must be positive");
        Self {
            kind,
            regime,
            tau_ref,
        }
    }
}

/// Energy distribution of a family: Fast (1/2, 0, 1/2), Slow (1/2, 1/2, 0),
/// EquallyWeighted (1/3, 1/3, 1/3); all phases zero.
pub fn family_distribution(kind: FamilyKind) -> EnergyDistribution {
    let r = match kind {
        FamilyKind::Fast => [0.5, 0.0, 0.5],
        FamilyKind::Slow => [0.5, 0.5, 0.0],
        FamilyKind::EquallyWeighted => [1.0 / 3.0; 3],
    };
    EnergyDistribution::with_zero_phases(r).expect("family triads are normalized")
}

/// Characteristic time of a family for the given transition frequencies:
/// τ_fast = π/ω₃₁, τ_slow = π/ω₂₁, and τ* = 4π/(3ω₃₁) for the equally
/// weighted family (equal to τ_ew = 2π/(3ω₂₁) when the spectrum is equally
/// spaced, since then ω₃₁ = 2ω₂₁).
pub fn characteristic_time(kind: FamilyKind, freqs: &TransitionFrequencies) -> f64 {
    match kind {
        FamilyKind::Fast => PI / freqs.omega31,
        FamilyKind::Slow => PI / freqs.omega21,
        FamilyKind::EquallyWeighted => 4.0 * PI / (3.0 * freqs.omega31),
    }
}

/// Closed-form limiting concurrence of a (family, regime) pair at time `t`.
pub fn limit_concurrence(limit: &RegimeLimit, t: f64) -> f64 {
    let tau = limit.tau_ref;
    let c_sq = match (limit.kind, limit.regime) {
        (FamilyKind::Fast, Regime::StrongJ) => {
            let th = PI * t / (2.0 * tau);
            1.5 * (1.0 - 0.5 * (th.cos().powi(4) + 2.0 * th.sin().powi(4)))
        }
        (FamilyKind::Fast, Regime::StrongK) => {
            1.5 * (1.0 - 0.25 * (3.0 + (2.0 * PI * t / tau).cos()))
        }
        (FamilyKind::Slow, Regime::StrongJ) => {
            1.5 * (1.0 - (7.5 + 2.0 * (2.0 * PI * t / tau).cos()) / 16.0)
        }
        (FamilyKind::Slow, Regime::StrongK) => 15.0 / 16.0,
        (FamilyKind::EquallyWeighted, Regime::StrongJ) => {
            let x = 4.0 * PI * t / (3.0 * tau);
            1.5 - (8.0 * x.cos() + 3.0 * (2.0 * x).cos() + 23.0) / 24.0
        }
        (FamilyKind::EquallyWeighted, Regime::StrongK) => {
            1.5 - (4.0 + (8.0 * PI * t / (3.0 * tau)).cos()) / 6.0
        }
    };
    c_sq.max(0.0).sqrt().min(1.0)
}

/// Closed-form limiting Fock-basis state of a (family, regime) pair at
/// time `t`, with the global phases fixed to the explicit printed forms.
pub fn limit_state(limit: &RegimeLimit, t: f64) -> QutritState {
    let tau = limit.tau_ref;
    let i = Complex64::new(0.0, 1.0);
    let amps = match (limit.kind, limit.regime) {
        (FamilyKind::Fast, Regime::StrongJ) => {
            let th = PI * t / (2.0 * tau);
            [
                Complex64::new(th.cos() / SQRT_2, 0.0),
                i * th.sin(),
                Complex64::new(th.cos() / SQRT_2, 0.0),
            ]
        }
        (FamilyKind::Fast, Regime::StrongK) => {
            let th = PI * t / (2.0 * tau);
            [
                Complex64::new(th.sin(), 0.0),
                Complex64::new(0.0, 0.0),
                -i * th.cos(),
            ]
        }
        (FamilyKind::Slow, Regime::StrongJ) => {
            let z = Complex64::from_polar(1.0, -PI * t / tau);
            [
                (Complex64::new(1.0 / SQRT_2, 0.0) - z) / 2.0,
                Complex64::new(0.5, 0.0),
                (Complex64::new(1.0 / SQRT_2, 0.0) + z) / 2.0,
            ]
        }
        (FamilyKind::Slow, Regime::StrongK) => {
            let z = Complex64::from_polar(1.0, -PI * t / tau);
            [
                Complex64::new(0.5, 0.0),
                z / SQRT_2,
                Complex64::new(0.5, 0.0),
            ]
        }
        (FamilyKind::EquallyWeighted, Regime::StrongJ) => {
            let s3 = 3.0f64.sqrt();
            let ph = 2.0 * PI * t / (3.0 * tau);
            [
                Complex64::new((-1.0 / SQRT_2 + ph.cos()) / s3, 0.0),
                i * SQRT_2 * ph.sin() / s3,
                Complex64::new((1.0 / SQRT_2 + ph.cos()) / s3, 0.0),
            ]
        }
        (FamilyKind::EquallyWeighted, Regime::StrongK) => {
            let s3 = 3.0f64.sqrt();
            let ph = 2.0 * PI * t / (3.0 * tau);
            [
                i * SQRT_2 * ph.sin() / s3,
                Complex64::new(1.0 / s3, 0.0),
                Complex64::new(SQRT_2 * ph.cos() / s3, 0.0),
            ]
        }
    };
    QutritState::new(amps, Basis::Fock)
}

/// Exact-Hamiltonian parameters realizing a regime at finite amplitude:
/// StrongJ sets J = amp, K = 0; StrongK sets J = ε₁, K = amp.
pub fn regime_amplitudes(regime: Regime, eps1: f64, amp: f64) -> (f64, f64) {
    match regime {
        Regime::StrongJ => (amp, 0.0),
        Regime::StrongK => (eps1, amp),
    }
}

/// Max pointwise deviation between the numeric concurrence at finite
/// tunneling amplitude and the regime's limiting formula.
///
/// `t_grid` is dimensionless (units of the characteristic time); both
/// routes use the exact characteristic time computed from the finite
/// amplitude spectrum, matching how the reference curves are parameterized.
pub fn regime_deviation(
    kind: FamilyKind,
    regime: Regime,
    eps1: f64,
    amp: f64,
    t_grid: &[f64],
) -> Result<f64> {
    assert!(amp > 0.0, "tunneling amplitude must be positive");
    let (j, k) = regime_amplitudes(regime, eps1, amp);
    let m = build_tunneling_matrix(eps1, j, k);
    let decomp = SpectralDecomposition::compute(&m)?;
    let tau = characteristic_time(kind, &decomp.freqs);
    let limit = RegimeLimit::new(kind, regime, tau);
    let dist = family_distribution(kind);
    let grid: Vec<f64> = t_grid.iter().map(|&u| u * tau).collect();
    let series = concurrence_series(&dist, &decomp, &grid)?;
    let max_dev = series
        .times
        .iter()
        .zip(&series.values)
        .map(|(&t, &c)| (c - limit_concurrence(&limit, t)).abs())
        .fold(0.0f64, f64::max);
    Ok(max_dev)
}

/// Evenly spaced dimensionless grid on [0, span] with `n` points.
pub fn dimensionless_grid(span: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|idx| span * idx as f64 / (n as f64 - 1.0))
        .collect()
}
