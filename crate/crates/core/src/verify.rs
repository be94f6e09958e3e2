//! Self-verification suite behind the `verify` subcommand.
//!
//! Runs the cross-route and invariant checks with a fixed RNG seed so the
//! outcome is reproducible: spectral residuals, evolution route
//! equivalence, strong-tunneling limit regressions, simplex threshold
//! consistency, and the expected-error path for degenerate input.

use crate::dynamics::{
    self, apply_propagator, propagator_oracle, Basis, EnergyDistribution, QutritState,
};
use crate::error::DimerError;
use crate::families::{dimensionless_grid, regime_deviation, FamilyKind, Regime};
use crate::hamiltonian::{build_tunneling_matrix, SymmetricMatrix3};
use crate::simplex::{qubit_threshold, sample_simplex, Region};
use crate::spectral::SpectralDecomposition;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x64696d6572; // "dimer"

#[derive(Debug, Clone)]
pub struct GroupResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs every verification group; all must pass for a clean exit.
pub fn run_all() -> Vec<GroupResult> {
    vec![
        spectral_residuals(),
        route_equivalence(),
        limit_regressions(),
        simplex_thresholds(),
        degenerate_error_path(),
    ]
}

fn spectral_residuals() -> GroupResult {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    let mut passed = true;
    for &j in &log_grid(0.01, 100.0, 20) {
        for &k in &log_grid(0.01, 100.0, 20) {
            let m = build_tunneling_matrix(1.0, j, k);
            let d = match SpectralDecomposition::compute(&m) {
                Ok(d) => d,
                Err(e) => {
                    passed = false;
                    detail = format!("J={j} K={k}: {e}");
                    continue;
                }
            };
            let scale = m.max_abs();
            // trace and determinant identities
            let sum: f64 = d.energies.iter().sum();
            let prod: f64 = d.energies.iter().product();
            let tr_err = (sum - m.trace()).abs() / (scale * 1e-10);
            let det_err = (prod - m.det()).abs() / (scale.powi(3) * 1e-9);
            // eigenvector residuals and reconstruction
            let mut res = 0.0f64;
            for k_idx in 0..3 {
                let mv = m.apply(d.eigvecs[k_idx]);
                for n in 0..3 {
                    res = res.max((mv[n] - d.energies[k_idx] * d.eigvecs[k_idx][n]).abs());
                }
            }
            let res_err = res / (scale * 1e-10);
            worst = worst.max(tr_err).max(det_err).max(res_err);
        }
    }
    if worst > 1.0 {
        passed = false;
        detail = format!("worst residual at {worst:.2}x tolerance");
    }
    GroupResult {
        name: "spectral-residuals",
        passed,
        detail: if passed {
            format!("worst residual {:.2e} of tolerance", worst)
        } else {
            detail
        },
    }
}

/// Max amplitude deviation between the spectral evolution route applied to
/// `m_spectral` and the series-expansion propagator built from
/// `m_propagator`, over `samples` random (state, t) pairs. The two matrices
/// are the same in normal operation; a deliberate mismatch is a mutation
/// check.
pub fn route_deviation(
    m_spectral: &SymmetricMatrix3,
    m_propagator: &SymmetricMatrix3,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<f64, DimerError> {
    let decomp = SpectralDecomposition::compute(m_spectral)?;
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let state = random_fock_state(rng);
        let t: f64 = rng.gen_range(0.0..10.0);
        let via_spectral = {
            let energy = dynamics::to_energy(&state, &decomp.eigvecs);
            let evolved = dynamics::evolve(&energy, &decomp.energies, t);
            dynamics::to_fock(&evolved, &decomp.eigvecs)
        };
        let via_series = apply_propagator(&propagator_oracle(m_propagator, t), &state);
        for n in 0..3 {
            worst = worst.max((via_spectral.amps[n] - via_series.amps[n]).norm());
        }
    }
    Ok(worst)
}

fn route_equivalence() -> GroupResult {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for _ in 0..25 {
        let j: f64 = rng.gen_range(0.0..100.0);
        let k: f64 = rng.gen_range(0.0..100.0);
        let m = build_tunneling_matrix(1.0, j, k);
        match route_deviation(&m, &m, 4, &mut rng) {
            Ok(dev) => worst = worst.max(dev),
            Err(DimerError::DegenerateSpectrum { .. }) => continue,
            Err(e) => {
                return GroupResult {
                    name: "route-equivalence",
                    passed: false,
                    detail: e.to_string(),
                }
            }
        }
    }
    GroupResult {
        name: "route-equivalence",
        passed: worst <= 1e-10,
        detail: format!("max amplitude deviation {worst:.2e} (tolerance 1e-10)"),
    }
}

fn limit_regressions() -> GroupResult {
    let pairs = [
        (FamilyKind::Fast, Regime::StrongJ),
        (FamilyKind::Fast, Regime::StrongK),
        (FamilyKind::Slow, Regime::StrongJ),
        (FamilyKind::Slow, Regime::StrongK),
        (FamilyKind::EquallyWeighted, Regime::StrongJ),
        (FamilyKind::EquallyWeighted, Regime::StrongK),
    ];
    let mut worst = 0.0f64;
    let mut detail = String::new();
    let mut passed = true;
    for (kind, regime) in pairs {
        let amp = match regime {
            Regime::StrongJ => 1e3,
            Regime::StrongK => 1e4,
        };
        let span = match kind {
            FamilyKind::EquallyWeighted => 3.0,
            _ => 4.0,
        };
        let grid = dimensionless_grid(span, 400);
        match regime_deviation(kind, regime, 1.0, amp, &grid) {
            Ok(dev) => {
                worst = worst.max(dev);
                if dev >= 2e-3 {
                    passed = false;
                    detail = format!("{}/{regime:?}: deviation {dev:.2e}", kind.as_str());
                }
            }
            Err(e) => {
                passed = false;
                detail = e.to_string();
            }
        }
    }
    GroupResult {
        name: "limit-regressions",
        passed,
        detail: if passed {
            format!("max deviation {worst:.2e} (tolerance 2e-3)")
        } else {
            detail
        },
    }
}

fn simplex_thresholds() -> GroupResult {
    // C ≥ √3/2 on a δ₂ grid point, i.e. δ₂ sits inside its circumscribed
    // disk Σr² ≤ 1/2. The converse fails: outside points near the middle of
    // a δ₂ edge stay within the disk, so we check the disk boundary instead.
    let threshold = qubit_threshold();
    for p in sample_simplex(200) {
        let sq: f64 = p.r.iter().map(|ri| ri * ri).sum();
        let ok = match p.region {
            Region::OutsideDelta2 if (sq - 0.5).abs() <= 1e-12 => true,
            Region::OutsideDelta2 => (p.concurrence < threshold) == (sq > 0.5),
            _ => p.concurrence >= threshold - 1e-12,
        };
        if !ok {
            return GroupResult {
                name: "simplex-thresholds",
                passed: false,
                detail: format!("r={:?} region={:?} C={}", p.r, p.region, p.concurrence),
            };
        }
    }
    GroupResult {
        name: "simplex-thresholds",
        passed: true,
        detail: "threshold inequality holds on the n=200 grid".into(),
    }
}

fn degenerate_error_path() -> GroupResult {
    // eps1 = J = K = 0 is fully degenerate and must be reported as an error
    let m = build_tunneling_matrix(0.0, 0.0, 0.0);
    match SpectralDecomposition::compute(&m) {
        Err(DimerError::DegenerateSpectrum { .. }) => GroupResult {
            name: "degenerate-error-path",
            passed: true,
            detail: "degenerate input rejected as expected".into(),
        },
        other => GroupResult {
            name: "degenerate-error-path",
            passed: false,
            detail: format!("expected DegenerateSpectrum, got {other:?}"),
        },
    }
}

fn log_grid(start: f64, stop: f64, n: usize) -> Vec<f64> {
    let (l0, l1) = (start.ln(), stop.ln());
    (0..n)
        .map(|i| (l0 + (l1 - l0) * i as f64 / (n as f64 - 1.0)).exp())
        .collect()
}

fn random_fock_state(rng: &mut impl Rng) -> QutritState {
    let mut amps = [Complex64::new(0.0, 0.0); 3];
    let mut norm = 0.0;
    while norm < 1e-3 {
        for a in &mut amps {
            *a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    }
    for a in &mut amps {
        *a /= norm;
    }
    QutritState::new(amps, Basis::Fock)
}

/// Random valid probability triad with random phases.
pub fn random_distribution(rng: &mut impl Rng) -> EnergyDistribution {
    let mut r = [0.0f64; 3];
    loop {
        for ri in &mut r {
            *ri = rng.gen_range(0.0..1.0);
        }
        let sum: f64 = r.iter().sum();
        if sum > 1e-6 {
            for ri in &mut r {
                *ri /= sum;
            }
            break;
        }
    }
    // renormalize exactly against rounding in the division
    let sum: f64 = r.iter().sum();
    r[2] += 1.0 - sum;
    let theta = [
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::TAU),
    ];
    EnergyDistribution::new(r, theta).expect("normalized by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::concurrence;

    #[test]
    fn verify_suite_passes() {
        for group in run_all() {
            assert!(group.passed, "{}: {}", group.name, group.detail);
        }
    }

    #[test]
    fn concurrence_of_random_states_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let psi = random_fock_state(&mut rng);
            let c = concurrence(&dynamics::populations(&psi));
            assert!((0.0..=1.0).contains(&c));
        }
    }
}
