//! Closed-form diagonalization of the real symmetric 3×3 Hamiltonian.
//!
//! The eigenvalues come from the trigonometric solution of the cubic
//! characteristic polynomial E³ + αE² + βE + γ = 0, with
//! p = (3β − α²)/9, q = (9αβ − 27γ − 2α³)/54 and φ = arccos(q/|p|^{3/2}):
//!
//!   E_k = −α/3 + 2√|p| cos((φ + 2πk)/3),  k = 1, 2, 3.
//!
//! A non-degenerate spectrum requires discriminant D = p³ + q² < 0.
//! Eigenvectors use the explicit coefficient branch valid for H01 ≠ 0 and
//! H01·H02 − H12(H00 − E_k) ≠ 0, with a cross-product null-space fallback.

use crate::error::{DimerError, Result};
use crate::hamiltonian::SymmetricMatrix3;
use std::f64::consts::PI;

/// Sign convention for eigenvectors: the last component of magnitude above
/// this threshold (on a unit vector) is made positive. This matches the sign
/// fixed by the explicit coefficient branch, whose ⟨E_k|2⟩ is positive by
/// construction, and keeps the relative phases that the strong-tunneling
/// limiting states assume.
const SIGN_COMPONENT_FLOOR: f64 = 1e-10;

/// Transition frequencies ω_ij = (E_i − E_j)/ħ with ħ = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionFrequencies {
    pub omega21: f64,
    pub omega32: f64,
    pub omega31: f64,
}

/// Full spectral data of a symmetric 3×3 Hamiltonian.
///
/// `energies` are strictly ascending; `eigvecs[k]` is the unit-norm real
/// eigenvector of `energies[k]` in the Fock basis, `eigvecs[k][n] = ⟨n|E_k⟩`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub energies: [f64; 3],
    pub eigvecs: [[f64; 3]; 3],
    pub p: f64,
    pub q: f64,
    pub phi: f64,
    pub freqs: TransitionFrequencies,
}

impl SpectralDecomposition {
    /// Diagonalizes `m` via the closed-form route.
    pub fn compute(m: &SymmetricMatrix3) -> Result<Self> {
        let (energies, p, q, phi) = closed_form_eigenvalues(m)?;
        let eigvecs = eigenvectors(m, &energies);
        let freqs = transition_frequencies(&energies);
        Ok(Self {
            energies,
            eigvecs,
            p,
            q,
            phi,
            freqs,
        })
    }
}

/// Coefficients (α, β, γ) of the characteristic polynomial
/// E³ + αE² + βE + γ = 0.
pub fn characteristic_coefficients(m: &SymmetricMatrix3) -> (f64, f64, f64) {
    let alpha = -m.trace();
    // the three diagonal 2×2 minors
    let det_m1 = m.d0 * m.d1 - m.h01 * m.h01;
    let det_m2 = m.d1 * m.d2 - m.h12 * m.h12;
    let det_m3 = m.d0 * m.d2 - m.h02 * m.h02;
    let beta = det_m1 + det_m2 + det_m3;
    let gamma = -m.det();
    (alpha, beta, gamma)
}

fn clamped_acos(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// Trigonometric eigenvalues, sorted ascending, together with (p, q, φ).
///
/// Errors with [`DimerError::DegenerateSpectrum`] when the discriminant is
/// not clearly negative; the paper's analysis assumes no degeneracies.
pub fn closed_form_eigenvalues(m: &SymmetricMatrix3) -> Result<([f64; 3], f64, f64, f64)> {
    let (alpha, beta, gamma) = characteristic_coefficients(m);
    let p = (3.0 * beta - alpha * alpha) / 9.0;
    let q = (9.0 * alpha * beta - 27.0 * gamma - 2.0 * alpha.powi(3)) / 54.0;
    let discriminant = p.powi(3) + q * q;
    let scale = m.max_abs();
    if discriminant >= -1e-14 * scale.powi(3) {
        return Err(DimerError::DegenerateSpectrum { discriminant });
    }
    let phi = clamped_acos(q / p.abs().powf(1.5));
    let shift = -alpha / 3.0;
    let radius = 2.0 * p.abs().sqrt();
    let mut energies = [0.0; 3];
    for (k, e) in energies.iter_mut().enumerate() {
        *e = shift + radius * ((phi + 2.0 * PI * (k as f64 + 1.0)) / 3.0).cos();
    }
    // properly ordered already for phi in [pi/2, pi); sort to cover the rest
    energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((energies, p, q, phi))
}

/// Spectrum of the pure-tunneling Hamiltonian:
/// E_k = ε₁ + (2/√3) ε cos((φ + 2πk)/3) with ε = √(ε₁² + 4(J² + K²)) and
/// φ = arccos(−12√3 J²K/ε³). For J·K = 0 this is the equally-spaced
/// spectrum ε₁ + (k − 2)ε.
pub fn tunneling_spectrum(eps1: f64, j: f64, k: f64) -> Result<[f64; 3]> {
    let eps = (eps1 * eps1 + 4.0 * (j * j + k * k)).sqrt();
    if eps == 0.0 {
        return Err(DimerError::DegenerateSpectrum { discriminant: 0.0 });
    }
    if j * k == 0.0 {
        return Ok([eps1 - eps, eps1, eps1 + eps]);
    }
    let phi = clamped_acos(-12.0 * 3.0f64.sqrt() * j * j * k / eps.powi(3));
    let radius = 2.0 / 3.0f64.sqrt() * eps;
    let mut energies = [0.0; 3];
    for (idx, e) in energies.iter_mut().enumerate() {
        *e = eps1 + radius * ((phi + 2.0 * PI * (idx as f64 + 1.0)) / 3.0).cos();
    }
    energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(energies)
}

/// Unit-norm eigenvectors of `m` for the given (non-degenerate) energies.
/// Row k is the eigenvector of `energies[k]`, components ⟨n|E_k⟩.
pub fn eigenvectors(m: &SymmetricMatrix3, energies: &[f64; 3]) -> [[f64; 3]; 3] {
    let scale = m.max_abs().max(1.0);
    let mut vecs = [[0.0; 3]; 3];
    for (k, &e) in energies.iter().enumerate() {
        let v = coefficient_branch(m, e, scale)
            .filter(|v| residual(m, e, v) <= 1e-10 * scale)
            .unwrap_or_else(|| null_space_vector(m, e));
        vecs[k] = canonical_sign(v);
    }
    vecs
}

/// Explicit coefficient branch: ⟨E|1⟩ = A·⟨E|2⟩ and
/// ⟨E|0⟩ = −[(H11 − E)/H01 · A + H12/H01]·⟨E|2⟩, with A determined by the
/// remaining row. Unavailable when H01 or the denominator of A vanish.
fn coefficient_branch(m: &SymmetricMatrix3, e: f64, scale: f64) -> Option<[f64; 3]> {
    let floor = 1e-12 * scale;
    if m.h01.abs() <= floor {
        return None;
    }
    let denom = m.h01 * m.h02 - m.h12 * (m.d0 - e);
    if denom.abs() <= floor * scale {
        return None;
    }
    let a = ((m.d0 - e) * (m.d2 - e) - m.h02 * m.h02) / denom;
    let v0 = -((m.d1 - e) / m.h01 * a + m.h12 / m.h01);
    let v = [v0, a, 1.0];
    Some(normalize(v))
}

/// Null-space of (M − E·I) via the cross product of the two rows with the
/// largest norm product.
fn null_space_vector(m: &SymmetricMatrix3, e: f64) -> [f64; 3] {
    let mut rows = m.to_rows();
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] -= e;
    }
    let candidates = [
        cross(rows[0], rows[1]),
        cross(rows[1], rows[2]),
        cross(rows[0], rows[2]),
    ];
    let best = candidates
        .iter()
        .max_by(|a, b| norm2(**a).partial_cmp(&norm2(**b)).unwrap())
        .unwrap();
    normalize(*best)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm2(v: [f64; 3]) -> f64 {
    v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = norm2(v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn residual(m: &SymmetricMatrix3, e: f64, v: &[f64; 3]) -> f64 {
    let mv = m.apply(*v);
    (0..3).map(|i| (mv[i] - e * v[i]).abs()).fold(0.0, f64::max)
}

/// Makes the last component above the floor positive. With all components
/// below the floor nothing flips (cannot happen for a unit vector with a
/// sane floor).
fn canonical_sign(mut v: [f64; 3]) -> [f64; 3] {
    for i in (0..3).rev() {
        if v[i].abs() > SIGN_COMPONENT_FLOOR {
            if v[i] < 0.0 {
                for c in &mut v {
                    *c = -*c;
                }
            }
            break;
        }
    }
    v
}

/// ω_21, ω_32, ω_31 from ascending energies (ħ = 1).
pub fn transition_frequencies(energies: &[f64; 3]) -> TransitionFrequencies {
    let omega21 = energies[1] - energies[0];
    let omega32 = energies[2] - energies[1];
    // keeps omega31 = omega32 + omega21 exact in floating point
    TransitionFrequencies {
        omega21,
        omega32,
        omega31: omega32 + omega21,
    }
}

/// Closed forms of the transition frequencies in terms of (p, φ):
/// ω₂₁ = 2√(3|p|) sin(φ/3), ω₃₂ = 2√(3|p|) cos((π + 2φ)/6),
/// ω₃₁ = ω₃₂ + ω₂₁.
pub fn transition_frequencies_closed_form(p: f64, phi: f64) -> TransitionFrequencies {
    let r = 2.0 * (3.0 * p.abs()).sqrt();
    let omega21 = r * (phi / 3.0).sin();
    let omega32 = r * ((PI + 2.0 * phi) / 6.0).cos();
    TransitionFrequencies {
        omega21,
        omega32,
        omega31: omega32 + omega21,
    }
}
