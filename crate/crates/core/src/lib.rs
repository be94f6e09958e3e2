//! Extended two-site Bose-Hubbard dimer: two indistinguishable bosons, two
//! modes. Closed-form spectral analysis, exact unitary dynamics, mode
//! entanglement (concurrence), simplex classification of energy
//! distributions, and the strong-tunneling family limits.
//!
//! Units: ħ = 1, energies in units of ε₁, time in ħ/ε₁.

pub mod config;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod families;
pub mod hamiltonian;
pub mod simplex;
pub mod spectral;
pub mod verify;

pub use error::{DimerError, Result};
pub use hamiltonian::{
    build_extended_matrix, build_tunneling_matrix, HamiltonianParams, RawCouplings,
    SymmetricMatrix3,
};
pub use spectral::{SpectralDecomposition, TransitionFrequencies};
