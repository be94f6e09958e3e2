use thiserror::Error;

/// Errors surfaced by the dimer library.
#[derive(Debug, Error)]
pub enum DimerError {
    /// Hermiticity condition on the raw coupling tensors is violated.
    #[error("coupling tensors violate Hermiticity: {0}")]
    SymmetryViolation(String),

    /// The two sites are not equivalent (U or J differ between sites).
    #[error("site-equivalence assumption violated: {0}")]
    SiteAsymmetry(String),

    /// The spectrum is degenerate (discriminant non-negative); the
    /// trigonometric closed form does not apply.
    #[error("degenerate spectrum: discriminant = {discriminant:e}")]
    DegenerateSpectrum { discriminant: f64 },

    /// Probability triad fails normalization or non-negativity.
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    /// Argument outside the domain of a closed-form expression.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Malformed configuration input.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, DimerError>;
