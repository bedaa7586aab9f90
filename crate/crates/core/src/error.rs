//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building states, sampling paths,
/// propagating, or running an experiment.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |M - M†| = {deviation:.3e} exceeds {tolerance:.3e}")]
    NonHermitian { deviation: f64, tolerance: f64 },

    #[error("state vector is not normalized: ‖ψ‖² = {norm_sq}")]
    NotNormalized { norm_sq: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    #[error("invalid density matrix: {reason}")]
    InvalidDensity { reason: String },

    #[error("λ must be strictly positive, got {lambda}")]
    NonPositiveLambda { lambda: f64 },

    #[error("σ = 0 has a delta-distributed λ; the density is undefined (use the σ=0 sampling contract)")]
    ZeroSigma,

    #[error("scaled-kinetic mode requires a kinetic/potential split")]
    MissingSplit,

    #[error("t_final = {t_final} is not an integer multiple of τ_λ = {tau_lambda}")]
    NonCommensurateTime { t_final: f64, tau_lambda: f64 },

    #[error("matrix element ({r},{s}) out of range for dimension {dim}")]
    IndexOutOfRange { r: usize, s: usize, dim: usize },

    #[error("adaptive quadrature did not converge to {tolerance:.1e} (deepest interval [{a}, {b}])")]
    QuadratureNonConvergence { tolerance: f64, a: f64, b: f64 },

    #[error("integration step too large: {detail}")]
    StepTooLarge { detail: String },

    #[error("probability density below floor at grid point {index}; velocity undefined there")]
    DensityFloor { index: usize },

    #[error("need at least {required} snapshots, got {found}")]
    TooFewSnapshots { required: usize, found: usize },

    #[error("pointer branches overlap (max off-diagonal overlap {overlap:.3e} ≥ {limit:.3e}); outcome readout is ambiguous")]
    AmbiguousPointer { overlap: f64, limit: f64 },

    #[error("pointer displacement {displacement:.3e} exceeds half the grid domain {half_domain:.3e}; packet would wrap")]
    PointerWrap { displacement: f64, half_domain: f64 },

    #[error("decay-rate fit failed: {reason}")]
    FitFailure { reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
