//! Numerical tolerances used by constructors and validators.
//!
//! Values are chosen with standard double-precision headroom: constructors
//! admit roughly 3–4 digits of accumulated rounding above machine epsilon,
//! derived quantities (eigensystems, long propagations) one or two more.

/// Hermiticity: ‖M − M†‖_max relative to ‖M‖_max.
pub const HERMITICITY_REL: f64 = 1e-12;

/// Eigen-reconstruction: ‖Φ diag(E) Φ† − H‖_F relative to ‖H‖_F.
pub const EIGEN_RECONSTRUCTION_REL: f64 = 1e-10;

/// Eigenvector unitarity: ‖Φ†Φ − I‖_max.
pub const EIGENVECTOR_UNITARITY: f64 = 1e-10;

/// State normalization at construction: |Σ|ψ_i|² − 1|.
pub const STATE_NORM: f64 = 1e-12;

/// Norm drift allowed at recorded times of a propagation.
pub const EVOLUTION_NORM_DRIFT: f64 = 1e-10;

/// Density-matrix trace: |Tr ρ − 1|.
pub const DENSITY_TRACE: f64 = 1e-10;

/// Density-matrix Hermiticity (relative, like [`HERMITICITY_REL`]).
pub const DENSITY_HERMITICITY_REL: f64 = 1e-12;

/// Tolerated numerical negativity of density-matrix eigenvalues. Anything
/// in [NEGATIVE_EIGENVALUE_FLOOR, 0) is flagged as a positivity diagnostic
/// and clipped for entropy only; below the floor is an error.
pub const NEGATIVE_EIGENVALUE_FLOOR: f64 = -1e-9;

/// Unitarity of a propagation step: ‖U†U − I‖_max.
pub const UNITARY_STEP: f64 = 1e-10;

/// Absolute tolerance of the decay-factor quadrature oracle.
pub const QUADRATURE_ABS: f64 = 1e-10;

/// Accuracy guard for the fixed-step integrator: dt·‖H‖/ħ must not exceed this.
pub const RK4_STEP_GUARD: f64 = 0.05;

/// Accuracy guard for split-operator stepping: dt·max|V|/λ must not exceed this.
pub const SPLIT_STEP_GUARD: f64 = 0.1;

/// Density floor below which the velocity field is undefined.
pub const VELOCITY_DENSITY_FLOOR: f64 = 1e-12;

/// Pointer branches must overlap less than this for unambiguous readout.
pub const POINTER_OVERLAP_LIMIT: f64 = 1e-3;

/// Relative λ-grid used to key the spectral cache in scaled-kinetic mode.
pub const LAMBDA_CACHE_GRID: f64 = 1e-6;
