//! Global tolerances.
//!
//! Structural checks (Hermiticity, exact identities) use [`STRUCTURAL`];
//! results of iterative routines use [`ITERATIVE`]; user-supplied amplitudes
//! are renormalized silently when their norm is within [`NORM_GATE`] of one
//! and rejected otherwise.

/// Hermiticity, closed-form identities, entrywise matrix agreement.
pub const STRUCTURAL: f64 = 1e-12;

/// Eigensolver residuals, trace and simplex-sum checks.
pub const ITERATIVE: f64 = 1e-10;

/// Maximum `| ||v|| - 1 |` accepted for an input state before it is rejected.
pub const NORM_GATE: f64 = 1e-6;

/// Absolute tolerance for comparing Schmidt coefficients and partial sums.
pub const SCHMIDT: f64 = 1e-10;

/// Eigenvalues above `-ZERO_CLAMP` are clamped to zero; probabilities below
/// it count as exact zeros in the entropy.
pub const ZERO_CLAMP: f64 = 1e-12;
