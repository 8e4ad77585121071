//! Numerical tolerances, collected in one place.
//!
//! Every threshold used by the kernels is derived from the input's own
//! scale so that results are invariant under uniform rescaling.

use crate::matrix::Matrix;

/// Relative off-diagonal mass at which a Jacobi sweep is considered converged.
pub const JACOBI_REL: f64 = 1e-14;

/// Sweep cap for both Jacobi iterations.
pub const MAX_SWEEPS: usize = 100;

/// Base factor of the weak-majorization tolerance used by theorem checks.
pub const MAJORIZATION_REL: f64 = 1e-8;

/// Eigenvalue split between the `1` and `0` clusters of a numerical projector.
pub const PROJECTOR_SPLIT: f64 = 0.5;

/// Base relative factor shared by the kernel tolerances.
const KERNEL_REL: f64 = 1e-10;

/// Allowed `||A - A^T||_max` for a matrix treated as symmetric.
pub fn sym_tol(a: &Matrix) -> f64 {
    KERNEL_REL * a.max_abs().max(1.0)
}

/// Columns whose residual norm falls below this are numerically dependent.
pub fn rank_tol(largest_column_norm: f64) -> f64 {
    KERNEL_REL * largest_column_norm
}

/// Negative eigenvalues down to `-psd_tol` are clamped to zero.
pub fn psd_tol(a: &Matrix) -> f64 {
    KERNEL_REL * a.frobenius_norm()
}

/// Residual bound for eigen and singular value decompositions.
pub fn eig_tol(a: &Matrix) -> f64 {
    KERNEL_REL * a.frobenius_norm().max(1.0)
}

/// Default slack for `x ≺w y`: `factor * max(1, ||y||_inf) * n`.
pub fn majorization_tol(factor: f64, y: &[f64], n: usize) -> f64 {
    let ymax = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    factor * ymax.max(1.0) * n.max(1) as f64
}
