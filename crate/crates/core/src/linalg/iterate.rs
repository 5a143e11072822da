//! Normalized power iteration on symmetric non-negative operators.
//!
//! For a symmetric operator `M ≥ 0` with spectral radius `ρ`, the sequence
//! `z ↦ M z / ‖M z‖` need not converge: when `-ρ` is an eigenvalue the
//! iterates oscillate between two limits. The even subsequence always
//! converges, to the normalized projection of the start vector onto the
//! invariant subspace of `ρ` and `-ρ` combined. [`even_iterate_limit`]
//! computes that limit by applying the operator twice per step and
//! normalizing once, which keeps the iterate on the unit sphere and halves
//! the normalization work. Convergence is linear with ratio `(μ/ρ)²`, where
//! `μ` is the largest sub-dominant eigenvalue magnitude.

use crate::linalg::DenseMatrix;

/// Why an iterative solve stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// Successive even iterates came within tolerance.
    Converged,
    /// The application budget ran out; the last iterate is returned as-is.
    MaxIterations,
    /// The operator annihilated the iterate (spectral radius 0).
    ZeroOperator,
}

/// Outcome of an iterative solve.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceReport {
    /// Number of operator applications performed (two per even step).
    pub iterations: usize,
    /// Frobenius distance between the last two compared even iterates.
    pub residual: f64,
    pub stop_reason: StopReason,
}

impl ConvergenceReport {
    pub fn converged(&self) -> bool {
        self.stop_reason == StopReason::Converged
    }

    /// Combines reports of independent solves: applications add up, the
    /// worst residual and stop reason win.
    pub fn merge(self, other: ConvergenceReport) -> ConvergenceReport {
        let rank = |r: StopReason| match r {
            StopReason::Converged => 0,
            StopReason::MaxIterations => 1,
            StopReason::ZeroOperator => 2,
        };
        ConvergenceReport {
            iterations: self.iterations + other.iterations,
            residual: self.residual.max(other.residual),
            stop_reason: if rank(other.stop_reason) > rank(self.stop_reason) {
                other.stop_reason
            } else {
                self.stop_reason
            },
        }
    }
}

/// Norm below which an iterate counts as annihilated.
const UNDERFLOW_GUARD: f64 = 1e-300;

/// Limit of the normalized even iterates of `apply` started from `z0`.
///
/// `apply` must act linearly, be symmetric as an operator on vectorized
/// matrices, and map non-negative input to non-negative output; `z0` must
/// be positive and `tol` in `(0, 1)`. The returned matrix has unit
/// Frobenius norm unless the operator annihilated the iterate
/// (`StopReason::ZeroOperator`), in which case the last usable iterate is
/// returned. Iteration stops once two successive even iterates are within
/// `tol` in Frobenius norm, or after `max_applications` operator calls.
pub fn even_iterate_limit<F>(
    apply: F,
    z0: &DenseMatrix,
    tol: f64,
    max_applications: usize,
) -> (DenseMatrix, ConvergenceReport)
where
    F: Fn(&DenseMatrix) -> DenseMatrix,
{
    assert!(tol > 0.0 && tol < 1.0, "tolerance must lie in (0, 1)");
    let start_norm = z0.frobenius_norm();
    assert!(start_norm > 0.0, "start matrix must be non-zero");

    let mut z = z0.scaled(1.0 / start_norm);
    let mut applications = 0usize;
    let mut residual = f64::INFINITY;
    while applications < max_applications {
        let y = apply(&apply(&z));
        applications += 2;
        let norm = y.frobenius_norm();
        if norm < UNDERFLOW_GUARD {
            return (
                z,
                ConvergenceReport {
                    iterations: applications,
                    residual,
                    stop_reason: StopReason::ZeroOperator,
                },
            );
        }
        let next = y.scaled(1.0 / norm);
        residual = next.distance(&z);
        z = next;
        if residual <= tol {
            return (
                z,
                ConvergenceReport {
                    iterations: applications,
                    residual,
                    stop_reason: StopReason::Converged,
                },
            );
        }
    }
    (
        z,
        ConvergenceReport {
            iterations: applications,
            residual,
            stop_reason: StopReason::MaxIterations,
        },
    )
}
