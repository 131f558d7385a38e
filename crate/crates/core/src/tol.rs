//! Numerical tolerances used across the crate, in one place.
//!
//! All matrices here are 4×4 with entries of order one, so absolute
//! thresholds are meaningful.

/// Jacobi sweeps stop once every off-diagonal magnitude is below this.
pub const JACOBI_OFFDIAG: f64 = 1e-13;

/// Hard cap on Jacobi sweeps (convergence is quadratic; 4×4 needs ~3).
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues within this of zero are treated as exact zeros when a matrix
/// must be PSD (density matrices accumulate O(1e-15) negative round-off).
pub const PSD_CLAMP: f64 = 1e-12;

/// Hermiticity / trace / eigenvalue tolerance for density-matrix invariants.
pub const DENSITY_TOL: f64 = 1e-12;

/// Constructed operators (trig sets, rotations) must be Hermitian/unitary
/// to this accuracy, and the commutator identities hold to it.
pub const OPERATOR_TOL: f64 = 1e-13;

/// A density matrix is accepted into the Sz²-symmetry class when every
/// cross-block entry is below this.
pub const SZ2_SYMMETRY_TOL: f64 = 1e-10;

/// Variances may dip below zero by round-off; anything past this is a bug.
pub const VARIANCE_CLAMP: f64 = 1e-12;

/// Real expectation values of Hermitian operators may carry at most this
/// much imaginary residue.
pub const IMAG_RESIDUE_TOL: f64 = 1e-12;

/// Unit-norm tolerance for state vectors and ensemble weight sums.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Agreement required between the geometric concurrence and the Wootters
/// oracle on pure states.
pub const ORACLE_PURE_TOL: f64 = 1e-10;

/// Agreement required between the mixed-state concurrence formula and the
/// Wootters oracle over random ensembles.
pub const ORACLE_MIXED_TOL: f64 = 1e-9;

/// Two states are the same physical state when |⟨a|b⟩| ≥ 1 − this.
pub const GLOBAL_PHASE_TOL: f64 = 1e-12;
