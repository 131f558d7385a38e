//! Geometric analysis of two-qubit entanglement.
//!
//! Two spin-1/2 particles carry a relative azimuthal angle φ = φ₁ − φ₂ between
//! the xy-plane projections of their angular momenta. A proper self-adjoint
//! angle operator does not exist (periodicity), but cosine and sine of the
//! angle do, as 4×4 operators on the two-qubit Hilbert space. Their
//! expectation values encode the concurrence of the state:
//!
//! ```text
//! C = sqrt(⟨cos φ̂⟩² + ⟨sin φ̂⟩²)
//! ```
//!
//! The crate builds these operators explicitly ([`spinops`]), the states they
//! act on ([`states`]), and every derived quantity — expectations, variances,
//! concurrences for pure and mixed states, entanglement of formation — in
//! [`entanglement`], together with an independent Wootters spin-flip oracle
//! that validates each concurrence value. Everything sits on a minimal dense
//! complex linear-algebra layer ([`linalg`]) with a cyclic Jacobi Hermitian
//! eigensolver; no external matrix library is used.
//!
//! Basis order is fixed throughout as (↑↑, ↑↓, ↓↑, ↓↓), indices 0..3, with
//! qubit 1 the left tensor factor.

pub mod entanglement;
mod error;
pub mod linalg;
pub mod spinops;
pub mod states;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex::Complex64;
