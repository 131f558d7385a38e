use thiserror::Error;

/// Errors for contract violations across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix dimension outside the supported set, or mismatched operands.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    /// A NaN or infinity reached a public constructor.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// An operation required a Hermitian matrix and did not get one.
    #[error("matrix is not Hermitian: max |M - M†| = {residual:.3e} exceeds {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    /// An operation required a positive semidefinite matrix.
    #[error("matrix is not PSD: eigenvalue {eigenvalue:.3e} below -{tol:.3e}")]
    NotPsd { eigenvalue: f64, tol: f64 },

    /// A scalar or structural argument outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The mixed-state concurrence formula only applies to density matrices
    /// commuting with Sz²; this one does not.
    #[error(
        "density matrix is not Sz²-symmetric: max cross-block entry {residual:.3e} exceeds {tol:.3e}"
    )]
    NotInSymmetryClass { residual: f64, tol: f64 },

    /// A numerical sanity bound was exceeded (e.g. the imaginary residue of a
    /// real expectation value); indicates a logic error, not round-off.
    #[error("numerical sanity check failed: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
