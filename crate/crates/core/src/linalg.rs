//! Dense complex linear algebra for 2×2 and 4×4 matrices.
//!
//! This is all the machinery the rest of the crate needs: arithmetic,
//! Kronecker products, commutators, a cyclic Jacobi eigensolver for Hermitian
//! matrices, and the PSD operator square root. Matrices are stored row-major.

use crate::error::{Error, Result};
use crate::tol;
use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense complex matrix, dimension 2 or 4, row-major storage.
///
/// Entries are guaranteed finite: every public constructor rejects NaN and
/// infinity, and all operations in this crate preserve finiteness.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "dimension must be 2 or 4, got {dim}"
        )))
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            entries: vec![Complex64::ZERO; dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for k in 0..dim {
            m.entries[k * dim + k] = Complex64::ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from a row-major entry list of length `dim²`.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::InvalidDimension(format!(
                "expected {} entries for a {dim}×{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if !entries.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from row-major real entries.
    pub fn from_real_entries(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::from_entries(dim, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a real diagonal matrix.
    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let dim = diag.len();
        let mut m = Self::zeros(dim)?;
        for (k, &x) in diag.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite("diagonal entries"));
            }
            m.entries[k * dim + k] = Complex64::new(x, 0.0);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.entries[c * self.dim + r] = self.get(r, c).conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    /// Max-norm: the largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn is_hermitian(&self, tolerance: f64) -> bool {
        self.hermiticity_residual() <= tolerance
    }

    /// max |M − M†|.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        let gram = &self.adjoint() * self;
        let eye = Self::identity(self.dim).expect("dim already validated");
        (&gram - &eye).max_abs() <= tolerance
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix addition");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix subtraction");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.dim, rhs.dim,
            "dimension mismatch in matrix multiplication"
        );
        let n = self.dim;
        let mut entries = vec![Complex64::ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * rhs.entries[k * n + c];
                }
            }
        }
        ComplexMatrix { dim: n, entries }
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self * -1.0
    }
}

/// Kronecker product of two 2×2 matrices in basis order (↑↑, ↑↓, ↓↑, ↓↓);
/// `a` acts on qubit 1 (the left factor).
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(Error::InvalidDimension(format!(
            "tensor_product expects 2×2 factors, got {}×{} and {}×{}",
            a.dim(),
            a.dim(),
            b.dim(),
            b.dim()
        )));
    }
    let mut out = ComplexMatrix::zeros(4)?;
    for a1 in 0..2 {
        for a2 in 0..2 {
            for b1 in 0..2 {
                for b2 in 0..2 {
                    out.set(2 * a1 + a2, 2 * b1 + b2, a.get(a1, b1) * b.get(a2, b2));
                }
            }
        }
    }
    Ok(out)
}

/// AB − BA.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::InvalidDimension(format!(
            "commutator needs equal dimensions, got {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(&(a * b) - &(b * a))
}

/// Result of a Hermitian eigendecomposition: M = V·diag(λ)·V†.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Real eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose k-th column is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// V·diag(f(λ))·V†. The workhorse behind spectral functions such as the
    /// PSD square root.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvectors.dim();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n).expect("dim already validated");
        for k in 0..n {
            let fk = f(self.eigenvalues[k]);
            if fk == 0.0 {
                continue;
            }
            for r in 0..n {
                let vr = v.get(r, k);
                for c in 0..n {
                    let inc = vr * v.get(c, k).conj() * fk;
                    out.set(r, c, out.get(r, c) + inc);
                }
            }
        }
        out
    }

    /// V·diag(λ)·V†, for residual checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_eigenvalues(|x| x)
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within `tolerance` (max |M − M†|); the
/// decomposition is computed for the Hermitian part (M + M†)/2. Sweeps stop
/// once every off-diagonal magnitude is below [`tol::JACOBI_OFFDIAG`].
pub fn hermitian_eig(m: &ComplexMatrix, tolerance: f64) -> Result<EigenDecomposition> {
    let residual = m.hermiticity_residual();
    if residual > tolerance {
        return Err(Error::NotHermitian {
            residual,
            tol: tolerance,
        });
    }
    let n = m.dim();
    let mut a = vec![Complex64::ZERO; n * n];
    for r in 0..n {
        for c in 0..n {
            a[r * n + c] = (m.get(r, c) + m.get(c, r).conj()) * 0.5;
        }
    }
    let (eigenvalues, vectors) = jacobi_raw(n, a);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: ComplexMatrix { dim: n, entries: vectors },
    })
}

/// Cyclic Jacobi on a Hermitian row-major buffer of size n×n. Returns
/// eigenvalues sorted descending and the matching eigenvector columns
/// (row-major, column k ↔ eigenvalue k). Internal: also used on the 8×8
/// Jordan–Wielandt embedding, which is larger than the public carrier allows.
pub(crate) fn jacobi_raw(n: usize, mut a: Vec<Complex64>) -> (Vec<f64>, Vec<Complex64>) {
    let mut v = vec![Complex64::ZERO; n * n];
    for k in 0..n {
        v[k * n + k] = Complex64::ONE;
    }

    for _sweep in 0..tol::JACOBI_MAX_SWEEPS {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].norm());
            }
        }
        if off < tol::JACOBI_OFFDIAG {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // Phase factor turning the (p,q) block real, then a real
                // Givens rotation annihilating the off-diagonal element.
                let phase = apq / mag;
                let theta = (a[q * n + q].re - a[p * n + p].re) / (2.0 * mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let cp = phase * c; // J[p][p]
                let sp = phase * s; // J[p][q]

                // Columns: A ← A·J with J[q][p] = −s, J[q][q] = c.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * cp - akq * s;
                    a[k * n + q] = akp * sp + akq * c;
                }
                // Rows: A ← J†·A.
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * cp.conj() - aqk * s;
                    a[q * n + k] = apk * sp.conj() + aqk * c;
                }
                // The rotation is constructed to zero this pair exactly.
                a[p * n + q] = Complex64::ZERO;
                a[q * n + p] = Complex64::ZERO;

                // Accumulate eigenvectors: V ← V·J.
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * cp - vkq * s;
                    v[k * n + q] = vkp * sp + vkq * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .re
            .partial_cmp(&a[i * n + i].re)
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k].re).collect();
    let mut vectors = vec![Complex64::ZERO; n * n];
    for (col, &k) in order.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + col] = v[r * n + k];
        }
    }
    (eigenvalues, vectors)
}

/// Hermitian PSD square root: R with R·R = m.
///
/// Eigenvalues in [−tolerance, 0) are clamped to zero; anything below
/// −tolerance is a genuine PSD violation and errors out.
pub fn psd_sqrt(m: &ComplexMatrix, tolerance: f64) -> Result<ComplexMatrix> {
    let decomp = hermitian_eig(m, tolerance)?;
    // Sorted descending, so the last eigenvalue is the most negative.
    if let Some(&smallest) = decomp.eigenvalues.last() {
        if smallest < -tolerance {
            return Err(Error::NotPsd {
                eigenvalue: smallest,
                tol: tolerance,
            });
        }
    }
    Ok(decomp.map_eigenvalues(|x| if x < 0.0 { 0.0 } else { x.sqrt() }))
}
