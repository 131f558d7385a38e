//! The named operators of the two-qubit angle formalism, as explicit 4×4
//! matrices.
//!
//! Spin operators are S = σ/2. On the basis (↑↑, ↑↓, ↓↑, ↓↓) the azimuthal
//! angle difference φ = φ₁ − φ₂ between the two angular-momentum projections
//! is represented by the operator pair
//!
//! ```text
//! cos φ̂ = (S₁ₓS₂ₓ + S₁ᵧS₂ᵧ) · D^(−1/2)
//! sin φ̂ = (S₁ᵧS₂ₓ − S₁ₓS₂ᵧ) · D^(−1/2)
//! D     = (S₁ₓ² + S₁ᵧ²)(S₂ₓ² + S₂ᵧ²)        (= I/4 for spin-1/2)
//! ```
//!
//! which live on the Sz = 0 sector span{↑↓, ↓↑}. The companion sector
//! span{↑↑, ↓↓} carries the sum angle φ₁ + φ₂ with sign-flipped
//! combinations. Both pairs satisfy the angle/angular-momentum commutator
//! algebra `[sin φ̂, K] = i cos φ̂`, `[cos φ̂, K] = −i sin φ̂` where the
//! conjugate momentum K is the *half* difference (S₁z − S₂z)/2 for the S0
//! sector and the half sum (S₁z + S₂z)/2 for S1 — the half is forced by the
//! ±1 spacing of the sector's Sz spectrum, exactly as the conjugate of a
//! relative coordinate is half the momentum difference.

use crate::linalg::{commutator, hermitian_eig, tensor_product, ComplexMatrix};
use crate::tol;
use num_complex::Complex64;

/// Pauli axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Which qubit an operator acts on; qubit 1 is the left tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    One,
    Two,
}

/// Spin projection label for projectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

/// The two 2-dimensional subspaces preserved by Sz² symmetry.
///
/// `S0` spans {↑↓, ↓↑} (vanishing total spin projection) and carries the
/// angle difference; `S1` spans {↑↑, ↓↓} and carries the angle sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    S0,
    S1,
}

impl Sector {
    /// Basis indices spanning the sector.
    pub fn basis_indices(self) -> [usize; 2] {
        match self {
            Sector::S0 => [1, 2],
            Sector::S1 => [0, 3],
        }
    }

    /// The complementary sector.
    pub fn other(self) -> Sector {
        match self {
            Sector::S0 => Sector::S1,
            Sector::S1 => Sector::S0,
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Standard Pauli matrix in the {↑, ↓} basis, with σz|↑⟩ = +|↑⟩.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let entries = match axis {
        Axis::X => vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        Axis::Y => vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
        Axis::Z => vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    };
    ComplexMatrix::from_entries(2, entries).expect("static 2×2 entries")
}

/// Spin component S = σ/2 embedded on one qubit of the pair.
pub fn spin_component(qubit: Qubit, axis: Axis) -> ComplexMatrix {
    let eye = ComplexMatrix::identity(2).expect("static dimension");
    let half_sigma = pauli(axis).scale(c(0.5, 0.0));
    let embedded = match qubit {
        Qubit::One => tensor_product(&half_sigma, &eye),
        Qubit::Two => tensor_product(&eye, &half_sigma),
    };
    embedded.expect("static 2×2 factors")
}

/// δSz = S₁z − S₂z; diag(0, 1, −1, 0).
pub fn delta_sz() -> ComplexMatrix {
    &spin_component(Qubit::One, Axis::Z) - &spin_component(Qubit::Two, Axis::Z)
}

/// Sz = S₁z + S₂z; diag(1, 0, 0, −1). Its square generates the symmetry
/// class of density matrices the mixed-state concurrence formula covers.
pub fn total_sz() -> ComplexMatrix {
    &spin_component(Qubit::One, Axis::Z) + &spin_component(Qubit::Two, Axis::Z)
}

/// The trigonometric operator pair of one sector, with its conjugate
/// momentum.
///
/// Invariants (all within [`tol::OPERATOR_TOL`]): both operators Hermitian
/// with spectrum {1, 0, 0, −1}, `[sin_op, conjugate_momentum] = i·cos_op`
/// and `[cos_op, conjugate_momentum] = −i·sin_op`.
#[derive(Debug, Clone)]
pub struct TrigOperatorSet {
    pub sector: Sector,
    pub cos_op: ComplexMatrix,
    pub sin_op: ComplexMatrix,
    pub conjugate_momentum: ComplexMatrix,
}

/// Inverse square root on the support: eigenvalues above the PSD clamp map
/// to λ^(−1/2), kernel directions to 0.
fn pseudo_inverse_sqrt(m: &ComplexMatrix) -> ComplexMatrix {
    let decomp = hermitian_eig(m, tol::OPERATOR_TOL).expect("operator is Hermitian");
    decomp.map_eigenvalues(|x| if x > tol::PSD_CLAMP { 1.0 / x.sqrt() } else { 0.0 })
}

/// Builds the cosine/sine operator pair for a sector.
pub fn trig_operators(sector: Sector) -> TrigOperatorSet {
    let s1x = spin_component(Qubit::One, Axis::X);
    let s1y = spin_component(Qubit::One, Axis::Y);
    let s2x = spin_component(Qubit::Two, Axis::X);
    let s2y = spin_component(Qubit::Two, Axis::Y);

    // D = (S₁ₓ² + S₁ᵧ²)(S₂ₓ² + S₂ᵧ²); strictly positive (= I/4), so the
    // pseudo-inverse square root has no kernel to drop here.
    let planar1 = &(&s1x * &s1x) + &(&s1y * &s1y);
    let planar2 = &(&s2x * &s2x) + &(&s2y * &s2y);
    let normalizer = pseudo_inverse_sqrt(&(&planar1 * &planar2));

    let (cos_numerator, sin_numerator) = match sector {
        Sector::S0 => (
            &(&s1x * &s2x) + &(&s1y * &s2y),
            &(&s1y * &s2x) - &(&s1x * &s2y),
        ),
        Sector::S1 => (
            &(&s1x * &s2x) - &(&s1y * &s2y),
            &(&s1y * &s2x) + &(&s1x * &s2y),
        ),
    };

    let momentum = match sector {
        Sector::S0 => delta_sz().scale(c(0.5, 0.0)),
        Sector::S1 => total_sz().scale(c(0.5, 0.0)),
    };

    TrigOperatorSet {
        sector,
        cos_op: &cos_numerator * &normalizer,
        sin_op: &sin_numerator * &normalizer,
        conjugate_momentum: momentum,
    }
}

/// The angle operators built from one sector's trigonometric pair:
/// φ̂_c = (π/2)(1 − cos φ̂) plays arccos, φ̂_s = (π/2) sin φ̂ plays arcsin.
///
/// On the sector subspace φ̂_c attains {0, π} and φ̂_s attains {±π/2}; the
/// four values together are the only possible relative angles.
#[derive(Debug, Clone)]
pub struct AngleOperatorPair {
    pub phi_c: ComplexMatrix,
    pub phi_s: ComplexMatrix,
}

pub fn angle_operators(trig: &TrigOperatorSet) -> AngleOperatorPair {
    let eye = ComplexMatrix::identity(4).expect("static dimension");
    AngleOperatorPair {
        phi_c: (&eye - &trig.cos_op).scale(c(std::f64::consts::FRAC_PI_2, 0.0)),
        phi_s: trig.sin_op.scale(c(std::f64::consts::FRAC_PI_2, 0.0)),
    }
}

/// Cosine of the full angle Φ between the two angular momenta:
/// S₁·S₂ / sqrt(S₁²S₂²) = (4/3)(S₁ₓS₂ₓ + S₁ᵧS₂ᵧ + S₁zS₂z).
pub fn cos_big_phi() -> ComplexMatrix {
    let mut sum = ComplexMatrix::zeros(4).expect("static dimension");
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let product = &spin_component(Qubit::One, axis) * &spin_component(Qubit::Two, axis);
        sum = &sum + &product;
    }
    sum.scale(c(4.0 / 3.0, 0.0))
}

/// Projector P = 1/2 ± S_z onto one qubit's spin-up or spin-down state.
pub fn projector(qubit: Qubit, spin: Spin) -> ComplexMatrix {
    let half = ComplexMatrix::identity(4)
        .expect("static dimension")
        .scale(c(0.5, 0.0));
    let sz = spin_component(qubit, Axis::Z);
    match spin {
        Spin::Up => &half + &sz,
        Spin::Down => &half - &sz,
    }
}

/// Single-qubit rotation exp(−i·angle·S) in closed form:
/// cos(angle/2)·I − 2i·sin(angle/2)·S.
pub fn rotation(qubit: Qubit, axis: Axis, angle: f64) -> ComplexMatrix {
    let eye = ComplexMatrix::identity(4).expect("static dimension");
    let spin = spin_component(qubit, axis);
    let half = angle / 2.0;
    &eye.scale(c(half.cos(), 0.0)) + &spin.scale(c(0.0, -2.0 * half.sin()))
}

/// Residuals of the angle/angular-momentum commutator identities for one
/// sector: (max |[sin, K] − i·cos|, max |[cos, K] + i·sin|).
pub fn commutator_residuals(trig: &TrigOperatorSet) -> (f64, f64) {
    let sin_comm = commutator(&trig.sin_op, &trig.conjugate_momentum)
        .expect("matching dimensions by construction");
    let cos_comm = commutator(&trig.cos_op, &trig.conjugate_momentum)
        .expect("matching dimensions by construction");
    let i_cos = trig.cos_op.scale(c(0.0, 1.0));
    let minus_i_sin = trig.sin_op.scale(c(0.0, -1.0));
    (
        (&sin_comm - &i_cos).max_abs(),
        (&cos_comm - &minus_i_sin).max_abs(),
    )
}
