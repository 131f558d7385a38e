//! Expectations, variances, and concurrence formulas, plus the independent
//! Wootters spin-flip oracle.
//!
//! The geometric route reads the concurrence off the trigonometric operator
//! averages, C = sqrt(⟨cos φ̂⟩² + ⟨sin φ̂⟩²), per sector. For density
//! matrices commuting with Sz² the mixed-state concurrence is
//!
//! ```text
//! C_ρ = max(0, C  − 2·sqrt(⟨P₁↑P₂↑⟩⟨P₁↓P₂↓⟩),
//!              C̃ − 2·sqrt(⟨P₁↑P₂↓⟩⟨P₁↓P₂↑⟩))
//! ```
//!
//! The oracle route is Wootters' formula C = max(0, λ₁−λ₂−λ₃−λ₄) with λᵢ
//! the decreasing square roots of the eigenvalues of ρρ̃,
//! ρ̃ = (σy⊗σy)ρ*(σy⊗σy). It is evaluated through a factorization that
//! keeps every error term linear in the matrix round-off: with ρ = LL†
//! (columns of L from the Jacobi eigendecomposition, null directions
//! dropped), the nonzero λᵢ are the singular values of the complex
//! symmetric matrix W = Lᵀ(σy⊗σy)L, computed via the Hermitian embedding
//! [[0, W], [W†, 0]] whose spectrum is ±λᵢ. A direct √eig(√ρ·ρ̃·√ρ)
//! evaluation would square the λᵢ and turn O(1e-16) eigenvalue noise on
//! true zeros into O(1e-8) errors.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, jacobi_raw, ComplexMatrix};
use crate::spinops::{
    cos_big_phi, projector, trig_operators, Qubit, Sector, Spin, TrigOperatorSet,
};
use crate::states::{validate_sz2_symmetry, sz2_symmetry_residual, DensityMatrix};
use crate::tol;
use num_complex::Complex64;

/// Means and variances of one sector's cosine/sine operators in a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigExpectations {
    pub sector: Sector,
    pub cos_mean: f64,
    pub sin_mean: f64,
    pub cos_variance: f64,
    pub sin_variance: f64,
}

/// Mean and variance of cos Φ̂, the cosine of the full angle between the
/// angular momenta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BigPhiStats {
    pub mean: f64,
    pub variance: f64,
}

/// Every concurrence-related quantity of one state in one place.
///
/// `c_mixed` is absent when the state fails the Sz² symmetry check that the
/// mixed-state formula requires; `mixed_oracle_residual` is
/// |c_mixed − c_wootters| whenever both are defined.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceReport {
    pub c_s0: f64,
    pub c_s1: f64,
    pub s0: TrigExpectations,
    pub s1: TrigExpectations,
    pub proj_uu: f64,
    pub proj_ud: f64,
    pub proj_du: f64,
    pub proj_dd: f64,
    pub c_mixed: Option<f64>,
    pub c_wootters: f64,
    pub big_phi: BigPhiStats,
    pub mixed_oracle_residual: Option<f64>,
}

/// Tr(ρ·op) for a Hermitian operator; the imaginary residue must stay below
/// [`tol::IMAG_RESIDUE_TOL`].
pub fn expectation(rho: &DensityMatrix, op: &ComplexMatrix) -> Result<f64> {
    if op.dim() != rho.matrix().dim() {
        return Err(Error::InvalidDimension(format!(
            "operator dimension {} does not match the state's {}",
            op.dim(),
            rho.matrix().dim()
        )));
    }
    let residual = op.hermiticity_residual();
    if residual > tol::DENSITY_TOL {
        return Err(Error::NotHermitian {
            residual,
            tol: tol::DENSITY_TOL,
        });
    }
    let m = rho.matrix();
    let mut value = Complex64::ZERO;
    for r in 0..4 {
        for c in 0..4 {
            value += m.get(r, c) * op.get(c, r);
        }
    }
    if value.im.abs() > tol::IMAG_RESIDUE_TOL {
        return Err(Error::Numerical(format!(
            "expectation of a Hermitian operator came out complex: {value}"
        )));
    }
    Ok(value.re)
}

/// ⟨op²⟩ − ⟨op⟩², clamped at zero when round-off dips below by less than
/// [`tol::VARIANCE_CLAMP`].
pub fn variance(rho: &DensityMatrix, op: &ComplexMatrix) -> Result<f64> {
    let mean = expectation(rho, op)?;
    let second_moment = expectation(rho, &(op * op))?;
    let value = second_moment - mean * mean;
    if value < -tol::VARIANCE_CLAMP {
        return Err(Error::Numerical(format!(
            "variance came out negative beyond round-off: {value}"
        )));
    }
    Ok(value.max(0.0))
}

/// Bundles the expectations and variances of one sector's operator pair.
pub fn trig_expectations(rho: &DensityMatrix, sector: Sector) -> Result<TrigExpectations> {
    let trig = trig_operators(sector);
    trig_expectations_with(rho, &trig)
}

fn trig_expectations_with(
    rho: &DensityMatrix,
    trig: &TrigOperatorSet,
) -> Result<TrigExpectations> {
    let cos_mean = expectation(rho, &trig.cos_op)?;
    let sin_mean = expectation(rho, &trig.sin_op)?;
    let cos_variance = variance(rho, &trig.cos_op)?;
    let sin_variance = variance(rho, &trig.sin_op)?;
    debug_assert!(cos_mean * cos_mean + sin_mean * sin_mean <= 1.0 + 1e-12);
    Ok(TrigExpectations {
        sector: trig.sector,
        cos_mean,
        sin_mean,
        cos_variance,
        sin_variance,
    })
}

/// C = sqrt(⟨cos φ̂⟩² + ⟨sin φ̂⟩²) for the requested sector.
pub fn geometric_concurrence(rho: &DensityMatrix, sector: Sector) -> Result<f64> {
    let e = trig_expectations(rho, sector)?;
    Ok(concurrence_from_means(&e))
}

fn concurrence_from_means(e: &TrigExpectations) -> f64 {
    (e.cos_mean * e.cos_mean + e.sin_mean * e.sin_mean)
        .sqrt()
        .min(1.0)
}

fn projector_expectation(rho: &DensityMatrix, spin1: Spin, spin2: Spin) -> Result<f64> {
    let joint = &projector(Qubit::One, spin1) * &projector(Qubit::Two, spin2);
    expectation(rho, &joint)
}

/// Mixed-state concurrence for Sz²-symmetric density matrices.
///
/// Errors with [`Error::NotInSymmetryClass`] when ρ carries cross-sector
/// coherences beyond [`tol::SZ2_SYMMETRY_TOL`]; the formula is not valid
/// there (the Wootters oracle still is).
pub fn mixed_concurrence(rho: &DensityMatrix) -> Result<f64> {
    if !validate_sz2_symmetry(rho, tol::SZ2_SYMMETRY_TOL) {
        return Err(Error::NotInSymmetryClass {
            residual: sz2_symmetry_residual(rho),
            tol: tol::SZ2_SYMMETRY_TOL,
        });
    }
    let c_s0 = geometric_concurrence(rho, Sector::S0)?;
    let c_s1 = geometric_concurrence(rho, Sector::S1)?;
    let uu = projector_expectation(rho, Spin::Up, Spin::Up)?;
    let dd = projector_expectation(rho, Spin::Down, Spin::Down)?;
    let ud = projector_expectation(rho, Spin::Up, Spin::Down)?;
    let du = projector_expectation(rho, Spin::Down, Spin::Up)?;
    let difference_term = c_s0 - 2.0 * (uu.max(0.0) * dd.max(0.0)).sqrt();
    let sum_term = c_s1 - 2.0 * (ud.max(0.0) * du.max(0.0)).sqrt();
    Ok(difference_term.max(sum_term).max(0.0).min(1.0))
}

/// The spin-flip matrix σy⊗σy (real, symmetric, anti-diagonal ∓1).
fn spin_flip() -> ComplexMatrix {
    let mut y = ComplexMatrix::zeros(4).expect("static dimension");
    y.set(0, 3, Complex64::new(-1.0, 0.0));
    y.set(1, 2, Complex64::ONE);
    y.set(2, 1, Complex64::ONE);
    y.set(3, 0, Complex64::new(-1.0, 0.0));
    y
}

/// Wootters concurrence, valid for any two-qubit density matrix. This is
/// the independent oracle the geometric formulas are checked against.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    let decomp = hermitian_eig(rho.matrix(), tol::DENSITY_TOL)?;
    // Columns of L: eigenvectors scaled by sqrt(eigenvalue); directions with
    // weight at the round-off floor are exact zeros of ρ.
    let kept: Vec<usize> = (0..4)
        .filter(|&k| decomp.eigenvalues[k] > tol::PSD_CLAMP)
        .collect();
    let rank = kept.len();
    if rank == 0 {
        return Ok(0.0);
    }
    let mut factor = vec![Complex64::ZERO; 4 * rank];
    for (col, &k) in kept.iter().enumerate() {
        let scale = decomp.eigenvalues[k].sqrt();
        for row in 0..4 {
            factor[row * rank + col] = decomp.eigenvectors.get(row, k) * scale;
        }
    }

    // W = Lᵀ·(σy⊗σy)·L, complex symmetric, rank×rank.
    let flip = spin_flip();
    let mut w = vec![Complex64::ZERO; rank * rank];
    for a in 0..rank {
        for b in 0..rank {
            let mut sum = Complex64::ZERO;
            for i in 0..4 {
                let li = factor[i * rank + a];
                if li == Complex64::ZERO {
                    continue;
                }
                for j in 0..4 {
                    let y = flip.get(i, j);
                    if y != Complex64::ZERO {
                        sum += li * y * factor[j * rank + b];
                    }
                }
            }
            w[a * rank + b] = sum;
        }
    }

    // Singular values of W via the Hermitian embedding [[0, W], [W†, 0]],
    // whose eigenvalues are ±σᵢ.
    let doubled = 2 * rank;
    let mut embedding = vec![Complex64::ZERO; doubled * doubled];
    for a in 0..rank {
        for b in 0..rank {
            embedding[a * doubled + (rank + b)] = w[a * rank + b];
            embedding[(rank + b) * doubled + a] = w[a * rank + b].conj();
        }
    }
    let (eigenvalues, _) = jacobi_raw(doubled, embedding);

    let mut lambdas = [0.0_f64; 4];
    for (slot, value) in lambdas.iter_mut().zip(eigenvalues.iter().take(rank)) {
        *slot = value.max(0.0);
    }
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
        .max(0.0)
        .min(1.0))
}

/// Entanglement of formation from a concurrence value:
/// E = h((1 + sqrt(1 − c²))/2) with h the binary entropy in bits.
pub fn entanglement_of_formation(concurrence: f64) -> Result<f64> {
    if !concurrence.is_finite() {
        return Err(Error::NonFinite("concurrence"));
    }
    if !(0.0..=1.0).contains(&concurrence) {
        return Err(Error::Domain(format!(
            "concurrence must lie in [0, 1], got {concurrence}"
        )));
    }
    let x = (1.0 + (1.0 - concurrence * concurrence).sqrt()) / 2.0;
    Ok(binary_entropy(x))
}

fn binary_entropy(x: f64) -> f64 {
    let mut h = 0.0;
    if x > 0.0 {
        h -= x * x.log2();
    }
    if x < 1.0 {
        h -= (1.0 - x) * (1.0 - x).log2();
    }
    h
}

/// Mean and variance of cos Φ̂ in a state.
pub fn big_phi_stats(rho: &DensityMatrix) -> Result<BigPhiStats> {
    let op = cos_big_phi();
    Ok(BigPhiStats {
        mean: expectation(rho, &op)?,
        variance: variance(rho, &op)?,
    })
}

/// Runs every route on one state and aggregates the results.
pub fn analyze(rho: &DensityMatrix) -> Result<ConcurrenceReport> {
    let s0 = trig_expectations(rho, Sector::S0)?;
    let s1 = trig_expectations(rho, Sector::S1)?;
    let c_s0 = concurrence_from_means(&s0);
    let c_s1 = concurrence_from_means(&s1);
    let proj_uu = projector_expectation(rho, Spin::Up, Spin::Up)?;
    let proj_ud = projector_expectation(rho, Spin::Up, Spin::Down)?;
    let proj_du = projector_expectation(rho, Spin::Down, Spin::Up)?;
    let proj_dd = projector_expectation(rho, Spin::Down, Spin::Down)?;
    let c_wootters = wootters_concurrence(rho)?;
    let c_mixed = if validate_sz2_symmetry(rho, tol::SZ2_SYMMETRY_TOL) {
        Some(mixed_concurrence(rho)?)
    } else {
        None
    };
    let mixed_oracle_residual = c_mixed.map(|value| (value - c_wootters).abs());
    Ok(ConcurrenceReport {
        c_s0,
        c_s1,
        s0,
        s1,
        proj_uu,
        proj_ud,
        proj_du,
        proj_dd,
        c_mixed,
        c_wootters,
        big_phi: big_phi_stats(rho)?,
        mixed_oracle_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{
        density_from_pure, ensemble_density, pure_state, DensityMatrix, Ensemble,
        PureStateParams, StateVector,
    };
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn pure_density(sector: Sector, theta: f64, phi: f64) -> DensityMatrix {
        density_from_pure(&pure_state(
            &PureStateParams::new(sector, theta, phi).unwrap(),
        ))
    }

    fn singlet_density() -> DensityMatrix {
        density_from_pure(&pure_state(&PureStateParams::singlet()))
    }

    #[test]
    fn expectation_of_cos_in_singlet() {
        let trig = trig_operators(Sector::S0);
        let value = expectation(&singlet_density(), &trig.cos_op).unwrap();
        assert!((value + 1.0).abs() <= 1e-14);
    }

    /// ⟨cos φ̂⟩ = sin ϑ cos φ, ⟨sin φ̂⟩ = sin ϑ sin φ.
    #[test]
    fn expectation_closed_forms() {
        let trig = trig_operators(Sector::S0);
        for (theta, phi) in [(0.3, 0.0), (1.0, 2.0), (2.5, 4.4), (FRAC_PI_2, 1.1)] {
            let rho = pure_density(Sector::S0, theta, phi);
            let cos_value = expectation(&rho, &trig.cos_op).unwrap();
            let sin_value = expectation(&rho, &trig.sin_op).unwrap();
            assert!((cos_value - theta.sin() * phi.cos()).abs() <= 1e-14);
            assert!((sin_value - theta.sin() * phi.sin()).abs() <= 1e-14);
        }
    }

    #[test]
    fn expectation_of_traceless_operator_in_maximally_mixed() {
        let trig = trig_operators(Sector::S0);
        let value = expectation(&DensityMatrix::maximally_mixed(), &trig.sin_op).unwrap();
        assert_eq!(value, 0.0);
    }

    #[test]
    fn expectation_rejects_non_hermitian_operator() {
        let mut op = ComplexMatrix::zeros(4).unwrap();
        op.set(0, 1, Complex64::ONE);
        assert!(matches!(
            expectation(&singlet_density(), &op),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn big_phi_variance_vanishes_for_singlet() {
        let stats = big_phi_stats(&singlet_density()).unwrap();
        assert!((stats.mean + 1.0).abs() <= 1e-14);
        assert!(stats.variance <= 1e-14);
    }

    /// Var(cos Φ̂) = (4/9)(1 − sin²ϑ cos²φ) on the S0 family.
    #[test]
    fn big_phi_variance_closed_form() {
        for (theta, phi) in [(0.2, 0.0), (1.3, 2.0), (FRAC_PI_2, 0.0), (2.2, 3.9)] {
            let stats = big_phi_stats(&pure_density(Sector::S0, theta, phi)).unwrap();
            let s = theta.sin() * phi.cos();
            assert!((stats.mean - (2.0 * s - 1.0) / 3.0).abs() <= 1e-14);
            assert!((stats.variance - 4.0 / 9.0 * (1.0 - s * s)).abs() <= 1e-13);
        }
    }

    #[test]
    fn triplet_big_phi_angle() {
        let stats =
            big_phi_stats(&pure_density(Sector::S0, FRAC_PI_2, 0.0)).unwrap();
        assert!((stats.mean - 1.0 / 3.0).abs() <= 1e-14);
        // arccos(1/3) = 70.5288°, computed independently at high precision.
        let degrees = stats.mean.acos().to_degrees();
        assert!((degrees - 70.52877936550931).abs() <= 1e-10);
    }

    #[test]
    fn trig_variances_at_triplet() {
        let trig = trig_operators(Sector::S0);
        let rho = pure_density(Sector::S0, FRAC_PI_2, 0.0);
        assert!(variance(&rho, &trig.cos_op).unwrap() <= 1e-14);
        assert!((variance(&rho, &trig.sin_op).unwrap() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn cross_sector_expectations_vanish() {
        let rho = pure_density(Sector::S1, 1.2, 0.7);
        let e = trig_expectations(&rho, Sector::S0).unwrap();
        assert_eq!(e.cos_mean, 0.0);
        assert_eq!(e.sin_mean, 0.0);
    }

    #[test]
    fn geometric_concurrence_is_sin_theta() {
        // sin(π/3) computed independently at high precision.
        let rho = pure_density(Sector::S0, FRAC_PI_3, 0.8);
        let c = geometric_concurrence(&rho, Sector::S0).unwrap();
        assert!((c - 0.8660254037844386).abs() <= 1e-14);

        let product = pure_density(Sector::S0, 0.0, 2.0);
        assert!(geometric_concurrence(&product, Sector::S0).unwrap() <= 1e-15);
    }

    /// ⟨cos φ̂⟩ = −p and ⟨sin φ̂⟩ = 0 in the Werner state, by trace
    /// linearity, so the S0 geometric value is p.
    #[test]
    fn geometric_concurrence_of_werner() {
        let rho = ensemble_density(&Ensemble::werner(0.8).unwrap());
        let c = geometric_concurrence(&rho, Sector::S0).unwrap();
        assert!((c - 0.8).abs() <= 1e-14);
    }

    #[test]
    fn mixed_concurrence_reduces_to_sin_theta_for_pure_states() {
        for (theta, phi) in [(0.4, 1.0), (FRAC_PI_2, PI), (2.0, 5.0)] {
            let rho = pure_density(Sector::S0, theta, phi);
            let c = mixed_concurrence(&rho).unwrap();
            assert!((c - theta.sin()).abs() <= 1e-13, "theta {theta}");
        }
    }

    /// Werner closed form (3p−1)/2, clipped at zero; derived by hand from
    /// the formula's terms and cross-checked against the oracle below.
    #[test]
    fn mixed_concurrence_of_werner_family() {
        for p in [0.5, 1.0 / 3.0, 0.0, 0.9] {
            let rho = ensemble_density(&Ensemble::werner(p).unwrap());
            let expected = (0.0_f64).max((3.0 * p - 1.0) / 2.0);
            let c = mixed_concurrence(&rho).unwrap();
            assert!((c - expected).abs() <= 1e-12, "p = {p}");
        }
    }

    #[test]
    fn mixed_concurrence_of_maximally_mixed_is_zero() {
        assert_eq!(
            mixed_concurrence(&DensityMatrix::maximally_mixed()).unwrap(),
            0.0
        );
    }

    #[test]
    fn mixed_concurrence_rejects_cross_sector_coherence() {
        let mut m = ComplexMatrix::from_diagonal(&[0.25, 0.25, 0.25, 0.25]).unwrap();
        m.set(0, 1, Complex64::new(0.1, 0.0));
        m.set(1, 0, Complex64::new(0.1, 0.0));
        let rho = DensityMatrix::from_matrix(m).unwrap();
        assert!(matches!(
            mixed_concurrence(&rho),
            Err(Error::NotInSymmetryClass { .. })
        ));
    }

    #[test]
    fn wootters_golden_values() {
        assert!((wootters_concurrence(&singlet_density()).unwrap() - 1.0).abs() <= 1e-14);
        let product = density_from_pure(&StateVector::basis(1));
        assert_eq!(wootters_concurrence(&product).unwrap(), 0.0);
        for sector in [Sector::S0, Sector::S1] {
            for (theta, phi) in [(0.7, 1.9), (2.4, 0.3)] {
                let rho = pure_density(sector, theta, phi);
                let c = wootters_concurrence(&rho).unwrap();
                assert!((c - theta.sin()).abs() <= 1e-13);
            }
        }
    }

    /// Independent oracle for X-shaped density matrices: the spin-flip
    /// eigenvalue roots are {sqrt(ρ₀₀ρ₃₃) ± |ρ₀₃|, sqrt(ρ₁₁ρ₂₂) ± |ρ₁₂|},
    /// derived by hand from the 2×2 blocks of ρρ̃.
    fn x_state_concurrence_closed_form(rho: &DensityMatrix) -> f64 {
        let m = rho.matrix();
        let (a, b, cc, d) = (
            m.get(0, 0).re,
            m.get(1, 1).re,
            m.get(2, 2).re,
            m.get(3, 3).re,
        );
        let w = m.get(0, 3).norm();
        let z = m.get(1, 2).norm();
        let mut lams = [
            (a * d).sqrt() + w,
            ((a * d).sqrt() - w).abs(),
            (b * cc).sqrt() + z,
            ((b * cc).sqrt() - z).abs(),
        ];
        lams.sort_by(|x, y| y.partial_cmp(x).unwrap());
        (lams[0] - lams[1] - lams[2] - lams[3]).max(0.0)
    }

    #[test]
    fn wootters_matches_x_state_closed_form() {
        use crate::states::sampling::ensemble_for_sample;
        let mut worst: f64 = 0.0;
        for index in 0..500 {
            let rho = ensemble_density(&ensemble_for_sample(7, index, 6));
            let oracle = wootters_concurrence(&rho).unwrap();
            let closed = x_state_concurrence_closed_form(&rho);
            worst = worst.max((oracle - closed).abs());
        }
        assert!(worst <= 1e-12, "worst deviation {worst}");
    }

    #[test]
    fn eof_endpoints_and_midpoint() {
        assert_eq!(entanglement_of_formation(0.0).unwrap(), 0.0);
        assert_eq!(entanglement_of_formation(1.0).unwrap(), 1.0);
        // Binary entropy at (1+sqrt(0.75))/2, computed independently at
        // 30-digit precision: 0.354578902665269884…
        let mid = entanglement_of_formation(0.5).unwrap();
        assert!((mid - 0.3545789026652699).abs() <= 1e-14);
        assert!(entanglement_of_formation(-0.1).is_err());
        assert!(entanglement_of_formation(1.1).is_err());
        assert!(entanglement_of_formation(f64::NAN).is_err());
    }

    #[test]
    fn eof_is_monotone() {
        let mut previous = -1.0;
        for k in 0..=10 {
            let c = k as f64 / 10.0;
            let value = entanglement_of_formation(c).unwrap();
            assert!(value > previous || (k == 0 && value == 0.0));
            previous = value;
        }
    }

    #[test]
    fn analyze_singlet_report() {
        let report = analyze(&singlet_density()).unwrap();
        assert!((report.c_s0 - 1.0).abs() <= 1e-14);
        assert!(report.c_s1.abs() <= 1e-14);
        assert!((report.c_mixed.unwrap() - 1.0).abs() <= 1e-13);
        assert!((report.c_wootters - 1.0).abs() <= 1e-13);
        assert!(report.mixed_oracle_residual.unwrap() <= 1e-12);
    }

    #[test]
    fn analyze_s1_pure_state() {
        let report = analyze(&pure_density(Sector::S1, 1.1, 0.4)).unwrap();
        assert!(report.c_s0.abs() <= 1e-14);
        assert!((report.c_s1 - (1.1_f64).sin()).abs() <= 1e-14);
    }

    #[test]
    fn analyze_werner_separability_boundary() {
        let rho = ensemble_density(&Ensemble::werner(1.0 / 3.0).unwrap());
        let report = analyze(&rho).unwrap();
        assert!(report.c_mixed.unwrap() <= 1e-12);
        assert!(report.c_wootters <= 1e-12);
    }

    #[test]
    fn analyze_flags_non_symmetric_state() {
        let mut m = ComplexMatrix::from_diagonal(&[0.25, 0.25, 0.25, 0.25]).unwrap();
        m.set(0, 2, Complex64::new(0.05, 0.0));
        m.set(2, 0, Complex64::new(0.05, 0.0));
        let rho = DensityMatrix::from_matrix(m).unwrap();
        let report = analyze(&rho).unwrap();
        assert!(report.c_mixed.is_none());
        assert!(report.mixed_oracle_residual.is_none());
    }
}
