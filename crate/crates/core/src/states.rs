//! Two-qubit states: parametrized pure states in both sectors, density
//! matrices, and mixed ensembles with conserved Sz².
//!
//! The parametrized families are
//!
//! ```text
//! S0: cos(ϑ/2)|↑↓⟩ + e^{iφ} sin(ϑ/2)|↓↑⟩
//! S1: cos(ϑ/2)|↑↑⟩ + e^{iφ} sin(ϑ/2)|↓↓⟩
//! ```
//!
//! with ϑ ∈ [0, π] and φ reduced mod 2π. Convex mixtures of states from the
//! two families produce exactly the density matrices commuting with Sz² —
//! X-shaped matrices in the computational basis.

use crate::error::{Error, Result};
use crate::linalg::{commutator, hermitian_eig, ComplexMatrix};
use crate::spinops::{total_sz, Sector};
use crate::tol;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// (sector, ϑ, φ) parametrization of one pure state.
///
/// ϑ is validated into [0, π]; φ is stored reduced to [0, 2π). Equality is
/// parameter-wise; compare states through [`StateVector::coincides_with`]
/// when the coordinate singularity at ϑ ∈ {0, π} matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureStateParams {
    sector: Sector,
    theta: f64,
    phi: f64,
}

impl PureStateParams {
    pub fn new(sector: Sector, theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite("pure-state angles"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!(
                "theta must lie in [0, π], got {theta}"
            )));
        }
        Ok(Self {
            sector,
            theta,
            phi: phi.rem_euclid(TAU),
        })
    }

    /// The maximally entangled singlet (|↑↓⟩ − |↓↑⟩)/√2.
    pub fn singlet() -> Self {
        Self::new(Sector::S0, FRAC_PI_2, PI).expect("angles in range")
    }

    /// The symmetric triplet component (|↑↓⟩ + |↓↑⟩)/√2.
    pub fn triplet() -> Self {
        Self::new(Sector::S0, FRAC_PI_2, 0.0).expect("angles in range")
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Length-4 complex amplitude vector over the basis (↑↑, ↑↓, ↓↑, ↓↓),
/// unit-normalized within [`tol::UNIT_NORM_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: [Complex64; 4],
}

impl StateVector {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::Domain(format!(
                "state vector must be unit-normalized, |v|² = {norm_sq}"
            )));
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state by index in (↑↑, ↑↓, ↓↑, ↓↓).
    pub fn basis(index: usize) -> Self {
        assert!(index < 4, "basis index out of range");
        let mut amplitudes = [Complex64::ZERO; 4];
        amplitudes[index] = Complex64::ONE;
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// True when the two vectors describe the same physical state, i.e.
    /// |⟨a|b⟩| = 1 within `tolerance`.
    pub fn coincides_with(&self, other: &StateVector, tolerance: f64) -> bool {
        (self.inner(other).norm() - 1.0).abs() <= tolerance
    }

    /// Image under a unitary; errors if the matrix fails to preserve norm.
    pub fn transformed(&self, unitary: &ComplexMatrix) -> Result<StateVector> {
        if unitary.dim() != 4 {
            return Err(Error::InvalidDimension(
                "state transformation needs a 4×4 matrix".into(),
            ));
        }
        let image = unitary.mul_vec(&self.amplitudes);
        StateVector::new([image[0], image[1], image[2], image[3]])
    }
}

/// Builds the parametrized pure state of either sector.
pub fn pure_state(params: &PureStateParams) -> StateVector {
    let half = params.theta / 2.0;
    let first = Complex64::new(half.cos(), 0.0);
    let second = Complex64::from_polar(half.sin(), params.phi);
    let amplitudes = match params.sector {
        Sector::S0 => [Complex64::ZERO, first, second, Complex64::ZERO],
        Sector::S1 => [first, Complex64::ZERO, Complex64::ZERO, second],
    };
    StateVector { amplitudes }
}

/// One weighted component of a mixed-state ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleTerm {
    weight: f64,
    params: PureStateParams,
}

impl EnsembleTerm {
    pub fn new(weight: f64, params: PureStateParams) -> Result<Self> {
        if !weight.is_finite() {
            return Err(Error::NonFinite("ensemble weight"));
        }
        if weight <= 0.0 || weight > 1.0 {
            return Err(Error::Domain(format!(
                "ensemble weight must lie in (0, 1], got {weight}"
            )));
        }
        Ok(Self { weight, params })
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn params(&self) -> &PureStateParams {
        &self.params
    }
}

/// Weighted list of parametrized pure states from both sectors; weights sum
/// to one within [`tol::UNIT_NORM_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    terms: Vec<EnsembleTerm>,
}

impl Ensemble {
    pub fn new(terms: Vec<EnsembleTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Domain("ensemble needs at least one term".into()));
        }
        let total: f64 = terms.iter().map(|t| t.weight).sum();
        if (total - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::Domain(format!(
                "ensemble weights must sum to 1, got {total}"
            )));
        }
        Ok(Self { terms })
    }

    /// The Werner family p·(singlet projector) + (1−p)/4·I, realized as an
    /// ensemble: the four equal-weight ϑ ∈ {0, π} states are exactly the
    /// computational basis projectors. Separable iff p ≤ 1/3.
    pub fn werner(p: f64) -> Result<Self> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!(
                "Werner parameter must lie in [0, 1], got {p}"
            )));
        }
        let mut terms = Vec::new();
        if p > 0.0 {
            terms.push(EnsembleTerm::new(p, PureStateParams::singlet())?);
        }
        if p < 1.0 {
            let share = (1.0 - p) / 4.0;
            for sector in [Sector::S0, Sector::S1] {
                for theta in [0.0, PI] {
                    terms.push(EnsembleTerm::new(
                        share,
                        PureStateParams::new(sector, theta, 0.0)?,
                    )?);
                }
            }
        }
        Self::new(terms)
    }

    pub fn terms(&self) -> &[EnsembleTerm] {
        &self.terms
    }
}

/// A validated 4×4 density matrix: Hermitian, unit trace, PSD — each within
/// [`tol::DENSITY_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates and wraps an arbitrary matrix.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        if matrix.dim() != 4 {
            return Err(Error::InvalidDimension(
                "density matrices are 4×4 here".into(),
            ));
        }
        let residual = matrix.hermiticity_residual();
        if residual > tol::DENSITY_TOL {
            return Err(Error::NotHermitian {
                residual,
                tol: tol::DENSITY_TOL,
            });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol::DENSITY_TOL || trace.im.abs() > tol::DENSITY_TOL {
            return Err(Error::Domain(format!(
                "density matrix trace must be 1, got {trace}"
            )));
        }
        let decomp = hermitian_eig(&matrix, tol::DENSITY_TOL)?;
        if let Some(&smallest) = decomp.eigenvalues.last() {
            if smallest < -tol::PSD_CLAMP {
                return Err(Error::NotPsd {
                    eigenvalue: smallest,
                    tol: tol::PSD_CLAMP,
                });
            }
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// The maximally mixed state I/4.
    pub fn maximally_mixed() -> Self {
        Self {
            matrix: ComplexMatrix::identity(4)
                .expect("static dimension")
                .scale(Complex64::new(0.25, 0.0)),
        }
    }
}

/// Rank-1 projector |v⟩⟨v| of a unit vector. Valid by construction, so no
/// spectral validation is run.
pub fn density_from_pure(state: &StateVector) -> DensityMatrix {
    let amps = state.amplitudes();
    let mut matrix = ComplexMatrix::zeros(4).expect("static dimension");
    for r in 0..4 {
        for c in 0..4 {
            matrix.set(r, c, amps[r] * amps[c].conj());
        }
    }
    DensityMatrix { matrix }
}

/// Convex combination Σᵢ wᵢ |ψᵢ⟩⟨ψᵢ| over the ensemble. The result is
/// block-diagonal across the two sectors (an X-shaped matrix) and commutes
/// with Sz².
pub fn ensemble_density(ensemble: &Ensemble) -> DensityMatrix {
    let mut matrix = ComplexMatrix::zeros(4).expect("static dimension");
    for term in ensemble.terms() {
        let state = pure_state(term.params());
        let projector = density_from_pure(&state);
        matrix = &matrix + &projector.matrix().scale(Complex64::new(term.weight(), 0.0));
    }
    DensityMatrix { matrix }
}

/// True iff ‖[ρ, Sz²]‖_max ≤ tolerance — equivalently, all eight
/// cross-block entries between span{↑↑, ↓↓} and span{↑↓, ↓↑} vanish.
pub fn validate_sz2_symmetry(rho: &DensityMatrix, tolerance: f64) -> bool {
    sz2_symmetry_residual(rho) <= tolerance
}

/// ‖[ρ, Sz²]‖_max.
pub fn sz2_symmetry_residual(rho: &DensityMatrix) -> f64 {
    let sz = total_sz();
    let sz2 = &sz * &sz;
    commutator(rho.matrix(), &sz2)
        .expect("matching dimensions by construction")
        .max_abs()
}

pub mod sampling {
    //! Deterministic random ensembles for oracle-equivalence sweeps.
    //!
    //! Sample `i` of a run is generated from an independent ChaCha8 stream
    //! seeded with `sample_seed(master_seed, i)`, so a run can be sharded
    //! across threads in any way without changing a single sample.

    use super::{Ensemble, EnsembleTerm, PureStateParams};
    use crate::spinops::Sector;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{PI, TAU};

    /// SplitMix64 finalizer over the (master, index) pair.
    pub fn sample_seed(master_seed: u64, index: u64) -> u64 {
        let mut z = master_seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform (ϑ, φ) parameters in the given sector.
    pub fn random_params<R: Rng>(rng: &mut R, sector: Sector) -> PureStateParams {
        let theta = rng.random::<f64>() * PI;
        let phi = rng.random::<f64>() * TAU;
        PureStateParams::new(sector, theta, phi).expect("sampled angles in range")
    }

    /// Random ensemble with 1..=max_terms terms: uniform sector and angles
    /// per term, Dirichlet-uniform weights via normalized exponentials.
    pub fn random_ensemble<R: Rng>(rng: &mut R, max_terms: usize) -> Ensemble {
        let count = rng.random_range(1..=max_terms.max(1));
        let mut raw = Vec::with_capacity(count);
        for _ in 0..count {
            let sector = if rng.random::<bool>() {
                Sector::S1
            } else {
                Sector::S0
            };
            let params = random_params(rng, sector);
            let exponential = -(1.0 - rng.random::<f64>()).ln();
            raw.push((exponential.max(f64::MIN_POSITIVE), params));
        }
        let total: f64 = raw.iter().map(|(w, _)| w).sum();
        let terms = raw
            .into_iter()
            .map(|(w, params)| {
                EnsembleTerm::new(w / total, params).expect("normalized weight in (0, 1]")
            })
            .collect();
        Ensemble::new(terms).expect("weights normalized")
    }

    /// The ensemble for sample `index` of a run keyed by `master_seed`.
    pub fn ensemble_for_sample(master_seed: u64, index: u64, max_terms: usize) -> Ensemble {
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(master_seed, index));
        random_ensemble(&mut rng, max_terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinops::{rotation, Axis, Qubit};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta_domain_enforced() {
        assert!(PureStateParams::new(Sector::S0, -0.1, 0.0).is_err());
        assert!(PureStateParams::new(Sector::S0, PI + 0.1, 0.0).is_err());
        assert!(PureStateParams::new(Sector::S0, f64::NAN, 0.0).is_err());
    }

    #[test]
    fn phi_reduced_mod_tau() {
        let params = PureStateParams::new(Sector::S0, 1.0, -FRAC_PI_2).unwrap();
        assert!((params.phi() - (TAU - FRAC_PI_2)).abs() <= 1e-15);
        let wrapped = PureStateParams::new(Sector::S0, 1.0, TAU).unwrap();
        assert_eq!(wrapped.phi(), 0.0);
    }

    #[test]
    fn pure_state_product_limit() {
        for phi in [0.0, 1.0, 4.0] {
            let state = pure_state(&PureStateParams::new(Sector::S0, 0.0, phi).unwrap());
            assert!(state.coincides_with(&StateVector::basis(1), 1e-15));
        }
    }

    #[test]
    fn pure_state_singlet() {
        let state = pure_state(&PureStateParams::singlet());
        let inv = 1.0 / 2.0_f64.sqrt();
        assert!((state.amplitudes()[1] - c(inv, 0.0)).norm() <= 1e-15);
        assert!((state.amplitudes()[2] - c(-inv, 0.0)).norm() <= 1e-12);
        assert!(state.amplitudes()[0].norm() == 0.0 && state.amplitudes()[3].norm() == 0.0);
    }

    #[test]
    fn pure_state_s1_bell() {
        let state = pure_state(&PureStateParams::new(Sector::S1, FRAC_PI_2, 0.0).unwrap());
        let inv = 1.0 / 2.0_f64.sqrt();
        assert!((state.amplitudes()[0] - c(inv, 0.0)).norm() <= 1e-15);
        assert!((state.amplitudes()[3] - c(inv, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn pure_state_norm_on_grid() {
        for i in 0..10 {
            for j in 0..10 {
                let theta = PI * i as f64 / 9.0;
                let phi = TAU * j as f64 / 10.0;
                for sector in [Sector::S0, Sector::S1] {
                    let state =
                        pure_state(&PureStateParams::new(sector, theta, phi).unwrap());
                    let norm_sq: f64 = state.amplitudes().iter().map(|z| z.norm_sqr()).sum();
                    assert!((norm_sq - 1.0).abs() <= 1e-15);
                }
            }
        }
    }

    #[test]
    fn state_vector_rejects_unnormalized() {
        let amps = [c(0.5, 0.0), Complex64::ZERO, Complex64::ZERO, Complex64::ZERO];
        assert!(matches!(StateVector::new(amps), Err(Error::Domain(_))));
    }

    #[test]
    fn density_from_basis_state() {
        let rho = density_from_pure(&StateVector::basis(1));
        let expected = ComplexMatrix::from_diagonal(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(rho.matrix(), &expected);
    }

    /// Oracle: outer product of (0, 1, −1, 0)/√2 by hand.
    #[test]
    fn density_of_singlet() {
        let rho = density_from_pure(&pure_state(&PureStateParams::singlet()));
        let m = rho.matrix();
        assert!((m.get(1, 1) - c(0.5, 0.0)).norm() <= 1e-12);
        assert!((m.get(2, 2) - c(0.5, 0.0)).norm() <= 1e-12);
        assert!((m.get(1, 2) - c(-0.5, 0.0)).norm() <= 1e-12);
        assert!((m.get(2, 1) - c(-0.5, 0.0)).norm() <= 1e-12);
        assert!(m.get(0, 0).norm() <= 1e-30 && m.get(3, 3).norm() <= 1e-30);
    }

    #[test]
    fn pure_density_is_projector() {
        let params = PureStateParams::new(Sector::S0, 1.1, 2.3).unwrap();
        let rho = density_from_pure(&pure_state(&params));
        let m = rho.matrix();
        assert!((m.trace() - Complex64::ONE).norm() <= 1e-14);
        assert!((&(m * m) - m).max_abs() <= 1e-14);
    }

    #[test]
    fn equal_singlet_triplet_mixture_is_diagonal() {
        let ensemble = Ensemble::new(vec![
            EnsembleTerm::new(0.5, PureStateParams::singlet()).unwrap(),
            EnsembleTerm::new(0.5, PureStateParams::triplet()).unwrap(),
        ])
        .unwrap();
        let rho = ensemble_density(&ensemble);
        let expected = ComplexMatrix::from_diagonal(&[0.0, 0.5, 0.5, 0.0]).unwrap();
        assert!((rho.matrix() - &expected).max_abs() <= 1e-12);
    }

    /// Oracle: the Werner ensemble must reproduce p·ρ_singlet + (1−p)/4·I,
    /// built here directly entry by entry.
    #[test]
    fn werner_ensemble_matches_direct_mixture() {
        for p in [0.0, 0.3, 0.5, 0.8, 1.0] {
            let rho = ensemble_density(&Ensemble::werner(p).unwrap());
            let singlet_rho = density_from_pure(&pure_state(&PureStateParams::singlet()));
            let direct = &singlet_rho.matrix().scale(c(p, 0.0))
                + &ComplexMatrix::identity(4)
                    .unwrap()
                    .scale(c((1.0 - p) / 4.0, 0.0));
            assert!((rho.matrix() - &direct).max_abs() <= 1e-15, "p = {p}");
        }
        assert!(Ensemble::werner(-0.1).is_err());
        assert!(Ensemble::werner(1.1).is_err());
    }

    #[test]
    fn single_term_ensemble_equals_pure_density() {
        let params = PureStateParams::new(Sector::S1, 0.9, 5.0).unwrap();
        let ensemble =
            Ensemble::new(vec![EnsembleTerm::new(1.0, params).unwrap()]).unwrap();
        let via_ensemble = ensemble_density(&ensemble);
        let direct = density_from_pure(&pure_state(&params));
        assert!((via_ensemble.matrix() - direct.matrix()).max_abs() <= 1e-15);
    }

    #[test]
    fn ensemble_weight_validation() {
        let params = PureStateParams::triplet();
        assert!(EnsembleTerm::new(0.0, params).is_err());
        assert!(EnsembleTerm::new(-0.2, params).is_err());
        assert!(EnsembleTerm::new(1.2, params).is_err());
        let term = EnsembleTerm::new(0.4, params).unwrap();
        assert!(matches!(
            Ensemble::new(vec![term]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(Ensemble::new(vec![]), Err(Error::Domain(_))));
    }

    #[test]
    fn sz2_symmetry_holds_for_ensembles() {
        let ensemble = Ensemble::new(vec![
            EnsembleTerm::new(0.3, PureStateParams::new(Sector::S0, 0.7, 1.0).unwrap()).unwrap(),
            EnsembleTerm::new(0.7, PureStateParams::new(Sector::S1, 2.0, 4.0).unwrap()).unwrap(),
        ])
        .unwrap();
        let rho = ensemble_density(&ensemble);
        assert!(validate_sz2_symmetry(&rho, 1e-12));
        assert!(validate_sz2_symmetry(&DensityMatrix::maximally_mixed(), 0.0));
    }

    #[test]
    fn sz2_symmetry_rejects_cross_block_coherence() {
        let mut m = ComplexMatrix::from_diagonal(&[0.25, 0.25, 0.25, 0.25]).unwrap();
        m.set(0, 1, c(0.1, 0.0));
        m.set(1, 0, c(0.1, 0.0));
        let rho = DensityMatrix::from_matrix(m).unwrap();
        assert!(!validate_sz2_symmetry(&rho, tol::SZ2_SYMMETRY_TOL));
        assert!((sz2_symmetry_residual(&rho) - 0.1).abs() <= 1e-15);
    }

    #[test]
    fn density_matrix_validation_rejects_bad_input() {
        let not_unit_trace = ComplexMatrix::identity(4).unwrap();
        assert!(DensityMatrix::from_matrix(not_unit_trace).is_err());

        let mut non_hermitian = ComplexMatrix::from_diagonal(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        non_hermitian.set(0, 1, c(0.2, 0.0));
        assert!(DensityMatrix::from_matrix(non_hermitian).is_err());

        let indefinite = ComplexMatrix::from_diagonal(&[1.5, -0.5, 0.0, 0.0]).unwrap();
        assert!(matches!(
            DensityMatrix::from_matrix(indefinite),
            Err(Error::NotPsd { .. })
        ));
    }

    /// Flipping the second spin with exp(−iπS₂y) carries (ϑ, φ) S0 states
    /// onto (ϑ, φ+π) S1 states, up to a global phase.
    #[test]
    fn sector_swap_by_y_rotation() {
        let flip = rotation(Qubit::Two, Axis::Y, PI);
        for (theta, phi) in [(0.4, 0.0), (1.2, 2.5), (FRAC_PI_2, PI), (2.8, 5.9)] {
            let from = pure_state(&PureStateParams::new(Sector::S0, theta, phi).unwrap());
            let flipped = from.transformed(&flip).unwrap();
            let target =
                pure_state(&PureStateParams::new(Sector::S1, theta, phi + PI).unwrap());
            assert!(
                flipped.coincides_with(&target, tol::GLOBAL_PHASE_TOL),
                "theta {theta}, phi {phi}"
            );
        }
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        use super::sampling::{ensemble_for_sample, sample_seed};
        assert_ne!(sample_seed(42, 0), sample_seed(42, 1));
        assert_ne!(sample_seed(42, 0), sample_seed(43, 0));
        for index in 0..200 {
            let a = ensemble_for_sample(42, index, 6);
            let b = ensemble_for_sample(42, index, 6);
            assert_eq!(a, b);
            assert!(!a.terms().is_empty() && a.terms().len() <= 6);
            let total: f64 = a.terms().iter().map(|t| t.weight()).sum();
            assert!((total - 1.0).abs() <= 1e-12);
        }
    }
}
