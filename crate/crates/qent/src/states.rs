//! Pure bipartite states, reduced densities, and Schmidt data.
//!
//! A pure state of two d-level systems is stored as its d x d amplitude
//! matrix `alpha`: row index = first subsystem, column index = second, so
//! the state vector is `sum_ij alpha[i][j] |i>|j>`. Construction validates
//! shape and normalization and then renormalizes exactly, so every
//! downstream routine can rely on a unit-norm state.

use crate::linalg::{self, ComplexMatrix, LinalgError};
use num_complex::Complex64;
use thiserror::Error;

/// Accepted deviation of the input amplitude norm from 1 before the state is
/// rejected (inputs inside the window are renormalized exactly).
pub const NORM_TOL: f64 = 1e-6;
/// Accepted deviation from exact unitarity for local operations.
pub const UNITARITY_TOL: f64 = 1e-9;
/// Validation tolerance for density-matrix invariants (Hermiticity, unit
/// trace, eigenvalue positivity) and Schmidt-spectrum normalization.
pub const DENSITY_TOL: f64 = 1e-9;

/// Which subsystem a reduced density matrix refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Errors produced while building or transforming states.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    /// Every amplitude is zero; no state can be normalized out of that.
    #[error("state amplitudes are all zero")]
    ZeroState,
    /// The amplitude matrix shape does not match the declared dimension.
    #[error("amplitude matrix is {rows}x{cols}, expected {d}x{d}")]
    DimensionMismatch { d: usize, rows: usize, cols: usize },
    /// Local dimensions below 2 carry no entanglement structure.
    #[error("local dimension must be at least 2, got {d}")]
    DimensionTooSmall { d: usize },
    /// The amplitude norm is too far from 1 to be treated as rounding noise.
    #[error(
        "state violates the normalization invariant: amplitude norm {norm} \
         deviates from 1 by more than {NORM_TOL:e}"
    )]
    NotNormalized { norm: f64 },
    /// Family coefficients must satisfy a1^2 + a2^2 + a3^2 = 3.
    #[error("family coefficients violate a1^2 + a2^2 + a3^2 = 3 (sum = {sum})")]
    ConstraintViolation { sum: f64 },
    /// The mixing parameter lives on [0, 1].
    #[error("mixing parameter must lie in [0, 1], got {value}")]
    OutOfRange { value: f64 },
    /// A local operation was not unitary within [`UNITARITY_TOL`].
    #[error(
        "operator for side {side:?} is not unitary: max |U^dagger U - I| = {deviation:.3e}"
    )]
    NotUnitary { side: Side, deviation: f64 },
    /// A density matrix failed Hermiticity validation.
    #[error("density matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    /// A density matrix failed the unit-trace validation.
    #[error("density matrix trace {trace} deviates from 1 beyond {DENSITY_TOL:e}")]
    TraceNotOne { trace: f64 },
    /// A density matrix had an eigenvalue below the accepted negative slack.
    #[error("density matrix has negative eigenvalue {value:.3e}")]
    NegativeEigenvalue { value: f64 },
    /// A Schmidt coefficient was negative.
    #[error("Schmidt coefficient {value:.3e} is negative")]
    NegativeSchmidtCoefficient { value: f64 },
    /// Schmidt coefficients must satisfy sum kappa_i^2 = 1.
    #[error("Schmidt coefficients violate sum kappa^2 = 1 (sum = {sum_sqr})")]
    SpectrumNotNormalized { sum_sqr: f64 },
}

/// Normalized pure state of two d-level systems.
#[derive(Debug, Clone, PartialEq)]
pub struct PureBipartiteState {
    d: usize,
    alpha: ComplexMatrix,
}

impl PureBipartiteState {
    /// Validate and build a state from its amplitude matrix.
    ///
    /// The matrix must be d x d with d >= 2, not identically zero, and have
    /// norm within [`NORM_TOL`] of 1; it is then renormalized exactly.
    pub fn new(d: usize, alpha: ComplexMatrix) -> Result<Self, StateError> {
        if d < 2 {
            return Err(StateError::DimensionTooSmall { d });
        }
        if alpha.rows() != d || alpha.cols() != d {
            return Err(StateError::DimensionMismatch {
                d,
                rows: alpha.rows(),
                cols: alpha.cols(),
            });
        }
        let norm = alpha.frobenius_norm();
        if norm == 0.0 {
            return Err(StateError::ZeroState);
        }
        // A NaN norm (from NaN amplitudes) must be rejected, not renormalized.
        if norm.is_nan() || (norm - 1.0).abs() > NORM_TOL {
            return Err(StateError::NotNormalized { norm });
        }
        let alpha = alpha.scaled(Complex64::new(1.0 / norm, 0.0));
        Ok(Self { d, alpha })
    }

    /// Local dimension d.
    pub fn d(&self) -> usize {
        self.d
    }

    /// The (renormalized) amplitude matrix.
    pub fn alpha(&self) -> &ComplexMatrix {
        &self.alpha
    }

    /// Reduced density matrix of one subsystem: `alpha alpha^dagger` for
    /// side A, `alpha^dagger alpha` for side B. Both are positive
    /// semidefinite with unit trace and share one spectrum.
    pub fn reduced_density(&self, side: Side) -> DensityMatrix {
        let rho = match side {
            Side::A => self.alpha.mul(&self.alpha.adjoint()),
            Side::B => self.alpha.adjoint().mul(&self.alpha),
        };
        DensityMatrix::from_reduced(self.d, rho)
    }

    /// Schmidt coefficients of the state, descending: the square roots of
    /// the reduced-density eigenvalues.
    pub fn schmidt_spectrum(&self) -> SchmidtSpectrum {
        let squares = self.reduced_density(Side::A).spectrum();
        let mut kappa: Vec<f64> = squares.into_iter().map(f64::sqrt).collect();
        kappa.reverse();
        SchmidtSpectrum { kappa }
    }

    /// Density matrix of the joint pure state, a d^2 x d^2 projector with
    /// row-major composite indices (i, j) -> i * d + j.
    pub fn joint_density(&self) -> ComplexMatrix {
        let d = self.d;
        ComplexMatrix::from_fn(d * d, d * d, |r, c| {
            let (i, j) = (r / d, r % d);
            let (k, l) = (c / d, c % d);
            self.alpha[(i, j)] * self.alpha[(k, l)].conj()
        })
    }

    /// Apply local unitaries: `alpha' = U_A alpha U_B^T`. Both operators
    /// must be d x d and unitary within [`UNITARITY_TOL`].
    pub fn apply_local_unitary(
        &self,
        u_a: &ComplexMatrix,
        u_b: &ComplexMatrix,
    ) -> Result<Self, StateError> {
        for (side, u) in [(Side::A, u_a), (Side::B, u_b)] {
            if u.rows() != self.d || u.cols() != self.d {
                return Err(StateError::DimensionMismatch {
                    d: self.d,
                    rows: u.rows(),
                    cols: u.cols(),
                });
            }
            let deviation = u.unitarity_deviation();
            if deviation > UNITARITY_TOL {
                return Err(StateError::NotUnitary { side, deviation });
            }
        }
        let alpha = u_a.mul(&self.alpha).mul(&u_b.transpose());
        Self::new(self.d, alpha)
    }
}

/// Validated density matrix (Hermitian, unit trace, positive semidefinite
/// within [`DENSITY_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    d: usize,
    rho: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate an arbitrary matrix as a density matrix.
    pub fn new(rho: ComplexMatrix) -> Result<Self, StateError> {
        if !rho.is_square() {
            return Err(StateError::DimensionMismatch {
                d: rho.rows(),
                rows: rho.rows(),
                cols: rho.cols(),
            });
        }
        let deviation = rho.hermitian_deviation();
        if deviation > DENSITY_TOL {
            return Err(StateError::NotHermitian { deviation });
        }
        let trace = rho.trace().re;
        if (trace - 1.0).abs() > DENSITY_TOL {
            return Err(StateError::TraceNotOne { trace });
        }
        let eigenvalues = linalg::hermitian_eigenvalues(&rho)
            .map_err(|e| match e {
                LinalgError::NotHermitian { deviation } => StateError::NotHermitian { deviation },
                _ => unreachable!("square Hermitian-checked matrix"),
            })?;
        if let Some(&lowest) = eigenvalues.first() {
            if lowest < -DENSITY_TOL {
                return Err(StateError::NegativeEigenvalue { value: lowest });
            }
        }
        Ok(Self { d: rho.rows(), rho })
    }

    /// Wrap a reduced density produced internally. The construction
    /// `alpha alpha^dagger` (or the mirrored product) is Hermitian and
    /// positive semidefinite by algebra, so only debug builds re-validate.
    fn from_reduced(d: usize, rho: ComplexMatrix) -> Self {
        debug_assert!(rho.hermitian_deviation() <= DENSITY_TOL);
        debug_assert!((rho.trace().re - 1.0).abs() <= DENSITY_TOL);
        Self { d, rho }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    /// Eigenvalues ascending, clamped to [0, 1]: rounding can push an exact
    /// zero slightly negative (or an exact one slightly above), and the
    /// clamp keeps square roots and logarithms well defined.
    pub fn spectrum(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.rho)
            .expect("density matrix is square and Hermitian by construction")
            .into_iter()
            .map(|x| x.clamp(0.0, 1.0))
            .collect()
    }
}

/// Schmidt coefficients of a pure bipartite state, descending, with
/// `sum kappa_i^2 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    kappa: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Validate a list of Schmidt coefficients (sorted internally).
    pub fn new(mut kappa: Vec<f64>) -> Result<Self, StateError> {
        for &k in &kappa {
            // Also rejects NaN coefficients.
            if k.is_nan() || k < 0.0 {
                return Err(StateError::NegativeSchmidtCoefficient { value: k });
            }
        }
        let sum_sqr: f64 = kappa.iter().map(|k| k * k).sum();
        if (sum_sqr - 1.0).abs() > DENSITY_TOL {
            return Err(StateError::SpectrumNotNormalized { sum_sqr });
        }
        kappa.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { kappa })
    }

    /// Build from squared coefficients (reduced-density eigenvalues).
    pub fn from_squared(squares: Vec<f64>) -> Result<Self, StateError> {
        for &s in &squares {
            // Also rejects NaN eigenvalues.
            if s.is_nan() || s < 0.0 {
                return Err(StateError::NegativeSchmidtCoefficient { value: s });
            }
        }
        Self::new(squares.into_iter().map(f64::sqrt).collect())
    }

    /// Coefficients, descending.
    pub fn coefficients(&self) -> &[f64] {
        &self.kappa
    }

    /// Squared coefficients, descending.
    pub fn squared(&self) -> Vec<f64> {
        self.kappa.iter().map(|k| k * k).collect()
    }

    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }
}

/// Member of the diagonal real-coefficient family: `alpha =
/// diag(a1, a2, a3) / sqrt(3)` with `a1^2 + a2^2 + a3^2 = 3`.
pub fn fu_family_state(a1: f64, a2: f64, a3: f64) -> Result<PureBipartiteState, StateError> {
    let sum = a1 * a1 + a2 * a2 + a3 * a3;
    // A NaN sum (from NaN coefficients) must fail the constraint check.
    if sum.is_nan() || (sum - 3.0).abs() > DENSITY_TOL {
        return Err(StateError::ConstraintViolation { sum });
    }
    let scale = 1.0 / 3.0f64.sqrt();
    let mut alpha = ComplexMatrix::zeros(3, 3);
    for (i, a) in [a1, a2, a3].into_iter().enumerate() {
        alpha[(i, i)] = Complex64::new(a * scale, 0.0);
    }
    PureBipartiteState::new(3, alpha)
}

/// One-parameter slice of the diagonal family: `a1 = a2 = sqrt(3 eps / 2)`,
/// `a3 = sqrt(3 (1 - eps))` for a mixing parameter `eps` in [0, 1].
pub fn epsilon_state(epsilon: f64) -> Result<PureBipartiteState, StateError> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(StateError::OutOfRange { value: epsilon });
    }
    let a12 = (1.5 * epsilon).sqrt();
    let a3 = (3.0 * (1.0 - epsilon)).sqrt();
    fu_family_state(a12, a12, a3)
}
