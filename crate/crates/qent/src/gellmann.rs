//! Generalized SU(d) generators and the Bloch-style expansion of a joint
//! pure state.
//!
//! The generator basis consists of d(d-1)/2 symmetric pair matrices,
//! d(d-1)/2 antisymmetric pair matrices, and d-1 traceless diagonal
//! matrices, normalized so that `Tr(lam_a lam_b) = 2 delta_ab`. For d = 3
//! the set is the canonical eight (interleaved pair/diagonal order, with
//! `1/sqrt(3)` diagonal entries); every other dimension lists all symmetric
//! pairs in lexicographic (row, col) order, then all antisymmetric pairs,
//! then the diagonal generators by increasing rank. At d = 2 that block
//! order is exactly the Pauli triple (x, y, z).
//!
//! The local Bloch vector is normalized via the purity condition: writing
//! `rho = (1/d)(I + sqrt(d(d-1)/2) u . lam)`, a pure rho has |u| = 1, which
//! fixes the measurement prefactor `u_i = sqrt(d/(2(d-1))) Tr(rho lam_i)`.
//! At d = 3 this is the familiar sqrt(3)/2, at d = 2 the plain Pauli
//! expectation values.

use crate::linalg::ComplexMatrix;
use crate::states::{DensityMatrix, PureBipartiteState};
use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by generator construction and reconstruction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GellmannError {
    /// SU(d) generators need d >= 2.
    #[error("generator set needs local dimension >= 2, got {d}")]
    DimensionTooSmall { d: usize },
    /// An expansion's component counts do not match the requested dimension.
    #[error(
        "expansion does not match dimension {d}: expected {expected} vector \
         components, got {got}"
    )]
    DimensionMismatch { d: usize, expected: usize, got: usize },
}

/// The d^2 - 1 generators of SU(d), orthogonal under `Tr(lam_a lam_b) = 2
/// delta_ab`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    d: usize,
    lambdas: Vec<ComplexMatrix>,
}

impl GeneratorSet {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn get(&self, index: usize) -> &ComplexMatrix {
        &self.lambdas[index]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ComplexMatrix> {
        self.lambdas.iter()
    }
}

/// Bloch-style expansion data of a joint pure state: local vectors `u`
/// (first subsystem) and `v` (second), plus the correlation tensor `beta`
/// stored row-major with stride d^2 - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochExpansion {
    d: usize,
    u: Vec<f64>,
    v: Vec<f64>,
    beta: Vec<f64>,
}

impl BlochExpansion {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    /// Correlation component for generator pair (i, j).
    pub fn beta(&self, i: usize, j: usize) -> f64 {
        let n = self.u.len();
        assert!(i < n && j < n, "beta index out of bounds");
        self.beta[i * n + j]
    }

    pub fn u_norm(&self) -> f64 {
        self.u.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn v_norm(&self) -> f64 {
        self.v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Build the SU(d) generator set.
pub fn su_generators(d: usize) -> Result<GeneratorSet, GellmannError> {
    if d < 2 {
        return Err(GellmannError::DimensionTooSmall { d });
    }
    let lambdas = if d == 3 {
        canonical_qutrit_generators()
    } else {
        block_order_generators(d)
    };
    Ok(GeneratorSet { d, lambdas })
}

/// Measurement prefactor `sqrt(d / (2(d-1)))` making |u| = 1 on pure states.
fn bloch_prefactor(d: usize) -> f64 {
    (d as f64 / (2.0 * (d as f64 - 1.0))).sqrt()
}

/// Local Bloch vector of a density matrix:
/// `u_i = sqrt(d/(2(d-1))) Tr(rho lam_i)`.
pub fn local_bloch_vector(rho: &DensityMatrix) -> Result<Vec<f64>, GellmannError> {
    let d = rho.d();
    let gens = su_generators(d)?;
    let prefactor = bloch_prefactor(d);
    Ok(gens
        .iter()
        .map(|lam| prefactor * rho.matrix().mul(lam).trace().re)
        .collect())
}

/// Expand a joint pure state over the generator basis.
///
/// `u` comes from the side-A reduced density; `v` and `beta` are computed
/// directly on the joint state via the contractions
/// `Tr(rho_joint (I x lam_j)) = tr(alpha lam_j^T alpha^dagger)` and
/// `Tr(rho_joint (lam_i x lam_j)) = tr(lam_i alpha lam_j^T alpha^dagger)`,
/// so the expansion reproduces the joint projector exactly under
/// [`reconstruct_density`]. `beta` carries the prefactor `d/(d-1)`
/// (3/2 at d = 3).
pub fn bloch_expansion(s: &PureBipartiteState) -> BlochExpansion {
    let d = s.d();
    let gens = su_generators(d).expect("state dimension is >= 2 by construction");
    let n = gens.len();
    let prefactor = bloch_prefactor(d);
    let beta_prefactor = d as f64 / (d as f64 - 1.0);

    let rho_a = s.reduced_density(crate::states::Side::A);
    let u: Vec<f64> = gens
        .iter()
        .map(|lam| prefactor * rho_a.matrix().mul(lam).trace().re)
        .collect();

    let alpha = s.alpha();
    let alpha_adj = alpha.adjoint();
    // Cache alpha lam_j^T alpha^dagger for each generator.
    let dressed: Vec<ComplexMatrix> = gens
        .iter()
        .map(|lam| alpha.mul(&lam.transpose()).mul(&alpha_adj))
        .collect();

    let v: Vec<f64> = dressed.iter().map(|m| prefactor * m.trace().re).collect();

    let mut beta = vec![0.0; n * n];
    for (i, lam) in gens.iter().enumerate() {
        for (j, m) in dressed.iter().enumerate() {
            beta[i * n + j] = beta_prefactor * lam.mul(m).trace().re;
        }
    }

    BlochExpansion { d, u, v, beta }
}

/// Rebuild the joint density matrix from its expansion:
/// `(1/d^2) (I x I + C sum_i u_i lam_i x I + C sum_j v_j I x lam_j
///  + G sum_ij beta_ij lam_i x lam_j)` with `C = sqrt(d(d-1)/2)` and
/// `G = d(d-1)/4` (sqrt(3) and 3/2 at d = 3).
pub fn reconstruct_density(e: &BlochExpansion, d: usize) -> Result<ComplexMatrix, GellmannError> {
    let gens = su_generators(d)?;
    let n = gens.len();
    if e.d != d || e.u.len() != n || e.v.len() != n || e.beta.len() != n * n {
        return Err(GellmannError::DimensionMismatch {
            d,
            expected: n,
            got: e.u.len(),
        });
    }
    let dd = d as f64;
    let expansion_coeff = (dd * (dd - 1.0) / 2.0).sqrt();
    let correlation_coeff = dd * (dd - 1.0) / 4.0;
    let identity = ComplexMatrix::identity(d);

    let mut out = identity.kron(&identity);
    for (i, lam) in gens.iter().enumerate() {
        out.add_scaled(
            &lam.kron(&identity),
            Complex64::new(expansion_coeff * e.u[i], 0.0),
        );
        out.add_scaled(
            &identity.kron(lam),
            Complex64::new(expansion_coeff * e.v[i], 0.0),
        );
    }
    for (i, lam_i) in gens.iter().enumerate() {
        for (j, lam_j) in gens.iter().enumerate() {
            out.add_scaled(
                &lam_i.kron(lam_j),
                Complex64::new(correlation_coeff * e.beta[i * n + j], 0.0),
            );
        }
    }
    Ok(out.scaled(Complex64::new(1.0 / (dd * dd), 0.0)))
}

/// Symmetric pair generator `E_jk + E_kj`.
fn symmetric_pair(d: usize, j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d, d);
    m[(j, k)] = Complex64::new(1.0, 0.0);
    m[(k, j)] = Complex64::new(1.0, 0.0);
    m
}

/// Antisymmetric pair generator `-i E_jk + i E_kj`.
fn antisymmetric_pair(d: usize, j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d, d);
    m[(j, k)] = Complex64::new(0.0, -1.0);
    m[(k, j)] = Complex64::new(0.0, 1.0);
    m
}

/// Diagonal generator of rank l (1-based): `factor * (E_00 + ... +
/// E_{l-1,l-1} - l E_ll)` where `factor` normalizes `Tr(lam^2)` to 2.
fn diagonal_generator(d: usize, l: usize, factor: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d, d);
    for i in 0..l {
        m[(i, i)] = Complex64::new(factor, 0.0);
    }
    m[(l, l)] = Complex64::new(-(l as f64) * factor, 0.0);
    m
}

/// The canonical eight 3 x 3 generators in their conventional interleaved
/// order. Hardcoded (rather than reordered from the generic builder) so
/// that the `1/sqrt(3)` diagonal entries are bit-exact: `sqrt(2/6)` and
/// `1/sqrt(3)` differ by one ulp in f64.
fn canonical_qutrit_generators() -> Vec<ComplexMatrix> {
    let s = 1.0 / 3.0f64.sqrt();
    vec![
        symmetric_pair(3, 0, 1),
        antisymmetric_pair(3, 0, 1),
        diagonal_generator(3, 1, 1.0),
        symmetric_pair(3, 0, 2),
        antisymmetric_pair(3, 0, 2),
        symmetric_pair(3, 1, 2),
        antisymmetric_pair(3, 1, 2),
        diagonal_generator(3, 2, s),
    ]
}

fn block_order_generators(d: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in (j + 1)..d {
            out.push(symmetric_pair(d, j, k));
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            out.push(antisymmetric_pair(d, j, k));
        }
    }
    for l in 1..d {
        let factor = (2.0 / (l as f64 * (l as f64 + 1.0))).sqrt();
        out.push(diagonal_generator(d, l, factor));
    }
    out
}
