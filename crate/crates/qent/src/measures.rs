//! Entanglement measures for pure bipartite states.
//!
//! Concurrence is available through several mathematically equivalent
//! routes, each implemented independently so they can cross-check each
//! other:
//!
//! - **minor route** (d = 3): `sqrt(3 * sum |m|^2)` over the nine 2 x 2
//!   minors of the amplitude matrix;
//! - **Schmidt route** (any d): `sqrt((2d/(d-1)) * sum_{i<j} k_i^2 k_j^2)`
//!   over the Schmidt coefficients;
//! - **Bloch route** (d = 2, 3): `sqrt(1 - |u|^2)` from the reduced state's
//!   Bloch-vector length;
//! - **two-level route** (d = 2): `2 |a00 a11 - a01 a10|`.
//!
//! Entropy is measured in bits (base-2 logarithms); closed-form
//! entanglement of formation exists for two-level states and for rank-2
//! three-level states. `full_report` bundles every measure applicable to a
//! given state together with the worst disagreement among the computed
//! concurrence routes.

use crate::gellmann;
use crate::states::{DensityMatrix, PureBipartiteState, SchmidtSpectrum, Side};
use thiserror::Error;

/// Slack accepted on closed-interval domain checks before rejecting an
/// argument (rounding headroom for values computed upstream).
pub const DOMAIN_TOL: f64 = 1e-12;
/// Family-constraint tolerance for `p_e` / `concurrence_family`.
pub const FAMILY_CONSTRAINT_TOL: f64 = 1e-9;
/// A third Schmidt coefficient below this threshold marks a three-level
/// state as effectively rank-2, enabling the closed-form entanglement of
/// formation.
pub const RANK2_KAPPA_TOL: f64 = 1e-9;
/// Off-diagonal amplitudes (and diagonal imaginary parts) below this mark a
/// three-level state as a member of the diagonal real-coefficient family.
pub const FAMILY_DETECTION_TOL: f64 = 1e-12;

/// Errors produced by the measure routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    /// The route is not defined at this local dimension.
    #[error("measure undefined for local dimension {got}: requires {requirement}")]
    WrongDimension { got: usize, requirement: &'static str },
    /// A Schmidt spectrum's length does not match the stated dimension.
    #[error("spectrum has {got} coefficients, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// An argument fell outside its closed domain (beyond [`DOMAIN_TOL`]).
    #[error("argument {value} outside the domain [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },
    /// Family coefficients must satisfy a1^2 + a2^2 + a3^2 = 3.
    #[error("family coefficients violate a1^2 + a2^2 + a3^2 = 3 (sum = {sum})")]
    ConstraintViolation { sum: f64 },
}

/// Every measure applicable to one state, plus the worst pairwise
/// disagreement among the concurrence routes that were computed.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    /// Local dimension.
    pub d: usize,
    /// Minor-route concurrence (d = 3 only).
    pub c_minors: Option<f64>,
    /// Schmidt-route concurrence (always present).
    pub c_schmidt: f64,
    /// Bloch-route concurrence (d = 2 and d = 3).
    pub c_bloch: Option<f64>,
    /// Two-level closed form (d = 2 only).
    pub c_2x2: Option<f64>,
    /// Squared modulus of the amplitude-matrix determinant.
    pub det_alpha_sq: f64,
    /// Von Neumann entropy of either reduced state, in bits.
    pub entropy_bits: f64,
    /// Closed-form entanglement of formation where one exists (two-level
    /// states; rank-2 three-level states).
    pub eof_closed_form: Option<f64>,
    /// Family measure, populated only for members of the diagonal
    /// real-coefficient family.
    pub p_e: Option<f64>,
    /// Max pairwise |difference| among the concurrence routes present.
    pub max_route_residual: f64,
}

/// Minor-route concurrence for two three-level systems: three times the sum
/// of squared moduli of all nine 2 x 2 minors of the amplitude matrix,
/// under a square root.
pub fn concurrence_minors(s: &PureBipartiteState) -> Result<f64, MeasureError> {
    if s.d() != 3 {
        return Err(MeasureError::WrongDimension {
            got: s.d(),
            requirement: "d = 3",
        });
    }
    let a = s.alpha();
    let minors = [
        a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)],
        a[(0, 2)] * a[(1, 0)] - a[(0, 0)] * a[(1, 2)],
        a[(0, 1)] * a[(1, 2)] - a[(0, 2)] * a[(1, 1)],
        a[(0, 1)] * a[(2, 0)] - a[(0, 0)] * a[(2, 1)],
        a[(0, 0)] * a[(2, 2)] - a[(0, 2)] * a[(2, 0)],
        a[(1, 0)] * a[(2, 1)] - a[(1, 1)] * a[(2, 0)],
        a[(1, 2)] * a[(2, 0)] - a[(1, 0)] * a[(2, 2)],
        a[(0, 2)] * a[(2, 1)] - a[(0, 1)] * a[(2, 2)],
        a[(1, 1)] * a[(2, 2)] - a[(1, 2)] * a[(2, 1)],
    ];
    let sum: f64 = minors.iter().map(|m| m.norm_sqr()).sum();
    Ok((3.0 * sum).sqrt().clamp(0.0, 1.0))
}

/// Schmidt-route concurrence for any local dimension:
/// `sqrt((2d/(d-1)) * sum_{i<j} kappa_i^2 kappa_j^2)`.
pub fn concurrence_schmidt(kappa: &SchmidtSpectrum, d: usize) -> Result<f64, MeasureError> {
    if d < 2 {
        return Err(MeasureError::WrongDimension {
            got: d,
            requirement: "d >= 2",
        });
    }
    if kappa.len() != d {
        return Err(MeasureError::LengthMismatch {
            expected: d,
            got: kappa.len(),
        });
    }
    let squares = kappa.squared();
    let mut pair_sum = 0.0;
    for i in 0..d {
        for j in (i + 1)..d {
            pair_sum += squares[i] * squares[j];
        }
    }
    let dd = d as f64;
    Ok((2.0 * dd / (dd - 1.0) * pair_sum).sqrt().clamp(0.0, 1.0))
}

/// Bloch-route concurrence, `sqrt(1 - |u|^2)` with `u` the reduced state's
/// Bloch vector. Defined here for d = 2 and d = 3.
pub fn concurrence_bloch(s: &PureBipartiteState) -> Result<f64, MeasureError> {
    let d = s.d();
    if d != 2 && d != 3 {
        return Err(MeasureError::WrongDimension {
            got: d,
            requirement: "d = 2 or d = 3",
        });
    }
    let u = gellmann::local_bloch_vector(&s.reduced_density(Side::A))
        .expect("state dimension is >= 2 by construction");
    let norm_sqr: f64 = u.iter().map(|x| x * x).sum();
    Ok((1.0 - norm_sqr).max(0.0).sqrt().clamp(0.0, 1.0))
}

/// Two-level closed form, `2 |a00 a11 - a01 a10|`.
pub fn concurrence_2x2(s: &PureBipartiteState) -> Result<f64, MeasureError> {
    if s.d() != 2 {
        return Err(MeasureError::WrongDimension {
            got: s.d(),
            requirement: "d = 2",
        });
    }
    let a = s.alpha();
    let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
    Ok((2.0 * det.norm()).clamp(0.0, 1.0))
}

/// Von Neumann entropy of a density matrix, in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.spectrum()
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum()
}

/// Binary entropy `h(x) = -x log2 x - (1-x) log2 (1-x)` with
/// `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64, MeasureError> {
    if !(-DOMAIN_TOL..=1.0 + DOMAIN_TOL).contains(&x) {
        return Err(MeasureError::OutOfRange {
            value: x,
            min: 0.0,
            max: 1.0,
        });
    }
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// Closed-form entanglement of formation for a two-level pure state with
/// concurrence `c`: `h((1 + sqrt(1 - c^2)) / 2)` bits.
pub fn eof_2x2(c: f64) -> Result<f64, MeasureError> {
    if !(-DOMAIN_TOL..=1.0 + DOMAIN_TOL).contains(&c) {
        return Err(MeasureError::OutOfRange {
            value: c,
            min: 0.0,
            max: 1.0,
        });
    }
    let c = c.clamp(0.0, 1.0);
    let root = (1.0 - c * c).max(0.0).sqrt();
    binary_entropy((1.0 + root) / 2.0)
}

/// Closed-form entanglement of formation for a rank-2 three-level pure
/// state with concurrence `c`: `h((1 + sqrt(1 - 4 c^2 / 3)) / 2)` bits.
/// The concurrence of such states cannot exceed sqrt(3)/2.
pub fn eof_qutrit_rank2(c: f64) -> Result<f64, MeasureError> {
    let max = 3.0f64.sqrt() / 2.0;
    if !(-DOMAIN_TOL..=max + DOMAIN_TOL).contains(&c) {
        return Err(MeasureError::OutOfRange {
            value: c,
            min: 0.0,
            max,
        });
    }
    let c = c.clamp(0.0, max);
    let root = (1.0 - 4.0 * c * c / 3.0).max(0.0).sqrt();
    binary_entropy((1.0 + root) / 2.0)
}

/// Family measure for diagonal real coefficients (a1, a2, a3) with
/// `a1^2 + a2^2 + a3^2 = 3`: `(|a1 a2| + |a1 a3| + |a2 a3|) / 3`.
pub fn p_e(a1: f64, a2: f64, a3: f64) -> Result<f64, MeasureError> {
    check_family_constraint(a1, a2, a3)?;
    Ok(((a1 * a2).abs() + (a1 * a3).abs() + (a2 * a3).abs()) / 3.0)
}

/// Concurrence of a diagonal-family member:
/// `sqrt((a1^2 a2^2 + a1^2 a3^2 + a2^2 a3^2) / 3)`.
pub fn concurrence_family(a1: f64, a2: f64, a3: f64) -> Result<f64, MeasureError> {
    check_family_constraint(a1, a2, a3)?;
    let (s1, s2, s3) = (a1 * a1, a2 * a2, a3 * a3);
    Ok(((s1 * s2 + s1 * s3 + s2 * s3) / 3.0).sqrt().clamp(0.0, 1.0))
}

fn check_family_constraint(a1: f64, a2: f64, a3: f64) -> Result<(), MeasureError> {
    let sum = a1 * a1 + a2 * a2 + a3 * a3;
    // A NaN sum (from NaN coefficients) must fail the constraint check.
    if sum.is_nan() || (sum - 3.0).abs() > FAMILY_CONSTRAINT_TOL {
        return Err(MeasureError::ConstraintViolation { sum });
    }
    Ok(())
}

/// Compute every measure applicable to the state.
///
/// The Schmidt route is always present; the minor and Bloch routes appear
/// at their dimensions; the closed-form entanglement of formation appears
/// for d = 2 and for effectively rank-2 d = 3 states; `p_e` appears only
/// when the amplitude matrix is recognized as a diagonal-family member.
pub fn full_report(s: &PureBipartiteState) -> MeasureReport {
    let d = s.d();
    let kappa = s.schmidt_spectrum();
    let c_schmidt = concurrence_schmidt(&kappa, d)
        .expect("spectrum length matches the state dimension");
    let c_minors = (d == 3).then(|| {
        concurrence_minors(s).expect("dimension checked")
    });
    let c_bloch = (d == 2 || d == 3).then(|| {
        concurrence_bloch(s).expect("dimension checked")
    });
    let c_2x2 = (d == 2).then(|| {
        concurrence_2x2(s).expect("dimension checked")
    });

    let det = crate::linalg::determinant(s.alpha()).expect("amplitude matrix is square");
    let det_alpha_sq = det.norm_sqr();

    let entropy_bits = von_neumann_entropy(&s.reduced_density(Side::A));

    let eof_closed_form = match d {
        2 => {
            let c = c_2x2.expect("present at d = 2");
            Some(eof_2x2(c).expect("route concurrence is clamped to [0, 1]"))
        }
        3 if kappa.coefficients()[2] < RANK2_KAPPA_TOL => {
            let c = c_minors.expect("present at d = 3");
            Some(
                eof_qutrit_rank2(c)
                    .expect("rank-2 concurrence cannot exceed sqrt(3)/2 beyond tolerance"),
            )
        }
        _ => None,
    };

    let p_e = family_coefficients(s)
        .and_then(|[a1, a2, a3]| self::p_e(a1, a2, a3).ok());

    let routes: Vec<f64> = [c_minors, Some(c_schmidt), c_bloch, c_2x2]
        .into_iter()
        .flatten()
        .collect();
    let mut max_route_residual = 0.0f64;
    for i in 0..routes.len() {
        for j in (i + 1)..routes.len() {
            max_route_residual = max_route_residual.max((routes[i] - routes[j]).abs());
        }
    }

    MeasureReport {
        d,
        c_minors,
        c_schmidt,
        c_bloch,
        c_2x2,
        det_alpha_sq,
        entropy_bits,
        eof_closed_form,
        p_e,
        max_route_residual,
    }
}

/// Largest absolute difference between the basis-independent fields of two
/// reports: the concurrence routes, the determinant modulus, the entropy,
/// and the closed-form entanglement of formation. Fields whose presence
/// legitimately depends on the computational basis (`p_e`) or that are
/// numerical diagnostics rather than measures (`max_route_residual`) are
/// excluded. A presence mismatch in any compared optional field yields
/// infinity, since those fields are determined by dimension and spectrum
/// alone and must not appear or vanish under local unitaries.
pub fn invariance_residual(a: &MeasureReport, b: &MeasureReport) -> f64 {
    fn opt_gap(x: Option<f64>, y: Option<f64>) -> f64 {
        match (x, y) {
            (Some(x), Some(y)) => (x - y).abs(),
            (None, None) => 0.0,
            _ => f64::INFINITY,
        }
    }
    let mut r = (a.c_schmidt - b.c_schmidt).abs();
    r = r.max(opt_gap(a.c_minors, b.c_minors));
    r = r.max(opt_gap(a.c_bloch, b.c_bloch));
    r = r.max(opt_gap(a.c_2x2, b.c_2x2));
    r = r.max((a.det_alpha_sq - b.det_alpha_sq).abs());
    r = r.max((a.entropy_bits - b.entropy_bits).abs());
    r.max(opt_gap(a.eof_closed_form, b.eof_closed_form))
}

/// Recognize a diagonal-family member and recover its coefficients
/// `a_i = sqrt(3) * alpha_ii` (off-diagonals and diagonal imaginary parts
/// must vanish within [`FAMILY_DETECTION_TOL`]).
fn family_coefficients(s: &PureBipartiteState) -> Option<[f64; 3]> {
    if s.d() != 3 {
        return None;
    }
    let a = s.alpha();
    for i in 0..3 {
        for j in 0..3 {
            if i != j && a[(i, j)].norm() > FAMILY_DETECTION_TOL {
                return None;
            }
        }
        if a[(i, i)].im.abs() > FAMILY_DETECTION_TOL {
            return None;
        }
    }
    let root3 = 3.0f64.sqrt();
    Some([
        root3 * a[(0, 0)].re,
        root3 * a[(1, 1)].re,
        root3 * a[(2, 2)].re,
    ])
}
