//! Dense complex linear algebra sized for small local dimensions.
//!
//! Matrices are row-major `Vec<Complex64>` with explicit shape. Hermitian
//! eigenvalues are closed-form at d = 1, 2, 3 (the 3 x 3 case goes through
//! the characteristic cubic and [`solve_monic_cubic_real`]) and use a cyclic
//! Jacobi iteration for d >= 4. Everything is hand-rolled on purpose: no
//! external solver, bit-reproducible results.

use num_complex::Complex64;
use std::ops::{Index, IndexMut};
use thiserror::Error;

/// Accepted deviation from exact Hermiticity, `max_ij |m_ij - conj(m_ji)|`.
pub const HERMITICITY_TOL: f64 = 1e-9;
/// Accepted negative slack on the cubic discriminant before the roots are
/// declared genuinely complex.
pub const CUBIC_DISCRIMINANT_TOL: f64 = 1e-9;

/// Errors produced by the linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    /// The operation needs a square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    /// The matrix deviates from its own adjoint by more than [`HERMITICITY_TOL`].
    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    /// The cubic has a conjugate pair of complex roots: its discriminant is
    /// negative beyond [`CUBIC_DISCRIMINANT_TOL`].
    #[error("cubic has complex roots (discriminant {discriminant:.3e})")]
    ComplexRoots { discriminant: f64 },
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of size n.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from nested rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "rows must all have the same length"
        );
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build entrywise from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product. Panics if the inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions must agree for a product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise scaling by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `self += factor * other`. Panics if the shapes disagree.
    pub fn add_scaled(&mut self, other: &Self, factor: Complex64) {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shapes must agree for a sum"
        );
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += factor * b;
        }
    }

    /// Sum of the diagonal. Panics if not square.
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace needs a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Kronecker (tensor) product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = aij * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Frobenius norm, `sqrt(sum |m_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise difference `max |a_ij - b_ij|`. Panics if the
    /// shapes disagree.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shapes must agree for a comparison"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max_ij |m_ij - conj(m_ji)|`: zero for an exactly Hermitian matrix.
    /// Panics if not square.
    pub fn hermitian_deviation(&self) -> f64 {
        assert!(self.is_square(), "Hermiticity needs a square matrix");
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `max |U^dagger U - I|` entrywise: zero for an exactly unitary matrix.
    /// Panics if not square.
    pub fn unitarity_deviation(&self) -> f64 {
        assert!(self.is_square(), "unitarity needs a square matrix");
        self.adjoint()
            .mul(self)
            .max_abs_diff(&Self::identity(self.rows))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

/// Monic cubic `x^3 + c2 x^2 + c1 x + c0` with real coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoefficients {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

/// All three real roots of a monic cubic, in descending order.
///
/// Uses the trigonometric method on the depressed cubic `t^3 + p t + q`:
/// with three real roots the discriminant `-4 p^3 - 27 q^2` is non-negative,
/// the substitution `t = m cos(theta)` with `m = 2 sqrt(-p/3)` collapses the
/// cubic to `cos(3 theta) = 3q / (p m)`, and the roots are
/// `m cos(theta - 2 pi k / 3) - c2/3`. The arccosine argument is clamped to
/// [-1, 1] so double roots at the edge of the discriminant cannot produce
/// NaN. Returns [`LinalgError::ComplexRoots`] when the discriminant is
/// negative beyond [`CUBIC_DISCRIMINANT_TOL`].
pub fn solve_monic_cubic_real(c: CubicCoefficients) -> Result<[f64; 3], LinalgError> {
    let CubicCoefficients { c2, c1, c0 } = c;
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    let discriminant = -4.0 * p * p * p - 27.0 * q * q;
    if discriminant < -CUBIC_DISCRIMINANT_TOL {
        return Err(LinalgError::ComplexRoots { discriminant });
    }

    let ts = if p >= -f64::MIN_POSITIVE {
        // p ~ 0 inside the real-root regime forces q ~ 0: a (near-)triple
        // root at t = cbrt(-q).
        let t = (-q).cbrt();
        [t, t, t]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let theta = (3.0 * q / (p * m)).clamp(-1.0, 1.0).acos() / 3.0;
        let third = 2.0 * std::f64::consts::PI / 3.0;
        [
            m * theta.cos(),
            m * (theta - third).cos(),
            m * (theta - 2.0 * third).cos(),
        ]
    };

    let mut roots = [ts[0] - shift, ts[1] - shift, ts[2] - shift];
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

/// Real eigenvalues of a Hermitian matrix, ascending.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`]; it is symmetrized
/// (`(M + M^dagger)/2`) before solving so results are well defined inside
/// the tolerance window. d = 1, 2 are explicit; d >= 3 runs a cyclic Jacobi
/// iteration, which keeps full accuracy on degenerate spectra where
/// characteristic-polynomial root finding loses roughly half the digits.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITICITY_TOL {
        return Err(LinalgError::NotHermitian { deviation });
    }
    let h = symmetrize(m);
    let mut w = match h.rows {
        0 => Vec::new(),
        1 => vec![h[(0, 0)].re],
        2 => eigenvalues_2(&h),
        _ => jacobi_eigenvalues(h),
    };
    w.sort_by(f64::total_cmp);
    Ok(w)
}

/// Determinant via cofactor expansion (d <= 3) or LU with partial pivoting.
pub fn determinant(m: &ComplexMatrix) -> Result<Complex64, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let det = match n {
        0 => Complex64::new(1.0, 0.0),
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        3 => {
            m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
        }
        _ => lu_determinant(m),
    };
    Ok(det)
}

fn symmetrize(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows, m.cols, |i, j| {
        (m[(i, j)] + m[(j, i)].conj()) * 0.5
    })
}

fn eigenvalues_2(h: &ComplexMatrix) -> Vec<f64> {
    let a = h[(0, 0)].re;
    let c = h[(1, 1)].re;
    let mean = 0.5 * (a + c);
    let half_gap = 0.5 * (a - c);
    let radius = (half_gap * half_gap + h[(0, 1)].norm_sqr()).sqrt();
    vec![mean - radius, mean + radius]
}

/// Cyclic Jacobi for Hermitian matrices: each off-diagonal entry is zeroed by
/// a unitary 2 x 2 rotation (a phase alignment followed by a real Jacobi
/// rotation); sweeps repeat until the off-diagonal mass is negligible.
fn jacobi_eigenvalues(mut a: ComplexMatrix) -> Vec<f64> {
    const MAX_SWEEPS: usize = 40;
    let n = a.rows;
    let scale = (0..n)
        .map(|i| a[(i, i)].re.abs())
        .fold(1.0f64, f64::max);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    off = off.max(a[(p, q)].norm());
                }
            }
        }
        if off <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b <= 1e-300 {
                    continue;
                }
                let phase = apq / b;
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * b);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // U is the identity outside the (p, q) block; the block is
                // diag(1, conj(phase)) * [[c, s], [-s, c]].
                let mut u = ComplexMatrix::identity(n);
                u[(p, p)] = Complex64::new(c, 0.0);
                u[(p, q)] = Complex64::new(s, 0.0);
                u[(q, p)] = phase.conj() * (-s);
                u[(q, q)] = phase.conj() * c;
                a = u.adjoint().mul(&a).mul(&u);
            }
        }
    }
    (0..n).map(|i| a[(i, i)].re).collect()
}

fn lu_determinant(m: &ComplexMatrix) -> Complex64 {
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
            .expect("non-empty pivot range");
        if a[(pivot_row, k)].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(pivot_row, j)];
                a[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        let pivot = a[(k, k)];
        det *= pivot;
        for i in (k + 1)..n {
            let factor = a[(i, k)] / pivot;
            for j in k..n {
                let akj = a[(k, j)];
                a[(i, j)] -= factor * akj;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real_matrix(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| c(x, 0.0)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_eigenvalues_are_ones() {
        let w = hermitian_eigenvalues(&ComplexMatrix::identity(3)).unwrap();
        for x in w {
            assert_abs_diff_eq!(x, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn diagonal_eigenvalues_come_back_sorted() {
        let m = real_matrix(&[&[0.5, 0.0], &[0.0, 0.25]]);
        let w = hermitian_eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(w[0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(w[1], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn rank_one_projector_eigenvalues() {
        // [[1/2, 1/2], [1/2, 1/2]] projects onto (1,1)/sqrt(2): spectrum {0, 1}.
        let m = real_matrix(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let w = hermitian_eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(w[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn complex_2x2_eigenvalues() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let m = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(1.0, 0.0)],
        ]);
        let w = hermitian_eigenvalues(&m).unwrap();
        assert_abs_diff_eq!(w[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let m = real_matrix(&[&[0.0, 1.0], &[0.0, 0.0]]);
        match hermitian_eigenvalues(&m) {
            Err(LinalgError::NotHermitian { deviation }) => {
                assert_abs_diff_eq!(deviation, 1.0, epsilon = 1e-15)
            }
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn non_square_is_rejected() {
        let m = ComplexMatrix::zeros(2, 3);
        assert_eq!(
            hermitian_eigenvalues(&m),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
        assert_eq!(
            determinant(&m),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&ComplexMatrix::identity(3)).unwrap(),
            c(1.0, 0.0)
        );

        // diag(s, s, s) with s = 1/sqrt(3): determinant s^3 = 1/(3 sqrt(3)),
        // squared modulus exactly 1/27.
        let s = 1.0 / 3.0f64.sqrt();
        let m = real_matrix(&[&[s, 0.0, 0.0], &[0.0, s, 0.0], &[0.0, 0.0, s]]);
        let det = determinant(&m).unwrap();
        assert_abs_diff_eq!(det.re, 0.19245008972987523, epsilon = 1e-15);
        assert_abs_diff_eq!(det.norm_sqr(), 1.0 / 27.0, epsilon = 1e-15);

        let zero_row = real_matrix(&[&[1.0, 2.0], &[0.0, 0.0]]);
        assert_eq!(determinant(&zero_row).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn lu_determinant_matches_cofactor_on_4x4_block() {
        // Block-diagonal 4x4 built from two 2x2 blocks with known
        // determinants (-2 and i).
        let m = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(3.0, 0.0), c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ]);
        let det = determinant(&m).unwrap();
        assert_abs_diff_eq!(det.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(det.im, -2.0, epsilon = 1e-12);
    }

    #[test]
    fn cubic_triple_root() {
        // (x - 1/3)^3: coefficients (-1, 1/3, -1/27).
        let roots = solve_monic_cubic_real(CubicCoefficients {
            c2: -1.0,
            c1: 1.0 / 3.0,
            c0: -1.0 / 27.0,
        })
        .unwrap();
        for r in roots {
            assert_abs_diff_eq!(r, 1.0 / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn cubic_simple_roots() {
        // x^2 (x - 1): coefficients (-1, 0, 0) -> roots 1, 0, 0 descending.
        let roots =
            solve_monic_cubic_real(CubicCoefficients { c2: -1.0, c1: 0.0, c0: 0.0 }).unwrap();
        assert_abs_diff_eq!(roots[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(roots[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(roots[2], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn cubic_double_root() {
        // x (x - 1/2)^2: coefficients (-1, 1/4, 0) -> roots 1/2, 1/2, 0.
        let roots =
            solve_monic_cubic_real(CubicCoefficients { c2: -1.0, c1: 0.25, c0: 0.0 }).unwrap();
        assert_abs_diff_eq!(roots[0], 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(roots[1], 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(roots[2], 0.0, epsilon = 1e-9);
    }

    #[test]
    fn cubic_rejects_complex_roots() {
        // x^3 + x has roots 0, +/- i.
        let err = solve_monic_cubic_real(CubicCoefficients { c2: 0.0, c1: 1.0, c0: 0.0 })
            .unwrap_err();
        match err {
            LinalgError::ComplexRoots { discriminant } => assert!(discriminant < -1e-9),
            other => panic!("expected ComplexRoots, got {other:?}"),
        }
    }

    #[test]
    fn cubic_roots_satisfy_residual_bound() {
        // Each case is built from a known real spectrum so three real roots
        // exist: {0.6, 0.3, 0.1}, {0.66.., 0.23.., 0.09..}, {1.2, 0.5, 0.3}.
        let cases = [
            CubicCoefficients { c2: -1.0, c1: 0.27, c0: -0.018 },
            CubicCoefficients { c2: -1.0, c1: 0.25, c0: -0.015 },
            CubicCoefficients { c2: -2.0, c1: 1.11, c0: -0.18 },
        ];
        for case in cases {
            let roots = solve_monic_cubic_real(case).unwrap();
            for r in roots {
                let residual = r * r * r + case.c2 * r * r + case.c1 * r + case.c0;
                assert!(
                    residual.abs() < 1e-10,
                    "residual {residual:.3e} too large for root {r} of {case:?}"
                );
            }
        }
    }

    #[test]
    fn jacobi_recovers_known_4x4_spectrum() {
        // diag(1, 2, 3, 4) conjugated by an exact unitary built from two
        // commuting 2x2 rotations.
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let u = ComplexMatrix::from_rows(vec![
            vec![c(r, 0.0), c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(-r, 0.0), c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, r), c(r, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, -r), c(r, 0.0)],
        ]);
        assert!(u.unitarity_deviation() < 1e-15);
        let mut d = ComplexMatrix::zeros(4, 4);
        for (i, x) in [1.0, 2.0, 3.0, 4.0].into_iter().enumerate() {
            d[(i, i)] = c(x, 0.0);
        }
        let m = u.mul(&d).mul(&u.adjoint());
        let w = hermitian_eigenvalues(&m).unwrap();
        for (got, want) in w.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn kron_and_trace_basics() {
        let a = real_matrix(&[&[1.0, 0.0], &[0.0, 2.0]]);
        let b = real_matrix(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(0, 1)], c(1.0, 0.0));
        assert_eq!(k[(2, 3)], c(2.0, 0.0));
        assert_eq!(k.trace(), c(0.0, 0.0));
        assert_abs_diff_eq!(a.trace().re, 3.0, epsilon = 1e-15);
    }
}
