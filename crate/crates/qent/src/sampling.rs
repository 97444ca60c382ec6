//! Deterministic sampling of random states, unitaries, and spectra.
//!
//! Everything is driven by [`SeededSampler`], a small xoshiro256++
//! generator seeded through SplitMix64 expansion. The same seed always
//! yields the same stream on every platform, which keeps randomized test
//! suites reproducible; the generator is self-contained so results do not
//! drift with external crate versions.
//!
//! Unitaries are drawn from the Haar (circular unitary ensemble)
//! distribution by orthonormalizing a complex Gaussian matrix; pure states
//! are normalized complex Gaussian vectors, equivalent to applying a Haar
//! unitary to a fixed state.

use crate::linalg::ComplexMatrix;
use crate::measures::MeasureError;
use crate::states::{PureBipartiteState, SchmidtSpectrum, StateError};
use num_complex::Complex64;

/// Deterministic random source: xoshiro256++ with SplitMix64 seeding and a
/// cached Box–Muller Gaussian.
#[derive(Debug, Clone)]
pub struct SeededSampler {
    state: [u64; 4],
    spare_gaussian: Option<f64>,
}

impl SeededSampler {
    /// Create a sampler from a 64-bit seed. Distinct seeds give
    /// independent-looking streams; equal seeds give identical streams.
    pub fn new(seed: u64) -> Self {
        // SplitMix64 expansion of the seed into the four state words, as
        // recommended for initializing xoshiro generators.
        let mut sm = seed;
        let mut next = || {
            sm = sm.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = sm;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        };
        let mut state = [next(), next(), next(), next()];
        if state == [0, 0, 0, 0] {
            // The all-zero state is a fixed point of the generator;
            // SplitMix64 cannot produce it from any seed, but guard anyway.
            state = [1, 2, 3, 4];
        }
        SeededSampler {
            state,
            spare_gaussian: None,
        }
    }

    /// Next raw 64-bit output (xoshiro256++ step).
    pub fn next_u64(&mut self) -> u64 {
        let [s0, s1, s2, s3] = self.state;
        let result = s0.wrapping_add(s3).rotate_left(23).wrapping_add(s0);
        let t = s1 << 17;
        let mut s = [s0, s1, s2, s3];
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        self.state = s;
        result
    }

    /// Uniform double in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal deviate via Box–Muller; the paired deviate is cached
    /// for the next call.
    pub fn next_gaussian(&mut self) -> f64 {
        if let Some(g) = self.spare_gaussian.take() {
            return g;
        }
        // u1 in (0, 1] so that ln(u1) is finite.
        let u1 = ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.spare_gaussian = Some(r * theta.sin());
        r * theta.cos()
    }

    /// Complex number with independent standard-normal real and imaginary
    /// parts.
    pub fn next_complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.next_gaussian(), self.next_gaussian())
    }
}

/// Draw a Haar-distributed pure bipartite state with local dimension `d`:
/// a normalized d x d matrix of independent complex Gaussians.
pub fn random_pure_state(sampler: &mut SeededSampler, d: usize) -> Result<PureBipartiteState, StateError> {
    if d < 2 {
        return Err(StateError::DimensionTooSmall { d });
    }
    let g = ComplexMatrix::from_fn(d, d, |_, _| sampler.next_complex_gaussian());
    // State construction validates rather than rescales arbitrary norms, so
    // normalize here; a Gaussian draw is zero with probability zero.
    let norm = g.frobenius_norm();
    let alpha = g.scaled(Complex64::new(1.0 / norm, 0.0));
    PureBipartiteState::new(d, alpha)
}

/// Draw a Haar-distributed d x d unitary: fill a matrix with complex
/// Gaussians and orthonormalize its columns (Gram–Schmidt with one
/// reorthogonalization pass for numerical stability).
///
/// Gram–Schmidt leaves each pivot's projection onto itself positive real,
/// so the triangular factor has a positive diagonal by construction and the
/// usual phase correction that makes QR-based sampling Haar is the
/// identity here.
pub fn random_unitary(sampler: &mut SeededSampler, d: usize) -> Result<ComplexMatrix, StateError> {
    if d < 2 {
        return Err(StateError::DimensionTooSmall { d });
    }
    let g = ComplexMatrix::from_fn(d, d, |_, _| sampler.next_complex_gaussian());
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|j| (0..d).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..d {
        let (finished, rest) = cols.split_at_mut(j);
        let col = &mut rest[0];
        // Two orthogonalization passes against the earlier columns.
        for _ in 0..2 {
            for done in finished.iter() {
                let proj: Complex64 = done.iter().zip(col.iter()).map(|(a, b)| a.conj() * b).sum();
                for (target, source) in col.iter_mut().zip(done.iter()) {
                    *target -= proj * source;
                }
            }
        }
        let norm: f64 = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in col.iter_mut() {
            *z /= norm;
        }
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| cols[j][i]))
}

/// Draw a product (unentangled) state: the outer product of two
/// independent Haar-random local vectors.
pub fn random_product_state(
    sampler: &mut SeededSampler,
    d: usize,
) -> Result<PureBipartiteState, StateError> {
    if d < 2 {
        return Err(StateError::DimensionTooSmall { d });
    }
    let normalize = |v: &mut Vec<Complex64>| {
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v.iter_mut() {
            *z /= norm;
        }
    };
    let mut a: Vec<Complex64> = (0..d).map(|_| sampler.next_complex_gaussian()).collect();
    let mut b: Vec<Complex64> = (0..d).map(|_| sampler.next_complex_gaussian()).collect();
    normalize(&mut a);
    normalize(&mut b);
    let alpha = ComplexMatrix::from_fn(d, d, |i, j| a[i] * b[j]);
    PureBipartiteState::new(d, alpha)
}

/// Draw a random Schmidt spectrum of length `d`: squared coefficients
/// uniform on the probability simplex (normalized exponentials).
pub fn random_schmidt_spectrum(
    sampler: &mut SeededSampler,
    d: usize,
) -> Result<SchmidtSpectrum, StateError> {
    if d < 2 {
        return Err(StateError::DimensionTooSmall { d });
    }
    let mut squares: Vec<f64> = (0..d)
        .map(|_| {
            // Exponential deviate; ln argument is in (0, 1].
            let u = ((sampler.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
            -u.ln()
        })
        .collect();
    let total: f64 = squares.iter().sum();
    for s in squares.iter_mut() {
        *s /= total;
    }
    SchmidtSpectrum::from_squared(squares)
}

/// Independent re-derivation of the minor-route concurrence used as a test
/// oracle: iterate over all index pairs (i < k, j < l) rather than the nine
/// unrolled terms, so a transcription error in either implementation shows
/// up as a disagreement.
pub fn oracle_concurrence_minors(s: &PureBipartiteState) -> Result<f64, MeasureError> {
    if s.d() != 3 {
        return Err(MeasureError::WrongDimension {
            got: s.d(),
            requirement: "d = 3",
        });
    }
    let a = s.alpha();
    let d = s.d();
    let mut sum = 0.0;
    for i in 0..d {
        for k in (i + 1)..d {
            for j in 0..d {
                for l in (j + 1)..d {
                    let minor = a[(i, j)] * a[(k, l)] - a[(i, l)] * a[(k, j)];
                    sum += minor.norm_sqr();
                }
            }
        }
    }
    Ok((3.0 * sum).sqrt().clamp(0.0, 1.0))
}
