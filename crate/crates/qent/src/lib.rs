//! Entanglement measures for pure bipartite qudit states.
//!
//! A pure state of two d-level systems is held as its d x d amplitude matrix
//! (row index = first subsystem, column index = second). On top of that the
//! crate provides:
//!
//! - [`linalg`]: dense complex matrices sized for small d, with closed-form
//!   Hermitian eigenvalues at d = 2, 3, a cyclic Jacobi fallback above, a
//!   determinant, and a trigonometric real-cubic solver;
//! - [`states`]: state construction/validation, reduced densities, Schmidt
//!   spectra, the diagonal real-coefficient family, and local unitaries;
//! - [`gellmann`]: generalized SU(d) generators and the Bloch-style expansion
//!   of a joint pure state (with exact reconstruction);
//! - [`measures`]: concurrence via independent routes (coefficient minors,
//!   Schmidt coefficients, Bloch-vector length, the two-level special case),
//!   von Neumann entropy, closed-form entanglement of formation where it
//!   exists, and the family measure `p_e`;
//! - [`sampling`]: a deterministic seeded sampler (Haar states/unitaries) and
//!   a brute-force concurrence oracle for property tests;
//! - [`cli`]: the `qent` binary (`measure`, `sweep`, `check`).
//!
//! All numerics are plain `f64` + `num_complex::Complex64`; no external
//! solver is involved, so results are reproducible across platforms.

pub mod cli;
pub mod gellmann;
pub mod linalg;
pub mod measures;
pub mod sampling;
pub mod states;

pub use gellmann::{BlochExpansion, GeneratorSet};
pub use linalg::{ComplexMatrix, CubicCoefficients};
pub use measures::MeasureReport;
pub use sampling::SeededSampler;
pub use states::{DensityMatrix, PureBipartiteState, SchmidtSpectrum, Side};
