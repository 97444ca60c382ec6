//! Command-line interface.
//!
//! Three subcommands:
//!
//! - `measure <FILE> [--json]` — compute every applicable measure for a
//!   state stored as JSON (see [`StateFile`] for the format);
//! - `sweep [--n N] [--out PATH]` — CSV sweep of the diagonal family's
//!   one-parameter slice `a1 = a2 = sqrt(3 eps / 2)`,
//!   `a3 = sqrt(3 (1 - eps))` for `eps` on a uniform grid over [0, 1];
//! - `check [--trials T] [--seed S] [--d D]` — verify internal
//!   mathematical properties on deterministic random states.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 invalid input
//! (arguments, file contents, or state invariants), 3 I/O failure.

use crate::gellmann;
use crate::linalg::{self, ComplexMatrix, CubicCoefficients};
use crate::measures::{self, MeasureError, MeasureReport, DOMAIN_TOL};
use crate::sampling::{self, SeededSampler};
use crate::states::{PureBipartiteState, Side, StateError};
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Exit code: everything succeeded.
pub const EXIT_OK: i32 = 0;
/// Exit code: a verified mathematical property failed.
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
/// Exit code: invalid arguments, file contents, or state invariants.
pub const EXIT_INVALID_INPUT: i32 = 2;
/// Exit code: an I/O operation failed.
pub const EXIT_IO_ERROR: i32 = 3;

/// Acceptable disagreement among concurrence routes on random states.
pub const ROUTE_AGREEMENT_BOUND: f64 = 1e-10;
/// Acceptable gap between the two local Bloch-vector lengths.
pub const BLOCH_SYMMETRY_BOUND: f64 = 1e-10;
/// Acceptable drift of any basis-independent measure under random local
/// unitaries.
pub const LU_INVARIANCE_BOUND: f64 = 1e-9;
/// Acceptable residual in the elementary-symmetric-polynomial identities
/// linking the reduced spectrum to trace, concurrence, and determinant.
pub const VIETA_BOUND: f64 = 1e-10;
/// Acceptable gap between characteristic-cubic roots and the eigensolver.
pub const CUBIC_EIGEN_BOUND: f64 = 1e-9;
/// Acceptable gap between the two independent minor-route implementations.
pub const ORACLE_BOUND: f64 = 1e-12;
/// Acceptable deviation of the squared Schmidt coefficients' sum from one.
pub const SCHMIDT_SUM_BOUND: f64 = 1e-10;
/// Acceptable excursion of any measure outside its mathematical range.
pub const RANGE_BOUND: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "qent",
    version,
    about = "Entanglement measures for pure bipartite quantum states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every applicable entanglement measure for a JSON state file.
    Measure {
        /// Path to the state file.
        file: PathBuf,
        /// Emit the report as JSON instead of aligned text.
        #[arg(long)]
        json: bool,
    },
    /// Print a CSV sweep of the diagonal family's epsilon slice.
    Sweep {
        /// Number of grid points; epsilon runs over [0, 1] inclusive.
        #[arg(long, default_value_t = 101)]
        n: usize,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify internal mathematical properties on random states.
    Check {
        /// Number of random trials per property.
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// PRNG seed; equal seeds reproduce identical runs.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Local dimension of the sampled states.
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
}

/// Parse the process arguments, dispatch, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Prints help/version to stdout (exit 0) or the usage error to
        // stderr (exit 2).
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Measure { file, json } => cmd_measure(&file, json),
        Command::Sweep { n, out } => cmd_sweep(n, out.as_deref()),
        Command::Check { trials, seed, d } => cmd_check(trials, seed, d),
    }
}

/// On-disk state format: local dimension plus a row-major d x d amplitude
/// matrix whose entries are `[re, im]` pairs. Unknown fields are rejected
/// so that typos fail loudly.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    /// Local dimension.
    pub d: usize,
    /// Amplitudes, `alpha[i][j] = [re, im]`.
    pub alpha: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    /// Validate the shape and build the state.
    pub fn into_state(self) -> Result<PureBipartiteState, StateError> {
        let rows = self.alpha.len();
        if rows != self.d || self.alpha.iter().any(|r| r.len() != self.d) {
            let cols = self
                .alpha
                .iter()
                .find(|r| r.len() != self.d)
                .map_or_else(|| self.alpha.first().map_or(0, Vec::len), Vec::len);
            return Err(StateError::DimensionMismatch {
                d: self.d,
                rows,
                cols,
            });
        }
        let alpha = ComplexMatrix::from_fn(self.d, self.d, |i, j| {
            Complex64::new(self.alpha[i][j][0], self.alpha[i][j][1])
        });
        PureBipartiteState::new(self.d, alpha)
    }
}

fn cmd_measure(path: &Path, json: bool) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return EXIT_IO_ERROR;
        }
    };
    let parsed: StateFile = match serde_json::from_str(&text) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("error: {} is not a valid state file: {e}", path.display());
            return EXIT_INVALID_INPUT;
        }
    };
    let state = match parsed.into_state() {
        Ok(state) => state,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INVALID_INPUT;
        }
    };
    let report = measures::full_report(&state);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report_json(&report))
                .expect("report values are plain numbers")
        );
    } else {
        print_report_text(&report);
    }
    EXIT_OK
}

/// The report as a JSON value with stable field names; absent measures
/// become `null`.
fn report_json(r: &MeasureReport) -> serde_json::Value {
    serde_json::json!({
        "d": r.d,
        "c_minors": r.c_minors,
        "c_schmidt": r.c_schmidt,
        "c_bloch": r.c_bloch,
        "c_2x2": r.c_2x2,
        "det_alpha_sq": r.det_alpha_sq,
        "entropy_bits": r.entropy_bits,
        "eof_closed_form": r.eof_closed_form,
        "p_e": r.p_e,
        "max_route_residual": r.max_route_residual,
    })
}

fn print_report_text(r: &MeasureReport) {
    let opt = |x: Option<f64>| x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.12}"));
    println!("local dimension          {}", r.d);
    println!("concurrence (minors)     {}", opt(r.c_minors));
    println!("concurrence (schmidt)    {:.12}", r.c_schmidt);
    println!("concurrence (bloch)      {}", opt(r.c_bloch));
    println!("concurrence (two-level)  {}", opt(r.c_2x2));
    println!("|det alpha|^2            {:.12}", r.det_alpha_sq);
    println!("entropy (bits)           {:.12}", r.entropy_bits);
    println!("eof (closed form, bits)  {}", opt(r.eof_closed_form));
    println!("p_e (diagonal family)    {}", opt(r.p_e));
    println!("max route residual       {:.3e}", r.max_route_residual);
}

/// One row of the sweep CSV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Slice parameter in [0, 1].
    pub epsilon: f64,
    /// Family measure at this epsilon.
    pub p_e: f64,
    /// Concurrence at this epsilon.
    pub c: f64,
}

/// Evaluate one point of the epsilon slice `a1 = a2 = sqrt(3 eps / 2)`,
/// `a3 = sqrt(3 (1 - eps))`.
pub fn family_row(epsilon: f64) -> Result<SweepRow, MeasureError> {
    if !(-DOMAIN_TOL..=1.0 + DOMAIN_TOL).contains(&epsilon) {
        return Err(MeasureError::OutOfRange {
            value: epsilon,
            min: 0.0,
            max: 1.0,
        });
    }
    let epsilon = epsilon.clamp(0.0, 1.0);
    let a_pair = (1.5 * epsilon).sqrt();
    let a_last = (3.0 * (1.0 - epsilon)).sqrt();
    Ok(SweepRow {
        epsilon,
        p_e: measures::p_e(a_pair, a_pair, a_last)?,
        c: measures::concurrence_family(a_pair, a_pair, a_last)?,
    })
}

/// Write the sweep CSV: header `epsilon,p_e,c`, then `n` rows at
/// `epsilon_i = i / (n - 1)`, every value in `{:.8e}` scientific notation,
/// lines terminated by `\n`. Output is byte-stable across runs.
pub fn write_sweep<W: Write>(n: usize, w: &mut W) -> std::io::Result<()> {
    assert!(n >= 2, "a sweep needs at least the two endpoint rows");
    writeln!(w, "epsilon,p_e,c")?;
    for i in 0..n {
        let epsilon = i as f64 / (n - 1) as f64;
        let row = family_row(epsilon).expect("grid epsilon lies in [0, 1]");
        writeln!(w, "{:.8e},{:.8e},{:.8e}", row.epsilon, row.p_e, row.c)?;
    }
    Ok(())
}

fn cmd_sweep(n: usize, out: Option<&Path>) -> i32 {
    if n < 2 {
        eprintln!("error: --n must be at least 2 so the grid spans [0, 1]");
        return EXIT_INVALID_INPUT;
    }
    let result = match out {
        Some(path) => match std::fs::File::create(path) {
            Ok(file) => {
                let mut w = std::io::BufWriter::new(file);
                write_sweep(n, &mut w).and_then(|()| w.flush())
            }
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return EXIT_IO_ERROR;
            }
        },
        None => {
            let stdout = std::io::stdout();
            write_sweep(n, &mut stdout.lock())
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write sweep: {e}");
            EXIT_IO_ERROR
        }
    }
}

fn cmd_check(trials: usize, seed: u64, d: usize) -> i32 {
    if trials == 0 {
        eprintln!("error: --trials must be at least 1");
        return EXIT_INVALID_INPUT;
    }
    if d < 2 {
        eprintln!("error: --d must be at least 2, got {d}");
        return EXIT_INVALID_INPUT;
    }
    run_check(trials, seed, d)
}

/// Run every applicable property check at local dimension `d`, printing
/// one line per property with its worst observed residual, and return the
/// process exit code (0 all passed, 1 otherwise). Callers must ensure
/// `trials >= 1` and `d >= 2`.
pub fn run_check(trials: usize, seed: u64, d: usize) -> i32 {
    println!("running {trials} trials per property (d = {d}, seed = {seed})");
    let mut sampler = SeededSampler::new(seed);
    let mut failed: Vec<&'static str> = Vec::new();

    // Every concurrence route defined at this dimension returns the same
    // number.
    {
        const NAME: &str = "route agreement";
        if d == 2 || d == 3 {
            let mut worst = 0.0f64;
            for _ in 0..trials {
                let s = draw_state(&mut sampler, d);
                worst = worst.max(measures::full_report(&s).max_route_residual);
            }
            record(NAME, worst, ROUTE_AGREEMENT_BOUND, &mut failed);
        } else {
            skip(NAME, "only the Schmidt route exists above d = 3");
        }
    }

    // The two reduced states have Bloch vectors of equal length.
    {
        const NAME: &str = "bloch length symmetry";
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let s = draw_state(&mut sampler, d);
            let expansion = gellmann::bloch_expansion(&s);
            worst = worst.max((expansion.u_norm() - expansion.v_norm()).abs());
        }
        record(NAME, worst, BLOCH_SYMMETRY_BOUND, &mut failed);
    }

    // Measures are unchanged by local unitaries on either side.
    {
        const NAME: &str = "local-unitary invariance";
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let s = draw_state(&mut sampler, d);
            let u_a = sampling::random_unitary(&mut sampler, d).expect("d >= 2 validated");
            let u_b = sampling::random_unitary(&mut sampler, d).expect("d >= 2 validated");
            let rotated = s
                .apply_local_unitary(&u_a, &u_b)
                .expect("sampled operators are unitary by construction");
            worst = worst.max(measures::invariance_residual(
                &measures::full_report(&s),
                &measures::full_report(&rotated),
            ));
        }
        record(NAME, worst, LU_INVARIANCE_BOUND, &mut failed);
    }

    // For d = 3 the elementary symmetric polynomials of the reduced
    // spectrum equal the trace (1), the squared concurrence over 3, and
    // the squared determinant modulus of the amplitude matrix.
    {
        const NAME: &str = "characteristic-polynomial identities";
        if d == 3 {
            let mut worst = 0.0f64;
            for _ in 0..trials {
                let s = draw_state(&mut sampler, 3);
                let spec = s.reduced_density(Side::A).spectrum();
                let e1: f64 = spec.iter().sum();
                let e2 = spec[0] * spec[1] + spec[0] * spec[2] + spec[1] * spec[2];
                let e3 = spec[0] * spec[1] * spec[2];
                let c = measures::concurrence_schmidt(&s.schmidt_spectrum(), 3)
                    .expect("three coefficients at d = 3");
                let det_sq = linalg::determinant(s.alpha())
                    .expect("square amplitude matrix")
                    .norm_sqr();
                let residual = (e1 - 1.0)
                    .abs()
                    .max((e2 - c * c / 3.0).abs())
                    .max((e3 - det_sq).abs());
                worst = worst.max(residual);
            }
            record(NAME, worst, VIETA_BOUND, &mut failed);
        } else {
            skip(NAME, "cubic identities are specific to d = 3");
        }
    }

    // Solving the characteristic cubic assembled from matrix invariants
    // reproduces the eigensolver's spectrum.
    {
        const NAME: &str = "cubic roots vs eigensolver";
        if d == 3 {
            let mut worst = 0.0f64;
            for _ in 0..trials {
                let s = draw_state(&mut sampler, 3);
                let rho = s.reduced_density(Side::A);
                let m = rho.matrix();
                let tr = m.trace().re;
                let tr_sq = m.mul(m).trace().re;
                let coefficients = CubicCoefficients {
                    c2: -tr,
                    c1: (tr * tr - tr_sq) / 2.0,
                    c0: -linalg::determinant(m).expect("square matrix").re,
                };
                let roots = linalg::solve_monic_cubic_real(coefficients)
                    .expect("Hermitian characteristic cubics have real roots");
                let mut eigenvalues =
                    linalg::hermitian_eigenvalues(m).expect("reduced density is Hermitian");
                eigenvalues.reverse(); // match the descending root order
                let residual = roots
                    .iter()
                    .zip(&eigenvalues)
                    .map(|(r, e)| (r - e).abs())
                    .fold(0.0f64, f64::max);
                worst = worst.max(residual);
            }
            record(NAME, worst, CUBIC_EIGEN_BOUND, &mut failed);
        } else {
            skip(NAME, "cubic identities are specific to d = 3");
        }
    }

    // The unrolled minor route matches an independent nested-loop
    // implementation.
    {
        const NAME: &str = "minor-route oracle equivalence";
        if d == 3 {
            let mut worst = 0.0f64;
            for _ in 0..trials {
                let s = draw_state(&mut sampler, 3);
                let fast = measures::concurrence_minors(&s).expect("d = 3");
                let slow = sampling::oracle_concurrence_minors(&s).expect("d = 3");
                worst = worst.max((fast - slow).abs());
            }
            record(NAME, worst, ORACLE_BOUND, &mut failed);
        } else {
            skip(NAME, "the minor route is specific to d = 3");
        }
    }

    // Squared Schmidt coefficients sum to one.
    {
        const NAME: &str = "schmidt normalization";
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let s = draw_state(&mut sampler, d);
            let sum: f64 = s.schmidt_spectrum().squared().iter().sum();
            worst = worst.max((sum - 1.0).abs());
        }
        record(NAME, worst, SCHMIDT_SUM_BOUND, &mut failed);
    }

    // Concurrences lie in [0, 1]; entropies in [0, log2 d].
    {
        const NAME: &str = "measure ranges";
        let max_entropy = (d as f64).log2();
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let s = draw_state(&mut sampler, d);
            let r = measures::full_report(&s);
            let mut violation = range_violation(r.c_schmidt, 0.0, 1.0)
                .max(range_violation(r.det_alpha_sq, 0.0, 1.0))
                .max(range_violation(r.entropy_bits, 0.0, max_entropy));
            for c in [r.c_minors, r.c_bloch, r.c_2x2].into_iter().flatten() {
                violation = violation.max(range_violation(c, 0.0, 1.0));
            }
            if let Some(e) = r.eof_closed_form {
                violation = violation.max(range_violation(e, 0.0, max_entropy));
            }
            worst = worst.max(violation);
        }
        record(NAME, worst, RANGE_BOUND, &mut failed);
    }

    if failed.is_empty() {
        println!("all properties passed");
        EXIT_OK
    } else {
        eprintln!(
            "check failed: {} (reproduce with --trials {trials} --seed {seed} --d {d})",
            failed.join(", ")
        );
        EXIT_PROPERTY_FAILURE
    }
}

fn draw_state(sampler: &mut SeededSampler, d: usize) -> PureBipartiteState {
    sampling::random_pure_state(sampler, d).expect("dimension validated by the caller")
}

fn record(name: &'static str, worst: f64, bound: f64, failed: &mut Vec<&'static str>) {
    let verdict = if worst <= bound { "PASS" } else { "FAIL" };
    println!("  {name:<38} worst {worst:>12.3e}  bound {bound:.0e}  {verdict}");
    if worst > bound {
        failed.push(name);
    }
}

fn skip(name: &'static str, reason: &str) {
    println!("  {name:<38} skipped ({reason})");
}

/// Distance by which `x` escapes the closed interval [lo, hi] (zero
/// inside it).
fn range_violation(x: f64, lo: f64, hi: f64) -> f64 {
    (lo - x).max(x - hi).max(0.0)
}
