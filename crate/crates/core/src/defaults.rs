//! Default tolerances, grids and sample counts shared by the analysis
//! operations and the CLI.

/// Default tolerance for classifying companion eigenvalues as real.
/// Relative-plus-absolute form: `|Im z| ≤ tol·(1 + |z|)`. Clustered roots
/// acquire `O(√ε)` imaginary perturbations, hence the generous default.
pub const ROOT_TOL: f64 = 1e-8;

/// Roots closer than `SIMPLE_TOL·(1 + |λ|)` are treated as multiple.
pub const SIMPLE_TOL: f64 = 1e-7;

/// Residues with `|c_j|` at or below this threshold are degenerate
/// (symptom of a near-common root).
pub const RESIDUE_TOL: f64 = 1e-10;

/// Relative coefficient cutoff in the Euclidean remainder sequence used by
/// the coprimality test.
pub const COPRIME_TOL: f64 = 1e-10;

/// Default α grid for pencil scans. Deliberately probes far outside
/// `[0, 1]`; the leading-difference eigenvalue check covers the `α → ∞`
/// direction exactly.
pub const ALPHA_GRID: [f64; 12] = [
    -10.0, -3.0, -1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 3.0, 10.0,
];

/// Number of unit-circle directions tested for the two-parameter pencil
/// condition.
pub const CIRCLE_DIRECTIONS: usize = 16;

/// Default sample count for Monte Carlo hyperbolicity checks.
pub const MC_SAMPLES: usize = 200;

/// Positive-definiteness margin for symmetrizer certificates, relative to
/// `‖P‖_F = 1`.
pub const PD_MARGIN: f64 = 1e-7;

/// Equality-constraint residual tolerance for symmetrizer certificates,
/// relative to `‖P‖_F = 1`.
pub const EQ_TOL: f64 = 1e-8;

/// Random multi-starts for the min-eigenvalue maximization engine.
pub const SDP_STARTS: usize = 8;

/// Iteration cap per multi-start of the min-eigenvalue maximization.
pub const SDP_ITERS: usize = 500;

/// Default unit-vector samples for spectral zone estimation.
pub const ZONE_SAMPLES: usize = 500;

/// Default refinement sweeps per zone endpoint.
pub const ZONE_REFINE: usize = 50;

/// Default seed for randomized checks.
pub const SEED: u64 = 0;
