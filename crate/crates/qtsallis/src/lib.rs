//! Tsallis entropies and generalized mutual information for two-qubit states.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: dense complex matrices, validated density operators, a cyclic
//!   Jacobi eigensolver for Hermitian matrices, tensor products and partial
//!   traces over a qubit pair.
//! * [`entropy`]: the Tsallis entropy `S_q = (1 - sum_i l_i^q) / (q - 1)` of a
//!   spectrum, its von Neumann limit at `q = 1`, and the `q = 0` support-count
//!   limit.
//! * [`family`]: the one-parameter pair state `sqrt(p)|01> + sqrt(1-p)|10>`
//!   mixed with its dephased version through a coherence parameter `gamma`,
//!   together with the closed-form spectrum of the joint state.
//! * [`measures`]: the generalized mutual informations
//!   `I_q = S_q(A) + S_q(B) - S_q(AB)` and
//!   `I'_q = I_q + (1 - q) S_q(A) S_q(B)`, a subadditivity check at `q = 1`,
//!   and a one-dimensional peak search over `q`.
//! * [`sweep`]: deterministic CSV tables of the measures over `q`, including
//!   the four canned figure tables.
//! * [`verify`]: self-checks (trace preservation, closed-form versus numeric
//!   spectra, Monte Carlo subadditivity) used by the `verify` subcommand.

pub mod entropy;
pub mod family;
pub mod linalg;
pub mod measures;
pub mod sweep;
pub mod verify;

pub use entropy::{support_count, tsallis_entropy, von_neumann_entropy, EntropicIndex};
pub use family::{
    build_joint_state, build_pure_state, closed_form_joint_spectrum, reduced_states,
    PureStateVector, QubitPairParams,
};
pub use linalg::{
    hermitian_eigenvalues, partial_trace, random_density_operator, tensor_product,
    DensityOperator, Spectrum, SquareMatrix, Subsystem,
};
pub use measures::{
    araki_lieb_holds, closed_form_iq, closed_form_iq_prime, family_mutual_information,
    find_iq_peak, mutual_information, ArakiLiebReport, Measure, MutualInfoRecord,
};
pub use sweep::{
    figure_table, run_sweep, write_figure_csv, write_sweep_csv, FigureTable, MeasureSelection,
    SweepRecord, SweepSpec, SWEEP_CSV_HEADER,
};

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |a[i][j] - conj(a[j][i])| = {deviation:.3e}")]
    NotHermitian { deviation: f64 },
    #[error("trace deviates from one by {deviation:.3e}")]
    TraceNotUnit { deviation: f64 },
    #[error("negative eigenvalue {eigenvalue:.3e} below the positivity tolerance")]
    NotPositive { eigenvalue: f64 },
    #[error("matrix contains a non-finite entry")]
    NonFiniteEntry,
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rank {rank} out of range for dimension {dim} (need 1 <= rank <= dim)")]
    RankOutOfRange { rank: usize, dim: usize },
    #[error("Jacobi sweep did not converge within {sweeps} sweeps")]
    EigensolverStalled { sweeps: usize },
    #[error("spectrum sums to {sum} instead of one")]
    InvalidSpectrum { sum: f64 },
    #[error("entropic index must be finite and nonnegative, got {q}")]
    InvalidEntropicIndex { q: f64 },
    #[error("{name} must lie in [0, 1], got {value}")]
    OutsideUnitInterval { name: &'static str, value: f64 },
    #[error("invalid q interval [{lo}, {hi}] (need 0 <= lo < hi, both finite)")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("sweep needs at least 2 steps, got {steps}")]
    TooFewSteps { steps: usize },
    #[error("unknown figure id {id} (expected 1..=4)")]
    UnknownFigure { id: u8 },
}

pub type Result<T> = std::result::Result<T, Error>;
