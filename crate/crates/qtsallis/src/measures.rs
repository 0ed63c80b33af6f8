//! Generalized mutual informations of a bipartite state.
//!
//! For Tsallis index q and a two-qubit state rho_AB with marginals rho_A and
//! rho_B:
//!
//! ```text
//! I_q  = S_q(A) + S_q(B) - S_q(AB)
//! I'_q = I_q + (1 - q) S_q(A) S_q(B)
//! ```
//!
//! Both coincide with the von Neumann mutual information at q = 1. `I'_q` is
//! built so that pseudo-additivity makes it vanish identically on product
//! states; `I_q` alone does not (its subtraction misses the crossed term).
//!
//! Two computation paths exist and are kept in agreement by tests and by the
//! `verify` module: the numeric path (partial traces plus the eigensolver)
//! works for any two-qubit state, while the closed-form path evaluates the
//! family's known spectra and is exact enough to serve as an oracle.

use crate::entropy::{tsallis_entropy, EntropicIndex};
use crate::family::{build_joint_state, closed_form_joint_spectrum, QubitPairParams};
use crate::linalg::{partial_trace, DensityOperator, Spectrum, Subsystem};
use crate::{Error, Result};

/// Coarse scan step of the peak search.
const PEAK_GRID_STEP: f64 = 1e-2;
/// Absolute q-resolution of the refined peak location.
const PEAK_Q_RESOLUTION: f64 = 1e-4;
/// Slack tolerance for the q=1 subadditivity inequalities.
const ARAKI_LIEB_SLACK: f64 = -1e-9;

/// Which mutual information a search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Iq,
    IqPrime,
}

/// All q-dependent quantities of one evaluation point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MutualInfoRecord {
    pub q: f64,
    pub s_qa: f64,
    pub s_qb: f64,
    pub s_qab: f64,
    pub i_q: f64,
    pub i_q_prime: f64,
}

impl MutualInfoRecord {
    fn from_entropies(q: f64, s_qa: f64, s_qb: f64, s_qab: f64) -> Self {
        let i_q = s_qa + s_qb - s_qab;
        Self {
            q,
            s_qa,
            s_qb,
            s_qab,
            i_q,
            i_q_prime: i_q + (1.0 - q) * s_qa * s_qb,
        }
    }

    pub fn value(&self, measure: Measure) -> f64 {
        match measure {
            Measure::Iq => self.i_q,
            Measure::IqPrime => self.i_q_prime,
        }
    }
}

/// Record built from already-computed spectra of the marginals and the joint
/// state. Shared by the numeric path, the closed-form path and the sweeps.
pub(crate) fn record_from_spectra(
    s_a: &Spectrum,
    s_b: &Spectrum,
    s_ab: &Spectrum,
    q: EntropicIndex,
) -> Result<MutualInfoRecord> {
    let s_qa = tsallis_entropy(s_a, q)?;
    let s_qb = tsallis_entropy(s_b, q)?;
    let s_qab = tsallis_entropy(s_ab, q)?;
    Ok(MutualInfoRecord::from_entropies(q.value(), s_qa, s_qb, s_qab))
}

/// Numeric path: partial traces, eigenspectra, Tsallis entropies.
pub fn mutual_information(rho_ab: &DensityOperator, q: EntropicIndex) -> Result<MutualInfoRecord> {
    let rho_a = partial_trace(rho_ab, Subsystem::A)?;
    let rho_b = partial_trace(rho_ab, Subsystem::B)?;
    record_from_spectra(rho_a.spectrum(), rho_b.spectrum(), rho_ab.spectrum(), q)
}

fn closed_form_record(params: &QubitPairParams, q: EntropicIndex) -> Result<MutualInfoRecord> {
    let p = params.p();
    // both marginals have spectrum {p, 1-p}; sorting makes them identical
    let marginal = Spectrum::new(vec![p, 1.0 - p]);
    let joint = closed_form_joint_spectrum(params);
    record_from_spectra(&marginal, &marginal, &joint, q)
}

/// `I_q` of the family from the closed-form spectra (no eigensolver).
pub fn closed_form_iq(params: &QubitPairParams, q: EntropicIndex) -> Result<f64> {
    Ok(closed_form_record(params, q)?.i_q)
}

/// `I'_q` of the family from the closed-form spectra (no eigensolver).
pub fn closed_form_iq_prime(params: &QubitPairParams, q: EntropicIndex) -> Result<f64> {
    Ok(closed_form_record(params, q)?.i_q_prime)
}

/// Result of the q=1 subadditivity check `|S_A - S_B| <= S_AB <= S_A + S_B`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArakiLiebReport {
    pub holds: bool,
    /// `S_AB - |S_A - S_B|`; nonnegative when the lower bound holds.
    pub lower_margin: f64,
    /// `S_A + S_B - S_AB`; nonnegative when the upper bound holds.
    pub upper_margin: f64,
}

/// Checks the von Neumann (q = 1) entropy inequalities on a two-qubit state.
/// Margins within [`ARAKI_LIEB_SLACK`] of zero still count as holding.
pub fn araki_lieb_holds(rho_ab: &DensityOperator) -> Result<ArakiLiebReport> {
    let q = EntropicIndex::new(1.0).expect("1 is a valid index");
    let r = mutual_information(rho_ab, q)?;
    let lower_margin = r.s_qab - (r.s_qa - r.s_qb).abs();
    let upper_margin = r.s_qa + r.s_qb - r.s_qab;
    Ok(ArakiLiebReport {
        holds: lower_margin >= ARAKI_LIEB_SLACK && upper_margin >= ARAKI_LIEB_SLACK,
        lower_margin,
        upper_margin,
    })
}

/// Maximum of the selected measure over `q in [q_lo, q_hi]`, located to
/// absolute resolution `1e-4` by a coarse grid scan followed by golden-section
/// refinement of the bracketing interval. Returns `(q_star, value)`.
pub fn find_iq_peak(
    params: &QubitPairParams,
    q_lo: f64,
    q_hi: f64,
    measure: Measure,
) -> Result<(f64, f64)> {
    if !q_lo.is_finite() || !q_hi.is_finite() || q_lo < 0.0 || q_lo >= q_hi {
        return Err(Error::InvalidInterval { lo: q_lo, hi: q_hi });
    }
    let marginal = Spectrum::new(vec![params.p(), 1.0 - params.p()]);
    let joint = closed_form_joint_spectrum(params);
    let objective = |qv: f64| {
        let q = EntropicIndex::new(qv).expect("search stays inside a validated interval");
        record_from_spectra(&marginal, &marginal, &joint, q)
            .expect("family spectra are valid")
            .value(measure)
    };
    Ok(grid_golden_max(&objective, q_lo, q_hi, PEAK_GRID_STEP, PEAK_Q_RESOLUTION))
}

/// Grid scan plus golden-section refinement for a 1D maximum.
///
/// The scan places points every `grid_step` (endpoints always included), then
/// the golden section shrinks the interval bracketing the best grid point
/// until it is narrower than `resolution`. Returns the best evaluated point,
/// so a maximum at an endpoint is returned exactly.
fn grid_golden_max(
    f: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    grid_step: f64,
    resolution: f64,
) -> (f64, f64) {
    let n = ((hi - lo) / grid_step).ceil() as usize + 1;
    let grid: Vec<f64> = (0..n).map(|i| (lo + grid_step * i as f64).min(hi)).collect();

    let mut best_i = 0;
    let mut best_x = grid[0];
    let mut best_v = f(grid[0]);
    for (i, &x) in grid.iter().enumerate().skip(1) {
        let v = f(x);
        if v > best_v {
            best_i = i;
            best_x = x;
            best_v = v;
        }
    }

    let mut a = grid[best_i.saturating_sub(1)];
    let mut b = grid[(best_i + 1).min(n - 1)];
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > resolution {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v > best_v {
            best_x = x;
            best_v = v;
        }
    }
    (best_x, best_v)
}

/// Convenience wrapper: numeric mutual information of the family state.
pub fn family_mutual_information(params: &QubitPairParams, q: EntropicIndex) -> Result<MutualInfoRecord> {
    mutual_information(&build_joint_state(params), q)
}
