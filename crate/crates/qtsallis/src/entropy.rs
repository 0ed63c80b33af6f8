//! Tsallis entropy of a spectrum and its limits.
//!
//! For eigenvalues `l_i` of a density operator,
//!
//! ```text
//! S_q = (1 - sum_i l_i^q) / (q - 1)        q >= 0, q != 1
//! S_1 = -sum_i l_i ln(l_i)                 (von Neumann limit)
//! S_0 = (number of nonzero eigenvalues) - 1
//! ```
//!
//! All sums run over the support only: eigenvalues at or below
//! [`SUPPORT_EPS`] are treated as exact zeros. This keeps the `q -> 0` limit
//! finite and, more importantly, keeps `l^q` from amplifying numerical noise
//! in eigenvalues that are mathematically zero.

use crate::linalg::Spectrum;
use crate::{Error, Result};

/// Eigenvalues at or below this threshold are excluded from entropy sums and
/// from the support count.
pub const SUPPORT_EPS: f64 = 1e-12;
/// Indices within this distance of 1 use the von Neumann formula; the direct
/// power formula loses all precision to cancellation there.
pub const Q_BRANCH_TOL: f64 = 1e-6;
/// Max allowed `|sum - 1|` for a spectrum fed into an entropy.
pub const SPECTRUM_SUM_TOL: f64 = 1e-8;

/// Validated entropic index: finite and nonnegative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropicIndex(f64);

impl EntropicIndex {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q < 0.0 {
            return Err(Error::InvalidEntropicIndex { q });
        }
        Ok(Self(q))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn validate(spectrum: &Spectrum) -> Result<()> {
    let sum = spectrum.sum();
    if !sum.is_finite() || (sum - 1.0).abs() > SPECTRUM_SUM_TOL {
        return Err(Error::InvalidSpectrum { sum });
    }
    Ok(())
}

fn support(spectrum: &Spectrum, eps: f64) -> impl Iterator<Item = f64> + '_ {
    spectrum.eigenvalues().iter().copied().filter(move |&l| l > eps)
}

/// Number of eigenvalues strictly above `eps`.
pub fn support_count(spectrum: &Spectrum, eps: f64) -> usize {
    support(spectrum, eps).count()
}

/// `-sum_i l_i ln(l_i)` over the support.
pub fn von_neumann_entropy(spectrum: &Spectrum) -> Result<f64> {
    validate(spectrum)?;
    Ok(support(spectrum, SUPPORT_EPS).map(|l| -l * l.ln()).sum())
}

/// Tsallis entropy `S_q` of a spectrum.
///
/// `q = 0` counts the support, `|q - 1| < Q_BRANCH_TOL` delegates to
/// [`von_neumann_entropy`], everything else uses the power formula.
pub fn tsallis_entropy(spectrum: &Spectrum, q: EntropicIndex) -> Result<f64> {
    let q = q.value();
    if q == 0.0 {
        validate(spectrum)?;
        return Ok(support_count(spectrum, SUPPORT_EPS) as f64 - 1.0);
    }
    if (q - 1.0).abs() < Q_BRANCH_TOL {
        return von_neumann_entropy(spectrum);
    }
    validate(spectrum)?;
    let power_sum: f64 = support(spectrum, SUPPORT_EPS).map(|l| l.powf(q)).sum();
    Ok((1.0 - power_sum) / (q - 1.0))
}
