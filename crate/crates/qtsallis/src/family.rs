//! The two-qubit state family under study.
//!
//! The pure member is `|psi> = sqrt(p)|01> + sqrt(1-p)|10>` (first slot is
//! qubit A, joint basis index `2*i_A + i_B`). A coherence parameter `gamma`
//! interpolates between its fully dephased mixture (`gamma = 0`) and the pure
//! projector (`gamma = 1`) by scaling the off-diagonal element:
//!
//! ```text
//! rho_AB = p |01><01| + (1-p) |10><10|
//!        + sqrt(gamma) sqrt(p(1-p)) (|01><10| + |10><01|)
//! ```
//!
//! Both reduced states are diagonal regardless of gamma: tracing out either
//! qubit kills the |01><10| coherence. The joint spectrum is supported on the
//! central 2x2 block, giving the closed form implemented in
//! [`closed_form_joint_spectrum`].

use num_complex::Complex64;

use crate::linalg::{DensityOperator, Spectrum, SquareMatrix};
use crate::{Error, Result};

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(Error::OutsideUnitInterval { name, value });
    }
    Ok(())
}

/// Validated `(p, gamma)` pair, both in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitPairParams {
    p: f64,
    gamma: f64,
}

impl QubitPairParams {
    pub fn new(p: f64, gamma: f64) -> Result<Self> {
        check_unit_interval("p", p)?;
        check_unit_interval("gamma", gamma)?;
        Ok(Self { p, gamma })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Normalised two-qubit state vector in the `2*i_A + i_B` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PureStateVector {
    amplitudes: [Complex64; 4],
}

impl PureStateVector {
    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rank-one projector `|psi><psi|`.
    pub fn projector(&self) -> SquareMatrix {
        SquareMatrix::from_fn(4, |i, j| self.amplitudes[i] * self.amplitudes[j].conj())
    }
}

/// `sqrt(p)|01> + sqrt(1-p)|10>`.
pub fn build_pure_state(p: f64) -> Result<PureStateVector> {
    check_unit_interval("p", p)?;
    let mut amplitudes = [Complex64::ZERO; 4];
    amplitudes[1] = Complex64::new(p.sqrt(), 0.0);
    amplitudes[2] = Complex64::new((1.0 - p).sqrt(), 0.0);
    Ok(PureStateVector { amplitudes })
}

/// Joint state of the family; at `gamma = 1` this is exactly the pure
/// projector, at `gamma = 0` the dephased mixture.
pub fn build_joint_state(params: &QubitPairParams) -> DensityOperator {
    let p = params.p();
    let coherence = params.gamma().sqrt() * (p * (1.0 - p)).sqrt();
    let mut m = SquareMatrix::zeros(4);
    m[(1, 1)] = Complex64::new(p, 0.0);
    m[(2, 2)] = Complex64::new(1.0 - p, 0.0);
    m[(1, 2)] = Complex64::new(coherence, 0.0);
    m[(2, 1)] = Complex64::new(coherence, 0.0);
    DensityOperator::new(m).expect("family matrix satisfies the density operator invariants")
}

/// Spectrum of the joint state without running the eigensolver.
///
/// The only nontrivial block is `[[p, c], [c, 1-p]]` with
/// `c = sqrt(gamma p (1-p))`, whose eigenvalues are
/// `(1 +- sqrt(1 - 4 p (1-p) (1-gamma))) / 2`; the remaining two eigenvalues
/// are exact zeros. The discriminant equals `(2p-1)^2 + 4 gamma p (1-p)`, so
/// it lies in `[0, 1]` and both eigenvalues are valid probabilities. (A plus
/// sign inside the square root would exceed 1 whenever `gamma < 1`, producing
/// an eigenvalue above 1; see the regression test.)
pub fn closed_form_joint_spectrum(params: &QubitPairParams) -> Spectrum {
    let p = params.p();
    let discriminant = (1.0 - 4.0 * p * (1.0 - p) * (1.0 - params.gamma())).max(0.0);
    let radius = discriminant.sqrt();
    Spectrum::new(vec![0.5 * (1.0 + radius), 0.5 * (1.0 - radius), 0.0, 0.0])
}

/// Reduced states of the family: `diag(p, 1-p)` for qubit A and
/// `diag(1-p, p)` for qubit B, independent of gamma.
pub fn reduced_states(p: f64) -> Result<(DensityOperator, DensityOperator)> {
    check_unit_interval("p", p)?;
    let a = DensityOperator::from_diagonal(&[p, 1.0 - p])?;
    let b = DensityOperator::from_diagonal(&[1.0 - p, p])?;
    Ok((a, b))
}
