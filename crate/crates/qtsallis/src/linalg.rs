//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Everything here is sized for 2x2 and 4x4 problems, so the implementations
//! favour clarity and strict validation over asymptotics: matrices are plain
//! row-major buffers and the eigensolver is a cyclic Jacobi iteration.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::{Error, Result};

/// Max allowed `|a[i][j] - conj(a[j][i])|` for a matrix to count as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Max allowed `|tr - 1|` for a density operator.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-POSITIVITY_TOL, 0)` are treated as numerical zeros and
/// clamped; anything below is rejected.
pub const POSITIVITY_TOL: f64 = 1e-10;
/// Jacobi convergence threshold on the largest off-diagonal magnitude.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;
/// Hard cap on Jacobi sweeps; 4x4 Hermitian problems converge in a handful.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Dense square complex matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Real diagonal matrix; everything off the diagonal is zero.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Matrix product `self * rhs`. Panics on dimension mismatch.
    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must match");
        SquareMatrix::from_fn(self.dim, |i, j| {
            (0..self.dim).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }

    pub fn scale(&self, factor: f64) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Largest `|a[i][j] - conj(a[j][i])|` over all entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entrywise `|a[i][j] - b[i][j]|`. Panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions must match");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Eigenvalues of a Hermitian matrix, sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Sorts the given eigenvalues in descending order.
    pub fn new(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Self { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Positive-semidefinite unit-trace Hermitian matrix.
///
/// Construction validates Hermiticity (within [`HERMITICITY_TOL`]), unit trace
/// (within [`TRACE_TOL`]) and positivity (eigenvalues above
/// `-`[`POSITIVITY_TOL`], with numerical zeros clamped to exact zero), and
/// caches the resulting spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    matrix: SquareMatrix,
    spectrum: Spectrum,
}

impl DensityOperator {
    pub fn new(matrix: SquareMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFiniteEntry);
        }
        let dev = matrix.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace_dev = (matrix.trace() - Complex64::ONE).norm();
        if trace_dev > TRACE_TOL {
            return Err(Error::TraceNotUnit { deviation: trace_dev });
        }
        let raw = hermitian_eigenvalues(&matrix)?;
        let mut eigenvalues = raw.eigenvalues().to_vec();
        for l in &mut eigenvalues {
            if *l < -POSITIVITY_TOL {
                return Err(Error::NotPositive { eigenvalue: *l });
            }
            if *l < 0.0 {
                *l = 0.0;
            }
        }
        Ok(Self {
            matrix,
            spectrum: Spectrum::new(eigenvalues),
        })
    }

    /// Density operator with the given probabilities on the diagonal.
    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        Self::new(SquareMatrix::from_diagonal(diag))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    /// Eigenvalues computed (and clamped) at construction time.
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }
}

/// Kronecker product; for operators on a qubit pair the first factor acts on
/// subsystem A, so joint basis index `2*i_A + i_B` is row `i_A` of `a` and row
/// `i_B` of `b`.
pub fn tensor_product(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let db = b.dim();
    SquareMatrix::from_fn(a.dim() * db, |i, j| a[(i / db, j / db)] * b[(i % db, j % db)])
}

/// Which qubit of a pair survives a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Reduced state of one qubit of a two-qubit density operator.
///
/// With joint basis index `2*i_A + i_B`:
/// keeping A sums `rho[2i + k][2j + k]`, keeping B sums `rho[2k + i][2k + j]`.
pub fn partial_trace(rho: &DensityOperator, keep: Subsystem) -> Result<DensityOperator> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let m = rho.matrix();
    let reduced = SquareMatrix::from_fn(2, |i, j| match keep {
        Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
        Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
    });
    DensityOperator::new(reduced)
}

/// Eigenvalues of a Hermitian matrix.
///
/// Dimension 2 uses the closed-form quadratic; larger matrices run a cyclic
/// Jacobi iteration until the largest off-diagonal magnitude drops below
/// [`OFF_DIAGONAL_TOL`]. Rejects non-finite or non-Hermitian input.
pub fn hermitian_eigenvalues(m: &SquareMatrix) -> Result<Spectrum> {
    if !m.is_finite() {
        return Err(Error::NonFiniteEntry);
    }
    let dev = m.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let eigenvalues = match m.dim() {
        1 => vec![m[(0, 0)].re],
        2 => eigenvalues_2x2(m).to_vec(),
        _ => jacobi_eigenvalues(m)?,
    };
    Ok(Spectrum::new(eigenvalues))
}

/// Closed-form eigenvalues of a 2x2 Hermitian matrix: `m +- sqrt(d^2 + |w|^2)`
/// with mean `m`, half-gap `d` and off-diagonal `w`.
fn eigenvalues_2x2(m: &SquareMatrix) -> [f64; 2] {
    let mean = 0.5 * (m[(0, 0)].re + m[(1, 1)].re);
    let half_gap = 0.5 * (m[(0, 0)].re - m[(1, 1)].re);
    let radius = (half_gap * half_gap + m[(0, 1)].norm_sqr()).sqrt();
    [mean + radius, mean - radius]
}

fn max_off_diagonal(a: &SquareMatrix) -> f64 {
    let mut max = 0.0f64;
    for i in 0..a.dim() {
        for j in (i + 1)..a.dim() {
            max = max.max(a[(i, j)].norm());
        }
    }
    max
}

/// Cyclic Jacobi iteration for Hermitian matrices.
///
/// Each rotation zeroes one off-diagonal pair `(p, q)` with a complex Givens
/// rotation: writing `a[p][q] = r*u` with `r = |a[p][q]|` and unimodular `u`,
/// the rotation angle satisfies `cot(2*phi) = (a[q][q].re - a[p][p].re) / (2r)`
/// and the usual stable tangent formula picks the smaller angle.
fn jacobi_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    let mut a = m.clone();
    for _ in 0..MAX_JACOBI_SWEEPS {
        if max_off_diagonal(&a) <= OFF_DIAGONAL_TOL {
            return Ok((0..n).map(|i| a[(i, i)].re).collect());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if max_off_diagonal(&a) <= OFF_DIAGONAL_TOL {
        return Ok((0..n).map(|i| a[(i, i)].re).collect());
    }
    Err(Error::EigensolverStalled {
        sweeps: MAX_JACOBI_SWEEPS,
    })
}

fn rotate(a: &mut SquareMatrix, p: usize, q: usize) {
    let w = a[(p, q)];
    let r = w.norm();
    if r == 0.0 {
        return;
    }
    let u = w / r;
    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;
    let theta = (beta - alpha) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[(p, p)] = Complex64::new(alpha * c * c + beta * s * s - 2.0 * r * c * s, 0.0);
    a[(q, q)] = Complex64::new(alpha * s * s + beta * c * c + 2.0 * r * c * s, 0.0);
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;

    for j in 0..a.dim() {
        if j == p || j == q {
            continue;
        }
        let ajp = a[(j, p)];
        let ajq = a[(j, q)];
        let new_jp = ajp * c - ajq * s * u.conj();
        let new_jq = ajp * s * u + ajq * c;
        a[(j, p)] = new_jp;
        a[(p, j)] = new_jp.conj();
        a[(j, q)] = new_jq;
        a[(q, j)] = new_jq.conj();
    }
}

/// Deterministic random density operator of the given rank: `G G^dag`
/// normalised to unit trace, where `G` is `dim x rank` with i.i.d. standard
/// complex Gaussian entries from a ChaCha8 stream seeded with `seed`.
pub fn random_density_operator(dim: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    if rank < 1 || rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g: Vec<Complex64> = (0..dim * rank)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let gram = SquareMatrix::from_fn(dim, |i, j| {
            (0..rank).map(|k| g[i * rank + k] * g[j * rank + k].conj()).sum()
        });
        let trace = gram.trace().re;
        // trace = sum |g|^2 vanishes only if every draw is exactly zero
        if trace > 0.0 {
            return DensityOperator::new(gram.scale(1.0 / trace));
        }
    }
}
