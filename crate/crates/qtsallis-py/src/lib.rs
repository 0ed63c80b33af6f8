//! Python bindings for the qtsallis crate.
//!
//! The module mirrors the Rust API: density operators with partial traces and
//! tensor products, entropies evaluated on spectra, the two-qubit family
//! constructors, both mutual informations, the peak search and the sweep
//! tables. Every crate error surfaces as a `ValueError`.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qtsallis::{
    entropy, family, linalg, measures, sweep, EntropicIndex, Measure, MeasureSelection,
    QubitPairParams, Spectrum, SquareMatrix, Subsystem, SweepSpec,
};

fn value_error(e: qtsallis::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_subsystem(keep: &str) -> PyResult<Subsystem> {
    match keep {
        "A" | "a" => Ok(Subsystem::A),
        "B" | "b" => Ok(Subsystem::B),
        other => Err(PyValueError::new_err(format!(
            "keep must be 'A' or 'B', got {other:?}"
        ))),
    }
}

fn parse_measure(measure: &str) -> PyResult<Measure> {
    match measure {
        "iq" => Ok(Measure::Iq),
        "iq_prime" | "iq-prime" | "iqprime" => Ok(Measure::IqPrime),
        other => Err(PyValueError::new_err(format!(
            "measure must be 'iq' or 'iq_prime', got {other:?}"
        ))),
    }
}

fn params(p: f64, gamma: f64) -> PyResult<QubitPairParams> {
    QubitPairParams::new(p, gamma).map_err(value_error)
}

fn index(q: f64) -> PyResult<EntropicIndex> {
    EntropicIndex::new(q).map_err(value_error)
}

/// Positive-semidefinite unit-trace complex matrix.
#[pyclass(name = "DensityOperator", frozen)]
struct PyDensityOperator {
    inner: linalg::DensityOperator,
}

#[pymethods]
impl PyDensityOperator {
    /// Validates Hermiticity, unit trace and positivity of the given rows.
    #[new]
    fn new(rows: Vec<Vec<Complex64>>) -> PyResult<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(PyValueError::new_err("rows must form a nonempty square matrix"));
        }
        let matrix = SquareMatrix::from_fn(dim, |i, j| rows[i][j]);
        let inner = linalg::DensityOperator::new(matrix).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Deterministic random state of the given rank (ChaCha-seeded).
    #[staticmethod]
    fn random(dim: usize, rank: usize, seed: u64) -> PyResult<Self> {
        let inner = linalg::random_density_operator(dim, rank, seed).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Matrix entries as a list of rows.
    fn matrix(&self) -> Vec<Vec<Complex64>> {
        let m = self.inner.matrix();
        (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m[(i, j)]).collect())
            .collect()
    }

    /// Eigenvalues in descending order (clamped at construction).
    fn spectrum(&self) -> Vec<f64> {
        self.inner.spectrum().eigenvalues().to_vec()
    }

    /// Reduced state of one qubit of a two-qubit state; `keep` is 'A' or 'B'.
    fn partial_trace(&self, keep: &str) -> PyResult<Self> {
        let keep = parse_subsystem(keep)?;
        let inner = linalg::partial_trace(&self.inner, keep).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Tensor product `self (x) other`.
    fn tensor(&self, other: &Self) -> PyResult<Self> {
        let product = linalg::tensor_product(self.inner.matrix(), other.inner.matrix());
        let inner = linalg::DensityOperator::new(product).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "DensityOperator(dim={}, spectrum={:?})",
            self.inner.dim(),
            self.inner.spectrum().eigenvalues()
        )
    }
}

/// All q-dependent quantities of one evaluation point.
#[pyclass(name = "MutualInfoRecord", frozen)]
struct PyMutualInfoRecord {
    #[pyo3(get)]
    q: f64,
    #[pyo3(get)]
    s_qa: f64,
    #[pyo3(get)]
    s_qb: f64,
    #[pyo3(get)]
    s_qab: f64,
    #[pyo3(get)]
    i_q: f64,
    #[pyo3(get)]
    i_q_prime: f64,
}

impl From<measures::MutualInfoRecord> for PyMutualInfoRecord {
    fn from(r: measures::MutualInfoRecord) -> Self {
        Self {
            q: r.q,
            s_qa: r.s_qa,
            s_qb: r.s_qb,
            s_qab: r.s_qab,
            i_q: r.i_q,
            i_q_prime: r.i_q_prime,
        }
    }
}

#[pymethods]
impl PyMutualInfoRecord {
    fn __repr__(&self) -> String {
        format!(
            "MutualInfoRecord(q={}, s_qa={}, s_qb={}, s_qab={}, i_q={}, i_q_prime={})",
            self.q, self.s_qa, self.s_qb, self.s_qab, self.i_q, self.i_q_prime
        )
    }
}

/// Amplitudes of `sqrt(p)|01> + sqrt(1-p)|10>` in the `2*i_A + i_B` basis.
#[pyfunction]
fn pure_state(p: f64) -> PyResult<Vec<Complex64>> {
    let psi = family::build_pure_state(p).map_err(value_error)?;
    Ok(psi.amplitudes().to_vec())
}

/// Joint state of the family at `(p, gamma)`.
#[pyfunction]
fn joint_state(p: f64, gamma: f64) -> PyResult<PyDensityOperator> {
    Ok(PyDensityOperator {
        inner: family::build_joint_state(&params(p, gamma)?),
    })
}

/// Reduced states `diag(p, 1-p)` and `diag(1-p, p)`.
#[pyfunction]
fn reduced_states(p: f64) -> PyResult<(PyDensityOperator, PyDensityOperator)> {
    let (a, b) = family::reduced_states(p).map_err(value_error)?;
    Ok((PyDensityOperator { inner: a }, PyDensityOperator { inner: b }))
}

/// Closed-form joint spectrum `{(1 +- sqrt(1 - 4p(1-p)(1-gamma)))/2, 0, 0}`.
#[pyfunction]
fn closed_form_spectrum(p: f64, gamma: f64) -> PyResult<Vec<f64>> {
    Ok(family::closed_form_joint_spectrum(&params(p, gamma)?)
        .eigenvalues()
        .to_vec())
}

/// `-sum_i l_i ln(l_i)` over the support of the spectrum.
#[pyfunction]
fn von_neumann_entropy(spectrum: Vec<f64>) -> PyResult<f64> {
    entropy::von_neumann_entropy(&Spectrum::new(spectrum)).map_err(value_error)
}

/// Tsallis entropy `S_q` of the spectrum.
#[pyfunction]
fn tsallis_entropy(spectrum: Vec<f64>, q: f64) -> PyResult<f64> {
    entropy::tsallis_entropy(&Spectrum::new(spectrum), index(q)?).map_err(value_error)
}

/// Number of eigenvalues strictly above `eps`.
#[pyfunction]
#[pyo3(signature = (spectrum, eps = 1e-12))]
fn support_count(spectrum: Vec<f64>, eps: f64) -> usize {
    entropy::support_count(&Spectrum::new(spectrum), eps)
}

/// Numeric-path mutual informations of a two-qubit state.
#[pyfunction]
fn mutual_information(rho: PyRef<'_, PyDensityOperator>, q: f64) -> PyResult<PyMutualInfoRecord> {
    measures::mutual_information(&rho.inner, index(q)?)
        .map(PyMutualInfoRecord::from)
        .map_err(value_error)
}

/// Closed-form `I_q` of the family.
#[pyfunction]
fn closed_form_iq(p: f64, gamma: f64, q: f64) -> PyResult<f64> {
    measures::closed_form_iq(&params(p, gamma)?, index(q)?).map_err(value_error)
}

/// Closed-form `I'_q` of the family.
#[pyfunction]
fn closed_form_iq_prime(p: f64, gamma: f64, q: f64) -> PyResult<f64> {
    measures::closed_form_iq_prime(&params(p, gamma)?, index(q)?).map_err(value_error)
}

/// q=1 subadditivity check; returns `(holds, lower_margin, upper_margin)`.
#[pyfunction]
fn araki_lieb(rho: PyRef<'_, PyDensityOperator>) -> PyResult<(bool, f64, f64)> {
    let report = measures::araki_lieb_holds(&rho.inner).map_err(value_error)?;
    Ok((report.holds, report.lower_margin, report.upper_margin))
}

/// Maximum of a measure over `[q_lo, q_hi]`; returns `(q_star, value)`.
#[pyfunction]
#[pyo3(signature = (p, gamma, q_lo = 0.01, q_hi = 2.0, measure = "iq"))]
fn find_iq_peak(p: f64, gamma: f64, q_lo: f64, q_hi: f64, measure: &str) -> PyResult<(f64, f64)> {
    measures::find_iq_peak(&params(p, gamma)?, q_lo, q_hi, parse_measure(measure)?)
        .map_err(value_error)
}

fn sweep_spec(p: f64, gamma: f64, q_min: f64, q_max: f64, steps: usize) -> SweepSpec {
    SweepSpec {
        q_min,
        q_max,
        q_steps: steps,
        p,
        gamma,
        measure: MeasureSelection::Both,
        out: None,
    }
}

/// Sweep records over a uniform q grid, q-ascending.
#[pyfunction]
#[pyo3(signature = (p, gamma, q_min = 0.0, q_max = 2.0, steps = 201))]
fn run_sweep(
    p: f64,
    gamma: f64,
    q_min: f64,
    q_max: f64,
    steps: usize,
) -> PyResult<Vec<PyMutualInfoRecord>> {
    let records = sweep::run_sweep(&sweep_spec(p, gamma, q_min, q_max, steps)).map_err(value_error)?;
    Ok(records
        .into_iter()
        .map(|r| PyMutualInfoRecord {
            q: r.q,
            s_qa: r.s_qa,
            s_qb: r.s_qb,
            s_qab: r.s_qab,
            i_q: r.i_q,
            i_q_prime: r.i_q_prime,
        })
        .collect())
}

/// The sweep as a CSV string, byte-identical to the CLI output.
#[pyfunction]
#[pyo3(signature = (p, gamma, q_min = 0.0, q_max = 2.0, steps = 201))]
fn sweep_csv(p: f64, gamma: f64, q_min: f64, q_max: f64, steps: usize) -> PyResult<String> {
    let records = sweep::run_sweep(&sweep_spec(p, gamma, q_min, q_max, steps)).map_err(value_error)?;
    let mut buf = Vec::new();
    sweep::write_sweep_csv(&records, &mut buf)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

/// The data table of one canned figure as a CSV string.
#[pyfunction]
fn figure_csv(id: u8) -> PyResult<String> {
    let table = sweep::figure_table(id).map_err(value_error)?;
    let mut buf = Vec::new();
    sweep::write_figure_csv(&table, &mut buf)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

#[pymodule]
fn qtsallis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDensityOperator>()?;
    m.add_class::<PyMutualInfoRecord>()?;
    m.add_function(wrap_pyfunction!(pure_state, m)?)?;
    m.add_function(wrap_pyfunction!(joint_state, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_states, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(von_neumann_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(tsallis_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(support_count, m)?)?;
    m.add_function(wrap_pyfunction!(mutual_information, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_iq, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_iq_prime, m)?)?;
    m.add_function(wrap_pyfunction!(araki_lieb, m)?)?;
    m.add_function(wrap_pyfunction!(find_iq_peak, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(figure_csv, m)?)?;
    m.add("SUPPORT_EPS", entropy::SUPPORT_EPS)?;
    Ok(())
}
