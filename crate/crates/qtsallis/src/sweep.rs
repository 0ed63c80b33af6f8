//! Deterministic CSV tables of the mutual informations over q.
//!
//! Sweeps always emit the full record (both measures and all three
//! entropies): the schema is fixed so downstream plots never depend on which
//! measure was requested. Values are printed with 17 significant digits so a
//! parsed row reproduces the in-memory doubles exactly; in particular the
//! identity `I_q_prime = I_q + (1-q)*S_qA*S_qB` is recomputable from any row.
//!
//! Points are evaluated in parallel; the output order is always q-ascending,
//! so byte-identical input produces byte-identical output.

use std::io;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::entropy::EntropicIndex;
use crate::family::{build_joint_state, QubitPairParams};
use crate::linalg::{partial_trace, Subsystem};
use crate::measures::{record_from_spectra, Measure, MutualInfoRecord};
use crate::{Error, Result};

/// Fixed CSV header of sweep tables.
pub const SWEEP_CSV_HEADER: &str = "q,p,gamma,S_qA,S_qB,S_qAB,I_q,I_q_prime";
/// Number of q samples of the canned figure tables.
pub const FIGURE_POINTS: usize = 401;

/// Which measure a sweep was asked for. The CSV schema always carries both;
/// the selection exists so front ends can validate and echo the request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureSelection {
    Iq,
    IqPrime,
    Both,
}

/// Validated description of one sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub q_min: f64,
    pub q_max: f64,
    pub q_steps: usize,
    pub p: f64,
    pub gamma: f64,
    pub measure: MeasureSelection,
    /// Output target; `None` means standard output.
    pub out: Option<PathBuf>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !self.q_min.is_finite()
            || !self.q_max.is_finite()
            || self.q_min < 0.0
            || self.q_min >= self.q_max
        {
            return Err(Error::InvalidInterval {
                lo: self.q_min,
                hi: self.q_max,
            });
        }
        if self.q_steps < 2 {
            return Err(Error::TooFewSteps { steps: self.q_steps });
        }
        QubitPairParams::new(self.p, self.gamma).map(|_| ())
    }
}

/// One CSV row of a sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub q: f64,
    pub p: f64,
    pub gamma: f64,
    pub s_qa: f64,
    pub s_qb: f64,
    pub s_qab: f64,
    pub i_q: f64,
    pub i_q_prime: f64,
}

impl SweepRecord {
    fn new(p: f64, gamma: f64, r: MutualInfoRecord) -> Self {
        Self {
            q: r.q,
            p,
            gamma,
            s_qa: r.s_qa,
            s_qb: r.s_qb,
            s_qab: r.s_qab,
            i_q: r.i_q,
            i_q_prime: r.i_q_prime,
        }
    }
}

/// Uniform grid inclusive of both endpoints; the endpoints are returned
/// exactly, and for odd step counts over symmetric ranges interior anchors
/// like q = 1 land exactly on the grid.
fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Mutual-information records of one family member over the given q values,
/// evaluated concurrently in q but returned in input order. The spectra are
/// computed once; only the entropies depend on q.
fn family_series(params: &QubitPairParams, qs: &[f64]) -> Result<Vec<MutualInfoRecord>> {
    let rho = build_joint_state(params);
    let a = partial_trace(&rho, Subsystem::A)?;
    let b = partial_trace(&rho, Subsystem::B)?;
    qs.par_iter()
        .map(|&qv| {
            let q = EntropicIndex::new(qv)?;
            record_from_spectra(a.spectrum(), b.spectrum(), rho.spectrum(), q)
        })
        .collect()
}

/// Evaluates the sweep, q-ascending. Emission is separate; see
/// [`write_sweep_csv`].
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let params = QubitPairParams::new(spec.p, spec.gamma)?;
    let qs = linspace(spec.q_min, spec.q_max, spec.q_steps);
    let records = family_series(&params, &qs)?;
    Ok(records
        .into_iter()
        .map(|r| SweepRecord::new(spec.p, spec.gamma, r))
        .collect())
}

/// 17 significant digits: enough for exact f64 round-trips, so identities
/// checked on parsed rows hold to machine precision.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes the fixed-schema CSV. Line feeds only, no trailing whitespace,
/// byte-deterministic for identical records.
pub fn write_sweep_csv<W: io::Write + ?Sized>(records: &[SweepRecord], out: &mut W) -> io::Result<()> {
    writeln!(out, "{SWEEP_CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_float(r.q),
            fmt_float(r.p),
            fmt_float(r.gamma),
            fmt_float(r.s_qa),
            fmt_float(r.s_qb),
            fmt_float(r.s_qab),
            fmt_float(r.i_q),
            fmt_float(r.i_q_prime)
        )?;
    }
    Ok(())
}

/// Multi-series table backing one of the four canned figures.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureTable {
    /// Column names, starting with `q`.
    pub columns: Vec<String>,
    /// One row per q sample, same length as `columns`.
    pub rows: Vec<Vec<f64>>,
}

/// Data behind the four canned figures, on q in [0, 2] with
/// [`FIGURE_POINTS`] samples:
///
/// 1. `I_q` at p = 0.5 for gamma in {1, 0.999, 0}, plus a constant 2 ln 2
///    reference column.
/// 2. `I_q` at gamma = 1 for p in {0.5, 0.999}.
/// 3. as figure 1 for `I'_q`.
/// 4. as figure 2 for `I'_q`.
pub fn figure_table(id: u8) -> Result<FigureTable> {
    let (measure, tag) = match id {
        1 | 2 => (Measure::Iq, "iq"),
        3 | 4 => (Measure::IqPrime, "iqp"),
        _ => return Err(Error::UnknownFigure { id }),
    };
    let (series, with_reference): (Vec<(String, QubitPairParams)>, bool) = match id {
        1 | 3 => (
            [1.0, 0.999, 0.0]
                .iter()
                .map(|&g| {
                    (
                        format!("{tag}_g{g}"),
                        QubitPairParams::new(0.5, g).expect("fixed parameters are valid"),
                    )
                })
                .collect(),
            true,
        ),
        _ => (
            [0.5, 0.999]
                .iter()
                .map(|&p| {
                    (
                        format!("{tag}_p{p}"),
                        QubitPairParams::new(p, 1.0).expect("fixed parameters are valid"),
                    )
                })
                .collect(),
            false,
        ),
    };

    let qs = linspace(0.0, 2.0, FIGURE_POINTS);
    let mut columns = vec!["q".to_string()];
    let mut value_columns: Vec<Vec<f64>> = Vec::new();
    for (name, params) in &series {
        columns.push(name.clone());
        let records = family_series(params, &qs)?;
        value_columns.push(records.iter().map(|r| r.value(measure)).collect());
    }
    if with_reference {
        columns.push("ref_2ln2".to_string());
        value_columns.push(vec![2.0 * 2.0f64.ln(); qs.len()]);
    }

    let rows = qs
        .iter()
        .enumerate()
        .map(|(i, &q)| {
            let mut row = Vec::with_capacity(columns.len());
            row.push(q);
            row.extend(value_columns.iter().map(|c| c[i]));
            row
        })
        .collect();
    Ok(FigureTable { columns, rows })
}

/// CSV emission for [`figure_table`], same formatting contract as
/// [`write_sweep_csv`].
pub fn write_figure_csv<W: io::Write + ?Sized>(table: &FigureTable, out: &mut W) -> io::Result<()> {
    writeln!(out, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(|&x| fmt_float(x)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}
