use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qtsallis::verify::run_all_checks;
use qtsallis::{
    figure_table, find_iq_peak, run_sweep, write_figure_csv, write_sweep_csv, Measure,
    MeasureSelection, QubitPairParams, SweepSpec,
};

/// Exit-status contract: 0 success, 1 runtime/numeric error, 2 usage error.
#[derive(Parser)]
#[command(name = "qtsallis", version, about = "Tsallis entropies and generalized mutual information of a two-qubit state family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate both mutual informations over a q range as CSV
    Sweep {
        /// Lower end of the q range
        #[arg(long, default_value_t = 0.0)]
        q_min: f64,
        /// Upper end of the q range
        #[arg(long, default_value_t = 2.0)]
        q_max: f64,
        /// Number of q samples, endpoints included
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// Weight of the |01> component of the pure state
        #[arg(long)]
        p: f64,
        /// Coherence parameter: 1 keeps the pure state, 0 dephases it
        #[arg(long)]
        gamma: f64,
        /// Requested measure; the CSV schema always carries both
        #[arg(long, value_enum, default_value_t = MeasureArg::Both)]
        measure: MeasureArg,
        /// Output file, or '-' for standard output
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Regenerate the data table behind one of the four canned figures
    Figure {
        /// Figure id
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        /// Output file, or '-' for standard output
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Locate the maximum of a measure over a q interval
    Peak {
        /// Weight of the |01> component of the pure state
        #[arg(long)]
        p: f64,
        /// Coherence parameter
        #[arg(long)]
        gamma: f64,
        /// Lower end of the search interval
        #[arg(long, default_value_t = 0.01)]
        q_lo: f64,
        /// Upper end of the search interval
        #[arg(long, default_value_t = 2.0)]
        q_hi: f64,
        /// Measure to maximise
        #[arg(long, value_enum, default_value_t = PeakMeasureArg::Iq)]
        measure: PeakMeasureArg,
    },
    /// Run the cross-module invariant checks and report per-check results
    Verify {
        /// Seed of the random-state streams
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random states per randomized check
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Iq,
    #[value(alias = "iqprime")]
    IqPrime,
    Both,
}

impl From<MeasureArg> for MeasureSelection {
    fn from(value: MeasureArg) -> Self {
        match value {
            MeasureArg::Iq => MeasureSelection::Iq,
            MeasureArg::IqPrime => MeasureSelection::IqPrime,
            MeasureArg::Both => MeasureSelection::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PeakMeasureArg {
    Iq,
    #[value(alias = "iqprime")]
    IqPrime,
}

impl From<PeakMeasureArg> for Measure {
    fn from(value: PeakMeasureArg) -> Self {
        match value {
            PeakMeasureArg::Iq => Measure::Iq,
            PeakMeasureArg::IqPrime => Measure::IqPrime,
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn output_target(out: &str) -> Option<PathBuf> {
    (out != "-").then(|| PathBuf::from(out))
}

fn write_output(
    target: Option<&Path>,
    emit: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> io::Result<()> {
    match target {
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            emit(&mut w)?;
            w.flush()
        }
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&mut w)?;
            w.flush()
        }
    }
}

/// Six significant digits.
fn sig6(x: f64) -> String {
    format!("{x:.5e}")
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Sweep {
            q_min,
            q_max,
            steps,
            p,
            gamma,
            measure,
            out,
        } => {
            let spec = SweepSpec {
                q_min,
                q_max,
                q_steps: steps,
                p,
                gamma,
                measure: measure.into(),
                out: output_target(&out),
            };
            spec.validate().map_err(usage)?;
            let records = run_sweep(&spec).map_err(runtime)?;
            write_output(spec.out.as_deref(), |w| write_sweep_csv(&records, w))
                .map_err(runtime)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Figure { id, out } => {
            let table = figure_table(id).map_err(usage)?;
            write_output(output_target(&out).as_deref(), |w| {
                write_figure_csv(&table, w)
            })
            .map_err(runtime)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Peak {
            p,
            gamma,
            q_lo,
            q_hi,
            measure,
        } => {
            let params = QubitPairParams::new(p, gamma).map_err(usage)?;
            let (q_star, value) =
                find_iq_peak(&params, q_lo, q_hi, measure.into()).map_err(usage)?;
            println!("q_star={} value={}", sig6(q_star), sig6(value));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed, trials } => {
            if trials == 0 {
                return Err(Failure::Usage("trials must be at least 1".into()));
            }
            let outcomes = run_all_checks(seed, trials).map_err(runtime)?;
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            for outcome in &outcomes {
                println!("{}", outcome.report_line());
            }
            if failed == 0 {
                println!("verify: all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verify: {failed} of {} checks failed", outcomes.len());
                Ok(ExitCode::from(1))
            }
        }
    }
}
