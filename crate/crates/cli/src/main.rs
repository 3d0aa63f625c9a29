//! `quartic`: classify, sweep, verify, plot and play monic quartics.

mod output;
mod sweep;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quartic_core::{classify, parse_rational, tune_of_tier, verify_report, QuarticCoeffs, Rational, Tier};

use output::{classification_json, csv_row, plot_data, verdict_json, Precision, CSV_HEADER};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
    #[error("verification failed")]
    Violation,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Output { .. } => 3,
            CliError::Violation => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "quartic", version, about = "Classify and isolate the real roots of x^4 + a x^3 + b x^2 + c x + d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Case label, landmarks and root reports for one quartic
    Classify(ClassifyArgs),
    /// Classify a grid or a seeded random batch and compare with the oracle
    Sweep(sweep::SweepArgs),
    /// Check both tiers against the Sturm oracle; exit 1 on any violation
    Verify(VerifyArgs),
    /// Samples and separator lines for plotting
    PlotData(PlotArgs),
    /// Deterministic melody derived from the classification
    Tune(TuneArgs),
}

/// Coefficients of `x^4 + a x^3 + b x^2 + c x + d`, as integers, `p/q` or
/// decimals (converted exactly). Missing ones are zero.
#[derive(Args, Clone)]
struct CoeffArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d: String,
}

pub(crate) fn rational_flag(flag: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|_| CliError::Usage(format!("invalid rational for --{flag}: `{text}`")))
}

impl CoeffArgs {
    fn coeffs(&self) -> Result<QuarticCoeffs, CliError> {
        Ok(QuarticCoeffs::new(
            rational_flag("a", &self.a)?,
            rational_flag("b", &self.b)?,
            rational_flag("c", &self.c)?,
            rational_flag("d", &self.d)?,
        ))
    }
}

#[derive(Args)]
struct OutArgs {
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Round floats to two decimals
    #[arg(long)]
    paper_precision: bool,
}

impl OutArgs {
    fn precision(&self) -> Precision {
        if self.paper_precision {
            Precision::Paper
        } else {
            Precision::Full
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    coeffs: CoeffArgs,
    #[command(flatten)]
    out: OutArgs,
    /// JSON output (the default)
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// One CSV row with the sweep columns
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    coeffs: CoeffArgs,
    #[command(flatten)]
    out: OutArgs,
    /// Corrupt the cubic-tier report first; the run must then fail
    #[arg(long)]
    negative_control: bool,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    coeffs: CoeffArgs,
    #[command(flatten)]
    out: OutArgs,
    #[arg(long, default_value = "-4", allow_hyphen_values = true)]
    x_min: String,
    #[arg(long, default_value = "4", allow_hyphen_values = true)]
    x_max: String,
    #[arg(long, default_value_t = 161)]
    samples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Cubic,
    Quadratic,
}

#[derive(Args)]
struct TuneArgs {
    #[command(flatten)]
    coeffs: CoeffArgs,
    #[command(flatten)]
    out: OutArgs,
    #[arg(long, value_enum, default_value = "cubic")]
    tier: TierArg,
}

pub(crate) fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Output { path: path.clone(), source }),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|source| CliError::Output { path: "<stdout>".into(), source })
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify(args) => {
            let f = args.coeffs.coeffs()?;
            let c = classify(&f);
            let (cv, qv) = (verify_report(&f, &c.cubic), verify_report(&f, &c.quadratic));
            let text = if args.csv {
                format!("{CSV_HEADER}\n{}\n", csv_row(&c, &cv, &qv))
            } else {
                let mut s = serde_json::to_string_pretty(&classification_json(&c, &cv, &qv, args.out.precision())).expect("json");
                s.push('\n');
                s
            };
            emit(&args.out.out, &text)
        }
        Command::Sweep(args) => sweep::run(&args),
        Command::Verify(args) => {
            let f = args.coeffs.coeffs()?;
            let c = classify(&f);
            let mut cubic = c.cubic.clone();
            if args.negative_control {
                corrupt(&mut cubic);
            }
            let (cv, qv) = (verify_report(&f, &cubic), verify_report(&f, &c.quadratic));
            let mut s = serde_json::to_string_pretty(&verdict_json(&cv, &qv)).expect("json");
            s.push('\n');
            emit(&args.out.out, &s)?;
            if cv.passed() && qv.passed() {
                Ok(())
            } else {
                Err(CliError::Violation)
            }
        }
        Command::PlotData(args) => {
            let f = args.coeffs.coeffs()?;
            let (lo, hi) = (rational_flag("x-min", &args.x_min)?, rational_flag("x-max", &args.x_max)?);
            if args.samples < 2 {
                return Err(CliError::Usage("plot-data needs at least 2 samples".into()));
            }
            if lo >= hi {
                return Err(CliError::Usage("--x-min must be below --x-max".into()));
            }
            emit(&args.out.out, &plot_data(&classify(&f), &lo, &hi, args.samples, args.out.precision()))
        }
        Command::Tune(args) => {
            let f = args.coeffs.coeffs()?;
            let tier = match args.tier {
                TierArg::Cubic => Tier::Cubic,
                TierArg::Quadratic => Tier::Quadratic,
            };
            emit(&args.out.out, &tune_of_tier(&f, tier).to_string())
        }
    }
}

/// Shifts the first isolating window far away, or misstates the count when
/// there is nothing to shift.
fn corrupt(report: &mut quartic_core::RootReport) {
    match report.roots.first_mut() {
        Some(r) => r.interval.window = r.interval.window.shifted(&Rational::from_integer(1000.into())),
        None => {
            report.count = Some(1);
            report.possible_counts = vec![1];
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
