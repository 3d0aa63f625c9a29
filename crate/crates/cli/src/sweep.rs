//! Grid and seeded random sweeps.

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use quartic_core::{classify, verify_report, QuarticCoeffs, Rational};

use crate::output::{csv_row, CSV_HEADER};
use crate::{emit, rational_flag, CliError};

#[derive(Args)]
pub struct SweepArgs {
    /// Value or `start:stop:step` range (inclusive)
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d: String,
    /// Draw this many random quartics instead of a grid
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random coefficients lie in [-max, max]
    #[arg(long, default_value_t = 10)]
    max: i64,
    /// Random coefficients have denominators up to this
    #[arg(long, default_value_t = 16)]
    max_den: i64,
    /// Write the CSV to this file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// Parses a single value or an inclusive `start:stop:step` range.
pub fn parse_range(flag: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![rational_flag(flag, v)?]),
        [start, stop, step] => {
            let (start, stop, step) = (rational_flag(flag, start)?, rational_flag(flag, stop)?, rational_flag(flag, step)?);
            if step <= Rational::from_integer(0.into()) {
                return Err(CliError::Usage(format!("range step for --{flag} must be positive in `{text}`")));
            }
            let mut out = Vec::new();
            let mut x = start;
            while x <= stop {
                out.push(x.clone());
                x += &step;
            }
            Ok(out)
        }
        _ => Err(CliError::Usage(format!("invalid range for --{flag}: expected a value or start:stop:step, got `{text}`"))),
    }
}

pub fn random_coeffs(seed: u64, n: usize, max: i64, max_den: i64) -> Vec<QuarticCoeffs> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || {
        let den = rng.gen_range(1..=max_den);
        let num = rng.gen_range(-max * den..=max * den);
        Rational::new(num.into(), den.into())
    };
    (0..n).map(|_| QuarticCoeffs::new(draw(), draw(), draw(), draw())).collect()
}

pub fn run(args: &SweepArgs) -> Result<(), CliError> {
    let cases = match args.random {
        Some(n) => {
            if args.max <= 0 || args.max_den <= 0 {
                return Err(CliError::Usage("--max and --max-den must be positive".into()));
            }
            random_coeffs(args.seed, n, args.max, args.max_den)
        }
        None => {
            let (av, bv, cv, dv) = (parse_range("a", &args.a)?, parse_range("b", &args.b)?, parse_range("c", &args.c)?, parse_range("d", &args.d)?);
            let mut out = Vec::new();
            for a in &av {
                for b in &bv {
                    for c in &cv {
                        for d in &dv {
                            out.push(QuarticCoeffs::new(a.clone(), b.clone(), c.clone(), d.clone()));
                        }
                    }
                }
            }
            out
        }
    };
    let rows: Vec<(String, bool)> = cases
        .par_iter()
        .map(|f| {
            let c = classify(f);
            let (cv, qv) = (verify_report(f, &c.cubic), verify_report(f, &c.quadratic));
            (csv_row(&c, &cv, &qv), cv.passed() && qv.passed())
        })
        .collect();
    let mut text = String::with_capacity(rows.len() * 48 + 64);
    text.push_str(CSV_HEADER);
    text.push('\n');
    for (row, _) in &rows {
        text.push_str(row);
        text.push('\n');
    }
    emit(&args.out, &text)?;
    let passed = rows.iter().filter(|r| r.1).count();
    let frac = if rows.is_empty() { 1.0 } else { passed as f64 / rows.len() as f64 };
    eprintln!("summary: {passed}/{} passed ({frac:.6})", rows.len());
    Ok(())
}
