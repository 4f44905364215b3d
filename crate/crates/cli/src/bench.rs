//! `patcount bench`: scaling and accuracy tables as CSV.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use patcount::oracle::oracle_count;
use patcount::rng::random_permutation;
use patcount::{count, Pattern, Precision};

use crate::input::parse_size;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Wall time per size, with the ratio to the previous size.
    Scaling,
    /// Estimate against a brute-force count.
    Accuracy,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Suite::Scaling)]
    suite: Suite,

    /// Comma-separated sizes, `2^k` allowed.
    #[arg(long, default_value = "2^12,2^13,2^14")]
    sizes: String,

    /// Comma-separated patterns.
    #[arg(long, default_value = "2413,24135")]
    pattern: String,

    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Timed runs per row; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    reps: usize,
}

/// Brute force beyond this size takes too long for a table.
const ORACLE_MAX_N: usize = 400;

pub fn run(args: &BenchArgs, out: &mut impl Write) -> Result<()> {
    let precision = Precision::approx(args.epsilon)?;
    let sizes: Vec<usize> = args.sizes.split(',').map(parse_size).collect::<Result<_>>()?;
    let patterns: Vec<Pattern> = args
        .pattern
        .split(',')
        .map(|s| s.trim().parse::<Pattern>().map_err(anyhow::Error::from))
        .collect::<Result<_>>()?;
    if args.reps == 0 {
        bail!("--reps must be positive");
    }
    match args.suite {
        Suite::Scaling => {
            writeln!(out, "pattern,n,epsilon,seed,seconds,estimate,time_ratio")?;
            for s in &patterns {
                let mut prev: Option<f64> = None;
                for &n in &sizes {
                    let p = random_permutation(n, args.seed);
                    let mut best = f64::INFINITY;
                    let mut estimate = 0.0;
                    for _ in 0..args.reps {
                        let start = Instant::now();
                        estimate = count(&p, s, precision)?;
                        best = best.min(start.elapsed().as_secs_f64());
                    }
                    let ratio = prev.map(|t| format!("{:.3}", best / t)).unwrap_or_default();
                    writeln!(out, "{s},{n},{},{},{best:.6},{estimate:.6e},{ratio}", args.epsilon, args.seed)?;
                    out.flush()?;
                    prev = Some(best);
                }
            }
        }
        Suite::Accuracy => {
            if let Some(&n) = sizes.iter().find(|&&n| n > ORACLE_MAX_N) {
                bail!("accuracy runs need sizes up to {ORACLE_MAX_N}, got {n}");
            }
            writeln!(out, "pattern,n,epsilon,seed,estimate,exact,relative_error,within_bound")?;
            for s in &patterns {
                for &n in &sizes {
                    let p = random_permutation(n, args.seed);
                    let estimate = count(&p, s, precision)?;
                    let exact = oracle_count(&p, s) as f64;
                    let rel = if exact == 0.0 { 0.0 } else { (exact - estimate) / exact };
                    let ok = estimate <= exact && exact <= (1.0 + args.epsilon) * estimate + 1e-9 * exact;
                    writeln!(out, "{s},{n},{},{},{estimate:.6e},{exact},{rel:.6},{ok}", args.epsilon, args.seed)?;
                }
            }
        }
    }
    Ok(())
}
