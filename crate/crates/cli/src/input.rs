use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use patcount::rng::random_permutation;
use patcount::{ingest_with, parse_sequence, Permutation, TieBreak};

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// File of whitespace- or comma-separated reals; `-` reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Random permutation of length `n` from seed `seed`, written `n,seed`.
    #[arg(long, value_name = "N,SEED")]
    pub random: Option<String>,

    /// The sequence itself, e.g. "2 4 1 3".
    #[arg(long, value_name = "VALUES", allow_hyphen_values = true)]
    pub seq: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: Source,

    /// How to treat repeated input values.
    #[arg(long, value_enum, default_value_t = Ties::Reject)]
    pub break_ties: Ties,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Ties {
    Reject,
    Index,
}

impl InputArgs {
    pub fn load(&self) -> Result<Permutation> {
        let s = &self.source;
        let text = if let Some(spec) = &s.random {
            let (n, seed) = parse_pair(spec)?;
            return Ok(random_permutation(n as usize, seed));
        } else if let Some(path) = &s.input {
            if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin()).context("reading standard input")?
            } else {
                std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
            }
        } else {
            s.seq.clone().unwrap_or_default()
        };
        let ties = match self.break_ties {
            Ties::Reject => TieBreak::Reject,
            Ties::Index => TieBreak::Index,
        };
        Ok(ingest_with(&parse_sequence(&text)?, ties)?)
    }
}

fn parse_pair(spec: &str) -> Result<(u64, u64)> {
    let Some((n, seed)) = spec.split_once(',') else {
        bail!("--random expects N,SEED, got {spec:?}");
    };
    let n: u64 = n.trim().parse().with_context(|| format!("bad length {n:?}"))?;
    let seed: u64 = seed.trim().parse().with_context(|| format!("bad seed {seed:?}"))?;
    if n > u32::MAX as u64 / 2 {
        bail!("length {n} is too large");
    }
    Ok((n, seed))
}

/// Parses `16384` or `2^14`.
pub fn parse_size(tok: &str) -> Result<usize> {
    let tok = tok.trim();
    if let Some((b, e)) = tok.split_once('^') {
        let b: usize = b.parse().with_context(|| format!("bad size {tok:?}"))?;
        let e: u32 = e.parse().with_context(|| format!("bad size {tok:?}"))?;
        return b.checked_pow(e).with_context(|| format!("size {tok:?} overflows"));
    }
    tok.parse().with_context(|| format!("bad size {tok:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_size("2^14").unwrap(), 16384);
        assert_eq!(parse_size(" 100 ").unwrap(), 100);
        assert!(parse_size("2^x").is_err());
    }

    #[test]
    fn random_spec() {
        assert_eq!(parse_pair("10, 7").unwrap(), (10, 7));
        assert!(parse_pair("10").is_err());
    }
}
