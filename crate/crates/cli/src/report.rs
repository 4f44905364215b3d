//! Output formats. The JSON field names are part of the interface.

use std::io::Write;

use anyhow::Result;
use patcount::{Listing, Pattern, Precision};
use serde::Serialize;

#[derive(Serialize, Debug, Clone, Copy, PartialEq)]
#[serde(untagged)]
pub enum Count {
    Exact(u128),
    Approx(f64),
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Exact(c) => write!(f, "{c}"),
            Count::Approx(c) => write!(f, "{c}"),
        }
    }
}

/// Result of a counting command.
///
/// `count` is an integer in exact mode. In approximate mode it is a real
/// rounded to 6 significant digits, and the true count lies in
/// `[count, count * (1 + relative_error_bound)]` up to that rounding.
#[derive(Serialize, Debug)]
pub struct CountReport {
    pub pattern: String,
    pub n: usize,
    pub count: Count,
    pub mode: &'static str,
    pub epsilon: f64,
    pub relative_error_bound: f64,
}

impl CountReport {
    pub fn new(pattern: &str, n: usize, value: f64, precision: Precision) -> Self {
        let (count, mode, epsilon) = match precision {
            Precision::Exact => (Count::Exact(value.round() as u128), "exact", 0.0),
            Precision::Approx(e) => (Count::Approx(significant(value, 6)), "approx", e),
        };
        Self { pattern: pattern.to_string(), n, count, mode, epsilon, relative_error_bound: epsilon }
    }

    pub fn write(&self, out: &mut impl Write, json: bool) -> Result<()> {
        if json {
            serde_json::to_writer(&mut *out, self)?;
            writeln!(out)?;
        } else {
            writeln!(out, "count: {}", self.count)?;
            writeln!(out, "pattern: {}", self.pattern)?;
            writeln!(out, "n: {}", self.n)?;
            writeln!(out, "mode: {}", self.mode)?;
            writeln!(out, "epsilon: {}", self.epsilon)?;
        }
        Ok(())
    }
}

/// Result of `enumerate`, positions 1-based.
#[derive(Serialize, Debug)]
pub struct ListReport {
    pub pattern: String,
    pub n: usize,
    pub copies: Vec<Vec<u32>>,
    pub emitted: u64,
    pub abandoned: u64,
    pub root_rejections: u64,
}

impl ListReport {
    pub fn new(pattern: &Pattern, n: usize, listing: &Listing) -> Self {
        Self {
            pattern: pattern.to_string(),
            n,
            copies: listing.copies.iter().map(|c| c.positions().to_vec()).collect(),
            emitted: listing.stats.emitted,
            abandoned: listing.stats.abandoned,
            root_rejections: listing.stats.root_rejections,
        }
    }

    pub fn write(&self, out: &mut impl Write, json: bool) -> Result<()> {
        if json {
            serde_json::to_writer(&mut *out, self)?;
            writeln!(out)?;
        } else {
            for c in &self.copies {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                writeln!(out, "{}", parts.join(","))?;
            }
        }
        Ok(())
    }
}

/// Rounds through decimal scientific notation, so the result prints cleanly.
pub fn significant(x: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(significant(123456789.0, 6), 123457000.0);
        assert_eq!(significant(0.0, 6), 0.0);
        assert_eq!(significant(1.0 / 3.0, 3), 0.333);
    }

    #[test]
    fn json_shape() {
        let r = CountReport::new("1324", 9, 31.987654321, Precision::Approx(0.1));
        let mut buf = Vec::new();
        r.write(&mut buf, true).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["count"], 31.9877);
        assert_eq!(v["mode"], "approx");
        assert_eq!(v["epsilon"], 0.1);
        let e = CountReport::new("21", 2, 1.0, Precision::Exact);
        assert_eq!(serde_json::to_value(&e).unwrap()["count"], 1);
    }
}
