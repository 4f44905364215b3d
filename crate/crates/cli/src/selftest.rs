//! `patcount selftest`: exact counts against brute force, plus invariants.

use std::io::Write;

use anyhow::Result;
use patcount::oracle::{oracle_count_all, oracle_enumerate};
use patcount::recipe::RecipeTable;
use patcount::rng::random_permutation;
use patcount::{count, list_copies, Pattern, Permutation, Precision};

struct Checker<'a, W: Write> {
    out: &'a mut W,
    failures: usize,
}

impl<W: Write> Checker<'_, W> {
    fn check(&mut self, name: &str, failures: Vec<String>) -> Result<()> {
        if failures.is_empty() {
            writeln!(self.out, "ok    {name}")?;
        } else {
            self.failures += 1;
            writeln!(self.out, "FAIL  {name}: {} violation(s), first: {}", failures.len(), failures[0])?;
        }
        Ok(())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn run(quick: bool, out: &mut impl Write) -> Result<bool> {
    let (sizes, seeds): (&[usize], u64) = if quick { (&[9, 16], 2) } else { (&[20, 40, 60], 5) };
    let inputs: Vec<(usize, u64, Permutation)> = sizes
        .iter()
        .flat_map(|&n| (0..seeds).map(move |s| (n, s, random_permutation(n, 1000 * n as u64 + s))))
        .collect();
    let mut c = Checker { out, failures: 0 };

    c.check("shipped recipe table", RecipeTable::for_length(5)?.validate().err().map(|e| e.to_string()).into_iter().collect())?;

    let mut exact = Vec::new();
    let mut approx = Vec::new();
    for (n, seed, p) in &inputs {
        for k in 2..=5 {
            let truth = oracle_count_all(p, k);
            for s in Pattern::all(k) {
                let want = truth[s.rank()] as f64;
                let got = count(p, &s, Precision::Exact)?;
                if got != want {
                    exact.push(format!("n={n} seed={seed} {s}: got {got}, want {want}"));
                }
                if k >= 4 {
                    let e = count(p, &s, Precision::approx(0.3)?)?;
                    if !(e <= want && want <= 1.3 * e + 1e-9 * want) {
                        approx.push(format!("n={n} seed={seed} {s}: estimate {e}, exact {want}"));
                    }
                }
            }
        }
    }
    c.check("exact counts equal brute force", exact)?;
    c.check("estimates within 1.3x at eps=0.3", approx)?;

    let mut listing = Vec::new();
    for (n, seed, p) in inputs.iter().take(if quick { 2 } else { inputs.len() }) {
        for s in Pattern::all(4).into_iter().chain(Pattern::all(5).into_iter().step_by(7)) {
            let mut got = list_copies(p, &s, None)?.copies;
            got.sort();
            if got != oracle_enumerate(p, &s) {
                listing.push(format!("n={n} seed={seed} {s}"));
            }
        }
    }
    c.check("listing equals brute force", listing)?;

    let mut closed = Vec::new();
    let n = 14;
    let id = Permutation::identity(n);
    let rev = id.reversed();
    for k in [4usize, 5] {
        for s in Pattern::all(k) {
            let inc = s.order().windows(2).all(|w| w[0] < w[1]);
            let dec = s.order().windows(2).all(|w| w[0] > w[1]);
            let full = binomial(n as u128, k as u128) as f64;
            for (p, hit, name) in [(&id, inc, "identity"), (&rev, dec, "reversed")] {
                let want = if hit { full } else { 0.0 };
                let got = count(p, &s, Precision::Exact)?;
                if got != want {
                    closed.push(format!("{name} {s}: got {got}, want {want}"));
                }
            }
        }
    }
    c.check("closed forms on monotone inputs", closed)?;

    let failures = c.failures;
    writeln!(c.out, "{}", if failures == 0 { "selftest passed" } else { "selftest FAILED" })?;
    Ok(failures == 0)
}
