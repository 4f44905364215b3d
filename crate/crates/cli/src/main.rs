//! `patcount`: count and list permutation patterns from the command line.
//!
//! Exit status is 0 on success, 1 when `selftest` finds a violation, and 2 on
//! usage, input or parse errors.

mod bench;
mod input;
mod report;
mod selftest;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use patcount::range12::{approx_12_in_rect, approx_21_in_rect, PairKind, RangeTree2D};
use patcount::recipe::{search_recipes, RecipeTable};
use patcount::{count, list_copies, Pattern, Precision, Rect};

use crate::input::InputArgs;
use crate::report::{CountReport, ListReport};

#[derive(Parser, Debug)]
#[command(name = "patcount", version, about = "Approximate counting of permutation patterns of length up to 5")]
struct Cli {
    /// Worker threads (defaults to all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PrecisionArgs {
    /// Relative error bound, in (0, 1).
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,

    /// Count exactly instead.
    #[arg(long)]
    exact: bool,
}

impl PrecisionArgs {
    fn precision(&self) -> Result<Precision> {
        Ok(if self.exact { Precision::Exact } else { Precision::approx(self.epsilon)? })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count copies of a pattern.
    Count {
        #[arg(long)]
        pattern: Pattern,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        json: bool,
    },
    /// List copies of a pattern, one per line as 1-based positions.
    Enumerate {
        #[arg(long)]
        pattern: Pattern,
        #[command(flatten)]
        input: InputArgs,
        /// Number of copies to list, or `all`.
        #[arg(long, default_value = "all")]
        t: String,
        #[arg(long)]
        json: bool,
    },
    /// Generate or check recipe tables.
    Recipes {
        #[command(subcommand)]
        action: RecipesAction,
    },
    /// Timing and accuracy runs, written as CSV.
    Bench(bench::BenchArgs),
    /// Compare exact counts against brute force on small inputs.
    Selftest {
        /// Smaller inputs, finishes in seconds.
        #[arg(long)]
        quick: bool,
    },
    /// Count increasing (or decreasing) pairs inside a rectangle.
    Range12 {
        /// 1-based inclusive bounds `x1,y1,x2,y2` (positions x, values y).
        #[arg(long, value_name = "X1,Y1,X2,Y2")]
        rect: String,
        /// Count decreasing pairs instead.
        #[arg(long)]
        decreasing: bool,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        precision: PrecisionArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum RecipesAction {
    /// Search recipes for every pattern and configuration.
    Generate {
        /// Output file (standard output if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        length: usize,
    },
    /// Validate a table; the shipped one if no file is given.
    Check {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    let mut out = std::io::stdout().lock();
    match cmd {
        Command::Count { pattern, input, precision, json } => {
            let precision = precision.precision()?;
            let p = input.load()?;
            let start = Instant::now();
            let c = count(&p, &pattern, precision)?;
            eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
            CountReport::new(&pattern.to_string(), p.len(), c, precision).write(&mut out, json)?;
        }
        Command::Enumerate { pattern, input, t, json } => {
            let limit = match t.as_str() {
                "all" => None,
                s => Some(s.parse::<usize>().with_context(|| format!("--t expects a count or `all`, got {s:?}"))?),
            };
            let p = input.load()?;
            let start = Instant::now();
            let listing = list_copies(&p, &pattern, limit)?;
            eprintln!(
                "elapsed: {:.3} s, emitted {}, abandoned {}, rejected roots {}",
                start.elapsed().as_secs_f64(),
                listing.stats.emitted,
                listing.stats.abandoned,
                listing.stats.root_rejections
            );
            ListReport::new(&pattern, p.len(), &listing).write(&mut out, json)?;
        }
        Command::Recipes { action: RecipesAction::Generate { out: path, length } } => {
            let text = search_recipes(length)?.emit();
            match path {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Recipes { action: RecipesAction::Check { file } } => {
            let table = match &file {
                Some(path) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    RecipeTable::parse(&text)?
                }
                None => RecipeTable::for_length(5)?.clone(),
            };
            if table.is_empty() {
                bail!("the table has no entries");
            }
            table.validate()?;
            writeln!(
                out,
                "ok: {} cases for length {}, {} recipes, {} factorizations",
                table.len(),
                table.k(),
                table.len() - table.factor_count(),
                table.factor_count()
            )?;
        }
        Command::Bench(args) => bench::run(&args, &mut out)?,
        Command::Selftest { quick } => return selftest::run(quick, &mut out),
        Command::Range12 { rect, decreasing, input, precision, json } => {
            let precision = precision.precision()?;
            let p = input.load()?;
            let [x1, y1, x2, y2] = parse_rect(&rect)?;
            let r = Rect::new(x1 - 1, x2 - 1, y1 - 1, y2 - 1);
            let start = Instant::now();
            let c = if decreasing {
                approx_21_in_rect(&RangeTree2D::build(&p, PairKind::Decreasing), &r, precision)
            } else {
                approx_12_in_rect(&RangeTree2D::build(&p, PairKind::Increasing), &r, precision)
            };
            eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
            let name = if decreasing { "21" } else { "12" };
            CountReport::new(name, p.len(), c, precision).write(&mut out, json)?;
        }
    }
    Ok(true)
}

fn parse_rect(s: &str) -> Result<[i64; 4]> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad rectangle bound {t:?}")))
        .collect::<Result<_>>()?;
    let Ok(r) = <[i64; 4]>::try_from(parts) else {
        bail!("--rect expects four numbers x1,y1,x2,y2");
    };
    if r[0] > r[2] || r[1] > r[3] {
        bail!("--rect needs x1 <= x2 and y1 <= y2");
    }
    Ok(r)
}
