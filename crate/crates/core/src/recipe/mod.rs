//! Counting plans for a pattern split by a separator.
//!
//! A separator cuts the plane into four quadrants: positions left or right of
//! a vertical line and values below or above a horizontal one. A
//! [`Configuration`] says how many pattern elements fall left (`vertical`)
//! and how many values fall below (`below`). For each pattern and
//! configuration a [`Recipe`] fixes one element, walks a few monotone steps,
//! and ends with independent groups that are counted directly.
//!
//! Recipes are stored one per line:
//!
//! ```text
//! 13|425, horizontal below3 ---> 2, 5, 1, 3, 4
//! 1|3524, horizontal below2 ---> FACTOR 2413
//! ```
//!
//! The bar marks the vertical split. `belowV` names the smallest value above
//! the horizontal split, so `below3` puts values 1 and 2 below. After the
//! arrow come pattern values: the fixed element, then the stepped elements,
//! then the terminal groups. Step axes, step directions and terminal groups
//! are not written down; they follow from the order and are re-derived when
//! a line is parsed.

mod graph;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

pub use graph::ConstraintGraph;
pub use search::{search_plan, search_recipe, search_recipes};

use crate::error::{Error, Result};
use crate::perm::Pattern;
use crate::range12::PairKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    /// Elements left of the vertical split.
    pub vertical: usize,
    /// Pattern values below the horizontal split.
    pub below: usize,
}

impl Configuration {
    pub fn new(vertical: usize, below: usize) -> Self {
        Self { vertical, below }
    }

    /// All configurations for patterns of length `k`, in `(vertical, below)` order.
    pub fn all(k: usize) -> impl Iterator<Item = Configuration> {
        (1..k).flat_map(move |p| (1..k).map(move |m| Configuration::new(p, m)))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertical {} below {}", self.vertical, self.below)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Position,
    Value,
}

impl Axis {
    pub fn other(self) -> Self {
        match self {
            Axis::Position => Axis::Value,
            Axis::Value => Axis::Position,
        }
    }
}

/// How the remaining count changes as the stepped element moves up its axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepDirection {
    NonDecreasing,
    NonIncreasing,
    Constant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub element: usize,
    pub axis: Axis,
    pub direction: StepDirection,
}

/// A terminal group. Elements are 0-based pattern positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Single(usize),
    /// Two elements sharing one rectangle, first one earlier in position.
    Pair(usize, usize, PairKind),
}

impl Group {
    fn elements(&self) -> Vec<usize> {
        match *self {
            Group::Single(e) => vec![e],
            Group::Pair(e, f, _) => vec![e, f],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub pattern: Pattern,
    pub config: Configuration,
    pub fixed: usize,
    pub steps: Vec<Step>,
    pub terminal: Vec<Group>,
}

/// Plan for configurations where one quadrant holds a single element and the
/// diagonally opposite quadrant holds all others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub pattern: Pattern,
    pub config: Configuration,
    pub single: usize,
    pub block: Pattern,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Plan {
    Recipe(Recipe),
    Factor(Factorization),
}

impl Plan {
    pub fn pattern(&self) -> Pattern {
        match self {
            Plan::Recipe(r) => r.pattern,
            Plan::Factor(f) => f.pattern,
        }
    }

    pub fn config(&self) -> Configuration {
        match self {
            Plan::Recipe(r) => r.config,
            Plan::Factor(f) => f.config,
        }
    }
}

impl Recipe {
    /// Derives a recipe from an element order (0-based pattern positions).
    ///
    /// Elements after the first are steps until the remaining ones split into
    /// terminal groups. Each step uses the position axis when that is valid
    /// and the value axis otherwise.
    pub fn from_order(pattern: Pattern, config: Configuration, order: &[usize]) -> Result<Self> {
        let k = pattern.len();
        let mut seen = vec![false; k];
        if order.len() != k || order.iter().any(|&e| e >= k || std::mem::replace(&mut seen[e], true)) {
            return Err(Error::InvalidRecipe(format!("order {order:?} does not list each element once")));
        }
        let g = ConstraintGraph::new(pattern, config);
        let mut fixed = 1u8 << order[0];
        let mut steps = Vec::new();
        let mut idx = 1;
        let terminal = loop {
            if let Some(groups) = g.terminal_groups(fixed) {
                break groups;
            }
            let e = order[idx];
            let step = [Axis::Position, Axis::Value]
                .into_iter()
                .find_map(|axis| g.step(fixed, e, axis).map(|direction| Step { element: e, axis, direction }))
                .ok_or_else(|| {
                    Error::InvalidRecipe(format!(
                        "element {} cannot be stepped in {pattern} ({config})",
                        pattern.at(e)
                    ))
                })?;
            steps.push(step);
            fixed |= 1 << e;
            idx += 1;
        };
        // Pairs must be listed contiguously in the terminal part of the order.
        let tail = &order[idx..];
        for grp in &terminal {
            if let Group::Pair(e, f, _) = *grp {
                let a = tail.iter().position(|&x| x == e).unwrap();
                let b = tail.iter().position(|&x| x == f).unwrap();
                if a.abs_diff(b) != 1 {
                    return Err(Error::InvalidRecipe(format!(
                        "pair {}{} is not listed contiguously",
                        pattern.at(e),
                        pattern.at(f)
                    )));
                }
            }
        }
        Ok(Recipe { pattern, config, fixed: order[0], steps, terminal })
    }

    /// Element order as written in the text format.
    pub fn order(&self) -> Vec<usize> {
        let mut v = vec![self.fixed];
        v.extend(self.steps.iter().map(|s| s.element));
        v.extend(self.terminal.iter().flat_map(Group::elements));
        v
    }

    /// Number of approximate stages (steps and pair counts) chained together.
    pub fn stages(&self) -> usize {
        self.steps.len() + self.terminal.iter().filter(|g| matches!(g, Group::Pair(..))).count()
    }
}

/// Verifies that every step is monotone in the declared direction and the
/// terminal groups are independent, reporting the first problem found.
pub fn check_recipe(r: &Recipe) -> Result<()> {
    let g = ConstraintGraph::new(r.pattern, r.config);
    let k = r.pattern.len();
    let order = r.order();
    let mut seen = vec![false; k];
    if order.len() != k || order.iter().any(|&e| e >= k || std::mem::replace(&mut seen[e], true)) {
        return Err(Error::InvalidRecipe("elements are not a permutation of the pattern".into()));
    }
    let mut fixed = 1u8 << r.fixed;
    for s in &r.steps {
        if g.terminal_groups(fixed).is_some() {
            return Err(Error::InvalidRecipe(format!("step on {} after the terminal is reachable", r.pattern.at(s.element))));
        }
        match g.step(fixed, s.element, s.axis) {
            Some(d) if d == s.direction => {}
            Some(d) => {
                return Err(Error::InvalidRecipe(format!(
                    "step on {} is {d:?}, not {:?}",
                    r.pattern.at(s.element),
                    s.direction
                )))
            }
            None => {
                return Err(Error::InvalidRecipe(format!(
                    "step on {} along {:?} is not monotone",
                    r.pattern.at(s.element),
                    s.axis
                )))
            }
        }
        fixed |= 1 << s.element;
    }
    match g.terminal_groups(fixed) {
        Some(groups) if groups == r.terminal => Ok(()),
        Some(groups) => Err(Error::InvalidRecipe(format!("terminal should be {groups:?}"))),
        None => Err(Error::InvalidRecipe("remaining elements are not independent".into())),
    }
}

/// Factorization plan for `(pattern, config)`, if the configuration has that shape.
pub fn factorization(pattern: Pattern, config: Configuration) -> Option<Factorization> {
    let g = ConstraintGraph::new(pattern, config);
    let k = pattern.len();
    let quadrant = |e: usize| (g.is_left(e), g.is_below(e));
    for single in 0..k {
        let (l, b) = quadrant(single);
        let rest: Vec<usize> = (0..k).filter(|&e| e != single).collect();
        if rest.len() >= 2 && rest.iter().all(|&e| quadrant(e) == (!l, !b)) {
            let vals: Vec<u8> = rest.iter().map(|&e| pattern.at(e)).collect();
            let block = Pattern::from_permutation(&crate::perm::Permutation::from_distinct(&vals).ok()?).ok()?;
            return Some(Factorization { pattern, config, single, block });
        }
    }
    None
}

fn header(pattern: &Pattern, config: Configuration) -> String {
    let s = pattern.to_string();
    format!("{}|{}, horizontal below{}", &s[..config.vertical], &s[config.vertical..], config.below + 1)
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ---> ", header(&self.pattern(), self.config()))?;
        match self {
            Plan::Recipe(r) => {
                let vals: Vec<String> = r.order().iter().map(|&e| r.pattern.at(e).to_string()).collect();
                f.write_str(&vals.join(", "))
            }
            Plan::Factor(x) => write!(f, "FACTOR {}", x.block),
        }
    }
}

/// Parses one recipe line. `line` is used for error messages only.
pub fn parse_plan(text: &str, line: usize) -> Result<Plan> {
    let bad = |reason: String| Error::Parse { line, reason };
    let (head, body) = text.split_once("--->").ok_or_else(|| bad("missing '--->'".into()))?;
    let (split, horiz) = head.split_once(',').ok_or_else(|| bad("missing ',' after the pattern".into()))?;
    let (left, right) = split.trim().split_once('|').ok_or_else(|| bad("missing '|'".into()))?;
    let pattern: Pattern = format!("{left}{right}").parse().map_err(|e: Error| bad(e.to_string()))?;
    let label = horiz
        .trim()
        .strip_prefix("horizontal below")
        .ok_or_else(|| bad("expected 'horizontal below<V>'".into()))?;
    let label: usize = label.trim().parse().map_err(|_| bad(format!("bad value label {label:?}")))?;
    let k = pattern.len();
    if left.is_empty() || right.is_empty() || !(2..=k).contains(&label) {
        return Err(bad("separator must leave elements on both sides".into()));
    }
    let config = Configuration::new(left.len(), label - 1);
    let body = body.trim();
    if let Some(block) = body.strip_prefix("FACTOR") {
        let block: Pattern = block.trim().parse().map_err(|e: Error| bad(e.to_string()))?;
        let fac = factorization(pattern, config).ok_or_else(|| bad(Error::NotSpecialCase.to_string()))?;
        if fac.block != block {
            return Err(bad(format!("block is {}, not {block}", fac.block)));
        }
        return Ok(Plan::Factor(fac));
    }
    let mut order = Vec::with_capacity(k);
    for tok in body.split(',') {
        let v: u8 = tok.trim().parse().map_err(|_| bad(format!("bad element {tok:?}")))?;
        if v == 0 || v as usize > k {
            return Err(bad(format!("element {v} is not in {pattern}")));
        }
        order.push(pattern.position_of(v));
    }
    Recipe::from_order(pattern, config, &order).map(Plan::Recipe).map_err(|e| bad(e.to_string()))
}

/// Plans for every pattern of one length and every configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecipeTable {
    k: usize,
    plans: BTreeMap<(Pattern, Configuration), Plan>,
}

impl RecipeTable {
    pub fn new(k: usize) -> Self {
        Self { k, plans: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.plans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plans.is_empty()
    }

    pub fn insert(&mut self, plan: Plan) {
        self.plans.insert((plan.pattern(), plan.config()), plan);
    }

    pub fn get(&self, pattern: &Pattern, config: Configuration) -> Result<&Plan> {
        self.plans.get(&(*pattern, config)).ok_or_else(|| Error::MissingRecipe {
            pattern: pattern.to_string(),
            config: config.to_string(),
        })
    }

    pub fn plans(&self) -> impl Iterator<Item = &Plan> {
        self.plans.values()
    }

    pub fn factor_count(&self) -> usize {
        self.plans.values().filter(|p| matches!(p, Plan::Factor(_))).count()
    }

    /// Confirms that every `(pattern, configuration)` pair has a plan and
    /// every recipe passes [`check_recipe`].
    pub fn validate(&self) -> Result<()> {
        for s in Pattern::all(self.k) {
            for c in Configuration::all(self.k) {
                if let Plan::Recipe(r) = self.get(&s, c)? {
                    check_recipe(r)?;
                }
            }
        }
        Ok(())
    }

    pub fn emit(&self) -> String {
        let mut out = format!(
            "# {} cases for patterns of length {}: {} recipes, {} factorizations\n",
            self.len(),
            self.k,
            self.len() - self.factor_count(),
            self.factor_count()
        );
        for p in self.plans.values() {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses a table. Blank lines and `#` comments are ignored; the pattern
    /// length is taken from the first entry.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table: Option<RecipeTable> = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let plan = parse_plan(line, i + 1)?;
            let t = table.get_or_insert_with(|| RecipeTable::new(plan.pattern().len()));
            if plan.pattern().len() != t.k {
                return Err(Error::Parse { line: i + 1, reason: "pattern length differs from earlier lines".into() });
            }
            t.insert(plan);
        }
        Ok(table.unwrap_or_else(|| RecipeTable::new(0)))
    }

    /// Table for patterns of length `k` in `2..=5`. Length 5 comes from the
    /// shipped file; shorter lengths are generated on first use.
    pub fn for_length(k: usize) -> Result<&'static RecipeTable> {
        static TABLES: [OnceLock<RecipeTable>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        if !(2..=5).contains(&k) {
            return Err(Error::PatternTooLong { len: k, max: 5 });
        }
        Ok(TABLES[k - 2].get_or_init(|| {
            if k == 5 {
                let t = RecipeTable::parse(SHIPPED_K5).expect("shipped recipe table parses");
                t.validate().expect("shipped recipe table is valid");
                t
            } else {
                search_recipes(k).expect("short patterns are fully covered")
            }
        }))
    }
}

/// The length-5 recipe table shipped with the library.
pub const SHIPPED_K5: &str = include_str!("../../data/recipes-k5.txt");
