//! Exhaustive recipe search.
//!
//! Iterative deepening on the number of steps, so the shortest recipe wins.
//! Ties go to the smallest fixed element, then to the smallest stepped
//! element, then to the position axis. This makes the output reproducible.

use super::graph::{ConstraintGraph, Mask};
use super::{factorization, Axis, Configuration, Plan, Recipe, RecipeTable, Step};
use crate::error::{Error, Result};
use crate::perm::Pattern;

fn extend(g: &ConstraintGraph, fixed: Mask, budget: usize, steps: &mut Vec<Step>) -> bool {
    if g.terminal_groups(fixed).is_some() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    for e in g.unfixed(fixed) {
        for axis in [Axis::Position, Axis::Value] {
            if let Some(direction) = g.step(fixed, e, axis) {
                steps.push(Step { element: e, axis, direction });
                if extend(g, fixed | (1 << e), budget - 1, steps) {
                    return true;
                }
                steps.pop();
                // The axis does not change what remains, so the other one cannot help.
                break;
            }
        }
    }
    false
}

/// Shortest recipe for one case, or `None` if no recipe exists.
pub fn search_recipe(pattern: Pattern, config: Configuration) -> Option<Recipe> {
    let g = ConstraintGraph::new(pattern, config);
    let k = pattern.len();
    for budget in 0..k {
        for fixed in 0..k {
            let mut steps = Vec::new();
            if extend(&g, 1 << fixed, budget, &mut steps) {
                let mask = steps.iter().fold(1u8 << fixed, |m, s| m | (1 << s.element));
                let terminal = g.terminal_groups(mask).unwrap();
                return Some(Recipe { pattern, config, fixed, steps, terminal });
            }
        }
    }
    None
}

/// Recipe for one case, falling back to a factorization.
pub fn search_plan(pattern: Pattern, config: Configuration) -> Option<Plan> {
    search_recipe(pattern, config)
        .map(Plan::Recipe)
        .or_else(|| factorization(pattern, config).map(Plan::Factor))
}

/// Builds the full table for length `k`, failing on the first uncovered case.
pub fn search_recipes(k: usize) -> Result<RecipeTable> {
    if !(2..=5).contains(&k) {
        return Err(Error::PatternTooLong { len: k, max: 5 });
    }
    let mut table = RecipeTable::new(k);
    for s in Pattern::all(k) {
        for c in Configuration::all(k) {
            let plan = search_plan(s, c).ok_or_else(|| Error::CoverageGap {
                pattern: s.to_string(),
                config: c.to_string(),
            })?;
            table.insert(plan);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recipe::{check_recipe, Plan};

    #[test]
    fn short_lengths_need_no_factorization() {
        for k in 2..=4 {
            let t = search_recipes(k).unwrap();
            assert_eq!(t.len(), (1..=k).product::<usize>() * (k - 1) * (k - 1));
            assert_eq!(t.factor_count(), 0);
            t.validate().unwrap();
        }
    }

    #[test]
    fn length_five_coverage() {
        let t = search_recipes(5).unwrap();
        assert_eq!(t.len(), 1920);
        let mut factors: Vec<String> = t
            .plans()
            .filter_map(|p| match p {
                Plan::Factor(f) => Some(format!("{}:{},{}", f.pattern, f.config.vertical, f.config.below)),
                Plan::Recipe(r) => {
                    check_recipe(r).unwrap();
                    None
                }
            })
            .collect();
        factors.sort();
        assert_eq!(
            factors,
            ["13524:1,1", "14253:1,1", "24135:4,4", "31425:4,4", "35241:4,1", "42531:4,1", "52413:1,4", "53142:1,4"]
        );
    }

    #[test]
    fn shipped_table_is_generator_output() {
        assert_eq!(search_recipes(5).unwrap().emit(), crate::recipe::SHIPPED_K5);
        assert_eq!(RecipeTable::for_length(5).unwrap().len(), 1920);
    }

    #[test]
    fn text_round_trip() {
        let t = search_recipes(5).unwrap();
        let text = t.emit();
        let back = RecipeTable::parse(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.emit(), text);
    }
}
