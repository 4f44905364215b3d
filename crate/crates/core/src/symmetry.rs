//! The eight symmetries of the square acting on permutations.
//!
//! A transform is a combination of inverse, reverse and complement, applied
//! in that order. Counts are invariant: `count(p, s) == count(t(p), t(s))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Pattern, Permutation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymmetryTransform {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl SymmetryTransform {
    pub const IDENTITY: Self = Self::of(false, false, false);

    /// Identity first, then the single generators, then their products.
    pub const ALL: [Self; 8] = [
        Self::of(false, false, false),
        Self::of(false, true, false),
        Self::of(false, false, true),
        Self::of(false, true, true),
        Self::of(true, false, false),
        Self::of(true, true, false),
        Self::of(true, false, true),
        Self::of(true, true, true),
    ];

    pub const fn of(inverse: bool, reverse: bool, complement: bool) -> Self {
        Self { inverse, reverse, complement }
    }

    pub fn apply(&self, p: &Permutation) -> Permutation {
        let mut q = if self.inverse { p.inverse() } else { p.clone() };
        if self.reverse {
            q = q.reversed();
        }
        if self.complement {
            q = q.complemented();
        }
        q
    }

    pub fn apply_pattern(&self, s: &Pattern) -> Pattern {
        Pattern::from_permutation(&self.apply(&s.to_permutation())).unwrap()
    }
}

impl fmt::Display for SymmetryTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = [
            (self.inverse, "inverse"),
            (self.reverse, "reverse"),
            (self.complement, "complement"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, name)| *name)
        .collect();
        if parts.is_empty() {
            f.write_str("identity")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl fmt::Debug for SymmetryTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetryTransform({self})")
    }
}

/// Representatives of the eight symmetry classes of length-4 patterns.
pub const CLASS_REPRESENTATIVES: [&str; 8] =
    ["1234", "1243", "2143", "1324", "1342", "1423", "1432", "2413"];

/// Maps a length-4 pattern to its class representative.
///
/// Returns the representative and a transform `t` with `t(s) == rep`, so that
/// `count(p, s) == count(t(p), rep)`. Representatives map to themselves.
pub fn canonicalize(s: &Pattern) -> Result<(Pattern, SymmetryTransform)> {
    if s.len() != 4 {
        return Err(Error::InvalidPattern(format!("{s} does not have length 4")));
    }
    let reps: Vec<Pattern> = CLASS_REPRESENTATIVES.iter().map(|r| r.parse().unwrap()).collect();
    for t in SymmetryTransform::ALL {
        let image = t.apply_pattern(s);
        if let Some(rep) = reps.iter().find(|r| **r == image) {
            return Ok((*rep, t));
        }
    }
    unreachable!("every length-4 pattern lies in one of the eight classes")
}
