//! Brute-force reference counts over all increasing k-tuples.

use crate::perm::{lehmer_rank, CopyTuple, Pattern, Permutation};

/// Exact number of copies of `s` in `p`, by exhaustive search.
pub fn oracle_count(p: &Permutation, s: &Pattern) -> u128 {
    let mut total = 0u128;
    visit_matching(p, s, &mut |_| total += 1);
    total
}

/// All copies of `s` in `p` in lexicographic order of positions.
pub fn oracle_enumerate(p: &Permutation, s: &Pattern) -> Vec<CopyTuple> {
    let mut out = Vec::new();
    visit_matching(p, s, &mut |pos| out.push(CopyTuple::from_zero_based(pos)));
    out
}

/// Counts of every length-`k` pattern at once, indexed by [`Pattern::rank`].
pub fn oracle_count_all(p: &Permutation, k: usize) -> Vec<u128> {
    let mut hist = vec![0u128; (1..=k).product()];
    let mut vals = Vec::with_capacity(k);
    fn rec(p: &Permutation, k: usize, start: usize, vals: &mut Vec<u32>, hist: &mut [u128]) {
        if vals.len() == k {
            hist[lehmer_rank(vals)] += 1;
            return;
        }
        let need = k - vals.len();
        for i in start..=p.len().saturating_sub(need) {
            if p.len() < need {
                break;
            }
            vals.push(p.value(i));
            rec(p, k, i + 1, vals, hist);
            vals.pop();
        }
    }
    if k <= p.len() {
        rec(p, k, 0, &mut vals, &mut hist);
    }
    hist
}

/// Calls `f` with the 0-based positions of each copy, pruning partial tuples
/// whose relative order already disagrees with the pattern.
fn visit_matching(p: &Permutation, s: &Pattern, f: &mut dyn FnMut(&[u32])) {
    let k = s.len();
    if k > p.len() {
        return;
    }
    let mut pos = Vec::with_capacity(k);
    fn rec(p: &Permutation, s: &Pattern, start: usize, pos: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        let d = pos.len();
        if d == s.len() {
            f(pos);
            return;
        }
        let need = s.len() - d;
        for i in start..=p.len() - need {
            let v = p.value(i);
            let ok = pos
                .iter()
                .enumerate()
                .all(|(a, &q)| (p.value(q as usize) < v) == (s.at(a) < s.at(d)));
            if ok {
                pos.push(i as u32);
                rec(p, s, i + 1, pos, f);
                pos.pop();
            }
        }
    }
    rec(p, s, 0, &mut pos, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::random_permutation;

    #[test]
    fn identity_counts_binomials() {
        let p = Permutation::identity(12);
        assert_eq!(oracle_count(&p, &"1234".parse().unwrap()), 495);
        assert_eq!(oracle_count(&p, &"2134".parse().unwrap()), 0);
    }

    #[test]
    fn histogram_agrees_with_single_counts() {
        let p = random_permutation(13, 11);
        for k in 1..=5 {
            let hist = oracle_count_all(&p, k);
            let total: u128 = hist.iter().sum();
            let binom: u128 = (0..k as u128).fold(1, |acc, i| acc * (13 - i) / (i + 1));
            assert_eq!(total, binom);
            for s in Pattern::all(k) {
                assert_eq!(hist[s.rank()], oracle_count(&p, &s), "pattern {s}");
            }
        }
    }

    #[test]
    fn enumerate_is_sorted_and_valid() {
        let p = random_permutation(11, 2);
        let s: Pattern = "2413".parse().unwrap();
        let copies = oracle_enumerate(&p, &s);
        assert_eq!(copies.len() as u128, oracle_count(&p, &s));
        assert!(copies.windows(2).all(|w| w[0] < w[1]));
        assert!(copies.iter().all(|c| c.is_copy_of(&p, &s)));
    }
}
