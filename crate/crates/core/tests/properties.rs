use patcount::oracle::oracle_count;
use patcount::symmetry::SymmetryTransform;
use patcount::{count, list_copies, Pattern, Permutation, Precision};
use proptest::prelude::*;

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_zero_based(v).unwrap())
}

fn pattern(k: usize) -> impl Strategy<Value = Pattern> {
    let all = Pattern::all(k);
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_counts_equal_brute_force(p in perm(24), s in (2usize..=5).prop_flat_map(pattern)) {
        prop_assert_eq!(count(&p, &s, Precision::Exact).unwrap(), oracle_count(&p, &s) as f64);
    }

    #[test]
    fn estimates_are_sandwiched(p in perm(40), s in (4usize..=5).prop_flat_map(pattern), eps in 0.05f64..0.95) {
        let exact = oracle_count(&p, &s) as f64;
        let e = count(&p, &s, Precision::Approx(eps)).unwrap();
        prop_assert!(e <= exact + 1e-9);
        prop_assert!(exact <= (1.0 + eps) * e + 1e-9);
        prop_assert_eq!(e == 0.0, exact == 0.0);
    }

    #[test]
    fn four_patterns_partition_quadruples(p in perm(30)) {
        let n = p.len() as f64;
        let total: f64 = Pattern::all(4).iter().map(|s| count(&p, s, Precision::Exact).unwrap()).sum();
        let want = if p.len() < 4 { 0.0 } else { n * (n - 1.0) * (n - 2.0) * (n - 3.0) / 24.0 };
        prop_assert_eq!(total, want);
    }

    #[test]
    fn counts_are_symmetry_invariant(p in perm(30), s in pattern(5), t in 0usize..8) {
        let t = SymmetryTransform::ALL[t];
        let a = count(&p, &s, Precision::Exact).unwrap();
        let b = count(&t.apply(&p), &t.apply_pattern(&s), Precision::Exact).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn listings_are_prefix_stable(p in perm(30), s in (4usize..=5).prop_flat_map(pattern), t in 0usize..40) {
        let all = list_copies(&p, &s, None).unwrap().copies;
        let part = list_copies(&p, &s, Some(t)).unwrap().copies;
        prop_assert_eq!(&part[..], &all[..t.min(all.len())]);
        prop_assert!(part.iter().all(|c| c.is_copy_of(&p, &s)));
    }
}
