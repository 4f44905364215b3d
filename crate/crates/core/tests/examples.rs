//! Small worked examples through the public API.

use patcount::count4::classify_copy_type;
use patcount::count4::Heaviness;
use patcount::oracle::{oracle_count, oracle_enumerate};
use patcount::range12::{approx_12_in_rect, list_12_in_rect, PairKind, RangeTree2D};
use patcount::segtree::SegTree1D;
use patcount::symmetry::canonicalize;
use patcount::{count, count4, count5, ingest, list_copies, CopyTuple, Error, Pattern, Permutation, Precision, Rect};

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

/// 1 3 6 5 4 8 2 7 9.
fn nine() -> Permutation {
    ingest(&[1.0, 3.0, 6.0, 5.0, 4.0, 8.0, 2.0, 7.0, 9.0]).unwrap()
}

#[test]
fn ingest_ranks() {
    assert_eq!(ingest(&[3.5, -1.0, 7.2]).unwrap().to_one_based(), vec![2, 1, 3]);
    assert_eq!(ingest(&[1.0, 2.0, 3.0, 4.0]).unwrap(), Permutation::identity(4));
    assert!(matches!(ingest(&[0.1, 0.1]), Err(Error::DuplicateValue { .. })));
}

#[test]
fn oracle_small_cases() {
    assert_eq!(oracle_count(&Permutation::identity(6), &pat("1234")), 15);
    let p = Permutation::new(&[2, 4, 1, 3]).unwrap();
    assert_eq!(oracle_enumerate(&p, &pat("2413")), vec![CopyTuple::new(&[1, 2, 3, 4])]);
    assert!(oracle_enumerate(&Permutation::new(&[2, 1]).unwrap(), &pat("12")).is_empty());
    assert_eq!(oracle_enumerate(&Permutation::identity(3), &pat("12")).len(), 3);
}

#[test]
fn nine_point_regression() {
    // Frozen from brute force over all 126 quadruples.
    let p = nine();
    assert_eq!(oracle_count(&p, &pat("1324")), 32);
    assert_eq!(count(&p, &pat("1324"), Precision::Exact).unwrap(), 32.0);
    for eps in [0.3, 0.1] {
        let e = count4(&p, &pat("1324"), Precision::Approx(eps)).unwrap();
        assert!(e <= 32.0 && 32.0 <= (1.0 + eps) * e);
    }
}

#[test]
fn nine_point_segment_tree() {
    let t = SegTree1D::build(&nine());
    assert_eq!(t.count_rect(1, 9, 1, 9).unwrap(), 9);
    assert_eq!(t.count_rect(1, 2, 1, 1).unwrap(), 1);
    // Leftmost point with position in 4..9 and value in 7..9 has value 8.
    assert_eq!(t.select_by_location(4, 9, 7, 9, 1).unwrap(), 6);
    // Between the 6 at position 3 and the 9 at position 9, values below 6.
    let twos: Vec<usize> = (1..=3).map(|l| t.select_by_value(4, 8, 1, 5, l).unwrap()).collect();
    assert_eq!(twos, vec![5, 4, 2]);
    assert!(t.count_rect(2, 1, 1, 9).is_err());
}

#[test]
fn identity_select() {
    let t = SegTree1D::build(&Permutation::identity(7));
    assert_eq!(t.select_by_location(1, 7, 1, 7, 1).unwrap(), 1);
    assert_eq!(t.select_by_value(1, 7, 1, 7, 1).unwrap(), 7);
}

#[test]
fn symmetry_classes() {
    let (rep, t) = canonicalize(&pat("4321")).unwrap();
    assert_eq!(rep, pat("1234"));
    assert!(t.reverse && !t.inverse && !t.complement);
    assert_eq!(canonicalize(&pat("1324")).unwrap().0, pat("1324"));
    // 3421 and 2134 are complements, so they share a class.
    assert_eq!(canonicalize(&pat("3421")).unwrap().0, canonicalize(&pat("2134")).unwrap().0);
}

#[test]
fn short_patterns() {
    assert_eq!(count(&Permutation::identity(5), &pat("123"), Precision::Exact).unwrap(), 10.0);
    assert_eq!(count(&Permutation::new(&[2, 1]).unwrap(), &pat("21"), Precision::Approx(0.1)).unwrap(), 1.0);
}

#[test]
fn two_dimensional_ranges() {
    let id = Permutation::identity(8);
    let t = RangeTree2D::build(&id, PairKind::Increasing);
    assert_eq!(approx_12_in_rect(&t, &Rect::new(0, 7, 0, 7), Precision::Exact), 28.0);
    let id4 = RangeTree2D::build(&Permutation::identity(4), PairKind::Increasing);
    assert_eq!(list_12_in_rect(&id4, &Rect::new(0, 3, 0, 3), 100).len(), 6);
    let rev = RangeTree2D::build(&Permutation::identity(50).reversed(), PairKind::Increasing);
    assert_eq!(approx_12_in_rect(&rev, &Rect::new(0, 49, 0, 49), Precision::Approx(0.1)), 0.0);
    assert!(list_12_in_rect(&rev, &Rect::new(0, 49, 0, 49), 10).is_empty());
}

#[test]
fn copy_types() {
    assert_eq!(classify_copy_type([0, 6, 7, 14]), (3, Heaviness::FourHeavy));
    assert_eq!(classify_copy_type([0, 6, 9, 14]).0, 3);
    for j in 1..6 {
        assert_eq!(classify_copy_type([0, 0, 1, 1 << j]).0, j);
    }
}

#[test]
fn four_point_patterns() {
    let p = Permutation::new(&[2, 4, 1, 3]).unwrap();
    assert_eq!(count4(&p, &pat("2413"), Precision::Exact).unwrap(), 1.0);
    let id = Permutation::identity(40);
    assert_eq!(count4(&id, &pat("4321"), Precision::Approx(0.1)).unwrap(), 0.0);
    assert_eq!(count4(&id.reversed(), &pat("4321"), Precision::Exact).unwrap(), 91390.0);
    for s in ["1342", "1423", "1432"] {
        let s = pat(s);
        assert_eq!(count4(&s.to_permutation(), &s, Precision::Exact).unwrap(), 1.0);
        assert_eq!(count4(&id, &s, Precision::Approx(0.2)).unwrap(), 0.0);
    }
}

#[test]
fn five_point_patterns() {
    assert_eq!(count5(&Permutation::identity(10), &pat("12345"), Precision::Exact).unwrap(), 252.0);
    let e = count5(&Permutation::identity(10), &pat("12345"), Precision::Approx(0.1)).unwrap();
    assert!(e <= 252.0 && 252.0 <= 1.1 * e);
    let p = Permutation::new(&[2, 4, 1, 3, 5]).unwrap();
    assert_eq!(count5(&p, &pat("24135"), Precision::Exact).unwrap(), 1.0);
    // The factorized case: a lone "1" below-left of a 2413 block.
    let q = Permutation::new(&[1, 3, 5, 2, 4]).unwrap();
    assert_eq!(count5(&q, &pat("13524"), Precision::Exact).unwrap(), 1.0);
    assert_eq!(count5(&Permutation::identity(4), &pat("12345"), Precision::Exact).unwrap(), 0.0);
}

#[test]
fn listing_examples() {
    let l = list_copies(&Permutation::identity(4), &pat("12"), None).unwrap();
    assert_eq!(l.copies.len(), 6);
    let p = Permutation::new(&[2, 4, 1, 3]).unwrap();
    assert_eq!(list_copies(&p, &pat("2413"), Some(5)).unwrap().copies, vec![CopyTuple::new(&[1, 2, 3, 4])]);
    assert!(list_copies(&p, &pat("1234"), Some(5)).unwrap().copies.is_empty());
}

#[test]
fn bad_epsilon_is_rejected() {
    let p = Permutation::identity(5);
    for eps in [0.0, 1.0, -0.5, f64::NAN] {
        assert!(matches!(count(&p, &pat("1234"), Precision::Approx(eps)), Err(Error::InvalidEpsilon(_))));
    }
}
