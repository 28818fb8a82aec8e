//! Recurrence-based counts against exhaustive enumeration.

use num_bigint::BigInt;
use partkit::counting::{partition_number, q_count, s_sum, v_count};
use partkit::partition::{count_partitions_brute, BruteTally, EnumerationCap};
use partkit::series::{euler_product, q_generating_series};
use partkit::BigCount;

fn cap() -> EnumerationCap {
    EnumerationCap::default()
}

#[test]
fn partition_number_matches_enumeration() {
    for n in 0..=40u64 {
        assert_eq!(partition_number(n as i64), count_partitions_brute(n, cap()).unwrap(), "n={n}");
    }
}

#[test]
fn q_v_s_match_enumeration() {
    for n in 0..=40u64 {
        let t = BruteTally::compute(n, cap()).unwrap();
        assert_eq!(&s_sum(n), t.distinct_total(), "S({n})");
        for k in 1..=n {
            assert_eq!(q_count(k, n as i64).unwrap(), t.occurrences(k), "Q_{k}({n})");
            assert_eq!(v_count(k, n as i64).unwrap(), t.repeated(k), "V_{k}({n})");
        }
    }
}

#[test]
fn brute_stanley_and_elder() {
    for n in 0..=40u64 {
        let t = BruteTally::compute(n, cap()).unwrap();
        assert_eq!(t.distinct_total(), &t.occurrences(1));
        for k in 1..=n {
            assert_eq!(t.repeated(k), t.occurrences(k));
        }
    }
}

#[test]
fn s_recurrence_to_200() {
    for n in 1..=200i64 {
        for k in 1..=n as u64 {
            let lhs = q_count(k, n).unwrap();
            let rhs = q_count(k, n - k as i64).unwrap() + partition_number(n - k as i64);
            assert_eq!(lhs, rhs, "k={k} n={n}");
        }
    }
}

#[test]
fn expansion_written_out() {
    // Q_1(5) = P(4) + P(3) + P(2) + P(1) + P(0)
    assert_eq!(q_count(1, 5).unwrap(), BigCount::from(5u32 + 3 + 2 + 1 + 1));
    // Q_5(24) = P(19) + P(14) + P(9) + P(4)
    let q = q_count(5, 24).unwrap();
    assert_eq!(q, BigCount::from(490u32 + 135 + 30 + 5));
    assert_eq!(q, BruteTally::compute(24, cap()).unwrap().occurrences(5));
}

#[test]
fn monotone_from_one() {
    for n in 1..=300 {
        assert!(partition_number(n + 1) >= partition_number(n));
    }
}

#[test]
fn series_coefficients_match_counts() {
    let f = euler_product(200);
    for m in 0..=200 {
        assert_eq!(f.coeff(m), BigInt::from(partition_number(m as i64)), "P({m})");
    }
    for k in 1..=12u64 {
        let g = q_generating_series(k as usize, 200).unwrap();
        for m in 0..=200 {
            assert_eq!(g.coeff(m), BigInt::from(q_count(k, m as i64).unwrap()), "Q_{k}({m})");
        }
    }
}
