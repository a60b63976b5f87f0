use num_bigint::BigInt;
use proptest::prelude::*;

use unimodal_rank::genfun::{Route, UnimodalTableSet};
use unimodal_rank::oracles::StatTable;
use unimodal_rank::series::{mul_geom_inverse, partition_series, series_mul, TruncSeries};
use unimodal_rank::verify::EmpiricalDist;

fn small_series(max_order: usize) -> impl Strategy<Value = TruncSeries> {
    (0..=max_order).prop_flat_map(|order| {
        prop::collection::vec(-9i64..=9, order + 1).prop_map(|c| TruncSeries::from_i64s(&c))
    })
}

fn series_of_order(order: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(-9i64..=9, order + 1).prop_map(|c| TruncSeries::from_i64s(&c))
}

proptest! {
    #[test]
    fn mul_commutes(a in small_series(50), b in small_series(50)) {
        prop_assert_eq!(series_mul(&a, &b), series_mul(&b, &a));
    }

    #[test]
    fn mul_associates(
        (a, b, c) in (0usize..=50).prop_flat_map(|n| {
            (series_of_order(n), series_of_order(n), series_of_order(n))
        })
    ) {
        let left = series_mul(&series_mul(&a, &b), &c);
        let right = series_mul(&a, &series_mul(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn one_is_identity(a in small_series(50)) {
        let one = TruncSeries::one(a.trunc_order());
        prop_assert_eq!(series_mul(&one, &a), a.clone());
        prop_assert_eq!(series_mul(&a, &one), a);
    }

    #[test]
    fn mul_truncates_to_smaller_order(a in small_series(30), b in small_series(30)) {
        let p = series_mul(&a, &b);
        prop_assert_eq!(p.trunc_order(), a.trunc_order().min(b.trunc_order()));
        prop_assert!(p.coeff(p.trunc_order() + 1).is_err());
    }

    #[test]
    fn geometric_inverse_round_trip(a in small_series(50), j in 1usize..12) {
        let order = a.trunc_order();
        let binomial = TruncSeries::from_terms(order, [(0usize, 1i64), (j, -1)]);
        let back = mul_geom_inverse(&series_mul(&a, &binomial), j).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn reflection_preserves_kolmogorov_distance(
        counts in prop::collection::btree_map(-15i64..=15, 1u64..1_000_000, 1..20)
    ) {
        let mut row = StatTable::new(40);
        for (m, c) in &counts {
            row.add(*m, *c);
        }
        let d = EmpiricalDist::from_row(&row).kolmogorov_distance();
        let r = EmpiricalDist::from_row(&row.reflected()).kolmogorov_distance();
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert!((d - r).abs() < 1e-12, "{} vs {}", d, r);
    }

    #[test]
    fn table_text_round_trip(order in 1usize..60) {
        let t = UnimodalTableSet::per_m(order);
        let text = UnimodalTableSet::from_text(&t.to_text(), Route::PerM, Some(order)).unwrap();
        prop_assert_eq!(&text, &t);
        let v = t.to_json();
        prop_assert_eq!(UnimodalTableSet::from_json(&v, Route::PerM).unwrap(), t);
    }
}

#[test]
fn partition_series_matches_product_chain() {
    let order = 150;
    let mut chain = TruncSeries::one(order);
    for j in 1..=order {
        chain = mul_geom_inverse(&chain, j).unwrap();
    }
    assert_eq!(partition_series(order), chain);
}

#[test]
fn partition_number_has_22_digits_at_500() {
    let p = partition_series(500);
    let want: BigInt = "2300165032574323995027".parse().unwrap();
    assert_eq!(p.coeff(500).unwrap(), &want);
}
