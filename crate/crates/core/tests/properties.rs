use hooklab::cores::{
    dd_to_pair, dd_weight, pair_to_dd, pair_weight, phi1, phi1_inv, phi2, phi2_inv, sc_weight,
    varphi, varphi_inv, varphi_inv_recursive,
};
use hooklab::hooks::{core_pairs_up_to, lemma_ratio_check, pairs_up_to};
use hooklab::macdonald::{macdonald_series, Family};
use hooklab::partition::{enumerate, PartitionClass};
use hooklab::series::{eta_power, exp_cross_check, power_product, Series};
use proptest::prelude::*;

proptest! {
    #[test]
    fn pair_vectors_roundtrip(t in 1usize..6, raw in prop::collection::vec(-3i64..=3, 5)) {
        let v = &raw[..t];
        let pair = varphi_inv(v, t).unwrap();
        prop_assert_eq!(&varphi_inv_recursive(v, t).unwrap(), &pair);
        prop_assert!(pair.is_core_pair(t + 1));
        prop_assert_eq!(varphi(&pair, t).unwrap().entries, v.to_vec());
        prop_assert_eq!(pair.weight() as i64, pair_weight(v, t));
    }

    #[test]
    fn half_vectors_roundtrip(t in 1usize..9, raw in prop::collection::vec(-3i64..=3, 4)) {
        let sc = &raw[..t / 2];
        let lambda = phi1_inv(sc, t).unwrap();
        prop_assert!(lambda.is_self_conjugate());
        prop_assert_eq!(phi1(&lambda, t).unwrap().entries, sc.to_vec());
        prop_assert_eq!(lambda.weight() as i64, sc_weight(sc, t));

        let dd = &raw[..(t - 1) / 2];
        let mu = phi2_inv(dd, t).unwrap();
        prop_assert!(mu.is_doubled_distinct());
        prop_assert_eq!(phi2(&mu, t).unwrap().entries, dd.to_vec());
        prop_assert_eq!(mu.weight() as i64, dd_weight(dd, t));
    }

    #[test]
    fn series_text_is_stable(e in -8i64..12, order in 0usize..12) {
        let s = eta_power(e, order);
        let text = s.to_text();
        prop_assert_eq!(text.lines().count(), order + 1);
        prop_assert_eq!(Series::parse_text(&text).unwrap(), s);
    }
}

#[test]
fn doubled_distinct_bridge_is_a_bijection() {
    for pair in pairs_up_to(14) {
        let nu = pair_to_dd(&pair);
        assert!(nu.is_doubled_distinct());
        assert_eq!(dd_to_pair(&nu).unwrap(), pair);
    }
    for n in (0..=20).step_by(2) {
        for nu in enumerate(PartitionClass::DoubledDistinct, n) {
            assert_eq!(pair_to_dd(&dd_to_pair(&nu).unwrap()), nu);
        }
    }
}

#[test]
fn only_one_reading_of_the_removal_step_holds() {
    for t in 1..=3 {
        for pair in core_pairs_up_to(t, 24) {
            let out = lemma_ratio_check(&pair, t).unwrap();
            assert!(out.report.passed(), "{pair} t={t}");
            if !pair.principal_hooks().is_empty() {
                assert_eq!(out.minus_reading_holds, Some(true), "{pair} t={t}");
                assert_eq!(out.plus_reading_holds, Some(false), "{pair} t={t}");
            }
        }
    }
}

#[test]
fn exponential_route_agrees_with_products() {
    for e in [-7, -2, 3, 10, 21] {
        assert_eq!(exp_cross_check(e, 12), power_product(e, 12), "e={e}");
    }
}

#[test]
fn higher_rank_lattice_sums() {
    assert_eq!(macdonald_series(Family::C, 5, 6).unwrap(), eta_power(55, 6));
    assert_eq!(
        macdonald_series(Family::BC, 4, 6).unwrap(),
        eta_power(28, 6)
    );
    assert_eq!(macdonald_series(Family::A, 7, 4).unwrap(), eta_power(48, 4));
}
