use banalg::campaign::certificate_ok;
use banalg::division::{certify_for_flavor, diag_divide, diagonal_element};
use banalg::parse::{parse_diagonal_series, parse_series};
use banalg::scalars::{q, BanachRing};
use banalg::series::{AlgebraFlavor, MultiSeries};
use proptest::prelude::*;

const ORDER: u32 = 7;

fn terms(nvars: usize, deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=deg, nvars), -50i64..=50), 0..12)
}

fn build(ring: &BanachRing, nvars: usize, ts: Vec<(Vec<u32>, i64)>) -> MultiSeries {
    let ts = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= ORDER).map(|(e, c)| (e, q(c)));
    MultiSeries::from_terms(ring, nvars, ORDER, ts).unwrap()
}

proptest! {
    #[test]
    fn dividing_a_product_recovers_the_cofactor(ts in terms(2, ORDER - 1)) {
        let z = BanachRing::integers();
        let h = build(&z, 2, ts).with_order(ORDER - 1).with_order(ORDER);
        let f = diagonal_element(&z, ORDER).mul(&h).unwrap();
        prop_assert_eq!(diag_divide(&f).unwrap(), h);
    }

    #[test]
    fn certificates_hold_on_products(ts in terms(2, ORDER - 1), which in 0usize..3) {
        let z = BanachRing::integers();
        let h = build(&z, 2, ts).with_order(ORDER - 1).with_order(ORDER);
        let f = diagonal_element(&z, ORDER).mul(&h).unwrap();
        let fl = [AlgebraFlavor::Polynomial, AlgebraFlavor::tate(q(1)), AlgebraFlavor::formal()][which].clone();
        let c = certify_for_flavor(&f, &fl).unwrap();
        prop_assert!(certificate_ok(&c));
    }

    #[test]
    fn pretty_printing_parses_back(ts in terms(3, ORDER)) {
        let r = BanachRing::rationals();
        let f = build(&r, 3, ts);
        prop_assert_eq!(parse_series(&f.pretty(), &r, 3, ORDER).unwrap(), f);
    }

    #[test]
    fn diagonal_names_parse_back(ts in terms(2, ORDER)) {
        let z = BanachRing::integers();
        let f = build(&z, 2, ts);
        prop_assert_eq!(parse_diagonal_series(&f.pretty_diagonal(), &z, ORDER).unwrap(), f);
    }
}
