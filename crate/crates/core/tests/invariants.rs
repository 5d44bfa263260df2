use banalg::algebra::{AlgebraMap, TruncAlgebra};
use banalg::hepi::{check_tensor_closure, check_two_out_of_three, verify_hepi};
use banalg::hochschild::{hh_bar, hh_complete_intersection, hh_koszul, hkr_expected, FiniteAlgebra};
use banalg::localization::{laurent, verify_localization, weierstrass, Localization};
use banalg::matrix::hepi_cases;
use banalg::scalars::{q, qf, BanachRing};
use banalg::series::AlgebraFlavor;

fn one_var(ring: &BanachRing, fl: &AlgebraFlavor, order: u32) -> TruncAlgebra {
    TruncAlgebra::uniform(ring, fl, 1, order).unwrap()
}

#[test]
fn verdicts_do_not_depend_on_the_order() {
    for (ring, src, tgt, expected) in hepi_cases().unwrap() {
        for order in [4, 6, 8] {
            let f = AlgebraMap::canonical(&one_var(&ring, &src, order), &one_var(&ring, &tgt, order)).unwrap();
            let v = verify_hepi(&f).unwrap();
            assert_eq!(v.verdict, expected, "{} at N={order}", v.map);
        }
    }
}

#[test]
fn chains_compose() {
    let q2 = BanachRing::padic(2, 16).unwrap();
    let p = one_var(&q2, &AlgebraFlavor::Polynomial, 6);
    let t1 = one_var(&q2, &AlgebraFlavor::tate(q(1)), 6);
    let t2 = one_var(&q2, &AlgebraFlavor::tate(qf(1, 2)), 6);
    let r = check_two_out_of_three(&AlgebraMap::canonical(&p, &t1).unwrap(), &AlgebraMap::canonical(&t1, &t2).unwrap()).unwrap();
    assert!(r.f && r.g && r.composite && r.consistent);

    let qq = BanachRing::rationals();
    let p = one_var(&qq, &AlgebraFlavor::Polynomial, 5);
    let d = one_var(&qq, &AlgebraFlavor::dagger(q(1)), 5);
    let s = one_var(&qq, &AlgebraFlavor::stein(q(1), 3), 5);
    let c = check_tensor_closure(&AlgebraMap::canonical(&p, &d).unwrap(), &AlgebraMap::canonical(&p, &s).unwrap()).unwrap();
    assert!(c.f && c.g && c.tensor && c.holds);
}

#[test]
fn disc_failure_is_seen_by_tensor_closure_too() {
    let z = BanachRing::integers();
    let d1 = one_var(&z, &AlgebraFlavor::disc(q(1)), 5);
    let d2 = one_var(&z, &AlgebraFlavor::disc(qf(1, 2)), 5);
    let p = one_var(&z, &AlgebraFlavor::Polynomial, 5);
    let fm = one_var(&z, &AlgebraFlavor::formal(), 5);
    let c = check_tensor_closure(&AlgebraMap::canonical(&d1, &d2).unwrap(), &AlgebraMap::canonical(&p, &fm).unwrap()).unwrap();
    assert!(!c.f && c.g && c.holds);
}

// pushing a Weierstrass localization A → B along A → C = A<w> is the
// Weierstrass localization of C at the same element, and stays a hepi
#[test]
fn derived_base_change_of_weierstrass() {
    let q2 = BanachRing::padic(2, 16).unwrap();
    let t = AlgebraFlavor::tate(q(1));
    let a = one_var(&q2, &t, 5);
    let b = weierstrass(&a, &t, &a.var(0).scale(&q(2))).unwrap();
    assert!(verify_localization(&b).unwrap().verdict);
    for extra in [t.clone(), AlgebraFlavor::dagger(qf(1, 2))] {
        let c = a.tensor(&one_var(&q2, &extra, 5)).unwrap();
        let pushed = weierstrass(&c, &t, &c.var(0).scale(&q(2))).unwrap();
        let r = verify_localization(&pushed).unwrap();
        assert!(r.verdict, "{}", r.algebra);
    }
}

#[test]
fn two_step_localizations_verify_in_either_order() {
    let q2 = BanachRing::padic(2, 16).unwrap();
    let t = AlgebraFlavor::tate(q(1));
    let a = one_var(&q2, &t, 5);
    let x = a.var(0);
    let w1 = Localization::over(&a).weierstrass_step(&t, &x).unwrap();
    let wl = w1.laurent_step(&t, &w1.lift_base(&x).unwrap()).unwrap();
    let l1 = Localization::over(&a).laurent_step(&t, &x).unwrap();
    let lw = l1.weierstrass_step(&t, &l1.lift_base(&x).unwrap()).unwrap();
    let (rw, rl) = (verify_localization(&wl).unwrap(), verify_localization(&lw).unwrap());
    assert!(rw.verdict && rl.verdict);
    assert!(rw.homology.same_ranks(&rl.homology));
    assert!(verify_localization(&laurent(&a, &t, &x).unwrap()).unwrap().verdict);
}

#[test]
fn hochschild_models_agree() {
    let qq = BanachRing::rationals();
    for k in 2..=4usize {
        let bar = hh_bar(&FiniteAlgebra::truncated_polynomial(&qq, k).unwrap(), 4).unwrap();
        let p = one_var(&qq, &AlgebraFlavor::Polynomial, 8);
        let ci = hh_complete_intersection(&p, &[p.var(0).pow(k as u32)], 4, None).unwrap().report;
        assert_eq!(bar.ranks, ci.ranks, "x^{k}");
        assert_eq!(bar.ranks[0], k);
    }
    for n in 1..=2 {
        let p = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, n, 4).unwrap();
        assert_eq!(hh_koszul(&p).unwrap().ranks, hkr_expected(n, 4));
    }
}
