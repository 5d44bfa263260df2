//! Diagonal division checked against plain synthetic division of f, seen as
//! a polynomial in y with coefficients in Z[z], by the monic y − z.

use banalg::campaign::{sample, CampaignConfig};
use banalg::division::{certify_poly_bound, diag_divide, reconstructs};
use banalg::scalars::{q, BanachRing};
use banalg::series::{AlgebraFlavor, MultiSeries};
use num_traits::ToPrimitive;

/// Dense z-polynomial, index = power of z.
type ZPoly = Vec<i128>;

fn zp_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
}

fn times_z(a: &ZPoly) -> ZPoly {
    let mut out = vec![0];
    out.extend_from_slice(a);
    out
}

/// rows[i] is the coefficient of y^i. Returns (quotient rows, remainder).
fn synthetic_divide(rows: &[ZPoly]) -> (Vec<ZPoly>, ZPoly) {
    let d = rows.len() - 1;
    if d == 0 {
        return (vec![], rows[0].clone());
    }
    let mut b = vec![ZPoly::new(); d];
    b[d - 1] = rows[d].clone();
    for i in (1..d).rev() {
        b[i - 1] = zp_add(&rows[i], &times_z(&b[i]));
    }
    let rem = zp_add(&rows[0], &times_z(&b[0]));
    (b, rem)
}

fn to_rows(f: &MultiSeries) -> Vec<ZPoly> {
    let dy = f.terms().map(|(e, _)| e.0[0]).max().unwrap_or(0) as usize;
    let mut rows = vec![ZPoly::new(); dy + 1];
    for (e, c) in f.terms() {
        assert!(c.is_integer());
        let (i, j) = (e.0[0] as usize, e.0[1] as usize);
        if rows[i].len() <= j {
            rows[i].resize(j + 1, 0);
        }
        rows[i][j] += c.to_integer().to_i128().unwrap();
    }
    rows
}

fn from_rows(rows: &[ZPoly], ring: &BanachRing, order: u32) -> MultiSeries {
    let mut terms = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c != 0 {
                terms.push((vec![i as u32, j as u32], q(*c as i64)));
            }
        }
    }
    MultiSeries::from_terms(ring, 2, order, terms).unwrap()
}

fn oracle(f: &MultiSeries) -> MultiSeries {
    let (quot, rem) = synthetic_divide(&to_rows(f));
    assert!(rem.iter().all(|c| *c == 0), "not on the diagonal");
    from_rows(&quot, &f.ring, f.order)
}

fn fine_norm(rows: &[ZPoly]) -> i128 {
    rows.iter().flatten().map(|c| c.abs()).sum()
}

#[test]
fn sampled_quotients_match_synthetic_division() {
    let mut cfg = CampaignConfig::new(AlgebraFlavor::Polynomial, BanachRing::integers(), 10);
    cfg.seed = 11;
    for i in 0..300 {
        let f = sample(&cfg, i);
        let g = diag_divide(&f).unwrap();
        assert_eq!(g, oracle(&f), "trial {i}");
        assert!(reconstructs(&f, &g).unwrap());
        let c = certify_poly_bound(&f).unwrap();
        let (gr, fr) = (to_rows(&g), to_rows(&f));
        assert_eq!(c.output_norm, q(fine_norm(&gr) as i64));
        assert_eq!(c.input_norm, q(fine_norm(&fr) as i64));
    }
}

// frozen from the oracle above
#[test]
fn frozen_quotients() {
    let z = BanachRing::integers();
    // y^3 − z^3 = (y − z)(y^2 + yz + z^2)
    let f = MultiSeries::from_ints(&z, 2, 8, &[(&[3, 0], 1), (&[0, 3], -1)]);
    let g = diag_divide(&f).unwrap();
    assert_eq!(g, MultiSeries::from_ints(&z, 2, 8, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
    let c = certify_poly_bound(&f).unwrap();
    assert_eq!((c.input_norm, c.output_norm, c.bound_constant), (q(2), q(3), q(27)));

    // y^5 − z^5 + 7(y^2 − z^2) − 4yz(y − z)
    let f = MultiSeries::from_ints(
        &z,
        2,
        8,
        &[(&[5, 0], 1), (&[0, 5], -1), (&[2, 0], 7), (&[0, 2], -7), (&[2, 1], -4), (&[1, 2], 4)],
    );
    let expect = MultiSeries::from_ints(
        &z,
        2,
        8,
        &[(&[4, 0], 1), (&[3, 1], 1), (&[2, 2], 1), (&[1, 3], 1), (&[0, 4], 1), (&[1, 0], 7), (&[0, 1], 7), (&[1, 1], -4)],
    );
    assert_eq!(oracle(&f), expect);
    assert_eq!(diag_divide(&f).unwrap(), expect);
    let c = certify_poly_bound(&f).unwrap();
    assert_eq!((c.input_norm, c.output_norm, c.bound_constant), (q(24), q(23), q(125)));
    assert!(c.pass);
}

#[test]
fn off_diagonal_input_is_rejected() {
    let z = BanachRing::integers();
    let f = MultiSeries::from_ints(&z, 2, 6, &[(&[2, 0], 1), (&[0, 1], 1)]);
    assert!(diag_divide(&f).is_err());
    let (_, rem) = synthetic_divide(&to_rows(&f));
    assert!(rem.iter().any(|c| *c != 0));
}
