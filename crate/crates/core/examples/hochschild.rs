//! Hochschild homology three ways (Koszul, complete intersection, bar) and
//! base change along homotopy epimorphisms.

use banalg::algebra::{AlgebraMap, TruncAlgebra};
use banalg::hochschild::{hh_bar, hh_base_change, hh_complete_intersection, hh_koszul, hkr_expected, FiniteAlgebra};
use banalg::scalars::{q, BanachRing};
use banalg::series::AlgebraFlavor;

fn main() -> banalg::error::Result<()> {
    let qq = BanachRing::rationals();
    for (nv, n) in [(1, 6), (2, 4), (3, 3)] {
        let a = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, nv, n)?;
        println!("HH(ℚ[x1..x{nv}]) at N={n}: {:?}  HKR {:?}", hh_koszul(&a)?.ranks, hkr_expected(nv, n));
    }

    let p = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, 6)?;
    let x = p.var(0);
    for k in 2..=4 {
        let ci = hh_complete_intersection(&p, &[x.pow(k)], 4, None)?.report;
        let bar = hh_bar(&FiniteAlgebra::truncated_polynomial(&qq, k as usize)?, 4)?;
        println!("ℚ[x]/(x^{k}): complete intersection {:?}, bar {:?}", ci.ranks, bar.ranks);
    }
    println!("ℚ × ℚ by the bar complex: {:?}", hh_bar(&FiniteAlgebra::product_of_copies(&qq, 2)?, 3)?.ranks);

    let q2 = BanachRing::padic(2, 16)?;
    for (ring, fl) in [(&q2, AlgebraFlavor::tate(q(1))), (&qq, AlgebraFlavor::formal())] {
        let a = TruncAlgebra::uniform(ring, &AlgebraFlavor::Polynomial, 1, 6)?;
        let b = TruncAlgebra::uniform(ring, &fl, 1, 6)?;
        let bc = hh_base_change(&AlgebraMap::canonical(&a, &b)?)?;
        println!("{}: B ⊗ HH(A) {:?} vs HH(B) {:?} agree={}", bc.map, bc.base_changed, bc.target.ranks, bc.agrees);
        let quot = hh_complete_intersection(&a, &[a.var(0).pow(2)], 3, Some(&fl))?;
        println!("  modulo x²: base change {:?}", quot.base_change);
    }
    Ok(())
}
