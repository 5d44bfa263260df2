//! Koszul complexes over truncated algebras, homology on the stable band,
//! and ℤ torsion.

use banalg::algebra::TruncAlgebra;
use banalg::complexes::{diagonal_koszul, koszul};
use banalg::scalars::{q, BanachRing};
use banalg::series::AlgebraFlavor;

fn main() -> banalg::error::Result<()> {
    let qq = BanachRing::rationals();
    let a = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 2, 6)?;
    let (x, y) = (a.var(0), a.var(1));

    for (name, elems) in [
        ("ℚ[x,y] ⫽ (x, y)", vec![x.clone(), y.clone()]),
        ("ℚ[x,y] ⫽ (x²)", vec![x.pow(2)]),
        ("ℚ[x,y] ⫽ (x², x)", vec![x.pow(2), x.clone()]),
        ("ℚ[x,y] ⫽ (xy, x)", vec![x.mul(&y)?, x.clone()]),
    ] {
        let k = koszul(&a, &elems)?;
        let h = k.stable(6)?;
        println!("{name:<20} ranks per degree {:?}  H⁰, H⁻¹, … = {:?}", k.ranks(), h.ranks_down());
    }

    // over ℤ the band-N homology carries torsion
    let z = BanachRing::integers();
    let az = TruncAlgebra::uniform(&z, &AlgebraFlavor::Polynomial, 1, 4)?;
    let k = koszul(&az, &[az.constant(q(6)), az.var(0)])?;
    let h = k.stable(4)?;
    println!("\nℤ[x] ⫽ (6, x): H⁰ rank {} torsion {:?}", h.rank(0), h.torsion(0));

    // the diagonal sequence C⊗C → C⊗C → C
    for fl in [AlgebraFlavor::Polynomial, AlgebraFlavor::tate(q(1)), AlgebraFlavor::formal()] {
        let c = TruncAlgebra::uniform(&qq, &fl, 1, 6)?;
        println!("diagonal sequence for {:<10} exact: {}", fl.label(), diagonal_koszul(&c)?.is_exact(6)?);
    }
    Ok(())
}
