//! Derived Weierstrass, Laurent and rational localizations, adic
//! completion, and the selfproduct test B ⊗_A B ≅ B.

use banalg::algebra::TruncAlgebra;
use banalg::localization::{adic_completion, laurent, rational, verify_localization, weierstrass, Witness};
use banalg::scalars::{q, qf, BanachRing};
use banalg::series::AlgebraFlavor;

fn show(name: &str, r: &banalg::localization::LocalizationReport) {
    println!(
        "{name:<34} H = {:?}  B⊗B = {:?}  strict {:?}  verdict {}",
        r.homology.ranks_down(),
        r.selfproduct.ranks_down(),
        r.strict_flavors.iter().map(|(_, ok)| *ok).collect::<Vec<_>>(),
        r.verdict
    );
}

fn main() -> banalg::error::Result<()> {
    let n = 6;
    let z = BanachRing::integers();
    let pt = TruncAlgebra::ground(&z, n);
    let two = pt.constant(q(2));
    show("ℤ → ℤ{2y}† (dagger, y = 2)", &verify_localization(&weierstrass(&pt, &AlgebraFlavor::dagger(qf(1, 2)), &two)?)?);
    show("ℤ → ℤ{2y} (disc, y = 2)", &verify_localization(&weierstrass(&pt, &AlgebraFlavor::disc(qf(1, 2)), &two)?)?);

    let q2 = BanachRing::padic(2, 16)?;
    let t = AlgebraFlavor::tate(q(1));
    let a = TruncAlgebra::uniform(&q2, &t, 1, n)?;
    let x = a.var(0);
    show("ℚ_2⟨x⟩ → ℚ_2⟨x,y⟩/(y − x)", &verify_localization(&weierstrass(&a, &t, &x)?)?);
    show("ℚ_2⟨x⟩ → ℚ_2⟨x,y⟩/(1 − xy)", &verify_localization(&laurent(&a, &t, &x)?)?);

    let g = a.one().add(&x)?;
    let w = Witness { a: a.one(), b: a.zero() };
    let r = rational(&a, std::slice::from_ref(&t), &g, &[a.one()], &[w])?;
    println!("rational splitting verified: {:?}", r.splitting_verified);
    show("ℚ_2⟨x⟩ → ℚ_2⟨x,y⟩/((1+x)y − 1)", &verify_localization(&r)?);

    let bad = Witness { a: a.zero(), b: a.zero() };
    match rational(&a, &[t], &x, &[x.pow(2)], &[bad]) {
        Err(e) => println!("g = x, f = x²: {e}"),
        Ok(_) => unreachable!(),
    }

    let qq = BanachRing::rationals();
    let p = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, n)?;
    let c = adic_completion(&p, &[p.var(0)])?;
    println!("x-adic completion of ℚ[x]: H = {:?}", c.complex()?.stable(n)?.ranks_down());
    Ok(())
}
