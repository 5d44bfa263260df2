//! Ground rings and their norms: ℤ and ℚ with |·|, ℚ_p at fixed precision,
//! trivially normed rings and rescaled rings R_r.

use banalg::scalars::{q, qf, BanachRing, Carrier, Scalar};

fn main() -> banalg::error::Result<()> {
    let rings = [
        BanachRing::integers(),
        BanachRing::rationals(),
        BanachRing::padic(2, 16)?,
        BanachRing::padic(3, 8)?,
        BanachRing::trivial(Carrier::Rational),
        BanachRing::rationals().rescaled(qf(1, 2))?,
    ];
    let values = [q(12), qf(-3, 4), qf(5, 9)];
    for ring in &rings {
        print!("{:<18} archimedean={:<5}", ring.label(), ring.archimedean());
        for v in &values {
            if ring.admits(v) {
                let s = Scalar::new(ring, v.clone())?;
                print!("  |{}| = {}", s, banalg::scalars::fmt_q(&s.norm()));
            }
        }
        println!();
    }

    // arithmetic is exact; the p-adic residue only matters for display
    let p = BanachRing::padic(2, 16)?;
    let a = Scalar::new(&p, q(12))?;
    let b = Scalar::new(&p, qf(1, 4))?;
    let prod = a.mul(&b)?;
    println!("\n12 · 1/4 in {}: {} with norm {}", p, prod, banalg::scalars::fmt_q(&prod.norm()));
    println!("residue of 12 mod 2^16: {:?}", a.padic_residue());

    // mixing rings is an error
    let z = Scalar::int(&BanachRing::integers(), 3);
    match a.add(&z) {
        Err(e) => println!("mixing rings: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
