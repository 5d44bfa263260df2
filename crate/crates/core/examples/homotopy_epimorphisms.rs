//! The Koszul criterion for canonical maps between flavors, strictness of
//! each flavor, and the closure properties.

use banalg::algebra::{AlgebraMap, TruncAlgebra};
use banalg::hepi::{check_strictness_condition, check_tensor_closure, check_two_out_of_three, verify_hepi};
use banalg::scalars::{q, qf, BanachRing};
use banalg::series::{AlgebraFlavor, MultiSeries};

fn one(ring: &BanachRing, fl: AlgebraFlavor, order: u32) -> banalg::error::Result<TruncAlgebra> {
    TruncAlgebra::uniform(ring, &fl, 1, order)
}

fn main() -> banalg::error::Result<()> {
    let q2 = BanachRing::padic(2, 16)?;
    let qq = BanachRing::rationals();
    let z = BanachRing::integers();
    let n = 6;

    for (ring, fl) in [
        (&qq, AlgebraFlavor::Polynomial),
        (&q2, AlgebraFlavor::tate(q(1))),
        (&qq, AlgebraFlavor::dagger(q(1))),
        (&qq, AlgebraFlavor::formal()),
        (&qq, AlgebraFlavor::stein(q(1), 3)),
        (&z, AlgebraFlavor::disc(q(1))),
    ] {
        let x = MultiSeries::var(ring, 1, n, 0);
        let r = check_strictness_condition(ring, &fl, n, &x)?;
        println!(
            "strict({:<16} over {:<14}) = {:<5} (exact {}, {}/{} certificates failed)",
            fl.label(),
            ring.label(),
            r.holds,
            r.exact,
            r.certificates_failed,
            r.certificates_checked
        );
    }

    println!();
    for (ring, s, t) in [
        (&q2, AlgebraFlavor::Polynomial, AlgebraFlavor::tate(q(1))),
        (&qq, AlgebraFlavor::Polynomial, AlgebraFlavor::formal()),
        (&qq, AlgebraFlavor::dagger(q(1)), AlgebraFlavor::dagger(qf(1, 2))),
        (&z, AlgebraFlavor::disc(q(1)), AlgebraFlavor::disc(qf(1, 2))),
    ] {
        let v = verify_hepi(&AlgebraMap::canonical(&one(ring, s, n)?, &one(ring, t, n)?)?)?;
        println!("{}\n  B ⊗ K ⊗ B ranks {:?}, expected {} in degree 0, verdict {}", v.map, v.derived_selfproduct_ranks.ranks_down(), v.expected_rank, v.verdict);
    }

    let p = one(&qq, AlgebraFlavor::Polynomial, n)?;
    let d = one(&qq, AlgebraFlavor::dagger(q(1)), n)?;
    let fm = one(&qq, AlgebraFlavor::formal(), n)?;
    let f = AlgebraMap::canonical(&p, &d)?;
    let g = AlgebraMap::canonical(&d, &fm)?;
    println!("\ntwo out of three along poly → dagger → formal: {:?}", check_two_out_of_three(&f, &g)?);
    println!("tensor closure (poly → formal) ⊗ (poly → dagger): {:?}", check_tensor_closure(&AlgebraMap::canonical(&p, &fm)?, &f)?);
    Ok(())
}
