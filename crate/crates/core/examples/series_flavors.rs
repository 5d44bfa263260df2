//! One truncated series under the six norm flavors, and the maps between
//! one- and two-variable series used by the diagonal sequence.

use banalg::parse::parse_series;
use banalg::scalars::{fmt_q, q, qf, BanachRing};
use banalg::series::{flavor_norm, AlgebraFlavor, WeightTable};

fn main() -> banalg::error::Result<()> {
    let q2 = BanachRing::padic(2, 16)?;
    let qq = BanachRing::rationals();
    let f_text = "3 + 4*x + 1/2*x^3 + 8*x^5";
    for ring in [&qq, &q2] {
        let f = parse_series(f_text, ring, 1, 8)?;
        println!("f = {} over {}", f.pretty(), ring);
        let flavors = [
            AlgebraFlavor::Polynomial,
            AlgebraFlavor::disc(qf(1, 2)),
            AlgebraFlavor::tate(qf(1, 2)),
            AlgebraFlavor::dagger(qf(1, 2)),
            AlgebraFlavor::FormalPS { weights: WeightTable::from_entries([(vec![3], 4), (vec![5], 2)])? },
            AlgebraFlavor::stein(q(1), 3),
        ];
        for fl in &flavors {
            println!("  {:<28} {}", fl.label(), fmt_q(&flavor_norm(&f, fl)?.value));
        }
    }

    // C → C ⊗ C and back along the diagonal
    let z = BanachRing::integers();
    let g = parse_series("x^2 - 2*x", &z, 1, 6)?;
    let left = g.tensor_embed_left();
    let right = g.tensor_embed_right();
    let diff = left.sub(&right)?;
    println!("\ng ⊗ 1 − 1 ⊗ g = {}", diff.pretty());
    println!("restricted to the diagonal: {}", diff.diagonal_restrict()?.pretty());
    println!("product truncates at the order: ({})^4 = {}", g.pretty(), g.pow(4).pretty());
    Ok(())
}
