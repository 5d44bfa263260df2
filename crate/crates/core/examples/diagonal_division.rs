//! Dividing diagonal-vanishing f(y, z) by y − z, with the norm certificates
//! for each flavor and the disc counterexample.

use banalg::division::{certify_for_flavor, certify_poly_bound, diag_divide, disc_counterexample, reconstructs};
use banalg::parse::parse_diagonal_series;
use banalg::scalars::{fmt_q, q, qf, BanachRing};
use banalg::series::AlgebraFlavor;

fn main() -> banalg::error::Result<()> {
    let z = BanachRing::integers();
    let f = parse_diagonal_series("y^3 - z^3 + 5*y*z - 5*z^2", &z, 8)?;
    let g = diag_divide(&f)?;
    println!("f = {}\ng = f/(y − z) = {}\n(y − z)·g == f: {}", f.pretty_diagonal(), g.pretty_diagonal(), reconstructs(&f, &g)?);

    let c = certify_poly_bound(&f)?;
    println!(
        "\npolynomial: ‖g‖ = {} ≤ d³‖f‖ = {}·{}  pass={}",
        fmt_q(&c.output_norm),
        fmt_q(&c.bound_constant),
        fmt_q(&c.input_norm),
        c.pass
    );

    let q2 = BanachRing::padic(2, 16)?;
    let f2 = f.with_ring(&q2)?;
    for fl in [AlgebraFlavor::tate(q(1)), AlgebraFlavor::tate(qf(1, 2)), AlgebraFlavor::dagger(qf(1, 2)), AlgebraFlavor::formal(), AlgebraFlavor::stein(q(1), 3)] {
        let c = certify_for_flavor(&f2, &fl)?;
        println!(
            "{:<22} in {:>6}  out {:>8}  constant {:>6}  pass={} {}",
            fl.label(),
            fmt_q(&c.input_norm),
            fmt_q(&c.output_norm),
            fmt_q(&c.bound_constant),
            c.pass,
            c.ultrametric_pass.map(|u| format!("ultrametric={u}")).unwrap_or_default()
        );
    }

    println!("\ndisc algebra, y^n − z^n:");
    for n in 2..=8 {
        let c = disc_counterexample(n, 8)?;
        println!("  n={n}: ‖f‖ = {}, ‖f/(y−z)‖ = {}", fmt_q(&c.input_norm), fmt_q(&c.output_norm));
    }
    Ok(())
}
