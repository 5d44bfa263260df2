//! Diagonal division f ↦ (f(y,z) − f(z,z))/(y − z) and the norm
//! certificates attached to it for each flavor.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{pow_q, q, BanachRing, Q};
use crate::series::{flavor_norm, AlgebraFlavor, MultiSeries, WeightTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    PolyCubed,
    TateCoefficientwise,
    FormalWeightTransform,
    DiscCounterexample,
    SteinComposite,
}

/// One radius-shrinking stage r_m → r_{m−1} of the Stein certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SteinStage {
    pub level: usize,
    /// ‖g‖ at r_{m−1} over ‖f‖ at r_m; absent when f vanishes.
    #[serde(with = "opt_q")]
    pub observed: Option<Q>,
    #[serde(with = "crate::scalars::qstr")]
    pub analytic: Q,
}

mod opt_q {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&crate::scalars::fmt_q(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        let v = Option::<String>::deserialize(d)?;
        Ok(v.and_then(|s| crate::scalars::parse_q(&s)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub flavor: AlgebraFlavor,
    #[serde(with = "crate::scalars::qstr")]
    pub input_norm: Q,
    #[serde(with = "crate::scalars::qstr")]
    pub output_norm: Q,
    #[serde(with = "crate::scalars::qstr")]
    pub bound_constant: Q,
    pub bound_kind: BoundKind,
    pub pass: bool,
    /// output/input; recorded for the disc counterexample.
    #[serde(with = "opt_q", skip_serializing_if = "Option::is_none", default)]
    pub ratio: Option<Q>,
    /// Tate: the grlex-smallest argmax (K, L) of |g_{k,l}| r^{k+l}.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub argmax: Option<(u32, u32)>,
    /// Tate: number of coefficients breaking |g_kl| ≤ (l+1) max_t |a|.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coefficient_violations: Option<usize>,
    /// Tate over a non-archimedean ring: ‖g‖ ≤ (max_t r_z^t/r_y^(t+1))·‖f‖.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ultrametric_pass: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub stages: Vec<SteinStage>,
}

impl BoundCertificate {
    fn basic(flavor: AlgebraFlavor, input: Q, output: Q, constant: Q, kind: BoundKind) -> Self {
        let pass = output <= &constant * &input;
        BoundCertificate {
            flavor,
            input_norm: input,
            output_norm: output,
            bound_constant: constant,
            bound_kind: kind,
            pass,
            ratio: None,
            argmax: None,
            coefficient_violations: None,
            ultrametric_pass: None,
            stages: Vec::new(),
        }
    }
}

fn check_two_vars(f: &MultiSeries) -> Result<()> {
    if f.nvars != 2 {
        return Err(Error::ShapeMismatch(format!("diagonal division needs 2 variables, got {}", f.nvars)));
    }
    Ok(())
}

fn check_diagonal(f: &MultiSeries) -> Result<()> {
    check_two_vars(f)?;
    if !f.diagonal_restrict()?.is_zero() {
        return Err(Error::NotOnDiagonal);
    }
    Ok(())
}

/// g with (y − z)·g = f, g_{k,l} = Σ_{t=0}^{l} a_{k+1+t, l−t}.
pub fn diag_divide(f: &MultiSeries) -> Result<MultiSeries> {
    check_diagonal(f)?;
    let n = f.order;
    let mut g = MultiSeries::zero(&f.ring, 2, n);
    for d in 0..n {
        for l in 0..=d {
            let k = d - l;
            let mut s = Q::zero();
            for t in 0..=l {
                s += f.coeff(&[k + 1 + t, l - t]);
            }
            g.add_term(crate::series::Exponent(vec![k, l]), s);
        }
    }
    Ok(g)
}

/// y − z in the two-variable ring of `f`.
pub fn diagonal_element(ring: &BanachRing, order: u32) -> MultiSeries {
    MultiSeries::var(ring, 2, order, 0).sub(&MultiSeries::var(ring, 2, order, 1)).expect("same shape")
}

/// (y − z)·g == f, exactly on the truncation.
pub fn reconstructs(f: &MultiSeries, g: &MultiSeries) -> Result<bool> {
    Ok(diagonal_element(&f.ring, f.order).mul(g)? == *f)
}

pub fn certify_poly_bound(f: &MultiSeries) -> Result<BoundCertificate> {
    check_diagonal(f)?;
    let g = diag_divide(f)?;
    let fin = flavor_norm(f, &AlgebraFlavor::Polynomial)?;
    let d = fin.degree.unwrap_or(0) as i64;
    let gout = flavor_norm(&g, &AlgebraFlavor::Polynomial)?;
    Ok(BoundCertificate::basic(AlgebraFlavor::Polynomial, fin.value, gout.value, q(d * d * d), BoundKind::PolyCubed))
}

/// Coefficientwise Tate check in radii (r_y, r_z); a one-entry radius list
/// is used for both variables.
pub fn certify_tate_coefficientwise(f: &MultiSeries, flavor: &AlgebraFlavor) -> Result<BoundCertificate> {
    let radii = match flavor {
        AlgebraFlavor::Tate { radii } => radii.clone(),
        _ => return Err(Error::InvalidFlavor(format!("expected a Tate flavor, got {flavor}"))),
    };
    tate_certificate(f, flavor.clone(), &radii)
}

fn tate_certificate(f: &MultiSeries, recorded: AlgebraFlavor, radii: &[Q]) -> Result<BoundCertificate> {
    check_diagonal(f)?;
    let (ry, rz) = match radii {
        [r] => (r.clone(), r.clone()),
        [a, b] => (a.clone(), b.clone()),
        _ => return Err(Error::ShapeMismatch("Tate certificate needs one or two radii".into())),
    };
    let two = AlgebraFlavor::Tate { radii: vec![ry.clone(), rz.clone()] };
    two.validate()?;
    let g = diag_divide(f)?;
    let ring = &f.ring;
    let mut violations = 0;
    let mut best: Option<(Q, u32, u32)> = None;
    for (e, c) in g.terms() {
        let (k, l) = (e.0[0], e.0[1]);
        let m = (0..=l).map(|t| ring.norm(&f.coeff(&[k + 1 + t, l - t]))).max().unwrap_or_else(Q::zero);
        let bound = if ring.archimedean() { q(l as i64 + 1) * m } else { m };
        if ring.norm(c) > bound {
            violations += 1;
        }
        let w = ring.norm(c) * pow_q(&ry, k as i64) * pow_q(&rz, l as i64);
        // terms iterate in grlex order, so strict > keeps the smallest argmax
        if best.as_ref().is_none_or(|(b, _, _)| w > *b) {
            best = Some((w, k, l));
        }
    }
    let input = flavor_norm(f, &two)?.value;
    let output = flavor_norm(&g, &two)?.value;
    let (big_l, argmax) = match &best {
        Some((_, k, l)) => (*l, Some((*k, *l))),
        None => (0, None),
    };
    let radius_factor = (0..=big_l as i64).map(|t| pow_q(&rz, t) / pow_q(&ry, t + 1)).max().unwrap();
    let constant = q(big_l as i64 + 1) * &radius_factor;
    let mut cert = BoundCertificate::basic(recorded, input.clone(), output.clone(), constant, BoundKind::TateCoefficientwise);
    cert.argmax = argmax;
    cert.coefficient_violations = Some(violations);
    cert.pass = cert.pass && violations == 0;
    if !ring.archimedean() {
        cert.ultrametric_pass = Some(output <= radius_factor * input);
    }
    Ok(cert)
}

/// φ(k,l) = (l+1)·Π_{s=0}^{l} ψ(k+1+s, l−s).
pub fn phi(psi: &WeightTable, k: u32, l: u32) -> Q {
    let eta: Q = (0..=l).map(|s| q(psi.get(&[k + 1 + s, l - s]) as i64)).product();
    q(l as i64 + 1) * eta
}

pub fn certify_formal_weight_transform(f: &MultiSeries, psi: &WeightTable) -> Result<BoundCertificate> {
    check_diagonal(f)?;
    if psi.entries.values().any(|&w| w < 1) {
        return Err(Error::InvalidFlavor("weight table value < 1".into()));
    }
    if psi.key_len().is_some_and(|l| l != 2) {
        return Err(Error::ShapeMismatch("formal weight table must be indexed by ℕ²".into()));
    }
    let g = diag_divide(f)?;
    let ring = &f.ring;
    let c = f.terms().map(|(e, a)| ring.norm(a) / q(psi.get(&e.0) as i64)).max().unwrap_or_else(Q::zero);
    let out = g.terms().map(|(e, v)| ring.norm(v) / phi(psi, e.0[0], e.0[1])).max().unwrap_or_else(Q::zero);
    Ok(BoundCertificate::basic(
        AlgebraFlavor::FormalPS { weights: psi.clone() },
        c,
        out,
        Q::one(),
        BoundKind::FormalWeightTransform,
    ))
}

/// x^n − y^n in Disc(r, r) over ℤ: input 2r^n, output n·r^(n−1). The
/// certificate always fails; `ratio` records how far.
pub fn disc_counterexample_at(n: u32, order: u32, r: &Q) -> Result<BoundCertificate> {
    if n < 2 {
        return Err(Error::InvalidValue("counterexample needs n ≥ 2".into()));
    }
    if n > order {
        return Err(Error::DegreeOverflow { degree: n, order });
    }
    let z = BanachRing::integers();
    let f = MultiSeries::from_ints(&z, 2, order, &[(&[n, 0], 1), (&[0, n], -1)]);
    let g = diag_divide(&f)?;
    let fl = AlgebraFlavor::Disc { radii: vec![r.clone(), r.clone()] };
    let input = flavor_norm(&f, &fl)?.value;
    let output = flavor_norm(&g, &fl)?.value;
    let mut cert = BoundCertificate::basic(fl, input.clone(), output.clone(), Q::one(), BoundKind::DiscCounterexample);
    cert.ratio = Some(&output / &input);
    cert.pass = false;
    Ok(cert)
}

pub fn disc_counterexample(n: u32, order: u32) -> Result<BoundCertificate> {
    disc_counterexample_at(n, order, &Q::one())
}

/// Stage constant for ‖g‖ at r' against ‖f‖ at r > r': each a_ij feeds i
/// coefficients of g, so the ratio is at most sup_d d q^(d−1) / r ≤ 1/(r(1−q)²).
pub fn stein_stage_bound(r_inner: &Q, r_outer: &Q) -> Q {
    let qq = r_inner / r_outer;
    let gap = Q::one() - qq;
    Q::one() / (r_outer * &gap * &gap)
}

/// Stein certificate: each stage r_m → r_{m−1} is checked against its
/// analytic constant D_m, then the weight transform φ(m) = ψ(m+1)·D_{m+1}
/// on levels 0..top−1 is checked against the ψ-norm of f.
pub fn certify_stein_composite(f: &MultiSeries, flavor: &AlgebraFlavor) -> Result<BoundCertificate> {
    check_diagonal(f)?;
    let (levels, weights) = match flavor {
        AlgebraFlavor::Stein { levels, weights, .. } => (levels.clone(), weights.clone()),
        _ => return Err(Error::InvalidFlavor(format!("expected a Stein flavor, got {flavor}"))),
    };
    flavor.validate()?;
    if levels.len() < 2 {
        return Err(Error::InvalidFlavor("Stein certificate needs at least two levels".into()));
    }
    let g = diag_divide(f)?;
    let disc = |s: &MultiSeries, r: &Q| flavor_norm(s, &AlgebraFlavor::Disc { radii: vec![r.clone(), r.clone()] }).map(|n| n.value);
    let mut stages = Vec::new();
    let mut stages_ok = true;
    let mut out = Q::zero();
    for m in 1..levels.len() {
        let analytic = stein_stage_bound(&levels[m - 1], &levels[m]);
        let fin = disc(f, &levels[m])?;
        let gout = disc(&g, &levels[m - 1])?;
        let observed = if fin.is_zero() { None } else { Some(&gout / &fin) };
        if gout > &analytic * &fin {
            stages_ok = false;
        }
        let phi_m = q(weights.get(&[m as u32]) as i64) * &analytic;
        out = out.max(gout / phi_m);
        stages.push(SteinStage { level: m, observed, analytic });
    }
    let input = flavor_norm(f, flavor)?.value;
    let mut cert = BoundCertificate::basic(flavor.clone(), input, out, Q::one(), BoundKind::SteinComposite);
    cert.pass = cert.pass && stages_ok;
    cert.stages = stages;
    Ok(cert)
}

/// The certificate matching a one-variable flavor (its two-variable square
/// is used for the norms). Disc yields the failing counterexample at n = N.
pub fn certify_for_flavor(f: &MultiSeries, flavor: &AlgebraFlavor) -> Result<BoundCertificate> {
    match flavor {
        AlgebraFlavor::Polynomial => certify_poly_bound(f),
        AlgebraFlavor::Tate { radii } => tate_certificate(f, flavor.clone(), radii),
        AlgebraFlavor::Dagger { rho, .. } => tate_certificate(f, flavor.clone(), rho),
        AlgebraFlavor::FormalPS { .. } => match flavor.power(2, f.order)? {
            AlgebraFlavor::FormalPS { weights } => {
                let mut c = certify_formal_weight_transform(f, &weights)?;
                c.flavor = flavor.clone();
                Ok(c)
            }
            _ => unreachable!(),
        },
        AlgebraFlavor::Stein { .. } => certify_stein_composite(f, flavor),
        AlgebraFlavor::Disc { radii } => {
            let r = radii.first().cloned().unwrap_or_else(Q::one);
            let mut c = disc_counterexample_at(f.order.max(2), f.order.max(2), &r)?;
            c.flavor = flavor.clone();
            Ok(c)
        }
    }
}

/// Whether a certificate supports a uniform bound (counterexamples never do).
pub fn certificate_holds(c: &BoundCertificate) -> bool {
    c.pass && c.bound_kind != BoundKind::DiscCounterexample && c.ultrametric_pass != Some(false) && !c.input_norm.is_negative()
}
