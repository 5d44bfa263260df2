//! Homotopy-epimorphism checks through the diagonal Koszul criterion: both
//! pairs strict, f(a) = b, then B ⊗_A K_A ⊗_A B should resolve B.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::complexes::{diagonal_koszul, diagonal_resolution, HomologyReport};
use crate::division::{certificate_holds, certify_for_flavor, BoundCertificate};
use crate::error::{Error, Result};
use crate::sampling::{random_diagonal_poly, trial_rng};
use crate::scalars::BanachRing;
use crate::series::{AlgebraFlavor, FlavorKind, MultiSeries};

/// Random diagonal-vanishing samples added to the y^n − z^n family.
pub const STRICTNESS_SAMPLES: u64 = 16;
const STRICTNESS_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrictnessReport {
    pub flavor: AlgebraFlavor,
    pub ring: String,
    pub order: u32,
    /// (C⊗C)_{N−1} → (C⊗C)_N → C_N exact (kernel and cokernel ranks).
    pub exact: bool,
    pub certificates_checked: usize,
    pub certificates_failed: usize,
    /// The first failing certificate, else the one for y^N − z^N.
    pub certificate: BoundCertificate,
    pub holds: bool,
}

/// Strictness of (C, c) on the degree-≤N model. Only c = x is supported.
pub fn check_strictness_condition(ring: &BanachRing, flavor: &AlgebraFlavor, order: u32, c: &MultiSeries) -> Result<StrictnessReport> {
    let alg = TruncAlgebra::uniform(ring, flavor, 1, order)?;
    if *c != alg.var(0) {
        return Err(Error::Unsupported(format!("strictness for c = {c}; only the coordinate x is supported")));
    }
    let exact = diagonal_koszul(&alg)?.is_exact(order)?;
    let square = alg.square();
    let y = square.var(0);
    let z = square.var(1);
    let mut samples: Vec<MultiSeries> = (1..=order).map(|n| y.pow(n).sub(&z.pow(n))).collect::<Result<_>>()?;
    for i in 0..STRICTNESS_SAMPLES {
        let mut rng = trial_rng(STRICTNESS_SEED, i);
        samples.push(random_diagonal_poly(&mut rng, ring, order, order, 9));
    }
    let mut failed = 0;
    let mut first_fail = None;
    let mut top = None;
    for (i, f) in samples.iter().enumerate() {
        let cert = certify_for_flavor(f, flavor)?;
        if !certificate_holds(&cert) {
            failed += 1;
            first_fail.get_or_insert_with(|| cert.clone());
        }
        if i + 1 == order as usize {
            top = Some(cert);
        }
        if flavor.kind() == FlavorKind::Disc {
            // the counterexample does not depend on the sample
            break;
        }
    }
    let checked = if flavor.kind() == FlavorKind::Disc { 1 } else { samples.len() };
    let certificate = first_fail.or(top).expect("order ≥ 1");
    Ok(StrictnessReport {
        flavor: flavor.clone(),
        ring: ring.label(),
        order,
        exact,
        certificates_checked: checked,
        certificates_failed: failed,
        holds: exact && failed == 0,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HepiVerdict {
    pub map: String,
    pub order: u32,
    pub strictness_ok_source: bool,
    pub strictness_ok_target: bool,
    pub element_compat: bool,
    pub derived_selfproduct_ranks: HomologyReport,
    pub expected_rank: usize,
    pub identity: bool,
    pub verdict: bool,
}

fn check_supported(a: &TruncAlgebra) -> Result<()> {
    for f in &a.factors {
        if f.kind() == FlavorKind::Tate && a.ring.archimedean() {
            return Err(Error::Unsupported(format!("Tate flavor over the archimedean ring {}", a.ring)));
        }
    }
    Ok(())
}

fn all_strict(a: &TruncAlgebra) -> Result<bool> {
    let mut seen: Vec<&AlgebraFlavor> = Vec::new();
    for f in &a.factors {
        if seen.contains(&f) {
            continue;
        }
        seen.push(f);
        let x = MultiSeries::var(&a.ring, 1, a.order, 0);
        if !check_strictness_condition(&a.ring, f, a.order, &x)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f(x_i) ⊗ 1 − 1 ⊗ f(x_i) = y_i − z_i in B ⊗ B.
pub fn element_compat(f: &AlgebraMap) -> Result<bool> {
    let sq = f.target.square();
    let n = f.target.nvars();
    if f.source.nvars() != n {
        return Ok(false);
    }
    for (i, g) in f.images.iter().enumerate() {
        let lhs = g.tensor_embed_left().sub(&g.tensor_embed_right())?;
        if lhs != sq.var(i).sub(&sq.var(n + i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stable homology of B ⊗_A K_A ⊗_A B at band N.
pub fn derived_selfproduct(f: &AlgebraMap) -> Result<HomologyReport> {
    let k = diagonal_resolution(&f.source)?;
    let moved = k.tensor_over_pair(f, f)?;
    moved.stable(f.target.order)
}

pub fn verify_hepi(f: &AlgebraMap) -> Result<HepiVerdict> {
    check_supported(&f.source)?;
    check_supported(&f.target)?;
    if f.source.nvars() != f.target.nvars() {
        return Err(Error::Unsupported("maps between different numbers of generators".into()));
    }
    let s_src = all_strict(&f.source)?;
    let s_tgt = all_strict(&f.target)?;
    let compat = element_compat(f)?;
    let ranks = derived_selfproduct(f)?;
    let expected = f.target.dim();
    let identity = f.is_identity();
    let verdict = identity || (s_src && s_tgt && compat && ranks.concentrated_in_zero(expected));
    Ok(HepiVerdict {
        map: f.label(),
        order: f.target.order,
        strictness_ok_source: s_src,
        strictness_ok_target: s_tgt,
        element_compat: compat,
        derived_selfproduct_ranks: ranks,
        expected_rank: expected,
        identity,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoOutOfThree {
    pub f: bool,
    pub g: bool,
    pub composite: bool,
    pub consistent: bool,
}

/// If two of f, g, g∘f are homotopy epimorphisms so is the third: the
/// verdicts are consistent unless exactly two of them hold.
pub fn check_two_out_of_three(f: &AlgebraMap, g: &AlgebraMap) -> Result<TwoOutOfThree> {
    let gf = f.then(g)?;
    let (vf, vg, vgf) = (verify_hepi(f)?.verdict, verify_hepi(g)?.verdict, verify_hepi(&gf)?.verdict);
    let count = [vf, vg, vgf].iter().filter(|&&v| v).count();
    Ok(TwoOutOfThree { f: vf, g: vg, composite: vgf, consistent: count != 2 })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorClosure {
    pub f: bool,
    pub g: bool,
    pub tensor: bool,
    pub holds: bool,
}

/// f ⊗ g on disjoint variable blocks must be a homotopy epimorphism when f
/// and g are.
pub fn check_tensor_closure(f: &AlgebraMap, g: &AlgebraMap) -> Result<TensorClosure> {
    let fg = f.tensor(g)?;
    let (vf, vg, vt) = (verify_hepi(f)?.verdict, verify_hepi(g)?.verdict, verify_hepi(&fg)?.verdict);
    Ok(TensorClosure { f: vf, g: vg, tensor: vt, holds: !(vf && vg) || vt })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, qf};

    fn alg(ring: &BanachRing, fl: AlgebraFlavor, order: u32) -> TruncAlgebra {
        TruncAlgebra::uniform(ring, &fl, 1, order).unwrap()
    }

    #[test]
    fn strictness_examples() {
        let qq = BanachRing::rationals();
        let q2 = BanachRing::padic(2, 16).unwrap();
        let z = BanachRing::integers();
        let x = |r: &BanachRing| MultiSeries::var(r, 1, 6, 0);
        assert!(check_strictness_condition(&qq, &AlgebraFlavor::Polynomial, 6, &x(&qq)).unwrap().holds);
        assert!(check_strictness_condition(&q2, &AlgebraFlavor::tate(q(1)), 6, &x(&q2)).unwrap().holds);
        let d = check_strictness_condition(&z, &AlgebraFlavor::disc(q(1)), 6, &x(&z)).unwrap();
        assert!(d.exact && !d.holds);
        let x2 = x(&qq).pow(2);
        assert!(matches!(
            check_strictness_condition(&qq, &AlgebraFlavor::Polynomial, 6, &x2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn verdict_examples() {
        let q2 = BanachRing::padic(2, 16).unwrap();
        let z = BanachRing::integers();
        let f = AlgebraMap::canonical(&alg(&q2, AlgebraFlavor::Polynomial, 6), &alg(&q2, AlgebraFlavor::tate(q(1)), 6)).unwrap();
        assert!(verify_hepi(&f).unwrap().verdict);
        let g = AlgebraMap::canonical(&alg(&z, AlgebraFlavor::Polynomial, 6), &alg(&z, AlgebraFlavor::formal(), 6)).unwrap();
        assert!(verify_hepi(&g).unwrap().verdict);
        let h = AlgebraMap::canonical(&alg(&z, AlgebraFlavor::disc(q(1)), 6), &alg(&z, AlgebraFlavor::disc(qf(1, 2)), 6)).unwrap();
        let v = verify_hepi(&h).unwrap();
        assert!(!v.verdict && !v.strictness_ok_target);
        let t = AlgebraMap::canonical(&alg(&z, AlgebraFlavor::Polynomial, 6), &alg(&z, AlgebraFlavor::tate(q(1)), 6)).unwrap();
        assert!(matches!(verify_hepi(&t), Err(Error::Unsupported(_))));
    }

    #[test]
    fn closure_examples() {
        let z = BanachRing::integers();
        let p = alg(&z, AlgebraFlavor::Polynomial, 5);
        let d = alg(&z, AlgebraFlavor::dagger(q(1)), 5);
        let fm = alg(&z, AlgebraFlavor::formal(), 5);
        let f = AlgebraMap::canonical(&p, &d).unwrap();
        let g = AlgebraMap::canonical(&d, &fm).unwrap();
        let r = check_two_out_of_three(&f, &g).unwrap();
        assert!(r.f && r.g && r.composite && r.consistent);
        let id = AlgebraMap::identity(&p);
        assert!(check_two_out_of_three(&id, &id).unwrap().consistent);
        assert!(check_two_out_of_three(&g, &f).is_err());
        let c = check_tensor_closure(&AlgebraMap::canonical(&p, &fm).unwrap(), &f).unwrap();
        assert!(c.f && c.g && c.tensor && c.holds);
    }
}
