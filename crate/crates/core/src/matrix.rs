//! The acceptance matrix: criteria 1–8 as library calls. Criterion 9
//! (byte-identical reruns) is checked from outside by running the binary.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::campaign::{run_campaign, CampaignConfig, TrialRecord};
use crate::division::{disc_counterexample, BoundKind};
use crate::error::Result;
use crate::hepi::verify_hepi;
use crate::hochschild::{hh_bar, hh_base_change, hh_complete_intersection, hh_koszul, hkr_expected, FiniteAlgebra};
use crate::localization::{laurent, rational, verify_localization, weierstrass, Witness};
use crate::scalars::{q, qf, BanachRing};
use crate::series::{count_monomials, AlgebraFlavor};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub criterion: u32,
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

fn result(criterion: u32, name: &str, pass: bool, detail: Value) -> CriterionResult {
    CriterionResult { criterion, name: name.into(), pass, detail }
}

/// Samples for criteria 1 and 2: degree ≤ 10, coefficients in [−99, 99].
pub fn division_config(flavor: AlgebraFlavor, ring: BanachRing, seed: u64) -> CampaignConfig {
    let mut cfg = CampaignConfig::new(flavor, ring, 10);
    cfg.trials = 1000;
    cfg.seed = seed;
    cfg
}

fn failures(ts: &[TrialRecord]) -> usize {
    ts.iter().filter(|t| !t.ok).count()
}

pub fn criterion_1(seed: u64) -> Result<CriterionResult> {
    let ts = run_campaign(&division_config(AlgebraFlavor::Polynomial, BanachRing::integers(), seed))?;
    let bad_rec = ts.iter().filter(|t| !t.reconstructs).count();
    let fails = failures(&ts);
    Ok(result(
        1,
        "polynomial division bound d^3",
        fails == 0 && bad_rec == 0,
        json!({"trials": ts.len(), "violations": fails, "reconstruction_failures": bad_rec}),
    ))
}

pub fn criterion_2(seed: u64) -> Result<CriterionResult> {
    let tate = AlgebraFlavor::tate(q(1));
    let over_z = run_campaign(&division_config(tate.clone(), BanachRing::integers(), seed))?;
    let over_q2 = run_campaign(&division_config(tate, BanachRing::padic(2, 16)?, seed))?;
    let coeff = |ts: &[TrialRecord]| ts.iter().map(|t| t.certificate.coefficient_violations.unwrap_or(0)).sum::<usize>();
    let (cz, cq) = (coeff(&over_z), coeff(&over_q2));
    let ultra = over_q2.iter().filter(|t| t.certificate.ultrametric_pass != Some(true)).count();
    let same_samples = over_z.iter().zip(&over_q2).all(|(a, b)| a.series == b.series);
    Ok(result(
        2,
        "Tate coefficientwise bound",
        cz == 0 && cq == 0 && ultra == 0 && same_samples,
        json!({"trials": over_z.len(), "coefficient_violations_z": cz, "coefficient_violations_q2": cq,
               "ultrametric_failures_q2": ultra, "same_samples": same_samples}),
    ))
}

pub fn criterion_3(seed: u64) -> Result<CriterionResult> {
    let mut cfg = CampaignConfig::new(AlgebraFlavor::formal(), BanachRing::integers(), 10);
    cfg.trials = 200;
    cfg.seed = seed;
    cfg.weight_max = 5;
    let ts = run_campaign(&cfg)?;
    let fails = failures(&ts);
    Ok(result(3, "formal weight transform", fails == 0, json!({"trials": ts.len(), "violations": fails})))
}

pub fn criterion_4() -> Result<CriterionResult> {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 2..=8u32 {
        let c = disc_counterexample(n, 8)?;
        let exact = c.input_norm == q(2) && c.output_norm == q(n as i64) && c.bound_kind == BoundKind::DiscCounterexample;
        ok &= exact;
        rows.push(json!({"n": n, "input": crate::scalars::fmt_q(&c.input_norm), "output": crate::scalars::fmt_q(&c.output_norm), "exact": exact}));
    }
    Ok(result(4, "disc counterexample", ok, Value::Array(rows)))
}

/// (ring, source, target, expected verdict) for criterion 5.
pub fn hepi_cases() -> Result<Vec<(BanachRing, AlgebraFlavor, AlgebraFlavor, bool)>> {
    let q2 = BanachRing::padic(2, 16)?;
    let qq = BanachRing::rationals();
    let z = BanachRing::integers();
    Ok(vec![
        (q2.clone(), AlgebraFlavor::Polynomial, AlgebraFlavor::tate(q(1)), true),
        (qq.clone(), AlgebraFlavor::Polynomial, AlgebraFlavor::formal(), true),
        (qq.clone(), AlgebraFlavor::Polynomial, AlgebraFlavor::dagger(q(1)), true),
        (qq.clone(), AlgebraFlavor::dagger(q(1)), AlgebraFlavor::dagger(qf(1, 2)), true),
        (qq.clone(), AlgebraFlavor::dagger(q(1)), AlgebraFlavor::formal(), true),
        (q2.clone(), AlgebraFlavor::tate(q(1)), AlgebraFlavor::tate(qf(1, 2)), true),
        (q2, AlgebraFlavor::tate(q(1)), AlgebraFlavor::dagger(qf(1, 2)), true),
        (qq, AlgebraFlavor::Polynomial, AlgebraFlavor::stein(q(1), 3), true),
        (z, AlgebraFlavor::disc(q(1)), AlgebraFlavor::disc(qf(1, 2)), false),
    ])
}

pub fn criterion_5() -> Result<CriterionResult> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (ring, src, tgt, expected) in hepi_cases()? {
        for order in [4u32, 6, 8] {
            let a = TruncAlgebra::uniform(&ring, &src, 1, order)?;
            let b = TruncAlgebra::uniform(&ring, &tgt, 1, order)?;
            let v = verify_hepi(&AlgebraMap::canonical(&a, &b)?)?;
            ok &= v.verdict == expected;
            rows.push(json!({"map": v.map, "order": order, "verdict": v.verdict, "expected": expected}));
        }
    }
    Ok(result(5, "homotopy epimorphism verdicts", ok, Value::Array(rows)))
}

pub fn criterion_6() -> Result<CriterionResult> {
    let order = 6;
    let z = BanachRing::integers();
    let pt = TruncAlgebra::ground(&z, order);
    let zp = verify_localization(&weierstrass(&pt, &AlgebraFlavor::dagger(qf(1, 2)), &pt.constant(q(2)))?)?;
    let zp_ok = zp.verdict && zp.homology.rank(-1) == 0 && zp.homology.rank(0) == 1;

    let q2 = BanachRing::padic(2, 16)?;
    let t = AlgebraFlavor::tate(q(1));
    let a = TruncAlgebra::uniform(&q2, &t, 1, order)?;
    let lr = verify_localization(&laurent(&a, &t, &a.var(0))?)?;

    let x = a.var(0);
    let g = a.one().add(&x)?;
    let w = Witness { a: a.one(), b: a.zero() };
    let rr = verify_localization(&rational(&a, &[t], &g, &[a.one()], &[w])?)?;
    let ok = zp_ok && lr.verdict && rr.verdict && rr.splitting_verified == Some(true);
    Ok(result(
        6,
        "localizations are homotopy epimorphisms",
        ok,
        json!({"zp_dagger": {"verdict": zp.verdict, "h0": zp.homology.rank(0), "h_minus1": zp.homology.rank(-1)},
               "laurent": {"verdict": lr.verdict, "h0": lr.homology.rank(0)},
               "rational": {"verdict": rr.verdict, "splitting": rr.splitting_verified}}),
    ))
}

pub fn criterion_7() -> Result<CriterionResult> {
    let qq = BanachRing::rationals();
    let bar = hh_bar(&FiniteAlgebra::truncated_polynomial(&qq, 2)?, 4)?;
    let p1 = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, 6)?;
    let ci = hh_complete_intersection(&p1, &[p1.var(0).pow(2)], 4, None)?.report;
    let p2 = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 2, 4)?;
    let kz = hh_koszul(&p2)?;
    // HKR shape: C(2, j) times the rank of the band-(4 − j) truncation
    let shape: Vec<usize> = (0..=2).map(|j| crate::series::binomial(2, j) * count_monomials(2, 4 - j as u32)).collect();
    let ok = bar.ranks == vec![2, 1, 1, 1, 1] && ci.ranks == bar.ranks && kz.ranks == shape && shape == hkr_expected(2, 4);
    Ok(result(
        7,
        "Hochschild oracles agree",
        ok,
        json!({"bar": bar.ranks, "complete_intersection": ci.ranks, "koszul_p2": kz.ranks, "hkr_shape": shape}),
    ))
}

pub fn criterion_8() -> Result<CriterionResult> {
    let order = 6;
    let q2 = BanachRing::padic(2, 16)?;
    let qq = BanachRing::rationals();
    let pairs = [(q2, AlgebraFlavor::tate(q(1))), (qq, AlgebraFlavor::formal())];
    let mut rows = Vec::new();
    let mut ok = true;
    for (ring, fl) in pairs {
        let a = TruncAlgebra::uniform(&ring, &AlgebraFlavor::Polynomial, 1, order)?;
        let b = TruncAlgebra::uniform(&ring, &fl, 1, order)?;
        let bc = hh_base_change(&AlgebraMap::canonical(&a, &b)?)?;
        let quot = hh_complete_intersection(&a, &[a.var(0).pow(2)], 4, Some(&fl))?;
        let pair_ok = bc.agrees && quot.base_change == Some(true);
        ok &= pair_ok;
        rows.push(json!({"map": bc.map, "base_changed": bc.base_changed, "target": bc.target.ranks,
                         "quotient_x2": quot.base_changed, "quotient_x2_target": quot.analytic.map(|r| r.ranks), "pass": pair_ok}));
    }
    Ok(result(8, "Hochschild base change", ok, Value::Array(rows)))
}

/// Criteria 1–8 in order.
pub fn run_matrix(seed: u64) -> Result<Vec<CriterionResult>> {
    Ok(vec![
        criterion_1(seed)?,
        criterion_2(seed)?,
        criterion_3(seed)?,
        criterion_4()?,
        criterion_5()?,
        criterion_6()?,
        criterion_7()?,
        criterion_8()?,
    ])
}
