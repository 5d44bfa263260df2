//! Derived Weierstrass, Laurent and rational localizations, adic completion
//! and derived quotients, all as Koszul complexes over A ⊗ C_1 ⊗ … ⊗ C_k.
//!
//! A localization is built step by step: each step adjoins one variable with
//! its own flavor C and one element (y − a, 1 − a·y, g·y − f). Elements of
//! later steps may use the variables of earlier ones.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::complexes::{diagonal_resolution, koszul, AlgComplex, HomologyReport};
use crate::error::{Error, Result};
use crate::hepi::{check_strictness_condition, verify_hepi};
use crate::series::{AlgebraFlavor, MultiSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Weierstrass,
    Laurent,
    Rational,
    Adic,
}

/// Bézout data for one rational step: a·f + b·g = 1 in A.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub a: MultiSeries,
    pub b: MultiSeries,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Localization {
    pub base: TruncAlgebra,
    pub algebra: TruncAlgebra,
    pub steps: Vec<StepKind>,
    pub elements: Vec<MultiSeries>,
    /// For rational steps: the splitting (a, b), (−b, a)ᵀ of
    /// A →(f,g)ᵀ A² →(−g,f) A was checked to be a contracting homotopy.
    pub splitting_verified: Option<bool>,
}

impl Localization {
    pub fn over(base: &TruncAlgebra) -> Self {
        Localization {
            base: base.clone(),
            algebra: base.clone(),
            steps: Vec::new(),
            elements: Vec::new(),
            splitting_verified: None,
        }
    }

    /// Adjoins a variable of flavor `c`; returns the new algebra, the new
    /// variable, and the old elements moved into it.
    fn adjoin(&self, c: &AlgebraFlavor) -> Result<(TruncAlgebra, MultiSeries, Vec<MultiSeries>)> {
        let cc = TruncAlgebra::uniform(&self.algebra.ring, c, 1, self.algebra.order)?;
        let next = self.algebra.tensor(&cc)?;
        let n = self.algebra.nvars();
        let keep: Vec<usize> = (0..n).collect();
        let moved = self.elements.iter().map(|e| e.relabel(n + 1, &keep)).collect::<Result<Vec<_>>>()?;
        Ok((next.clone(), next.var(n), moved))
    }

    fn lift(&self, a: &MultiSeries) -> Result<MultiSeries> {
        self.algebra.check_owns(a)?;
        let n = self.algebra.nvars();
        a.relabel(n + 1, &(0..n).collect::<Vec<_>>())
    }

    fn push(&self, kind: StepKind, c: &AlgebraFlavor, element: impl FnOnce(&MultiSeries, &MultiSeries) -> Result<MultiSeries>, a: &MultiSeries) -> Result<Self> {
        let lifted = self.lift(a)?;
        let (algebra, y, mut elements) = self.adjoin(c)?;
        elements.push(element(&y, &lifted)?);
        let mut steps = self.steps.clone();
        steps.push(kind);
        Ok(Localization { base: self.base.clone(), algebra, steps, elements, splitting_verified: self.splitting_verified })
    }

    /// ⊗ C ⫽ (y − a)
    pub fn weierstrass_step(&self, c: &AlgebraFlavor, a: &MultiSeries) -> Result<Self> {
        self.push(StepKind::Weierstrass, c, |y, a| y.sub(a), a)
    }

    /// ⊗ C ⫽ (1 − a·y)
    pub fn laurent_step(&self, c: &AlgebraFlavor, a: &MultiSeries) -> Result<Self> {
        self.push(StepKind::Laurent, c, |y, a| one_like(y).sub(&a.mul(y)?), a)
    }

    /// ⊗ R[[y]] ⫽ (y − a)
    pub fn adic_step(&self, a: &MultiSeries) -> Result<Self> {
        self.push(StepKind::Adic, &AlgebraFlavor::formal(), |y, a| y.sub(a), a)
    }

    /// ⊗ C ⫽ (g·y − f), given a·f + b·g = 1 in the current algebra.
    pub fn rational_step(&self, c: &AlgebraFlavor, g: &MultiSeries, f: &MultiSeries, w: &Witness) -> Result<Self> {
        for s in [g, f, &w.a, &w.b] {
            self.algebra.check_owns(s)?;
        }
        let bezout = w.a.mul(f)?.add(&w.b.mul(g)?)?;
        if bezout != self.algebra.one() {
            return Err(Error::WitnessFails(format!("a·f + b·g = {bezout}, not 1")));
        }
        let split = splitting_holds(f, g, w)?;
        let lg = self.lift(g)?;
        let mut out = self.push(StepKind::Rational, c, |y, f| lg.mul(y)?.sub(f), f)?;
        out.splitting_verified = Some(self.splitting_verified.unwrap_or(true) && split);
        Ok(out)
    }

    pub fn complex(&self) -> Result<AlgComplex> {
        koszul(&self.algebra, &self.elements)
    }

    pub fn new_flavors(&self) -> &[AlgebraFlavor] {
        &self.algebra.factors[self.base.nvars()..]
    }
}

fn one_like(s: &MultiSeries) -> MultiSeries {
    MultiSeries::one(&s.ring, s.nvars, s.order)
}

/// (f,g)ᵀ(a,b) + (−b,a)ᵀ(−g,f) = I₂, the contracting homotopy of the row.
fn splitting_holds(f: &MultiSeries, g: &MultiSeries, w: &Witness) -> Result<bool> {
    let (a, b) = (&w.a, &w.b);
    let one = one_like(f);
    let zero = MultiSeries::zero(&f.ring, f.nvars, f.order);
    let m11 = f.mul(a)?.add(&b.mul(g)?)?;
    let m12 = f.mul(b)?.sub(&b.mul(f)?)?;
    let m21 = g.mul(a)?.sub(&a.mul(g)?)?;
    let m22 = g.mul(b)?.add(&a.mul(f)?)?;
    Ok(m11 == one && m22 == one && m12 == zero && m21 == zero)
}

pub fn weierstrass(a: &TruncAlgebra, c: &AlgebraFlavor, elem: &MultiSeries) -> Result<Localization> {
    Localization::over(a).weierstrass_step(c, elem)
}

pub fn laurent(a: &TruncAlgebra, c: &AlgebraFlavor, elem: &MultiSeries) -> Result<Localization> {
    Localization::over(a).laurent_step(c, elem)
}

/// A ⊗ C_1 ⊗ … ⊗ C_n ⫽ (g y_1 − f_1, …, g y_n − f_n), one step per f_i.
pub fn rational(a: &TruncAlgebra, cs: &[AlgebraFlavor], g: &MultiSeries, fs: &[MultiSeries], ws: &[Witness]) -> Result<Localization> {
    if cs.len() != fs.len() || ws.len() != fs.len() {
        return Err(Error::ShapeMismatch("one flavor and one witness per f_i".into()));
    }
    let mut loc = Localization::over(a);
    for i in 0..fs.len() {
        let gi = loc.lift_base(g)?;
        let fi = loc.lift_base(&fs[i])?;
        let wi = Witness { a: loc.lift_base(&ws[i].a)?, b: loc.lift_base(&ws[i].b)? };
        loc = loc.rational_step(&cs[i], &gi, &fi, &wi)?;
    }
    Ok(loc)
}

impl Localization {
    /// Moves an element of the base into the current algebra.
    pub fn lift_base(&self, s: &MultiSeries) -> Result<MultiSeries> {
        self.base.check_owns(s)?;
        s.relabel(self.algebra.nvars(), &(0..self.base.nvars()).collect::<Vec<_>>())
    }
}

pub fn adic_completion(a: &TruncAlgebra, generators: &[MultiSeries]) -> Result<Localization> {
    let mut loc = Localization::over(a);
    for g in generators {
        let lifted = loc.lift_base(g)?;
        loc = loc.adic_step(&lifted)?;
    }
    Ok(loc)
}

pub fn derived_quotient(a: &TruncAlgebra, elements: &[MultiSeries]) -> Result<AlgComplex> {
    koszul(a, elements)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalizationReport {
    pub steps: Vec<StepKind>,
    pub algebra: String,
    pub elements: Vec<String>,
    pub order: u32,
    /// Stable homology of B.
    pub homology: HomologyReport,
    /// Stable homology of B ⊗_A B (the new variables doubled).
    pub selfproduct: HomologyReport,
    /// Stable homology of B ⊗ (C⊗C ⫽ diagonal), the other side of the
    /// comparison.
    pub diagonal_route: HomologyReport,
    pub strict_flavors: Vec<(String, bool)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting_verified: Option<bool>,
    pub selfproduct_ok: bool,
    pub verdict: bool,
}

/// B ⊗_A B ≅ B on the stable band, with every adjoined flavor strict.
pub fn verify_localization(loc: &Localization) -> Result<LocalizationReport> {
    let order = loc.algebra.order;
    let ring = &loc.algebra.ring;
    let b = loc.complex()?;
    let homology = b.stable(order)?;
    let n0 = loc.base.nvars();
    let k = loc.algebra.nvars() - n0;
    // A ⊗ C.. ⊗ C..: base vars, then first copy, then second copy
    let mut doubled = loc.algebra.clone();
    for f in loc.new_flavors() {
        doubled = doubled.tensor(&TruncAlgebra::uniform(ring, f, 1, order)?)?;
    }
    let total = doubled.nvars();
    let into = |second: bool| -> Result<AlgebraMap> {
        let images = (0..n0 + k)
            .map(|i| if i < n0 || !second { doubled.var(i) } else { doubled.var(i + k) })
            .collect();
        AlgebraMap::new(loc.algebra.clone(), doubled.clone(), images)
    };
    let left = b.tensor_over(&into(false)?)?;
    let right = b.tensor_over(&into(true)?)?;
    let selfproduct = left.tensor(&right)?.stable(order)?;
    let diag: Vec<MultiSeries> = (0..k).map(|j| doubled.var(n0 + j).sub(&doubled.var(n0 + k + j))).collect::<Result<_>>()?;
    debug_assert_eq!(total, n0 + 2 * k);
    let diagonal_route = left.tensor(&koszul(&doubled, &diag)?)?.stable(order)?;
    let mut strict_flavors = Vec::new();
    for f in loc.new_flavors() {
        let x = MultiSeries::var(ring, 1, order, 0);
        let ok = check_strictness_condition(ring, f, order, &x)?.holds;
        strict_flavors.push((f.label(), ok));
    }
    let selfproduct_ok = selfproduct.same_ranks(&homology) && diagonal_route.same_ranks(&homology);
    let verdict = selfproduct_ok && strict_flavors.iter().all(|(_, ok)| *ok) && loc.splitting_verified != Some(false);
    Ok(LocalizationReport {
        steps: loc.steps.clone(),
        algebra: loc.algebra.label(),
        elements: loc.elements.iter().map(|e| e.pretty()).collect(),
        order,
        homology,
        selfproduct,
        diagonal_route,
        strict_flavors,
        splitting_verified: loc.splitting_verified,
        selfproduct_ok,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientVerdict {
    pub quotient: HomologyReport,
    pub selfproduct: HomologyReport,
    pub verdict: bool,
}

/// For a verified f: A → B and a ∈ A, checks (B⫽f(a)) ⊗_{A⫽a} (B⫽f(a)) ≅
/// B⫽f(a), the selfproduct being (B ⊗_A^L B) ⫽ f(a).
pub fn verify_quotient_hepi(f: &AlgebraMap, elements: &[MultiSeries]) -> Result<QuotientVerdict> {
    if !verify_hepi(f)?.verdict {
        return Err(Error::NotHepi);
    }
    let images = elements.iter().map(|a| f.apply(a)).collect::<Result<Vec<_>>>()?;
    let order = f.target.order;
    let quotient = koszul(&f.target, &images)?.stable(order)?;
    let sq = f.target.square();
    let left: Vec<MultiSeries> = images.iter().map(|s| s.tensor_embed_left()).collect();
    let base = diagonal_resolution(&f.source)?.tensor_over_pair(f, f)?;
    let selfproduct = base.tensor(&koszul(&sq, &left)?)?.stable(order)?;
    let verdict = selfproduct.same_ranks(&quotient);
    Ok(QuotientVerdict { quotient, selfproduct, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, qf, BanachRing};

    fn alg(ring: &BanachRing, fl: AlgebraFlavor, n: usize, order: u32) -> TruncAlgebra {
        TruncAlgebra::uniform(ring, &fl, n, order).unwrap()
    }

    #[test]
    fn weierstrass_examples() {
        let z = BanachRing::integers();
        let pt = TruncAlgebra::ground(&z, 6);
        let loc = weierstrass(&pt, &AlgebraFlavor::dagger(qf(1, 2)), &pt.constant(q(2))).unwrap();
        let rep = verify_localization(&loc).unwrap();
        assert_eq!(rep.homology.ranks_down(), vec![1, 0]);
        assert!(rep.homology.torsion(0).is_empty());
        assert!(rep.verdict, "{rep:?}");
        // ℤ{px} instead of ℤ{px}†: disc flavor, not strict
        let bad = weierstrass(&pt, &AlgebraFlavor::disc(qf(1, 2)), &pt.constant(q(2))).unwrap();
        assert!(!verify_localization(&bad).unwrap().verdict);

        let q2 = BanachRing::padic(2, 16).unwrap();
        let a = alg(&q2, AlgebraFlavor::tate(q(1)), 1, 6);
        let loc = weierstrass(&a, &AlgebraFlavor::tate(q(1)), &a.var(0)).unwrap();
        let rep = verify_localization(&loc).unwrap();
        assert_eq!(rep.homology.ranks_down(), vec![7, 0]);
        assert!(rep.verdict);
        let loc0 = weierstrass(&a, &AlgebraFlavor::tate(q(1)), &a.zero()).unwrap();
        assert_eq!(loc0.complex().unwrap().stable(6).unwrap().ranks_down(), vec![7, 0]);
    }

    #[test]
    fn laurent_examples() {
        let q2 = BanachRing::padic(2, 16).unwrap();
        let a = alg(&q2, AlgebraFlavor::tate(q(1)), 1, 6);
        let rep = verify_localization(&laurent(&a, &AlgebraFlavor::tate(q(1)), &a.var(0)).unwrap()).unwrap();
        assert_eq!(rep.homology.ranks_down(), vec![13, 0]);
        assert!(rep.verdict, "{rep:?}");
        let one = laurent(&a, &AlgebraFlavor::tate(q(1)), &a.one()).unwrap();
        assert_eq!(one.complex().unwrap().stable(6).unwrap().ranks_down(), vec![7, 0]);
        let zero = laurent(&a, &AlgebraFlavor::tate(q(1)), &a.zero()).unwrap();
        assert_eq!(zero.complex().unwrap().stable(6).unwrap().ranks_down(), vec![0, 0]);
    }

    #[test]
    fn rational_examples() {
        let q2 = BanachRing::padic(2, 16).unwrap();
        let a = alg(&q2, AlgebraFlavor::tate(q(1)), 1, 6);
        let t = AlgebraFlavor::tate(q(1));
        let w = Witness { a: a.zero(), b: a.one() };
        let r = rational(&a, std::slice::from_ref(&t), &a.one(), &[a.var(0)], &[w]).unwrap();
        let wz = weierstrass(&a, &t, &a.var(0)).unwrap();
        assert_eq!(r.complex().unwrap().expand(6).unwrap(), wz.complex().unwrap().expand(6).unwrap());
        let x = a.var(0);
        let bad = Witness { a: a.zero(), b: a.zero() };
        assert!(matches!(
            rational(&a, std::slice::from_ref(&t), &x, &[x.pow(2)], &[bad]),
            Err(Error::WitnessFails(_))
        ));
        let g = a.one().add(&x).unwrap();
        let w = Witness { a: a.one(), b: a.zero() };
        let r = rational(&a, &[t], &g, &[a.one()], &[w]).unwrap();
        assert_eq!(r.splitting_verified, Some(true));
        let rep = verify_localization(&r).unwrap();
        assert_eq!(rep.homology.rank(-1), 0);
        assert!(rep.verdict, "{rep:?}");
    }

    #[test]
    fn adic_and_quotients() {
        let qq = BanachRing::rationals();
        let a = alg(&qq, AlgebraFlavor::Polynomial, 1, 6);
        let c = adic_completion(&a, &[a.var(0)]).unwrap();
        assert_eq!(c.complex().unwrap().stable(6).unwrap().ranks_down(), vec![7, 0]);
        let c0 = adic_completion(&a, &[a.zero()]).unwrap();
        assert_eq!(c0.complex().unwrap().stable(6).unwrap().ranks_down(), vec![7, 0]);
        let z = BanachRing::integers();
        let pt = TruncAlgebra::ground(&z, 6);
        let c2 = adic_completion(&pt, &[pt.constant(q(2))]).unwrap();
        assert_eq!(c2.complex().unwrap().stable(6).unwrap().ranks_down(), vec![1, 0]);

        let x = a.var(0);
        assert_eq!(derived_quotient(&a, &[x.pow(2)]).unwrap().stable(6).unwrap().ranks_down(), vec![2, 0]);
        let h = derived_quotient(&a, &[x.pow(2), x.clone()]).unwrap().stable(6).unwrap();
        assert_eq!(h.ranks_down(), vec![1, 1, 0]);
        let b = alg(&qq, AlgebraFlavor::Polynomial, 2, 6);
        let h = derived_quotient(&b, &[b.var(0), b.var(1)]).unwrap().stable(6).unwrap();
        assert_eq!(h.ranks_down(), vec![1, 0, 0]);

        let f = AlgebraMap::canonical(&a, &alg(&qq, AlgebraFlavor::formal(), 1, 6)).unwrap();
        assert!(verify_quotient_hepi(&f, &[x.pow(2)]).unwrap().verdict);
    }

    #[test]
    fn laurent_weierstrass_commute() {
        let q2 = BanachRing::padic(2, 16).unwrap();
        let a = alg(&q2, AlgebraFlavor::tate(q(1)), 1, 5);
        let t = AlgebraFlavor::tate(q(1));
        let x = a.var(0);
        let l1 = Localization::over(&a).laurent_step(&t, &x).unwrap();
        let lw = l1.weierstrass_step(&t, &l1.lift_base(&x).unwrap()).unwrap();
        let w1 = Localization::over(&a).weierstrass_step(&t, &x).unwrap();
        let wl = w1.laurent_step(&t, &w1.lift_base(&x).unwrap()).unwrap();
        let h1 = lw.complex().unwrap().stable(5).unwrap();
        let h2 = wl.complex().unwrap().stable(5).unwrap();
        assert_eq!(h1, h2);
    }
}
