//! Hochschild homology of truncated algebras.
//!
//! Three models: the diagonal Koszul complex pushed along the codiagonal
//! (smooth case), the s/e/u model for a complete intersection A⫽(f), and the bar
//! complex of a finite-dimensional algebra given by structure constants.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::complexes::{diagonal_resolution, koszul, AlgComplex, BasisLabel, ChainComplex, EntryMatrix, FreeModule};
use crate::error::{Error, Result};
use crate::hepi::verify_hepi;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::scalars::{BanachRing, Q};
use crate::series::{AlgebraFlavor, Exponent, FlavorKind, MultiSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HHReport {
    pub model: String,
    pub algebra: String,
    pub order: u32,
    /// HH_0, HH_1, …
    pub ranks: Vec<usize>,
}

fn complex_ranks(c: &AlgComplex, order: u32, count: usize) -> Result<Vec<usize>> {
    let h = c.stable(order)?;
    Ok((0..count).map(|j| h.rank(-(j as i32))).collect())
}

/// A ⊗_{A⊗A} K_A: the diagonal resolution along the codiagonal.
pub fn hh_complex(a: &TruncAlgebra) -> Result<AlgComplex> {
    diagonal_resolution(a)?.tensor_over(&AlgebraMap::codiagonal(a))
}

pub fn hh_koszul(a: &TruncAlgebra) -> Result<HHReport> {
    let ranks = complex_ranks(&hh_complex(a)?, a.order, a.nvars() + 1)?;
    Ok(HHReport { model: "koszul".into(), algebra: a.label(), order: a.order, ranks })
}

/// HKR for a free algebra on n generators at band N:
/// HH_j = C(n, j) · C(N − j + n, n).
pub fn hkr_expected(n: usize, order: u32) -> Vec<usize> {
    use crate::series::binomial;
    (0..=n)
        .map(|j| if j as u32 > order { 0 } else { binomial(n, j) * binomial(order as usize - j + n, n) })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseChange {
    pub map: String,
    /// ranks of B ⊗_A HH(A)
    pub base_changed: Vec<usize>,
    pub target: HHReport,
    pub agrees: bool,
}

/// HH(B) against B ⊗_A HH(A) for a verified homotopy epimorphism A → B.
pub fn hh_base_change(f: &AlgebraMap) -> Result<BaseChange> {
    if !verify_hepi(f)?.verdict {
        return Err(Error::NotHepi);
    }
    let n = f.source.nvars() + 1;
    let base_changed = complex_ranks(&hh_complex(&f.source)?.tensor_over(f)?, f.target.order, n)?;
    let target = hh_koszul(&f.target)?;
    let agrees = target.ranks == base_changed;
    Ok(BaseChange { map: f.label(), base_changed, target, agrees })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersection {
    pub report: HHReport,
    /// HH of the analytified quotient, when a flavor was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic: Option<HHReport>,
    /// ranks of (A^an ⫽ I) ⊗_{A⫽I} HH(A⫽I)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_changed: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_change: Option<bool>,
}

/// HH_0..HH_m of A⫽(f_1..f_k) for a regular sequence, from
/// A ⊗ Λ(s_1..s_k) ⊗ Λ(e_1..e_n) ⊗ Γ(u_1..u_k) with Ds_j = f_j, De_i = 0,
/// Du_j = Σ_i ∂_i f_j e_i. With `analytic`, the same over A^an (A must be
/// polynomial) and the base-change comparison.
pub fn hh_complete_intersection(
    a: &TruncAlgebra,
    fs: &[MultiSeries],
    m: usize,
    analytic: Option<&AlgebraFlavor>,
) -> Result<CompleteIntersection> {
    check_regular(a, fs)?;
    let (own, shift) = ci_complex(a, fs, m + 1)?;
    let name = |alg: &TruncAlgebra, fs: &[MultiSeries]| {
        let rel: Vec<String> = fs.iter().map(MultiSeries::pretty).collect();
        format!("{} / ({})", alg.label(), rel.join(", "))
    };
    let report = HHReport {
        model: "complete-intersection".into(),
        algebra: name(a, fs),
        order: a.order,
        ranks: complex_ranks(&own, a.order + shift, m + 1)?,
    };
    let Some(flavor) = analytic else {
        return Ok(CompleteIntersection { report, analytic: None, base_changed: None, base_change: None });
    };
    if a.factors.iter().any(|f| f.kind() != FlavorKind::Polynomial) {
        return Err(Error::Unsupported("analytification needs a polynomial base".into()));
    }
    let an = TruncAlgebra::uniform(&a.ring, flavor, a.nvars(), a.order)?;
    let map = AlgebraMap::canonical(a, &an)?;
    if !verify_hepi(&map)?.verdict {
        return Err(Error::NotHepi);
    }
    let images = fs.iter().map(|f| map.apply(f)).collect::<Result<Vec<_>>>()?;
    let there = HHReport {
        model: "complete-intersection".into(),
        algebra: name(&an, &images),
        order: an.order,
        ranks: {
            let (c, sh) = ci_complex(&an, &images, m + 1)?;
            complex_ranks(&c, an.order + sh, m + 1)?
        },
    };
    let moved = complex_ranks(&own.tensor_over(&map)?, an.order + shift, m + 1)?;
    let agrees = moved == there.ranks;
    Ok(CompleteIntersection { report, analytic: Some(there), base_changed: Some(moved), base_change: Some(agrees) })
}

/// Koszul H^{<0} = 0 on the stable band.
fn check_regular(a: &TruncAlgebra, fs: &[MultiSeries]) -> Result<()> {
    let h = koszul(a, fs)?.stable(a.order)?;
    if fs.iter().any(MultiSeries::is_zero) || h.degrees.iter().any(|d| d.degree < 0 && d.rank > 0) {
        let rel: Vec<String> = fs.iter().map(MultiSeries::pretty).collect();
        return Err(Error::NotRegular(rel.join(", ")));
    }
    Ok(())
}

fn partial(f: &MultiSeries, i: usize) -> MultiSeries {
    let mut out = MultiSeries::zero(&f.ring, f.nvars, f.order);
    for (e, c) in f.terms() {
        let k = e.0[i];
        if k > 0 {
            let mut ne = e.0.clone();
            ne[i] -= 1;
            out.add_term(Exponent(ne), c * Q::from_integer(k.into()));
        }
    }
    out
}

/// Multi-indices α ∈ ℕ^k with |α| ≤ max.
fn multi_indices(k: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|a: Vec<usize>| {
                let used: usize = a.iter().sum();
                (0..=max - used).map(move |x| [a.clone(), vec![x]].concat())
            })
            .collect();
    }
    out
}

type CiCell = (u32, u32, Vec<usize>);

/// s_T e_S u^[α] in homological degree |T| + |S| + 2|α|, up to `top`.
/// Also returns the band shift: the largest weight a cell carries beyond its
/// e_i factors, so that band N + shift sees HH at band N.
fn ci_complex(a: &TruncAlgebra, fs: &[MultiSeries], top: usize) -> Result<(AlgComplex, u32)> {
    let n = a.nvars();
    let k = fs.len();
    if n > 16 || k > 16 {
        return Err(Error::SizeGuard("at most 16 variables and relations".into()));
    }
    let degs: Vec<u32> = fs.iter().map(|f| f.degree().unwrap_or(0)).collect();
    let grads: Vec<Vec<MultiSeries>> = fs.iter().map(|f| (0..n).map(|i| partial(f, i)).collect()).collect();
    let mut basis: Vec<Vec<CiCell>> = vec![Vec::new(); top + 1];
    for smask in 0..(1u32 << k) {
        for emask in 0..(1u32 << n) {
            for alpha in multi_indices(k, top / 2) {
                let d = (smask.count_ones() + emask.count_ones()) as usize + 2 * alpha.iter().sum::<usize>();
                if d <= top {
                    basis[d].push((smask, emask, alpha));
                }
            }
        }
    }
    for b in &mut basis {
        b.sort();
    }
    let pos: Vec<HashMap<CiCell, usize>> =
        basis.iter().map(|b| b.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect()).collect();
    let label = |(smask, emask, alpha): &CiCell| {
        let mut l = String::new();
        for j in (0..k).filter(|j| smask >> j & 1 == 1) {
            l.push_str(&format!("s{}", j + 1));
        }
        for i in (0..n).filter(|i| emask >> i & 1 == 1) {
            l.push_str(&format!("e{}", i + 1));
        }
        for (j, &x) in alpha.iter().enumerate().filter(|(_, &x)| x > 0) {
            l.push_str(&format!("u{}[{x}]", j + 1));
        }
        if l.is_empty() {
            l.push('1');
        }
        l
    };
    let weight = |(smask, emask, alpha): &CiCell| {
        let s: u32 = (0..k).filter(|j| smask >> j & 1 == 1).map(|j| degs[j]).sum();
        let u: u32 = alpha.iter().zip(&degs).map(|(&x, &d)| x as u32 * d).sum();
        s + emask.count_ones() + u
    };
    // position p holds homological degree top − p
    let labels = (0..=top).rev().map(|d| basis[d].iter().map(label).collect()).collect();
    let base = (0..=top).rev().map(|d| basis[d].iter().map(weight).collect()).collect();
    let mut boundaries: Vec<EntryMatrix> = Vec::new();
    for d in (1..=top).rev() {
        let m = basis[d]
            .iter()
            .map(|(smask, emask, alpha)| {
                let mut col = Vec::new();
                for (before, j) in (0..k).filter(|j| smask >> j & 1 == 1).enumerate() {
                    let t = pos[d - 1][&(smask & !(1 << j), *emask, alpha.clone())];
                    col.push((t, if before % 2 == 1 { fs[j].neg() } else { fs[j].clone() }));
                }
                let outer_neg = (smask.count_ones() + emask.count_ones()) % 2 == 1;
                for j in (0..k).filter(|&j| alpha[j] > 0) {
                    let mut lower = alpha.clone();
                    lower[j] -= 1;
                    for (i, g) in grads[j].iter().enumerate() {
                        if emask >> i & 1 == 1 || g.is_zero() {
                            continue;
                        }
                        let above = (emask >> (i + 1)).count_ones();
                        let neg = outer_neg ^ (above % 2 == 1);
                        let t = pos[d - 1][&(*smask, emask | 1 << i, lower.clone())];
                        col.push((t, if neg { g.neg() } else { g.clone() }));
                    }
                }
                col
            })
            .collect();
        boundaries.push(m);
    }
    let c = AlgComplex::with_weights(a.clone(), -(top as i32), labels, base, boundaries)?;
    let shift = (0..=top)
        .rev()
        .zip(&c.terms)
        .flat_map(|(d, cells)| basis[d].iter().zip(cells).map(|((_, emask, _), cell)| cell.weight - emask.count_ones()))
        .max()
        .unwrap_or(0);
    Ok((c, shift))
}

/// Finite free algebra with basis b_0..b_{d−1}: b_i b_j = Σ_k mult[i][j][k] b_k.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteAlgebra {
    pub name: String,
    pub ring: BanachRing,
    #[serde(with = "crate::scalars::qvec")]
    pub unit: Vec<Q>,
    pub mult: Vec<Vec<Vec<Q>>>,
}

pub const BAR_MAX_DIM: usize = 12;
pub const BAR_MAX_DEGREE: usize = 4;
const BAR_MAX_CELLS: usize = 200_000;

impl FiniteAlgebra {
    /// Checks the table is associative with the given unit.
    pub fn new(name: &str, ring: &BanachRing, unit: Vec<Q>, mult: Vec<Vec<Vec<Q>>>) -> Result<Self> {
        let d = unit.len();
        if mult.len() != d || mult.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::ShapeMismatch(format!("structure constants must be {d}×{d}×{d}")));
        }
        let a = FiniteAlgebra { name: name.into(), ring: ring.clone(), unit, mult };
        for i in 0..d {
            let bi = a.basis(i);
            if a.product(&a.unit, &bi) != bi || a.product(&bi, &a.unit) != bi {
                return Err(Error::InvalidValue(format!("{name}: unit fails on b_{i}")));
            }
            for j in 0..d {
                let bj = a.basis(j);
                for k in 0..d {
                    let bk = a.basis(k);
                    if a.product(&a.product(&bi, &bj), &bk) != a.product(&bi, &a.product(&bj, &bk)) {
                        return Err(Error::InvalidValue(format!("{name}: not associative at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    fn basis(&self, i: usize) -> Vec<Q> {
        (0..self.dim()).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
    }

    pub fn product(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += a * b * c;
                    }
                }
            }
        }
        out
    }

    /// R[x]/(x^k), basis 1, x, …, x^{k−1}.
    pub fn truncated_polynomial(ring: &BanachRing, k: usize) -> Result<Self> {
        let mult = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| if i + j == l { Q::one() } else { Q::zero() }).collect()).collect())
            .collect();
        let mut unit = vec![Q::zero(); k];
        unit[0] = Q::one();
        FiniteAlgebra::new(&format!("{}[x]/(x^{k})", ring.label()), ring, unit, mult)
    }

    /// R × … × R, basis the idempotents.
    pub fn product_of_copies(ring: &BanachRing, k: usize) -> Result<Self> {
        let mult = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| if i == j && j == l { Q::one() } else { Q::zero() }).collect()).collect())
            .collect();
        FiniteAlgebra::new(&format!("{}^{k}", ring.label()), ring, vec![Q::one(); k], mult)
    }
}

impl FiniteAlgebra {
    /// R[x]/(f) for f with a unit leading coefficient; basis 1, …, x^{d−1}.
    pub fn univariate_quotient(ring: &BanachRing, coeffs: &[Q]) -> Result<Self> {
        let d = coeffs.iter().rposition(|c| !c.is_zero()).ok_or_else(|| Error::InvalidValue("zero relation".into()))?;
        let lead = &coeffs[d];
        let inv = Q::one() / lead;
        if !ring.admits(&inv) {
            return Err(Error::InvalidValue(format!("leading coefficient {lead} is not a unit")));
        }
        if d == 0 {
            return Err(Error::InvalidValue("relation is a unit; the quotient is zero".into()));
        }
        // x^k in the basis, for k < 2d − 1
        let mut powers: Vec<Vec<Q>> = Vec::new();
        for k in 0..(2 * d - 1) {
            let mut v = vec![Q::zero(); d];
            if k < d {
                v[k] = Q::one();
            } else {
                // x·x^{k−1}, reducing x^d = −Σ_{i<d} (c_i / c_d) x^i
                let prev = &powers[k - 1];
                let top = prev[d - 1].clone();
                for i in (1..d).rev() {
                    v[i] = prev[i - 1].clone();
                }
                for (i, c) in coeffs.iter().take(d).enumerate() {
                    v[i] -= &top * c * &inv;
                }
            }
            powers.push(v);
        }
        let mult = (0..d).map(|i| (0..d).map(|j| powers[i + j].clone()).collect()).collect();
        let mut unit = vec![Q::zero(); d];
        unit[0] = Q::one();
        let terms: Vec<(Vec<u32>, Q)> = coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())).collect();
        let rel = MultiSeries::from_terms(ring, 1, d as u32, terms)?;
        FiniteAlgebra::new(&format!("{}[x]/({})", ring.label(), rel.pretty()), ring, unit, mult)
    }

    /// A ⊗ B with basis a_i ⊗ b_j at index i·dim B + j.
    pub fn tensor(&self, other: &FiniteAlgebra) -> Result<Self> {
        let (d1, d2) = (self.dim(), other.dim());
        let mut mult = vec![vec![vec![Q::zero(); d1 * d2]; d1 * d2]; d1 * d2];
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d1 {
                    for l in 0..d2 {
                        let cell = &mut mult[i * d2 + j][k * d2 + l];
                        for (a, x) in self.mult[i][k].iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                            for (b, y) in other.mult[j][l].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                                cell[a * d2 + b] += x * y;
                            }
                        }
                    }
                }
            }
        }
        let unit = self.unit.iter().flat_map(|x| other.unit.iter().map(move |y| x * y)).collect();
        FiniteAlgebra::new(&format!("{} ⊗ {}", self.name, other.name), &self.ring, unit, mult)
    }

    /// A polynomial algebra modulo one monic relation per variable, relation
    /// i in x_i alone.
    pub fn from_spec(a: &TruncAlgebra, relations: &[MultiSeries]) -> Result<Self> {
        if a.factors.iter().any(|f| f.kind() != FlavorKind::Polynomial) {
            return Err(Error::Unsupported("the bar model needs a polynomial algebra".into()));
        }
        if relations.len() != a.nvars() {
            return Err(Error::Unsupported("the bar model needs one relation per variable".into()));
        }
        let mut out = FiniteAlgebra::new(&a.ring.label(), &a.ring, vec![Q::one()], vec![vec![vec![Q::one()]]])?;
        for (i, f) in relations.iter().enumerate() {
            let d = f.degree().unwrap_or(0) as usize;
            let mut coeffs = vec![Q::zero(); d + 1];
            for (e, c) in f.terms() {
                if e.0.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                    return Err(Error::Unsupported(format!("relation {} must involve only variable {}", f.pretty(), i + 1)));
                }
                coeffs[e.0[i] as usize] = c.clone();
            }
            let factor = FiniteAlgebra::univariate_quotient(&a.ring, &coeffs)?;
            out = if i == 0 { factor } else { out.tensor(&factor)? };
        }
        Ok(out)
    }
}

/// Unnormalized bar complex, HH_0..HH_m.
pub fn hh_bar(a: &FiniteAlgebra, m: usize) -> Result<HHReport> {
    let d = a.dim();
    let cells = (0..=m + 1).map(|n| d.checked_pow(n as u32 + 1).unwrap_or(usize::MAX)).fold(0usize, usize::saturating_add);
    if d > BAR_MAX_DIM || m > BAR_MAX_DEGREE || cells > BAR_MAX_CELLS {
        return Err(Error::SizeGuard(format!(
            "bar complex of dim {d} through degree {m} (limits dim ≤ {BAR_MAX_DIM}, degree ≤ {BAR_MAX_DEGREE}, {BAR_MAX_CELLS} cells)"
        )));
    }
    let words = |n: usize| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..=n {
            out = out.into_iter().flat_map(|w| (0..d).map(move |i| [w.clone(), vec![i]].concat())).collect();
        }
        out
    };
    let index = |w: &[usize]| w.iter().fold(0, |acc, &i| acc * d + i);
    let top = m + 1;
    let mut modules = Vec::new();
    let mut boundaries = Vec::new();
    for n in (0..=top).rev() {
        let basis = words(n).into_iter().map(BasisLabel::Word).collect();
        modules.push(FreeModule::new(&a.ring, basis)?);
    }
    for n in (1..=top).rev() {
        let cols: Vec<SparseVec> = words(n)
            .iter()
            .map(|w| {
                let mut acc: HashMap<usize, Q> = HashMap::new();
                let mut emit = |sign: bool, prod: Vec<Q>, build: &dyn Fn(usize) -> Vec<usize>| {
                    for (k, c) in prod.into_iter().enumerate() {
                        if !c.is_zero() {
                            let e = acc.entry(index(&build(k))).or_insert_with(Q::zero);
                            if sign {
                                *e -= c;
                            } else {
                                *e += c;
                            }
                        }
                    }
                };
                for i in 0..n {
                    let prod = a.mult[w[i]][w[i + 1]].clone();
                    let build = |k: usize| [&w[..i], &[k], &w[i + 2..]].concat();
                    emit(i % 2 == 1, prod, &build);
                }
                let prod = a.mult[w[n]][w[0]].clone();
                let build = |k: usize| [&[k], &w[1..n]].concat();
                emit(n % 2 == 1, prod, &build);
                let mut col: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(d.pow(n as u32), cols));
    }
    let h = ChainComplex::new(&a.ring, -(top as i32), modules, boundaries)?.homology()?;
    let ranks = (0..=m).map(|j| h.rank(-(j as i32))).collect();
    Ok(HHReport { model: "bar".into(), algebra: a.name.clone(), order: m as u32, ranks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    #[test]
    fn hkr_examples() {
        let qq = BanachRing::rationals();
        let a = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, 6).unwrap();
        assert_eq!(hh_koszul(&a).unwrap().ranks, vec![7, 6]);
        let b = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 2, 4).unwrap();
        assert_eq!(hh_koszul(&b).unwrap().ranks, vec![15, 20, 6]);
        assert_eq!(hkr_expected(2, 4), vec![15, 20, 6]);
    }

    #[test]
    fn hypersurface_matches_bar() {
        let qq = BanachRing::rationals();
        let a = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, 6).unwrap();
        let x = a.var(0);
        assert_eq!(hh_complete_intersection(&a, &[x.pow(2)], 4, None).unwrap().report.ranks, vec![2, 1, 1, 1, 1]);
        let bar = hh_bar(&FiniteAlgebra::truncated_polynomial(&qq, 2).unwrap(), 4).unwrap();
        assert_eq!(bar.ranks, vec![2, 1, 1, 1, 1]);
        for k in 3..=4 {
            let ci = hh_complete_intersection(&a, &[x.pow(k)], 4, None).unwrap().report;
            let bar = hh_bar(&FiniteAlgebra::truncated_polynomial(&qq, k as usize).unwrap(), 4).unwrap();
            assert_eq!(ci.ranks, bar.ranks, "x^{k}");
        }
        assert!(matches!(hh_complete_intersection(&a, &[a.zero()], 2, None), Err(Error::NotRegular(_))));
        // no relations: the smooth case
        assert_eq!(hh_complete_intersection(&a, &[], 2, None).unwrap().report.ranks, vec![7, 6, 0]);
    }

    #[test]
    fn two_relations_and_analytification() {
        let qq = BanachRing::rationals();
        let b = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 2, 6).unwrap();
        let (x, y) = (b.var(0), b.var(1));
        // ℚ[x,y]/(x², y²) = ℚ[x]/(x²) ⊗ ℚ[y]/(y²): Künneth from (2,1,1,1)
        let r = hh_complete_intersection(&b, &[x.pow(2), y.pow(2)], 3, None).unwrap().report;
        assert_eq!(r.ranks, vec![4, 4, 5, 6]);
        assert!(matches!(hh_complete_intersection(&b, &[x.clone(), x.clone()], 1, None), Err(Error::NotRegular(_))));

        let q2 = BanachRing::padic(2, 16).unwrap();
        let a = TruncAlgebra::uniform(&q2, &AlgebraFlavor::Polynomial, 1, 6).unwrap();
        let t = AlgebraFlavor::tate(q(1));
        let ci = hh_complete_intersection(&a, &[a.var(0).pow(2)], 4, Some(&t)).unwrap();
        assert_eq!(ci.base_change, Some(true));
        assert_eq!(ci.analytic.unwrap().ranks, vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn bar_examples() {
        let qq = BanachRing::rationals();
        assert_eq!(hh_bar(&FiniteAlgebra::product_of_copies(&qq, 2).unwrap(), 2).unwrap().ranks, vec![2, 0, 0]);
        assert_eq!(hh_bar(&FiniteAlgebra::product_of_copies(&qq, 1).unwrap(), 4).unwrap().ranks, vec![1, 0, 0, 0, 0]);
        // x² − x splits as ℚ × ℚ
        let split = FiniteAlgebra::univariate_quotient(&qq, &[q(0), q(-1), q(1)]).unwrap();
        assert_eq!(hh_bar(&split, 2).unwrap().ranks, vec![2, 0, 0]);
        let pp = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 2, 4).unwrap();
        let sq = FiniteAlgebra::from_spec(&pp, &[pp.var(0).pow(2), pp.var(1).pow(2)]).unwrap();
        assert_eq!(hh_bar(&sq, 2).unwrap().ranks, vec![4, 4, 5]);
        let big = FiniteAlgebra::product_of_copies(&qq, 13).unwrap();
        assert!(matches!(hh_bar(&big, 1), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn base_change_along_completion() {
        let qq = BanachRing::rationals();
        let p = TruncAlgebra::uniform(&qq, &AlgebraFlavor::Polynomial, 1, 5).unwrap();
        let fm = TruncAlgebra::uniform(&qq, &AlgebraFlavor::formal(), 1, 5).unwrap();
        let r = hh_base_change(&AlgebraMap::canonical(&p, &fm).unwrap()).unwrap();
        assert!(r.agrees);
        assert_eq!(r.target.ranks, vec![6, 5]);
        let z = BanachRing::integers();
        let d1 = TruncAlgebra::uniform(&z, &AlgebraFlavor::disc(q(1)), 1, 5).unwrap();
        let d2 = TruncAlgebra::uniform(&z, &AlgebraFlavor::disc(crate::scalars::qf(1, 2)), 1, 5).unwrap();
        assert!(matches!(hh_base_change(&AlgebraMap::canonical(&d1, &d2).unwrap()), Err(Error::NotHepi)));
    }
}
