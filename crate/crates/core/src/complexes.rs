//! Chain complexes of free modules: concrete ones over the ground ring, and
//! complexes of free modules over a truncated algebra (Koszul complexes and
//! their base changes), expanded into concrete ones by a weight filtration.
//!
//! Degrees are cohomological: a resolution lives in degrees −k..0 and the
//! differential raises degree. Matrices are stored with rows indexing the
//! target.
//!
//! Filtration: each free copy carries a weight w, and in a band N the copy
//! contributes the monomials of degree ≤ N − w. Weights are chosen so that
//! every entry fits (w_source ≥ w_target + deg entry), hence each band is a
//! genuine subcomplex with nothing cut off.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraMap, TruncAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{torsion_factors, Echelon, PivotRule, SparseMatrix, SparseVec};
use crate::scalars::{BanachRing, Carrier, RingKind};
use crate::series::{monomials_up_to, Exponent, MultiSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisLabel {
    Monomial { copy: usize, exponent: Vec<u32> },
    Word(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: BanachRing,
    pub basis: Vec<BasisLabel>,
}

impl FreeModule {
    pub fn new(ring: &BanachRing, basis: Vec<BasisLabel>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        if !basis.iter().all(|b| seen.insert(b)) {
            return Err(Error::ShapeMismatch("repeated basis label".into()));
        }
        Ok(FreeModule { ring: ring.clone(), basis })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn pivot_rule(ring: &BanachRing) -> PivotRule {
    match ring.kind {
        RingKind::PAdic { p, precision } => PivotRule::PAdic { p, precision },
        _ => PivotRule::Rational,
    }
}

fn over_integers(ring: &BanachRing) -> bool {
    ring.carrier() == Carrier::Integer
}

/// Finitely many free modules in consecutive degrees lo, lo+1, …
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    pub ring: BanachRing,
    pub lo: i32,
    pub modules: Vec<FreeModule>,
    /// boundaries[i]: modules[i] → modules[i+1]
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ring: &BanachRing, lo: i32, modules: Vec<FreeModule>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if modules.is_empty() || boundaries.len() + 1 != modules.len() {
            return Err(Error::ShapeMismatch("need one boundary between each pair of modules".into()));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.cols != modules[i].rank() || d.rows != modules[i + 1].rank() {
                return Err(Error::ShapeMismatch(format!("boundary {i} has shape {}x{}", d.rows, d.cols)));
            }
        }
        Ok(ChainComplex { ring: ring.clone(), lo, modules, boundaries })
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn module(&self, deg: i32) -> Option<&FreeModule> {
        self.modules.get(usize::try_from(deg - self.lo).ok()?)
    }

    pub fn d_squared_is_zero(&self) -> Result<bool> {
        for w in self.boundaries.windows(2) {
            if !w[1].compose(&w[0])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn homology(&self) -> Result<HomologyReport> {
        let rule = pivot_rule(&self.ring);
        let ranks: Vec<usize> = self.boundaries.par_iter().map(|d| d.rank(rule)).collect::<Result<_>>()?;
        let torsion: Vec<Vec<BigInt>> = if over_integers(&self.ring) {
            self.boundaries.par_iter().map(torsion_factors).collect::<Result<_>>()?
        } else {
            vec![Vec::new(); self.boundaries.len()]
        };
        let mut degrees = Vec::new();
        for (i, m) in self.modules.iter().enumerate() {
            let out = if i < ranks.len() { ranks[i] } else { 0 };
            let inc = if i > 0 { ranks[i - 1] } else { 0 };
            degrees.push(DegreeHomology {
                degree: self.lo + i as i32,
                rank: m.rank() - out - inc,
                torsion: if i > 0 { torsion[i - 1].clone() } else { Vec::new() },
            });
        }
        Ok(HomologyReport { ring: self.ring.label(), degrees })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: i32,
    pub rank: usize,
    /// Invariant factors > 1 (ℤ coefficients only).
    #[serde(with = "bigint_strs", skip_serializing_if = "Vec::is_empty", default)]
    pub torsion: Vec<BigInt>,
}

mod bigint_strs {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub ring: String,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyReport {
    pub fn rank(&self, degree: i32) -> usize {
        self.degrees.iter().find(|d| d.degree == degree).map_or(0, |d| d.rank)
    }

    pub fn torsion(&self, degree: i32) -> Vec<BigInt> {
        self.degrees.iter().find(|d| d.degree == degree).map_or_else(Vec::new, |d| d.torsion.clone())
    }

    /// Ranks listed from degree 0 downwards: (H⁰, H⁻¹, …).
    pub fn ranks_down(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_by_key(|x| -x.degree);
        d.into_iter().map(|x| x.rank).collect()
    }

    /// Homology free of rank `rank` in degree 0, zero elsewhere.
    pub fn concentrated_in_zero(&self, rank: usize) -> bool {
        self.degrees
            .iter()
            .all(|d| if d.degree == 0 { d.rank == rank && d.torsion.is_empty() } else { d.rank == 0 && d.torsion.is_empty() })
    }

    pub fn same_ranks(&self, other: &HomologyReport) -> bool {
        let lo = self.degrees.iter().chain(&other.degrees).map(|d| d.degree).min().unwrap_or(0);
        let hi = self.degrees.iter().chain(&other.degrees).map(|d| d.degree).max().unwrap_or(0);
        (lo..=hi).all(|k| self.rank(k) == other.rank(k) && self.torsion(k) == other.torsion(k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub label: String,
    pub weight: u32,
}

/// Entries of one boundary: entries[source copy] = [(target copy, series)].
pub type EntryMatrix = Vec<Vec<(usize, MultiSeries)>>;

/// A complex of finite free modules over a truncated algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgComplex {
    pub algebra: TruncAlgebra,
    pub lo: i32,
    pub terms: Vec<Vec<Summand>>,
    pub boundaries: Vec<EntryMatrix>,
}

impl AlgComplex {
    /// Builds the complex and fixes weights top-down:
    /// w_s = max(base_s, w_t + deg(entry)) over the entries leaving s.
    pub fn with_weights(
        algebra: TruncAlgebra,
        lo: i32,
        labels: Vec<Vec<String>>,
        base: Vec<Vec<u32>>,
        boundaries: Vec<EntryMatrix>,
    ) -> Result<Self> {
        if labels.is_empty() || boundaries.len() + 1 != labels.len() || base.len() != labels.len() {
            return Err(Error::ShapeMismatch("malformed complex".into()));
        }
        let top = labels.len() - 1;
        let mut weights: Vec<Vec<u32>> = base.clone();
        for i in (0..top).rev() {
            if boundaries[i].len() != labels[i].len() {
                return Err(Error::ShapeMismatch(format!("boundary {i} has wrong column count")));
            }
            for (s, col) in boundaries[i].iter().enumerate() {
                for (t, e) in col {
                    algebra.check_owns(e)?;
                    if *t >= labels[i + 1].len() {
                        return Err(Error::ShapeMismatch(format!("boundary {i} points past the target")));
                    }
                    if let Some(d) = e.degree() {
                        weights[i][s] = weights[i][s].max(weights[i + 1][*t] + d);
                    }
                }
            }
        }
        let terms = labels
            .into_iter()
            .zip(weights)
            .map(|(ls, ws)| ls.into_iter().zip(ws).map(|(label, weight)| Summand { label, weight }).collect())
            .collect();
        let boundaries = boundaries
            .into_iter()
            .map(|m| m.into_iter().map(|col| col.into_iter().filter(|(_, e)| !e.is_zero()).collect()).collect())
            .collect();
        Ok(AlgComplex { algebra, lo, terms, boundaries })
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.iter().flatten().map(|c| c.weight).max().unwrap_or(0)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    /// Algebra-level d² = 0.
    pub fn d_squared_is_zero(&self) -> Result<bool> {
        for i in 0..self.boundaries.len().saturating_sub(1) {
            for col in &self.boundaries[i] {
                let mut acc: HashMap<usize, MultiSeries> = HashMap::new();
                for (t, e) in col {
                    for (u, e2) in &self.boundaries[i + 1][*t] {
                        let p = e2.mul(e)?;
                        let slot = acc.entry(*u).or_insert_with(|| self.algebra.zero());
                        *slot = slot.add(&p)?;
                    }
                }
                if acc.values().any(|s| !s.is_zero()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Base change along f: A → B, entrywise. Weights are kept and raised
    /// only where a mapped entry needs more room.
    pub fn tensor_over(&self, f: &AlgebraMap) -> Result<AlgComplex> {
        if f.source != self.algebra {
            return Err(Error::ShapeMismatch(format!("complex over {} but map from {}", self.algebra, f.source)));
        }
        let boundaries = self
            .boundaries
            .iter()
            .map(|m| {
                m.iter()
                    .map(|col| col.iter().map(|(t, e)| Ok((*t, f.apply(e)?))).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = self.terms.iter().map(|t| t.iter().map(|c| c.label.clone()).collect()).collect();
        let base = self.terms.iter().map(|t| t.iter().map(|c| c.weight).collect()).collect();
        AlgComplex::with_weights(f.target.clone(), self.lo, labels, base, boundaries)
    }

    /// B ⊗_A X ⊗_A B for X over A ⊗ A, via left ⊗ right.
    pub fn tensor_over_pair(&self, left: &AlgebraMap, right: &AlgebraMap) -> Result<AlgComplex> {
        self.tensor_over(&left.tensor(right)?)
    }

    /// X ⊗ Y over their common algebra, with the Koszul sign on the second
    /// factor.
    pub fn tensor(&self, other: &AlgComplex) -> Result<AlgComplex> {
        if self.algebra != other.algebra {
            return Err(Error::ShapeMismatch("tensor of complexes over different algebras".into()));
        }
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        // copies of each total degree: (i, a, j, b)
        let mut index: Vec<Vec<(usize, usize, usize, usize)>> = Vec::new();
        let mut lookup: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
        for d in lo..=hi {
            let mut list = Vec::new();
            for (i, ti) in self.terms.iter().enumerate() {
                let di = self.lo + i as i32;
                let dj = d - di;
                if dj < other.lo || dj > other.hi() {
                    continue;
                }
                let j = (dj - other.lo) as usize;
                for a in 0..ti.len() {
                    for b in 0..other.terms[j].len() {
                        lookup.insert((i, a, j, b), list.len());
                        list.push((i, a, j, b));
                    }
                }
            }
            index.push(list);
        }
        let labels: Vec<Vec<String>> = index
            .iter()
            .map(|l| l.iter().map(|&(i, a, j, b)| format!("{}⊗{}", self.terms[i][a].label, other.terms[j][b].label)).collect())
            .collect();
        let base: Vec<Vec<u32>> = index
            .iter()
            .map(|l| l.iter().map(|&(i, a, j, b)| self.terms[i][a].weight + other.terms[j][b].weight).collect())
            .collect();
        let mut boundaries = Vec::new();
        for l in index.iter().take(index.len() - 1) {
            let mut m: EntryMatrix = Vec::new();
            for &(i, a, j, b) in l {
                let mut col = Vec::new();
                if i < self.boundaries.len() {
                    for (t, e) in &self.boundaries[i][a] {
                        col.push((lookup[&(i + 1, *t, j, b)], e.clone()));
                    }
                }
                if j < other.boundaries.len() {
                    let sign_neg = (self.lo + i as i32).rem_euclid(2) == 1;
                    for (t, e) in &other.boundaries[j][b] {
                        col.push((lookup[&(i, a, j + 1, *t)], if sign_neg { e.neg() } else { e.clone() }));
                    }
                }
                m.push(col);
            }
            boundaries.push(m);
        }
        AlgComplex::with_weights(self.algebra.clone(), lo, labels, base, boundaries)
    }

    /// Concrete complex on the band-`band` truncation (copy of weight w gets
    /// the monomials of degree ≤ band − w).
    pub fn expand(&self, band: u32) -> Result<ChainComplex> {
        Ok(self.expand_indexed(band)?.0)
    }

    fn expand_indexed(&self, band: u32) -> Result<(ChainComplex, Vec<Vec<(usize, Exponent)>>)> {
        let n = self.algebra.nvars();
        let mut layouts = Vec::new();
        let mut lookups: Vec<HashMap<(usize, Exponent), usize>> = Vec::new();
        let mut modules = Vec::new();
        for term in &self.terms {
            let mut layout = Vec::new();
            for (c, copy) in term.iter().enumerate() {
                if copy.weight <= band {
                    for e in monomials_up_to(n, band - copy.weight) {
                        layout.push((c, e));
                    }
                }
            }
            let map: HashMap<(usize, Exponent), usize> = layout.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
            let basis = layout.iter().map(|(c, e)| BasisLabel::Monomial { copy: *c, exponent: e.0.clone() }).collect();
            modules.push(FreeModule { ring: self.algebra.ring.clone(), basis });
            lookups.push(map);
            layouts.push(layout);
        }
        let mut mats = Vec::new();
        for (i, m) in self.boundaries.iter().enumerate() {
            let columns: Vec<SparseVec> = layouts[i]
                .iter()
                .map(|(c, e)| {
                    let mut col = Vec::new();
                    for (t, entry) in &m[*c] {
                        for (f, v) in entry.terms() {
                            let key = (*t, e.add(f));
                            let row = *lookups[i + 1].get(&key).expect("weights leave room for every entry");
                            col.push((row, v.clone()));
                        }
                    }
                    col
                })
                .collect();
            mats.push(SparseMatrix::from_columns(layouts[i + 1].len(), columns));
        }
        let cc = ChainComplex::new(&self.algebra.ring, self.lo, modules, mats)?;
        Ok((cc, layouts))
    }

    /// Homology of the band-N truncation as it stands.
    pub fn band_homology(&self, band: u32) -> Result<HomologyReport> {
        self.expand(band)?.homology()
    }

    /// Stable homology at band N: the image of H(F_N) in H(F_{N+margin}),
    /// i.e. rank(Z_N + B_{N+M}) − rank(B_{N+M}). Torsion (over ℤ) is read off
    /// the band-N boundary.
    pub fn stable_homology(&self, band: u32, margin: u32) -> Result<HomologyReport> {
        let big = band + margin;
        let (cc, layouts) = self.expand_indexed(big)?;
        let rule = pivot_rule(&self.algebra.ring);
        let in_band: Vec<Vec<usize>> = layouts
            .iter()
            .enumerate()
            .map(|(i, l)| {
                l.iter()
                    .enumerate()
                    .filter(|(_, (c, e))| e.degree() + self.terms[i][*c].weight <= band)
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let per_degree: Vec<Result<DegreeHomology>> = (0..cc.modules.len())
            .into_par_iter()
            .map(|i| {
                let band_cols = &in_band[i];
                let cycles: Vec<SparseVec> = if i < cc.boundaries.len() {
                    let sub = cc.boundaries[i].select_columns(band_cols);
                    sub.kernel(rule)?
                        .into_iter()
                        .map(|v| v.into_iter().map(|(k, x)| (band_cols[k], x)).collect())
                        .collect()
                } else {
                    band_cols.iter().map(|&k| vec![(k, crate::scalars::q(1))]).collect()
                };
                let mut ech = Echelon::new(rule);
                if i > 0 {
                    for c in &cc.boundaries[i - 1].columns {
                        ech.insert(c.clone())?;
                    }
                }
                let mut rank = 0;
                for z in cycles {
                    if ech.insert(z)? {
                        rank += 1;
                    }
                }
                let torsion = if i > 0 && over_integers(&self.algebra.ring) {
                    let rows_keep: HashMap<usize, usize> = in_band[i].iter().enumerate().map(|(a, &b)| (b, a)).collect();
                    let sub = cc.boundaries[i - 1].select_columns(&in_band[i - 1]);
                    let cols = sub
                        .columns
                        .into_iter()
                        .map(|c| c.into_iter().map(|(r, v)| (rows_keep[&r], v)).collect())
                        .collect();
                    torsion_factors(&SparseMatrix::from_columns(in_band[i].len(), cols))?
                } else {
                    Vec::new()
                };
                Ok(DegreeHomology { degree: self.lo + i as i32, rank, torsion })
            })
            .collect();
        let degrees = per_degree.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(HomologyReport { ring: self.algebra.ring.label(), degrees })
    }

    /// Stable homology with the default margin (the largest copy weight).
    pub fn stable(&self, band: u32) -> Result<HomologyReport> {
        self.stable_homology(band, self.max_weight().max(1))
    }
}

fn subsets(k: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for s in start..k {
            cur.push(s);
            rec(s + 1, k, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, j, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on a_1..a_k over A: degree −j holds one copy of A per
/// j-subset S, and d(e_S) = Σ_{s ∈ S} (−1)^{pos(s)} a_s e_{S∖s}.
pub fn koszul(algebra: &TruncAlgebra, elements: &[MultiSeries]) -> Result<AlgComplex> {
    for a in elements {
        algebra.check_owns(a)?;
        if let Some(d) = a.degree() {
            if d > algebra.order {
                return Err(Error::DegreeOverflow { degree: d, order: algebra.order });
            }
        }
    }
    let k = elements.len();
    // index -k..0 → position 0..k
    let levels: Vec<Vec<Vec<usize>>> = (0..=k).rev().map(|j| subsets(k, j)).collect();
    let labels = levels
        .iter()
        .map(|l| {
            l.iter()
                .map(|s| format!("e{{{}}}", s.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")))
                .collect()
        })
        .collect();
    let base = levels.iter().map(|l| vec![0; l.len()]).collect();
    let mut boundaries = Vec::new();
    for p in 0..k {
        let target: HashMap<&Vec<usize>, usize> = levels[p + 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let m: EntryMatrix = levels[p]
            .iter()
            .map(|s| {
                s.iter()
                    .enumerate()
                    .map(|(pos, &x)| {
                        let rest: Vec<usize> = s.iter().copied().filter(|&y| y != x).collect();
                        let e = if pos % 2 == 0 { elements[x].clone() } else { elements[x].neg() };
                        (target[&rest], e)
                    })
                    .collect()
            })
            .collect();
        boundaries.push(m);
    }
    AlgComplex::with_weights(algebra.clone(), -(k as i32), labels, base, boundaries)
}

/// K_A: the Koszul complex on (y_i − z_i) over A ⊗ A, resolving A.
pub fn diagonal_resolution(a: &TruncAlgebra) -> Result<AlgComplex> {
    let sq = a.square();
    let n = a.nvars();
    let elements: Vec<MultiSeries> = (0..n).map(|i| sq.var(i).sub(&sq.var(n + i))).collect::<Result<_>>()?;
    koszul(&sq, &elements)
}

/// The diagonal Koszul complex C⊗C →(y−z) C⊗C for a one-variable algebra,
/// with its augmentation to C.
#[derive(Clone, Debug)]
pub struct DiagonalKoszul {
    pub base: TruncAlgebra,
    pub complex: AlgComplex,
}

pub fn diagonal_koszul(base: &TruncAlgebra) -> Result<DiagonalKoszul> {
    if base.nvars() != 1 {
        return Err(Error::ShapeMismatch("diagonal Koszul complex of a one-variable flavor".into()));
    }
    Ok(DiagonalKoszul { base: base.clone(), complex: diagonal_resolution(base)? })
}

impl DiagonalKoszul {
    /// (C⊗C)_{≤N−1} → (C⊗C)_{≤N} → C_{≤N} in degrees −2, −1, 0.
    pub fn augmented(&self, band: u32) -> Result<ChainComplex> {
        let k = self.complex.expand(band)?;
        let target = monomials_up_to(1, band);
        let tmod = FreeModule {
            ring: self.base.ring.clone(),
            basis: target.iter().map(|e| BasisLabel::Monomial { copy: 0, exponent: e.0.clone() }).collect(),
        };
        let cols = k.modules[1]
            .basis
            .iter()
            .map(|b| match b {
                BasisLabel::Monomial { exponent, .. } => vec![((exponent[0] + exponent[1]) as usize, crate::scalars::q(1))],
                BasisLabel::Word(_) => unreachable!(),
            })
            .collect();
        let aug = SparseMatrix::from_columns(target.len(), cols);
        let mut modules = k.modules.clone();
        modules.push(tmod);
        let mut bds = k.boundaries.clone();
        bds.push(aug);
        ChainComplex::new(&self.base.ring, -2, modules, bds)
    }

    pub fn is_exact(&self, band: u32) -> Result<bool> {
        let h = self.augmented(band)?.homology()?;
        Ok(h.degrees.iter().all(|d| d.rank == 0 && d.torsion.is_empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, BanachRing};
    use crate::series::AlgebraFlavor;

    fn poly(n: usize, order: u32) -> TruncAlgebra {
        TruncAlgebra::uniform(&BanachRing::rationals(), &AlgebraFlavor::Polynomial, n, order).unwrap()
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    fn free(ring: &BanachRing, n: usize) -> FreeModule {
        FreeModule::new(ring, (0..n).map(|i| BasisLabel::Word(vec![i])).collect()).unwrap()
    }

    #[test]
    fn koszul_examples() {
        let a = poly(1, 6);
        let k = koszul(&a, &[a.var(0)]).unwrap();
        assert!(k.d_squared_is_zero().unwrap());
        let h = k.stable(6).unwrap();
        assert_eq!(h.ranks_down(), vec![1, 0]);
        let k0 = koszul(&a, &[a.zero()]).unwrap();
        assert_eq!(k0.stable(6).unwrap().ranks_down(), vec![7, 7]);
        let b = poly(2, 6);
        let k2 = koszul(&b, &[b.var(0), b.var(1)]).unwrap();
        assert!(k2.d_squared_is_zero().unwrap());
        assert!(k2.expand(6).unwrap().d_squared_is_zero().unwrap());
        assert_eq!(k2.stable(6).unwrap().ranks_down(), vec![1, 0, 0]);
        assert_eq!(k2.band_homology(6).unwrap().ranks_down(), vec![1, 0, 0]);
    }

    #[test]
    fn ground_homology_examples() {
        let qq = BanachRing::rationals();
        let c = ChainComplex::new(&qq, -1, vec![free(&qq, 1), free(&qq, 1)], vec![dense(&[&[1]])]).unwrap();
        assert_eq!(c.homology().unwrap().ranks_down(), vec![0, 0]);
        let z = BanachRing::integers();
        let c = ChainComplex::new(&z, -1, vec![free(&z, 1), free(&z, 1)], vec![dense(&[&[2]])]).unwrap();
        let h = c.homology().unwrap();
        assert_eq!(h.ranks_down(), vec![0, 0]);
        assert_eq!(h.torsion(0), vec![BigInt::from(2)]);
    }

    #[test]
    fn tensor_over_examples() {
        let a = poly(1, 4);
        let k = koszul(&a, &[a.var(0)]).unwrap();
        assert_eq!(k.tensor_over(&AlgebraMap::identity(&a)).unwrap(), k);
        let pt = TruncAlgebra::ground(&a.ring, 4);
        let ev = AlgebraMap::new(a.clone(), pt.clone(), vec![pt.zero()]).unwrap();
        let k0 = k.tensor_over(&ev).unwrap();
        assert_eq!(k0.expand(1).unwrap().homology().unwrap().ranks_down(), vec![1, 1]);
        let tate = TruncAlgebra::uniform(&a.ring, &AlgebraFlavor::tate(q(1)), 1, 4).unwrap();
        let to_tate = AlgebraMap::canonical(&a, &tate).unwrap();
        let dp = diagonal_koszul(&a).unwrap().complex;
        let dt = diagonal_koszul(&tate).unwrap().complex;
        let moved = dp.tensor_over(&to_tate.tensor(&to_tate).unwrap()).unwrap();
        assert_eq!(moved.expand(4).unwrap().boundaries, dt.expand(4).unwrap().boundaries);
    }

    #[test]
    fn diagonal_koszul_exact() {
        for fl in [AlgebraFlavor::Polynomial, AlgebraFlavor::tate(q(1)), AlgebraFlavor::formal()] {
            let ring = if fl.kind() == crate::series::FlavorKind::Tate {
                BanachRing::padic(2, 16).unwrap()
            } else {
                BanachRing::rationals()
            };
            let c = TruncAlgebra::uniform(&ring, &fl, 1, 4).unwrap();
            assert!(diagonal_koszul(&c).unwrap().is_exact(4).unwrap(), "{fl}");
        }
    }

    #[test]
    fn tensor_of_complexes() {
        let a = poly(2, 5);
        let kx = koszul(&a, &[a.var(0)]).unwrap();
        let ky = koszul(&a, &[a.var(1)]).unwrap();
        let t = kx.tensor(&ky).unwrap();
        assert!(t.d_squared_is_zero().unwrap());
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert_eq!(t.stable(5).unwrap().ranks_down(), vec![1, 0, 0]);
    }

    #[test]
    fn stable_band_is_margin_independent() {
        let a = poly(3, 4);
        let elems = [
            a.one().sub(&a.var(0).mul(&a.var(1)).unwrap()).unwrap(),
            a.one().sub(&a.var(0).mul(&a.var(2)).unwrap()).unwrap(),
        ];
        let k = koszul(&a, &elems).unwrap();
        let h1 = k.stable_homology(4, 4).unwrap();
        let h2 = k.stable_homology(4, 6).unwrap();
        assert_eq!(h1, h2);
        assert_eq!(h1.ranks_down(), vec![9, 0, 0]);
    }
}
