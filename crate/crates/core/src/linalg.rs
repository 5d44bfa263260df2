//! Exact sparse linear algebra over ℚ (with an optional p-adic pivot rule)
//! and Smith normal form over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{valuation, Q};

/// Sorted (index, nonzero value) pairs.
pub type SparseVec = Vec<(usize, Q)>;

fn lookup(v: &SparseVec, i: usize) -> Option<&Q> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

/// a + s·b
fn axpy(a: &SparseVec, s: &Q, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + s * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Column-major: columns[j] holds the image of basis vector j.
    pub columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|(i, _)| *i);
                let mut merged: SparseVec = Vec::with_capacity(c.len());
                for (i, v) in c {
                    match merged.last_mut() {
                        Some((j, w)) if *j == i => *w += v,
                        _ => merged.push((i, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let columns = (0..c)
            .map(|j| (0..r).filter(|&i| !rows[i][j].is_zero()).map(|i| (i, rows[i][j].clone())).collect())
            .collect();
        SparseMatrix { rows: r, cols: c, columns }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        lookup(&self.columns[j], i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (j, s) in v {
            out = axpy(&out, s, &self.columns[*j]);
        }
        out
    }

    /// self ∘ other
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, columns: other.columns.iter().map(|c| self.apply(c)).collect() })
    }

    /// Keeps the listed columns (in that order).
    pub fn select_columns(&self, keep: &[usize]) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: keep.len(), columns: keep.iter().map(|&j| self.columns[j].clone()).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                d[*i][j] = v.clone();
            }
        }
        d
    }

    pub fn to_integer_dense(&self) -> Result<Vec<Vec<BigInt>>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                if !v.is_integer() {
                    return Err(Error::InvalidValue("non-integral matrix entry over ℤ".into()));
                }
                d[*i][j] = v.to_integer();
            }
        }
        Ok(d)
    }

    pub fn rank(&self, rule: PivotRule) -> Result<usize> {
        let mut e = Echelon::new(rule);
        for c in &self.columns {
            e.insert(c.clone())?;
        }
        Ok(e.rank())
    }

    /// A basis of the kernel, as sparse vectors in the column space.
    pub fn kernel(&self, rule: PivotRule) -> Result<Vec<SparseVec>> {
        let mut e = Echelon::new(rule).with_tags();
        let mut out = Vec::new();
        for (j, c) in self.columns.iter().enumerate() {
            if let Some(k) = e.insert_tagged(c.clone(), vec![(j, Q::one())])? {
                out.push(k);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Smallest-height entry first.
    Rational,
    /// Largest p-adic norm first; a pivot of valuation ≥ precision is
    /// indistinguishable from zero and raises `PrecisionExhausted`.
    PAdic { p: u64, precision: u32 },
}

fn height(v: &Q) -> u64 {
    v.numer().bits() + v.denom().bits()
}

/// Incrementally built echelon basis. Vectors are reduced against the basis
/// in insertion order, which keeps every stored vector zero on the pivots of
/// the vectors stored before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    rule: PivotRule,
    basis: Vec<(usize, SparseVec)>,
    tags: Option<Vec<SparseVec>>,
}

impl Echelon {
    pub fn new(rule: PivotRule) -> Self {
        Echelon { rule, basis: Vec::new(), tags: None }
    }

    fn with_tags(mut self) -> Self {
        self.tags = Some(Vec::new());
        self
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn choose_pivot(&self, v: &SparseVec) -> Result<usize> {
        match self.rule {
            PivotRule::Rational => Ok(v.iter().min_by_key(|(i, x)| (height(x), *i)).unwrap().0),
            PivotRule::PAdic { p, precision } => {
                let (i, val) = v
                    .iter()
                    .map(|(i, x)| (*i, valuation(p, x).unwrap()))
                    .min_by_key(|&(i, val)| (val, i))
                    .unwrap();
                if val >= precision as i64 {
                    return Err(Error::PrecisionExhausted { valuation: val, precision });
                }
                Ok(i)
            }
        }
    }

    fn reduce(&self, mut v: SparseVec, mut tag: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        for (k, (p, b)) in self.basis.iter().enumerate() {
            if v.is_empty() {
                break;
            }
            if let Some(x) = lookup(&v, *p) {
                let s = -(x / lookup(b, *p).unwrap());
                v = axpy(&v, &s, b);
                if let (Some(t), Some(tags)) = (tag.as_mut(), self.tags.as_ref()) {
                    *t = axpy(t, &s, &tags[k]);
                }
            }
        }
        (v, tag)
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone(), None).0.is_empty()
    }

    /// Adds `v`; returns whether it was independent of the basis.
    pub fn insert(&mut self, v: SparseVec) -> Result<bool> {
        let (r, _) = self.reduce(v, None);
        if r.is_empty() {
            return Ok(false);
        }
        let p = self.choose_pivot(&r)?;
        self.basis.push((p, r));
        if let Some(t) = self.tags.as_mut() {
            t.push(Vec::new());
        }
        Ok(true)
    }

    /// Tagged insert used for kernels: returns the reduced tag when `v`
    /// reduces to zero.
    fn insert_tagged(&mut self, v: SparseVec, tag: SparseVec) -> Result<Option<SparseVec>> {
        let (r, t) = self.reduce(v, Some(tag));
        let t = t.unwrap();
        if r.is_empty() {
            return Ok(Some(t));
        }
        let p = self.choose_pivot(&r)?;
        self.basis.push((p, r));
        self.tags.as_mut().unwrap().push(t);
        Ok(None)
    }
}

/// Nonzero invariant factors (positive, each dividing the next) of an
/// integer matrix.
pub fn smith_invariants(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block goes to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let f = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &f * &a[t][j];
                        a[i][j] -= v;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let f = a[t][j].div_floor(&a[t][t]);
                    for i in t..rows {
                        let v = &f * &a[i][t];
                        a[i][j] -= v;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                let mut best = (t, t);
                for i in t..rows {
                    if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            // pivot must divide the rest of the block
            let piv = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Invariant factors greater than one (the torsion of the cokernel).
pub fn torsion_factors(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    Ok(smith_invariants(m.to_integer_dense()?).into_iter().filter(|d| !d.is_one()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_kernel() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(PivotRule::Rational).unwrap(), 2);
        let k = m.kernel(PivotRule::Rational).unwrap();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_empty());
        assert_eq!(SparseMatrix::identity(4).rank(PivotRule::Rational).unwrap(), 4);
    }

    #[test]
    fn padic_pivots_and_exhaustion() {
        let m = dense(&[&[2, 4], &[1, 3]]);
        assert_eq!(m.rank(PivotRule::PAdic { p: 2, precision: 4 }).unwrap(), 2);
        let tiny = dense(&[&[1 << 20]]);
        assert!(matches!(
            tiny.rank(PivotRule::PAdic { p: 2, precision: 16 }),
            Err(Error::PrecisionExhausted { valuation: 20, precision: 16 })
        ));
    }

    #[test]
    fn smith_examples() {
        let s = |rows: &[&[i64]]| -> Vec<i64> {
            smith_invariants(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
                .iter()
                .map(|d| i64::try_from(d).unwrap())
                .collect()
        };
        assert_eq!(s(&[&[2]]), vec![2]);
        assert_eq!(s(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(s(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(s(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
    }
}
