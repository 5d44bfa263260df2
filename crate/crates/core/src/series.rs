//! Sparse multivariate series truncated at a total degree, and the six norm
//! flavors (polynomial, disc, Tate, dagger, formal, Stein).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{fmt_q, pow_q, q, BanachRing, Scalar, Q};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic, smallest first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponents in `n` variables of total degree ≤ `d`, in grlex order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for deg in 0..=d {
        monomials_of_degree(n, deg, &mut out);
    }
    out
}

fn monomials_of_degree(n: usize, d: u32, out: &mut Vec<Exponent>) {
    if n == 0 {
        if d == 0 {
            out.push(Exponent(vec![]));
        }
        return;
    }
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left;
            out.push(Exponent(cur.clone()));
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    rec(0, d, &mut cur, out);
}

/// Number of monomials of total degree ≤ d in n variables.
pub fn count_monomials(n: usize, d: u32) -> usize {
    binomial(d as usize + n, n)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    pub ring: BanachRing,
    pub nvars: usize,
    pub order: u32,
    coeffs: BTreeMap<Exponent, Q>,
}

impl MultiSeries {
    pub fn zero(ring: &BanachRing, nvars: usize, order: u32) -> Self {
        MultiSeries { ring: ring.clone(), nvars, order, coeffs: BTreeMap::new() }
    }

    pub fn constant(ring: &BanachRing, nvars: usize, order: u32, c: Q) -> Self {
        let mut s = Self::zero(ring, nvars, order);
        s.add_term(Exponent::zero(nvars), c);
        s
    }

    pub fn one(ring: &BanachRing, nvars: usize, order: u32) -> Self {
        Self::constant(ring, nvars, order, Q::one())
    }

    pub fn var(ring: &BanachRing, nvars: usize, order: u32, i: usize) -> Self {
        let mut s = Self::zero(ring, nvars, order);
        s.add_term(Exponent::unit(nvars, i), Q::one());
        s
    }

    /// Builds a series from (exponent, coefficient) pairs; terms above the
    /// truncation order are dropped, repeated exponents are summed.
    pub fn from_terms<I>(ring: &BanachRing, nvars: usize, order: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Q)>,
    {
        let mut s = Self::zero(ring, nvars, order);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ShapeMismatch(format!("exponent {e:?} in {nvars} variables")));
            }
            if !ring.admits(&c) {
                return Err(Error::InvalidValue(format!("{} not in {}", fmt_q(&c), ring)));
            }
            s.add_term(Exponent(e), c);
        }
        Ok(s)
    }

    /// Integer coefficient shorthand for tests and examples.
    pub fn from_ints(ring: &BanachRing, nvars: usize, order: u32, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(ring, nvars, order, terms.iter().map(|(e, c)| (e.to_vec(), q(*c))))
            .expect("well-formed terms")
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Q) {
        if e.degree() > self.order || c.is_zero() {
            return;
        }
        match self.coeffs.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.coeffs.get(&Exponent(e.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scalar_coeff(&self, e: &[u32]) -> Scalar {
        Scalar { ring: self.ring.clone(), value: self.coeff(e) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree; `None` for the zero series.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(Exponent::degree).max()
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    fn check(&self, other: &MultiSeries) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.label(), other.ring.label()));
        }
        if self.nvars != other.nvars || self.order != other.order {
            return Err(Error::ShapeMismatch(format!(
                "({} vars, order {}) vs ({} vars, order {})",
                self.nvars, self.order, other.nvars, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiSeries {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = -&*v;
        }
        out
    }

    pub fn scale(&self, c: &Q) -> MultiSeries {
        let mut out = Self::zero(&self.ring, self.nvars, self.order);
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check(other)?;
        let mut acc: BTreeMap<Exponent, Q> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1.add(e2);
                if e.degree() <= self.order {
                    *acc.entry(e).or_insert_with(Q::zero) += c1 * c2;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(MultiSeries { ring: self.ring.clone(), nvars: self.nvars, order: self.order, coeffs: acc })
    }

    pub fn pow(&self, k: u32) -> MultiSeries {
        let mut out = Self::one(&self.ring, self.nvars, self.order);
        for _ in 0..k {
            out = out.mul(self).expect("same shape");
        }
        out
    }

    /// Same coefficients viewed at another truncation order (dropping terms
    /// above it when lowering).
    pub fn with_order(&self, order: u32) -> MultiSeries {
        let mut out = Self::zero(&self.ring, self.nvars, order);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn with_ring(&self, ring: &BanachRing) -> Result<MultiSeries> {
        let mut out = Self::zero(ring, self.nvars, self.order);
        for (e, c) in &self.coeffs {
            if !ring.admits(c) {
                return Err(Error::InvalidValue(format!("{} not in {}", fmt_q(c), ring)));
            }
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Relabels variable i as variable `targets[i]` of an `nvars`-variable
    /// ring. `targets` must be injective.
    pub fn relabel(&self, nvars: usize, targets: &[usize]) -> Result<MultiSeries> {
        if targets.len() != self.nvars || targets.iter().any(|&t| t >= nvars) {
            return Err(Error::ShapeMismatch(format!("relabel {targets:?} into {nvars} vars")));
        }
        let mut seen = vec![false; nvars];
        for &t in targets {
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::ShapeMismatch("relabel targets overlap".into()));
            }
        }
        let mut out = Self::zero(&self.ring, nvars, self.order);
        for (e, c) in &self.coeffs {
            let mut ne = vec![0; nvars];
            for (i, &t) in targets.iter().enumerate() {
                ne[t] = e.0[i];
            }
            out.add_term(Exponent(ne), c.clone());
        }
        Ok(out)
    }

    /// x_i ↦ x_i ⊗ 1: variables go to positions 0..n of 2n.
    pub fn tensor_embed_left(&self) -> MultiSeries {
        let n = self.nvars;
        self.relabel(2 * n, &(0..n).collect::<Vec<_>>()).expect("valid")
    }

    /// x_i ↦ 1 ⊗ x_i: variables go to positions n..2n of 2n.
    pub fn tensor_embed_right(&self) -> MultiSeries {
        let n = self.nvars;
        self.relabel(2 * n, &(n..2 * n).collect::<Vec<_>>()).expect("valid")
    }

    /// f(y, z) ↦ f(x, x): substitutes the second block by the first.
    pub fn diagonal_restrict(&self) -> Result<MultiSeries> {
        if !self.nvars.is_multiple_of(2) {
            return Err(Error::OddVariableCount(self.nvars));
        }
        let n = self.nvars / 2;
        let mut out = Self::zero(&self.ring, n, self.order);
        for (e, c) in &self.coeffs {
            let ne = (0..n).map(|i| e.0[i] + e.0[n + i]).collect();
            out.add_term(Exponent(ne), c.clone());
        }
        Ok(out)
    }

    /// Substitutes x_i := images[i]. All images share ring, nvars and order,
    /// which become those of the result.
    pub fn substitute(&self, images: &[MultiSeries]) -> Result<MultiSeries> {
        if images.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let (ring, nv, ord) = match images.first() {
            Some(g) => (g.ring.clone(), g.nvars, g.order),
            None => (self.ring.clone(), 0, self.order),
        };
        for g in images {
            if g.ring != ring || g.nvars != nv || g.order != ord {
                return Err(Error::ShapeMismatch("images disagree in shape".into()));
            }
        }
        let mut powers: Vec<Vec<MultiSeries>> = images.iter().map(|g| vec![MultiSeries::one(&ring, nv, ord), g.clone()]).collect();
        let mut out = MultiSeries::zero(&ring, nv, ord);
        for (e, c) in &self.coeffs {
            if !ring.admits(c) {
                return Err(Error::InvalidValue(format!("{} not in {}", fmt_q(c), ring)));
            }
            let mut term = MultiSeries::constant(&ring, nv, ord, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Human readable form, variables named x,y,z (≤ 3) or x1..xn.
    pub fn pretty(&self) -> String {
        self.pretty_with(&var_names(self.nvars))
    }

    /// Two-variable series in the diagonal layout, variables y, z.
    pub fn pretty_diagonal(&self) -> String {
        if self.nvars == 2 {
            self.pretty_with(&["y".to_string(), "z".to_string()])
        } else {
            self.pretty()
        }
    }

    pub fn pretty_with(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (j, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push(names[j].clone()),
                    _ => mono.push(format!("{}^{}", names[j], k)),
                }
            }
            if mono.is_empty() {
                s.push_str(&fmt_q(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&fmt_q(&a));
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

pub fn var_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Finite weight table ℕ^n → ℤ_{≥1}, 1 off the table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightTable {
    #[serde(with = "pairs")]
    pub entries: BTreeMap<Vec<u32>, u64>,
}

// JSON map keys must be strings, so the table goes out as [exponent, weight] pairs
mod pairs {
    use super::BTreeMap;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vec<u32>, u64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<u32>, u64>, D::Error> {
        Ok(Vec::<(Vec<u32>, u64)>::deserialize(d)?.into_iter().collect())
    }
}

impl WeightTable {
    pub fn ones() -> Self {
        WeightTable::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (Vec<u32>, u64)>>(it: I) -> Result<Self> {
        let entries: BTreeMap<_, _> = it.into_iter().collect();
        if entries.values().any(|&w| w < 1) {
            return Err(Error::InvalidFlavor("weight table values must be ≥ 1".into()));
        }
        let mut lens = entries.keys().map(Vec::len);
        if let Some(l) = lens.next() {
            if lens.any(|m| m != l) {
                return Err(Error::InvalidFlavor("weight table keys of mixed length".into()));
            }
        }
        Ok(WeightTable { entries })
    }

    /// Table filled from a rule on every exponent of degree ≤ `order`.
    pub fn graded(nvars: usize, order: u32, rule: impl Fn(&[u32]) -> u64) -> Result<Self> {
        Self::from_entries(monomials_up_to(nvars, order).into_iter().map(|e| {
            let w = rule(&e.0);
            (e.0, w)
        }))
    }

    pub fn get(&self, e: &[u32]) -> u64 {
        self.entries.get(e).copied().unwrap_or(1)
    }

    pub fn key_len(&self) -> Option<usize> {
        self.entries.keys().next().map(Vec::len)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "flavor", rename_all = "snake_case")]
pub enum AlgebraFlavor {
    Polynomial,
    Disc {
        #[serde(with = "crate::scalars::qvec")]
        radii: Vec<Q>,
    },
    Tate {
        #[serde(with = "crate::scalars::qvec")]
        radii: Vec<Q>,
    },
    Dagger {
        #[serde(with = "crate::scalars::qvec")]
        radii: Vec<Q>,
        #[serde(with = "crate::scalars::qvec")]
        rho: Vec<Q>,
    },
    #[serde(rename = "formal")]
    FormalPS { weights: WeightTable },
    /// Open polydisc of polyradius (r, …, r): the norm is a max over the
    /// listed levels r_0 < r_1 < … < r, weighted by ψ(level index).
    Stein {
        #[serde(with = "crate::scalars::qstr")]
        radius: Q,
        #[serde(with = "crate::scalars::qvec")]
        levels: Vec<Q>,
        weights: WeightTable,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlavorKind {
    Polynomial,
    Disc,
    Tate,
    Dagger,
    Formal,
    Stein,
}

impl AlgebraFlavor {
    pub fn disc(r: Q) -> Self {
        AlgebraFlavor::Disc { radii: vec![r] }
    }

    pub fn tate(r: Q) -> Self {
        AlgebraFlavor::Tate { radii: vec![r] }
    }

    /// Dagger algebra at r with the default representative ρ = r + 1.
    pub fn dagger(r: Q) -> Self {
        let rho = &r + Q::one();
        AlgebraFlavor::Dagger { radii: vec![r], rho: vec![rho] }
    }

    pub fn formal() -> Self {
        AlgebraFlavor::FormalPS { weights: WeightTable::ones() }
    }

    /// Stein algebra of the open disc of radius r, levels r·k/(k+1) for
    /// k = 1..=count, unit weights.
    pub fn stein(r: Q, count: usize) -> Self {
        let levels = (1..=count as i64).map(|k| &r * Q::new(k.into(), (k + 1).into())).collect();
        AlgebraFlavor::Stein { radius: r, levels, weights: WeightTable::ones() }
    }

    pub fn kind(&self) -> FlavorKind {
        match self {
            AlgebraFlavor::Polynomial => FlavorKind::Polynomial,
            AlgebraFlavor::Disc { .. } => FlavorKind::Disc,
            AlgebraFlavor::Tate { .. } => FlavorKind::Tate,
            AlgebraFlavor::Dagger { .. } => FlavorKind::Dagger,
            AlgebraFlavor::FormalPS { .. } => FlavorKind::Formal,
            AlgebraFlavor::Stein { .. } => FlavorKind::Stein,
        }
    }

    /// Number of variables fixed by the flavor data, if any.
    pub fn fixed_nvars(&self) -> Option<usize> {
        match self {
            AlgebraFlavor::Disc { radii } | AlgebraFlavor::Tate { radii } | AlgebraFlavor::Dagger { radii, .. } => {
                Some(radii.len())
            }
            AlgebraFlavor::FormalPS { weights } => weights.key_len(),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |v: &[Q], what: &str| -> Result<()> {
            if v.is_empty() {
                return Err(Error::InvalidFlavor(format!("{what}: empty radius list")));
            }
            if v.iter().any(|r| !r.is_positive()) {
                return Err(Error::InvalidFlavor(format!("{what}: radii must be positive")));
            }
            Ok(())
        };
        match self {
            AlgebraFlavor::Polynomial | AlgebraFlavor::FormalPS { .. } => Ok(()),
            AlgebraFlavor::Disc { radii } => pos(radii, "disc"),
            AlgebraFlavor::Tate { radii } => pos(radii, "tate"),
            AlgebraFlavor::Dagger { radii, rho } => {
                pos(radii, "dagger")?;
                if rho.len() != radii.len() || rho.iter().zip(radii).any(|(p, r)| p <= r) {
                    return Err(Error::InvalidFlavor("dagger needs rho > r componentwise".into()));
                }
                Ok(())
            }
            AlgebraFlavor::Stein { radius, levels, weights } => {
                if !radius.is_positive() {
                    return Err(Error::InvalidFlavor("stein: radius must be positive".into()));
                }
                pos(levels, "stein")?;
                if levels.windows(2).any(|w| w[0] >= w[1]) || levels.last().unwrap() >= radius {
                    return Err(Error::InvalidFlavor("stein: levels must increase strictly below the radius".into()));
                }
                if weights.key_len().is_some_and(|l| l != 1) {
                    return Err(Error::InvalidFlavor("stein: weights are indexed by level".into()));
                }
                Ok(())
            }
        }
    }

    /// The flavor of the n-fold tensor power of a one-variable flavor, on
    /// the degree ≤ `order` truncation. Formal weights become product weights.
    pub fn power(&self, n: usize, order: u32) -> Result<AlgebraFlavor> {
        let rep = |v: &[Q]| -> Result<Vec<Q>> {
            if v.len() != 1 {
                return Err(Error::InvalidFlavor("expected a one-variable flavor".into()));
            }
            Ok(vec![v[0].clone(); n])
        };
        Ok(match self {
            AlgebraFlavor::Polynomial => AlgebraFlavor::Polynomial,
            AlgebraFlavor::Disc { radii } => AlgebraFlavor::Disc { radii: rep(radii)? },
            AlgebraFlavor::Tate { radii } => AlgebraFlavor::Tate { radii: rep(radii)? },
            AlgebraFlavor::Dagger { radii, rho } => AlgebraFlavor::Dagger { radii: rep(radii)?, rho: rep(rho)? },
            AlgebraFlavor::FormalPS { weights } => {
                if weights.entries.is_empty() {
                    AlgebraFlavor::formal()
                } else {
                    if weights.key_len() != Some(1) {
                        return Err(Error::InvalidFlavor("expected a one-variable flavor".into()));
                    }
                    AlgebraFlavor::FormalPS {
                        weights: WeightTable::graded(n, order, |e| e.iter().map(|&k| weights.get(&[k])).product())?,
                    }
                }
            }
            AlgebraFlavor::Stein { .. } => {
                if n > 2 {
                    return Err(Error::Unsupported("Stein flavor beyond two variables".into()));
                }
                self.clone()
            }
        })
    }

    pub fn label(&self) -> String {
        let list = |v: &[Q]| v.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        match self {
            AlgebraFlavor::Polynomial => "poly".into(),
            AlgebraFlavor::Disc { radii } => format!("disc({})", list(radii)),
            AlgebraFlavor::Tate { radii } => format!("tate({})", list(radii)),
            AlgebraFlavor::Dagger { radii, rho } => format!("dagger({};{})", list(radii), list(rho)),
            AlgebraFlavor::FormalPS { weights } => {
                let entries: Vec<String> = weights
                    .entries
                    .iter()
                    .map(|(k, w)| format!("{}={w}", k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")))
                    .collect();
                format!("formal({})", entries.join(","))
            }
            AlgebraFlavor::Stein { radius, levels, weights } => {
                let lv = levels.iter().map(fmt_q).collect::<Vec<_>>().join("<");
                let w: Vec<String> = weights.entries.iter().map(|(k, w)| format!("{}={w}", k[0])).collect();
                format!("stein({};{};{})", fmt_q(radius), lv, w.join(","))
            }
        }
    }
}

impl fmt::Display for AlgebraFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlavorNorm {
    pub value: Q,
    /// Total degree, reported for the polynomial flavor.
    pub degree: Option<u32>,
}

fn radius_power(radii: &[Q], e: &Exponent) -> Q {
    radii.iter().zip(&e.0).map(|(r, &k)| pow_q(r, k as i64)).product()
}

fn disc_norm(f: &MultiSeries, radii: &[Q]) -> Q {
    f.terms().map(|(e, c)| f.ring.norm(c) * radius_power(radii, e)).sum()
}

fn tate_norm(f: &MultiSeries, radii: &[Q]) -> Q {
    f.terms().map(|(e, c)| f.ring.norm(c) * radius_power(radii, e)).max().unwrap_or_else(Q::zero)
}

pub fn flavor_norm(f: &MultiSeries, fl: &AlgebraFlavor) -> Result<FlavorNorm> {
    fl.validate()?;
    if let Some(n) = fl.fixed_nvars() {
        if n != f.nvars {
            return Err(Error::ShapeMismatch(format!("flavor {fl} has {n} variables, series has {}", f.nvars)));
        }
    }
    let value = match fl {
        AlgebraFlavor::Polynomial => {
            let v = f.terms().map(|(_, c)| f.ring.norm(c)).sum();
            return Ok(FlavorNorm { value: v, degree: Some(f.degree().unwrap_or(0)) });
        }
        AlgebraFlavor::Disc { radii } => disc_norm(f, radii),
        AlgebraFlavor::Tate { radii } => tate_norm(f, radii),
        AlgebraFlavor::Dagger { rho, .. } => disc_norm(f, rho),
        AlgebraFlavor::FormalPS { weights } => f
            .terms()
            .map(|(e, c)| f.ring.norm(c) / q(weights.get(&e.0) as i64))
            .max()
            .unwrap_or_else(Q::zero),
        AlgebraFlavor::Stein { levels, weights, .. } => {
            if f.nvars > 2 {
                return Err(Error::Unsupported("Stein flavor beyond two variables".into()));
            }
            levels
                .iter()
                .enumerate()
                .map(|(i, r)| disc_norm(f, &vec![r.clone(); f.nvars]) / q(weights.get(&[i as u32]) as i64))
                .max()
                .unwrap_or_else(Q::zero)
        }
    };
    Ok(FlavorNorm { value, degree: None })
}

#[cfg(test)]
mod tests {
    #[test]
    fn formal_flavor_json_round_trip() {
        let w = WeightTable::from_entries([(vec![0, 1], 3), (vec![2, 0], 5)]).unwrap();
        let fl = AlgebraFlavor::FormalPS { weights: w };
        let text = serde_json::to_string(&fl).unwrap();
        assert_eq!(text, r#"{"flavor":"formal","weights":{"entries":[[[0,1],3],[[2,0],5]]}}"#);
        assert_eq!(serde_json::from_str::<AlgebraFlavor>(&text).unwrap(), fl);
    }

    use super::*;
    use crate::scalars::qf;

    fn z() -> BanachRing {
        BanachRing::integers()
    }

    #[test]
    fn grlex_order() {
        let a = Exponent(vec![0, 1]);
        let b = Exponent(vec![1, 0]);
        let c = Exponent(vec![0, 2]);
        assert!(a < b && b < c);
        let ms = monomials_up_to(2, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[1], a);
        assert_eq!(count_monomials(2, 2), 6);
        assert_eq!(count_monomials(3, 4), 35);
    }

    #[test]
    fn norm_examples() {
        let f = MultiSeries::from_ints(&z(), 1, 8, &[(&[1], 2), (&[2], 1)]);
        assert_eq!(flavor_norm(&f, &AlgebraFlavor::disc(q(1))).unwrap().value, q(3));
        assert_eq!(flavor_norm(&f, &AlgebraFlavor::tate(q(1))).unwrap().value, q(2));
        let n = 5;
        let g = MultiSeries::from_ints(&z(), 2, 8, &[(&[n, 0], 1), (&[0, n], -1)]);
        let disc2 = AlgebraFlavor::Disc { radii: vec![q(1), q(1)] };
        assert_eq!(flavor_norm(&g, &disc2).unwrap().value, q(2));
        let p = flavor_norm(&g, &AlgebraFlavor::Polynomial).unwrap();
        assert_eq!((p.value, p.degree), (q(2), Some(5)));
        assert!(flavor_norm(&g, &AlgebraFlavor::tate(q(1))).is_err());
    }

    #[test]
    fn dagger_and_stein_norms() {
        let f = MultiSeries::from_ints(&z(), 1, 8, &[(&[0], 1), (&[2], 3)]);
        let d = AlgebraFlavor::Dagger { radii: vec![q(1)], rho: vec![q(2)] };
        assert_eq!(flavor_norm(&f, &d).unwrap().value, q(13));
        let s = AlgebraFlavor::Stein {
            radius: q(1),
            levels: vec![qf(1, 2), qf(3, 4)],
            weights: WeightTable::from_entries([(vec![1], 2)]).unwrap(),
        };
        // level 1/2: 1 + 3/4; level 3/4: (1 + 27/16)/2
        assert_eq!(flavor_norm(&f, &s).unwrap().value, qf(7, 4));
        let bad = AlgebraFlavor::Stein { radius: q(1), levels: vec![], weights: WeightTable::ones() };
        assert!(flavor_norm(&f, &bad).is_err());
        assert!(AlgebraFlavor::Dagger { radii: vec![q(1)], rho: vec![q(1)] }.validate().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let r = z();
        let y = MultiSeries::var(&r, 2, 2, 0);
        let zz = MultiSeries::var(&r, 2, 2, 1);
        let p = y.sub(&zz).unwrap().mul(&y.add(&zz).unwrap()).unwrap();
        assert_eq!(p, MultiSeries::from_ints(&r, 2, 2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        let x = MultiSeries::var(&r, 1, 1, 0);
        assert!(x.mul(&x).unwrap().is_zero());
        let one = MultiSeries::one(&r, 1, 3);
        let x3 = MultiSeries::var(&r, 1, 3, 0);
        let prod = one.add(&x3).unwrap().mul(&one.sub(&x3).unwrap()).unwrap();
        assert_eq!(prod, MultiSeries::from_ints(&r, 1, 3, &[(&[0], 1), (&[2], -1)]));
        assert!(x.add(&x3).is_err());
    }

    #[test]
    fn embeddings_and_diagonal() {
        let r = z();
        let x = MultiSeries::var(&r, 1, 4, 0);
        assert_eq!(x.tensor_embed_left(), MultiSeries::var(&r, 2, 4, 0));
        assert_eq!(x.tensor_embed_right(), MultiSeries::var(&r, 2, 4, 1));
        let f = MultiSeries::from_ints(&r, 1, 4, &[(&[2], 1), (&[0], 1)]);
        assert_eq!(f.tensor_embed_left(), MultiSeries::from_ints(&r, 2, 4, &[(&[2, 0], 1), (&[0, 0], 1)]));
        let d = |t: &[(&[u32], i64)]| MultiSeries::from_ints(&r, 2, 4, t).diagonal_restrict().unwrap();
        assert!(d(&[(&[1, 0], 1), (&[0, 1], -1)]).is_zero());
        assert_eq!(d(&[(&[1, 1], 1)]), MultiSeries::from_ints(&r, 1, 4, &[(&[2], 1)]));
        assert_eq!(d(&[(&[2, 1], 1)]), MultiSeries::from_ints(&r, 1, 4, &[(&[3], 1)]));
        assert_eq!(x.diagonal_restrict(), Err(Error::OddVariableCount(1)));
        assert_eq!(f.tensor_embed_left().diagonal_restrict().unwrap(), f);
        assert_eq!(f.tensor_embed_right().diagonal_restrict().unwrap(), f);
    }

    #[test]
    fn substitution() {
        let r = BanachRing::rationals();
        let f = MultiSeries::from_ints(&r, 1, 4, &[(&[2], 1), (&[0], 1)]);
        let img = MultiSeries::from_ints(&r, 2, 4, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = f.substitute(&[img]).unwrap();
        assert_eq!(g, MultiSeries::from_ints(&r, 2, 4, &[(&[0, 0], 1), (&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(g.pretty(), "1 + y^2 + 2*x*y + x^2");
    }
}
