//! Truncated algebras (one flavor per variable) and algebra maps given by
//! generator images.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{BanachRing, Q};
use crate::series::{count_monomials, AlgebraFlavor, MultiSeries};

/// R⟨x_1, …, x_n⟩ truncated at total degree `order`, with a one-variable
/// flavor per generator. Mixed factors give the hybrid algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncAlgebra {
    pub ring: BanachRing,
    pub factors: Vec<AlgebraFlavor>,
    pub order: u32,
}

impl TruncAlgebra {
    pub fn new(ring: &BanachRing, factors: Vec<AlgebraFlavor>, order: u32) -> Result<Self> {
        for f in &factors {
            f.validate()?;
            if f.fixed_nvars().is_some_and(|n| n != 1) {
                return Err(Error::InvalidFlavor(format!("factor {f} is not a one-variable flavor")));
            }
        }
        Ok(TruncAlgebra { ring: ring.clone(), factors, order })
    }

    pub fn uniform(ring: &BanachRing, flavor: &AlgebraFlavor, nvars: usize, order: u32) -> Result<Self> {
        Self::new(ring, vec![flavor.clone(); nvars], order)
    }

    /// The ground ring itself, as a zero-variable algebra.
    pub fn ground(ring: &BanachRing, order: u32) -> Self {
        TruncAlgebra { ring: ring.clone(), factors: Vec::new(), order }
    }

    pub fn nvars(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        count_monomials(self.nvars(), self.order)
    }

    /// A ⊗ B on disjoint variable blocks (A's variables first).
    pub fn tensor(&self, other: &TruncAlgebra) -> Result<TruncAlgebra> {
        if self.ring != other.ring || self.order != other.order {
            return Err(Error::ShapeMismatch(format!("cannot tensor {self} with {other}")));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(TruncAlgebra { ring: self.ring.clone(), factors, order: self.order })
    }

    pub fn square(&self) -> TruncAlgebra {
        self.tensor(self).expect("same ring and order")
    }

    pub fn with_order(&self, order: u32) -> TruncAlgebra {
        TruncAlgebra { order, ..self.clone() }
    }

    pub fn zero(&self) -> MultiSeries {
        MultiSeries::zero(&self.ring, self.nvars(), self.order)
    }

    pub fn one(&self) -> MultiSeries {
        MultiSeries::one(&self.ring, self.nvars(), self.order)
    }

    pub fn constant(&self, c: Q) -> MultiSeries {
        MultiSeries::constant(&self.ring, self.nvars(), self.order, c)
    }

    pub fn var(&self, i: usize) -> MultiSeries {
        MultiSeries::var(&self.ring, self.nvars(), self.order, i)
    }

    pub fn series(&self, terms: &[(&[u32], i64)]) -> MultiSeries {
        MultiSeries::from_ints(&self.ring, self.nvars(), self.order, terms)
    }

    pub fn owns(&self, s: &MultiSeries) -> bool {
        s.ring == self.ring && s.nvars == self.nvars() && s.order == self.order
    }

    pub fn check_owns(&self, s: &MultiSeries) -> Result<()> {
        if !self.owns(s) {
            return Err(Error::ShapeMismatch(format!(
                "series in {} vars over {} (order {}) is not an element of {}",
                s.nvars, s.ring, s.order, self
            )));
        }
        Ok(())
    }

    /// All factors share one flavor (needed for two-variable norms).
    pub fn common_flavor(&self) -> Option<&AlgebraFlavor> {
        let first = self.factors.first()?;
        self.factors.iter().all(|f| f == first).then_some(first)
    }

    pub fn label(&self) -> String {
        let fs: Vec<String> = self.factors.iter().map(|f| f.label()).collect();
        format!("{}[{}]_{}", self.ring, fs.join(" ⊗ "), self.order)
    }
}

impl fmt::Display for TruncAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Domain {
    Everywhere,
    /// Closed disc; `sup` for Tate-type convergence, `over` for dagger.
    Closed { r: Q, sup: bool, over: bool },
    Open { r: Q },
    Germ,
}

fn domain(f: &AlgebraFlavor) -> Domain {
    match f {
        AlgebraFlavor::Polynomial => Domain::Everywhere,
        AlgebraFlavor::Disc { radii } => Domain::Closed { r: radii[0].clone(), sup: false, over: false },
        AlgebraFlavor::Tate { radii } => Domain::Closed { r: radii[0].clone(), sup: true, over: false },
        AlgebraFlavor::Dagger { radii, .. } => Domain::Closed { r: radii[0].clone(), sup: false, over: true },
        AlgebraFlavor::FormalPS { .. } => Domain::Germ,
        AlgebraFlavor::Stein { radius, .. } => Domain::Open { r: radius.clone() },
    }
}

/// Whether x ↦ x extends to a bounded map between the one-variable algebras
/// (restriction of functions to a smaller domain).
pub fn inclusion_defined(src: &AlgebraFlavor, tgt: &AlgebraFlavor) -> bool {
    use Domain::*;
    match (domain(src), domain(tgt)) {
        (_, Germ) => true,
        (Germ, _) => false,
        (Everywhere, _) => true,
        (_, Everywhere) => false,
        (Closed { r, sup, over }, Closed { r: rho, sup: tsup, over: tover }) => {
            if over {
                rho <= r
            } else if tover || (sup && !tsup) {
                rho < r
            } else {
                rho <= r
            }
        }
        (Closed { r, .. }, Open { r: p }) => p <= r,
        (Open { r: p }, Closed { r: rho, .. }) => rho < p,
        (Open { r: p }, Open { r: u }) => u <= p,
    }
}

/// f: A → B, determined by the images of A's generators.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    pub source: TruncAlgebra,
    pub target: TruncAlgebra,
    pub images: Vec<MultiSeries>,
}

impl AlgebraMap {
    pub fn new(source: TruncAlgebra, target: TruncAlgebra, images: Vec<MultiSeries>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::UndefinedGenerator(images.len().min(source.nvars())));
        }
        if source.ring != target.ring || source.order != target.order {
            return Err(Error::ShapeMismatch(format!("map {source} → {target} changes ring or order")));
        }
        for g in &images {
            target.check_owns(g)?;
        }
        Ok(AlgebraMap { source, target, images })
    }

    /// x_i ↦ x_i between algebras with the same number of generators.
    pub fn canonical(source: &TruncAlgebra, target: &TruncAlgebra) -> Result<Self> {
        if source.nvars() != target.nvars() {
            return Err(Error::ShapeMismatch("canonical map needs equal variable counts".into()));
        }
        for (s, t) in source.factors.iter().zip(&target.factors) {
            if !inclusion_defined(s, t) {
                return Err(Error::Unsupported(format!("no canonical map {s} → {t}")));
            }
        }
        let images = (0..target.nvars()).map(|i| target.var(i)).collect();
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn identity(a: &TruncAlgebra) -> Self {
        Self::canonical(a, a).expect("identity is always defined")
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(i, g)| *g == self.target.var(i))
    }

    pub fn apply(&self, s: &MultiSeries) -> Result<MultiSeries> {
        self.source.check_owns(s)?;
        if self.images.is_empty() {
            return Ok(self.target.constant(s.constant_term()));
        }
        s.substitute(&self.images)
    }

    /// g ∘ self
    pub fn then(&self, g: &AlgebraMap) -> Result<AlgebraMap> {
        if self.target != g.source {
            return Err(Error::NotComposable(format!("{} vs {}", self.target, g.source)));
        }
        let images = self.images.iter().map(|s| g.apply(s)).collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(self.source.clone(), g.target.clone(), images)
    }

    /// f ⊗ g on disjoint variable blocks.
    pub fn tensor(&self, g: &AlgebraMap) -> Result<AlgebraMap> {
        let source = self.source.tensor(&g.source)?;
        let target = self.target.tensor(&g.target)?;
        let (n1, n2) = (self.target.nvars(), g.target.nvars());
        let n = n1 + n2;
        let mut images = Vec::new();
        for s in &self.images {
            images.push(s.relabel(n, &(0..n1).collect::<Vec<_>>())?);
        }
        for s in &g.images {
            images.push(s.relabel(n, &(n1..n).collect::<Vec<_>>())?);
        }
        AlgebraMap::new(source, target, images)
    }

    /// The multiplication-free diagonal A ⊗ A → A, y_i, z_i ↦ x_i.
    pub fn codiagonal(a: &TruncAlgebra) -> AlgebraMap {
        let n = a.nvars();
        let images = (0..2 * n).map(|i| a.var(i % n)).collect();
        AlgebraMap::new(a.square(), a.clone(), images).expect("well formed")
    }

    pub fn label(&self) -> String {
        let imgs: Vec<String> = self.images.iter().map(|s| s.pretty()).collect();
        format!("{} → {} ({})", self.source, self.target, imgs.join(", "))
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, qf};

    #[test]
    fn inclusions() {
        let poly = AlgebraFlavor::Polynomial;
        let tate1 = AlgebraFlavor::tate(q(1));
        let disc1 = AlgebraFlavor::disc(q(1));
        let disc_half = AlgebraFlavor::disc(qf(1, 2));
        let formal = AlgebraFlavor::formal();
        assert!(inclusion_defined(&poly, &tate1));
        assert!(inclusion_defined(&tate1, &formal));
        assert!(!inclusion_defined(&formal, &tate1));
        assert!(!inclusion_defined(&tate1, &poly));
        assert!(inclusion_defined(&disc1, &disc_half));
        assert!(inclusion_defined(&disc1, &tate1));
        assert!(!inclusion_defined(&tate1, &disc1));
        assert!(inclusion_defined(&AlgebraFlavor::dagger(q(1)), &AlgebraFlavor::dagger(qf(1, 2))));
        assert!(!inclusion_defined(&AlgebraFlavor::dagger(qf(1, 2)), &AlgebraFlavor::dagger(q(1))));
        assert!(inclusion_defined(&AlgebraFlavor::dagger(q(1)), &AlgebraFlavor::stein(q(1), 3)));
        assert!(inclusion_defined(&AlgebraFlavor::stein(q(1), 3), &AlgebraFlavor::dagger(qf(1, 2))));
        assert!(!inclusion_defined(&AlgebraFlavor::stein(q(1), 3), &AlgebraFlavor::dagger(q(1))));
    }

    #[test]
    fn compose_and_tensor() {
        let r = BanachRing::rationals();
        let p = TruncAlgebra::uniform(&r, &AlgebraFlavor::Polynomial, 1, 4).unwrap();
        let d = TruncAlgebra::uniform(&r, &AlgebraFlavor::dagger(q(1)), 1, 4).unwrap();
        let f = TruncAlgebra::uniform(&r, &AlgebraFlavor::formal(), 1, 4).unwrap();
        let a = AlgebraMap::canonical(&p, &d).unwrap();
        let b = AlgebraMap::canonical(&d, &f).unwrap();
        let c = a.then(&b).unwrap();
        assert_eq!(c, AlgebraMap::canonical(&p, &f).unwrap());
        assert!(b.then(&a).is_err());
        let t = a.tensor(&b).unwrap();
        assert_eq!(t.source.nvars(), 2);
        assert_eq!(t.images[1], t.target.var(1));
        assert!(AlgebraMap::identity(&p).is_identity());
    }
}
