//! Ground rings with norms: ℤ, ℚ with the absolute value, ℚ_p at a fixed
//! precision, trivially normed ℤ/ℚ, and rescaled variants R_r.
//!
//! Every value is stored as an exact rational. For p-adic rings that is the
//! subring ℚ ⊂ ℚ_p; the precision only matters for display (residues) and as
//! the threshold below which elimination refuses to trust a pivot.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub const DEFAULT_PADIC_PRECISION: u32 = 16;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Serde helper: rationals as "a/b" strings (integers without the slash).
pub mod qstr {
    use super::Q;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_q(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_q(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

pub mod qvec {
    use super::Q;
    use serde::ser::SerializeSeq;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&super::fmt_q(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| super::parse_q(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a, b))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Carrier {
    Integer,
    Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingKind {
    Integer,
    Rational,
    PAdic { p: u64, precision: u32 },
    Trivial { carrier: Carrier },
}

/// A ground ring together with its norm semantics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BanachRing {
    pub kind: RingKind,
    #[serde(with = "qstr")]
    pub scale: Q,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl BanachRing {
    pub fn integers() -> Self {
        BanachRing { kind: RingKind::Integer, scale: Q::one() }
    }

    pub fn rationals() -> Self {
        BanachRing { kind: RingKind::Rational, scale: Q::one() }
    }

    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!("{p} is not prime")));
        }
        if precision == 0 {
            return Err(Error::InvalidDescriptor("p-adic precision must be positive".into()));
        }
        Ok(BanachRing { kind: RingKind::PAdic { p, precision }, scale: Q::one() })
    }

    pub fn trivial(carrier: Carrier) -> Self {
        BanachRing { kind: RingKind::Trivial { carrier }, scale: Q::one() }
    }

    /// The rescaled ring R_r: same values, norm multiplied by r.
    pub fn rescaled(&self, r: Q) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidDescriptor("scale must be positive".into()));
        }
        Ok(BanachRing { kind: self.kind, scale: &self.scale * r })
    }

    pub fn archimedean(&self) -> bool {
        matches!(self.kind, RingKind::Integer | RingKind::Rational)
    }

    pub fn submult_constant(&self) -> Q {
        Q::one()
    }

    pub fn carrier(&self) -> Carrier {
        match self.kind {
            RingKind::Integer | RingKind::Trivial { carrier: Carrier::Integer } => Carrier::Integer,
            _ => Carrier::Rational,
        }
    }

    /// The same ring with its unscaled norm; used to compare rings for
    /// arithmetic compatibility when only the carrier matters.
    pub fn unscaled(&self) -> Self {
        BanachRing { kind: self.kind, scale: Q::one() }
    }

    pub fn prime(&self) -> Option<(u64, u32)> {
        match self.kind {
            RingKind::PAdic { p, precision } => Some((p, precision)),
            _ => None,
        }
    }

    /// Whether `v` is an admissible value (integer carriers need integers).
    pub fn admits(&self, v: &Q) -> bool {
        self.carrier() == Carrier::Rational || v.is_integer()
    }

    pub fn base_norm(&self, v: &Q) -> Q {
        if v.is_zero() {
            return Q::zero();
        }
        match self.kind {
            RingKind::Integer | RingKind::Rational => v.abs(),
            RingKind::Trivial { .. } => Q::one(),
            RingKind::PAdic { p, .. } => {
                let val = valuation(p, v).expect("nonzero");
                pow_q(&Q::from_integer(BigInt::from(p)), -val)
            }
        }
    }

    pub fn norm(&self, v: &Q) -> Q {
        &self.scale * self.base_norm(v)
    }

    pub fn label(&self) -> String {
        let base = match self.kind {
            RingKind::Integer => "Z".to_string(),
            RingKind::Rational => "Q".to_string(),
            RingKind::PAdic { p, precision } => format!("Q_{p}(prec {precision})"),
            RingKind::Trivial { carrier: Carrier::Integer } => "Z(trivial)".to_string(),
            RingKind::Trivial { carrier: Carrier::Rational } => "Q(trivial)".to_string(),
        };
        if self.scale.is_one() {
            base
        } else {
            format!("{base}_{}", fmt_q(&self.scale))
        }
    }
}

impl fmt::Display for BanachRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(p: u64, v: &Q) -> Option<i64> {
    if v.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let count = |n: &BigInt| {
        let mut n = n.abs();
        let mut k = 0i64;
        loop {
            let (qq, r) = n.div_rem(&pb);
            if !r.is_zero() {
                return k;
            }
            n = qq;
            k += 1;
        }
    };
    Some(count(v.numer()) - count(v.denom()))
}

pub fn pow_q(base: &Q, e: i64) -> Q {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// An element of a Banach ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub ring: BanachRing,
    pub value: Q,
}

impl Scalar {
    pub fn new(ring: &BanachRing, value: Q) -> Result<Self> {
        if !ring.admits(&value) {
            return Err(Error::InvalidValue(format!("{} is not an element of {}", fmt_q(&value), ring)));
        }
        Ok(Scalar { ring: ring.clone(), value })
    }

    pub fn int(ring: &BanachRing, v: i64) -> Self {
        Scalar { ring: ring.clone(), value: q(v) }
    }

    pub fn norm(&self) -> Q {
        self.ring.norm(&self.value)
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.label(), other.ring.label()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(Scalar { ring: self.ring.clone(), value: &self.value + &other.value })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(Scalar { ring: self.ring.clone(), value: &self.value - &other.value })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(Scalar { ring: self.ring.clone(), value: &self.value * &other.value })
    }

    pub fn neg(&self) -> Scalar {
        Scalar { ring: self.ring.clone(), value: -&self.value }
    }

    /// For p-adic rings: (residue of the unit part mod p^prec, valuation).
    /// The unit part of 12 in ℚ_2 is 3, so 12 shows as (3, 2).
    pub fn padic_digits(&self) -> Option<(BigInt, i64)> {
        let (p, prec) = self.ring.prime()?;
        let v = valuation(p, &self.value)?;
        let unit = &self.value / pow_q(&Q::from_integer(BigInt::from(p)), v);
        let m = num_traits::pow(BigInt::from(p), prec as usize);
        let den_inv = mod_inverse(unit.denom(), &m)?;
        let r = (unit.numer() * den_inv).mod_floor(&m);
        Some((r, v))
    }

    /// The value reduced mod p^prec when it is a p-adic integer.
    pub fn padic_residue(&self) -> Option<BigInt> {
        let (p, prec) = self.ring.prime()?;
        if self.value.is_zero() {
            return Some(BigInt::zero());
        }
        let (r, v) = self.padic_digits()?;
        if v < 0 {
            return None;
        }
        let m = num_traits::pow(BigInt::from(p), prec as usize);
        Some((r * num_traits::pow(BigInt::from(p), v as usize)).mod_floor(&m))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring.prime() {
            Some((p, prec)) => match self.padic_residue() {
                Some(r) => write!(f, "padic({p}, {r}, {prec})"),
                None => write!(f, "padic({p}, {}, {prec})", fmt_q(&self.value)),
            },
            None => f.write_str(&fmt_q(&self.value)),
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_of_examples() {
        assert_eq!(Scalar::int(&BanachRing::integers(), -3).norm(), q(3));
        let q2 = BanachRing::padic(2, 16).unwrap();
        assert_eq!(Scalar::int(&q2, 12).norm(), qf(1, 4));
        let t = BanachRing::trivial(Carrier::Integer);
        assert_eq!(Scalar::int(&t, 7).norm(), q(1));
        assert_eq!(Scalar::int(&t, 0).norm(), q(0));
    }

    #[test]
    fn arithmetic_examples() {
        let z = BanachRing::integers();
        assert_eq!(Scalar::int(&z, 2).add(&Scalar::int(&z, 3)).unwrap().value, q(5));
        let qq = BanachRing::rationals();
        let a = Scalar::new(&qq, qf(1, 2)).unwrap();
        let b = Scalar::new(&qq, qf(2, 3)).unwrap();
        assert_eq!(a.mul(&b).unwrap().value, qf(1, 3));
        let p = BanachRing::padic(2, 4).unwrap();
        let c = Scalar::int(&p, 3).mul(&Scalar::int(&p, 5)).unwrap();
        assert_eq!(c.padic_residue(), Some(BigInt::from(15)));
        assert_eq!(c.to_string(), "padic(2, 15, 4)");
        assert!(Scalar::int(&z, 1).add(&Scalar::int(&qq, 1)).is_err());
    }

    #[test]
    fn descriptor_flags() {
        assert!(BanachRing::integers().archimedean());
        assert!(!BanachRing::padic(3, 5).unwrap().archimedean());
        assert!(!BanachRing::trivial(Carrier::Rational).archimedean());
        assert!(BanachRing::padic(4, 5).is_err());
        assert!(BanachRing::integers().rescaled(q(0)).is_err());
        assert!(Scalar::new(&BanachRing::integers(), qf(1, 2)).is_err());
    }

    #[test]
    fn rescaling_multiplies_norm() {
        let z = BanachRing::integers();
        let zr = z.rescaled(qf(1, 3)).unwrap();
        for v in [-7i64, 0, 5, 12] {
            assert_eq!(zr.norm(&q(v)), qf(1, 3) * z.norm(&q(v)));
        }
    }
}
