//! Text literals for rings, scalars, series, flavors and algebras.
//!
//! Scalars: `-?[0-9]+`, `a/b`, `padic(p, value, prec)`.
//! Series: terms `coeff*x^k*y` joined by `+`/`-`; a bare coefficient or a bare
//! monomial is also a term. Variables `x1..xk`, or `x, y, z` with ≤ 3 vars.
//! Flavors: `poly`, `disc(r,..)`, `tate(r,..)`, `dagger(r,..;rho,..)`,
//! `formal(k.l=w,..)`, `stein(r; r1<r2<..; i=w,..)`, and `name:r` for the
//! one-radius forms. A bare name means radius 1.
//! Rings: `int`, `rat`, `padic:p`, `padic(p,prec)`, `trivial:int`, `trivial:rat`.
//! Algebras: `<flavor>[^n][/(f1, f2, ..)]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::TruncAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{BanachRing, Carrier, Q, DEFAULT_PADIC_PRECISION};
use crate::series::{var_names, AlgebraFlavor, MultiSeries, WeightTable};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// The token at the cursor, for error messages.
    fn token(&mut self) -> String {
        self.skip_ws();
        let r = self.rest();
        if r.is_empty() {
            return "<end>".into();
        }
        let end = r
            .char_indices()
            .find(|&(i, c)| i > 0 && !(c.is_ascii_alphanumeric() || c == '_'))
            .map_or(r.len(), |(i, _)| i);
        r[..end].to_string()
    }

    fn error<T>(&mut self, message: &str) -> Result<T> {
        let token = self.token();
        Err(Error::Parse { token, position: self.pos, message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&format!("expected '{c}'"))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let r = self.rest();
        let end = r.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(r.len());
        self.pos += end;
        r[..end].to_string()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let r = self.rest();
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return self.error("expected digits");
        }
        self.pos += end;
        Ok(r[..end].parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u64> {
        let start = self.pos;
        let v = self.digits()?;
        u64::try_from(v).or_else(|_| {
            self.pos = start;
            self.error("number too large")
        })
    }

    fn done(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }
}

/// Unsigned rational `a` or `a/b`.
fn rational(c: &mut Cursor) -> Result<Q> {
    let n = c.digits()?;
    if c.eat('/') {
        let at = c.pos;
        let d = c.digits()?;
        if d.is_zero() {
            c.pos = at;
            return c.error("zero denominator");
        }
        return Ok(Q::new(n, d));
    }
    Ok(Q::from_integer(n))
}

fn signed_rational(c: &mut Cursor) -> Result<Q> {
    let neg = c.eat('-');
    let v = rational(c)?;
    Ok(if neg { -v } else { v })
}

/// A scalar literal; p-adic literals also return (p, precision).
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarLiteral {
    pub value: Q,
    pub padic: Option<(u64, u32)>,
}

fn scalar(c: &mut Cursor) -> Result<ScalarLiteral> {
    if c.rest().trim_start().starts_with("padic") {
        c.word();
        c.expect('(')?;
        let p = c.small()?;
        c.expect(',')?;
        let value = signed_rational(c)?;
        c.expect(',')?;
        let prec = c.small()?;
        c.expect(')')?;
        return Ok(ScalarLiteral { value, padic: Some((p, prec as u32)) });
    }
    Ok(ScalarLiteral { value: signed_rational(c)?, padic: None })
}

pub fn parse_scalar(s: &str) -> Result<ScalarLiteral> {
    let mut c = Cursor::new(s);
    let v = scalar(&mut c)?;
    c.done()?;
    Ok(v)
}

pub fn parse_ring(s: &str) -> Result<BanachRing> {
    let mut c = Cursor::new(s);
    let at = c.pos;
    let name = c.word();
    let ring = match name.as_str() {
        "int" | "Z" => BanachRing::integers(),
        "rat" | "Q" => BanachRing::rationals(),
        "padic" => {
            let (p, prec) = if c.eat(':') {
                (c.small()?, DEFAULT_PADIC_PRECISION as u64)
            } else {
                c.expect('(')?;
                let p = c.small()?;
                let prec = if c.eat(',') { c.small()? } else { DEFAULT_PADIC_PRECISION as u64 };
                c.expect(')')?;
                (p, prec)
            };
            BanachRing::padic(p, prec as u32).map_err(|e| Error::Parse { token: s.to_string(), position: at, message: e.to_string() })?
        }
        "trivial" => {
            c.expect(':')?;
            match c.word().as_str() {
                "int" => BanachRing::trivial(Carrier::Integer),
                "rat" => BanachRing::trivial(Carrier::Rational),
                _ => {
                    c.pos = at;
                    return c.error("trivial ring carrier must be int or rat");
                }
            }
        }
        _ => {
            c.pos = at;
            return c.error("unknown ring (int, rat, padic:p, padic(p,prec), trivial:int, trivial:rat)");
        }
    };
    c.done()?;
    Ok(ring)
}

fn radius_list(c: &mut Cursor, sep: char) -> Result<Vec<Q>> {
    let mut out = vec![rational(c)?];
    while c.eat(sep) {
        out.push(rational(c)?);
    }
    Ok(out)
}

/// `k.l=w, …` (or `k=w` for one variable); empty means all ones.
fn weight_table(c: &mut Cursor, close: &[char]) -> Result<WeightTable> {
    let mut entries = Vec::new();
    while c.peek().is_some_and(|ch| !close.contains(&ch)) {
        let mut key = vec![c.small()? as u32];
        while c.eat('.') {
            key.push(c.small()? as u32);
        }
        c.expect('=')?;
        let at = c.pos;
        let w = c.small()?;
        if w == 0 {
            c.pos = at;
            return c.error("weights must be ≥ 1");
        }
        entries.push((key, w));
        if !c.eat(',') {
            break;
        }
    }
    let at = c.pos;
    WeightTable::from_entries(entries).map_err(|e| Error::Parse { token: String::new(), position: at, message: e.to_string() })
}

fn flavor(c: &mut Cursor) -> Result<AlgebraFlavor> {
    let at = c.pos;
    let name = c.word();
    if name == "poly" {
        return Ok(AlgebraFlavor::Polynomial);
    }
    if c.eat(':') {
        let r = if name == "formal" { None } else { Some(rational(c)?) };
        return match (name.as_str(), r) {
            ("disc", Some(r)) => Ok(AlgebraFlavor::disc(r)),
            ("tate", Some(r)) => Ok(AlgebraFlavor::tate(r)),
            ("dagger", Some(r)) => Ok(AlgebraFlavor::dagger(r)),
            ("stein", Some(r)) => Ok(AlgebraFlavor::stein(r, 3)),
            _ => {
                c.pos = at;
                c.error("unknown flavor shorthand")
            }
        };
    }
    if c.peek() != Some('(') {
        // bare names: radius 1
        match name.as_str() {
            "formal" => return Ok(AlgebraFlavor::formal()),
            "disc" => return Ok(AlgebraFlavor::disc(Q::one())),
            "tate" => return Ok(AlgebraFlavor::tate(Q::one())),
            "dagger" => return Ok(AlgebraFlavor::dagger(Q::one())),
            "stein" => return Ok(AlgebraFlavor::stein(Q::one(), 3)),
            _ => {}
        }
    }
    let out = match name.as_str() {
        "disc" | "tate" | "dagger" => {
            c.expect('(')?;
            let radii = radius_list(c, ',')?;
            let fl = match name.as_str() {
                "disc" => AlgebraFlavor::Disc { radii },
                "tate" => AlgebraFlavor::Tate { radii },
                _ => {
                    let rho = if c.eat(';') { radius_list(c, ',')? } else { radii.iter().map(|r| r + Q::one()).collect() };
                    AlgebraFlavor::Dagger { radii, rho }
                }
            };
            c.expect(')')?;
            fl
        }
        "formal" => {
            c.expect('(')?;
            let weights = weight_table(c, &[')'])?;
            c.expect(')')?;
            AlgebraFlavor::FormalPS { weights }
        }
        "stein" => {
            c.expect('(')?;
            let radius = rational(c)?;
            c.expect(';')?;
            let levels = radius_list(c, '<')?;
            let weights = if c.eat(';') { weight_table(c, &[')'])? } else { WeightTable::ones() };
            c.expect(')')?;
            AlgebraFlavor::Stein { radius, levels, weights }
        }
        _ => {
            c.pos = at;
            return c.error("unknown flavor (poly, disc, tate, dagger, formal, stein)");
        }
    };
    out.validate().map_err(|e| Error::Parse { token: name, position: at, message: e.to_string() })?;
    Ok(out)
}

pub fn parse_flavor(s: &str) -> Result<AlgebraFlavor> {
    let mut c = Cursor::new(s);
    let f = flavor(&mut c)?;
    c.done()?;
    Ok(f)
}

fn series(c: &mut Cursor, ring: &BanachRing, names: &[String], order: u32) -> Result<MultiSeries> {
    let nvars = names.len();
    let indexed: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
    let mut out = MultiSeries::zero(ring, nvars, order);
    let mut first = true;
    loop {
        let neg = if c.eat('-') {
            true
        } else if c.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let mut coeff = Q::one();
        let mut exp = vec![0u32; nvars];
        let mut factors = 0;
        loop {
            match c.peek() {
                Some(ch) if ch.is_ascii_digit() || ch == 'p' => {
                    let at = c.pos;
                    let lit = scalar(c)?;
                    if let Some((p, _)) = lit.padic {
                        if ring.prime().map(|r| r.0) != Some(p) {
                            c.pos = at;
                            return c.error(&format!("p-adic literal does not match the ring {ring}"));
                        }
                    }
                    coeff *= lit.value;
                }
                Some(ch) if ch.is_ascii_alphabetic() => {
                    let at = c.pos;
                    let v = c.word();
                    let Some(i) = names.iter().position(|n| *n == v).or_else(|| indexed.iter().position(|n| *n == v)) else {
                        c.pos = at;
                        return c.error(&format!("unknown variable (expected one of {})", names.join(", ")));
                    };
                    let k = if c.eat('^') { c.small()? as u32 } else { 1 };
                    exp[i] += k;
                }
                _ => return c.error("expected a coefficient or a variable"),
            }
            factors += 1;
            if !c.eat('*') {
                break;
            }
        }
        debug_assert!(factors > 0);
        if !ring.admits(&coeff) {
            return c.error(&format!("coefficient not in {ring}"));
        }
        let d: u32 = exp.iter().sum();
        if d > order {
            return c.error(&format!("term of degree {d} exceeds the truncation order {order}"));
        }
        let term = MultiSeries::from_terms(ring, nvars, order, [(exp, if neg { -coeff } else { coeff })])?;
        out = out.add(&term)?;
    }
    Ok(out)
}

pub fn parse_series(s: &str, ring: &BanachRing, nvars: usize, order: u32) -> Result<MultiSeries> {
    let mut c = Cursor::new(s);
    if c.peek().is_none() {
        return c.error("empty series");
    }
    let f = series(&mut c, ring, &var_names(nvars), order)?;
    c.done()?;
    Ok(f)
}

/// Two-variable series in the diagonal layout, variables `y, z`.
pub fn parse_diagonal_series(s: &str, ring: &BanachRing, order: u32) -> Result<MultiSeries> {
    let mut c = Cursor::new(s);
    if c.peek().is_none() {
        return c.error("empty series");
    }
    let f = series(&mut c, ring, &["y".to_string(), "z".to_string()], order)?;
    c.done()?;
    Ok(f)
}

/// An algebra with optional relations: A and (f_1, …, f_k).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub algebra: TruncAlgebra,
    pub relations: Vec<MultiSeries>,
}

/// Splits a multi-variable flavor into one-variable factors.
fn factors_of(fl: &AlgebraFlavor) -> Vec<AlgebraFlavor> {
    match fl {
        AlgebraFlavor::Disc { radii } => radii.iter().map(|r| AlgebraFlavor::disc(r.clone())).collect(),
        AlgebraFlavor::Tate { radii } => radii.iter().map(|r| AlgebraFlavor::tate(r.clone())).collect(),
        AlgebraFlavor::Dagger { radii, rho } => radii
            .iter()
            .zip(rho)
            .map(|(r, p)| AlgebraFlavor::Dagger { radii: vec![r.clone()], rho: vec![p.clone()] })
            .collect(),
        other => vec![other.clone()],
    }
}

pub fn parse_algebra(s: &str, ring: &BanachRing, order: u32) -> Result<AlgebraSpec> {
    let mut c = Cursor::new(s);
    let at = c.pos;
    let fl = flavor(&mut c)?;
    let mut factors = factors_of(&fl);
    if c.eat('^') {
        let n = c.small()? as usize;
        if factors.len() != 1 {
            c.pos = at;
            return c.error("'^n' needs a one-variable flavor");
        }
        factors = vec![factors[0].clone(); n];
    }
    let algebra = TruncAlgebra::new(ring, factors, order).map_err(|e| Error::Parse { token: s.into(), position: at, message: e.to_string() })?;
    let mut relations = Vec::new();
    if c.eat('/') {
        c.expect('(')?;
        if !c.eat(')') {
            loop {
                relations.push(series(&mut c, ring, &var_names(algebra.nvars()), order)?);
                if c.eat(')') {
                    break;
                }
                c.expect(',')?;
            }
        }
    }
    c.done()?;
    Ok(AlgebraSpec { algebra, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, qf};

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("-12").unwrap().value, q(-12));
        assert_eq!(parse_scalar("3/6").unwrap().value, qf(1, 2));
        let p = parse_scalar("padic(2, 12, 16)").unwrap();
        assert_eq!((p.value, p.padic), (q(12), Some((2, 16))));
        match parse_scalar("1/0") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_scalar("12x"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn rings_and_flavors() {
        assert_eq!(parse_ring("padic:2").unwrap(), BanachRing::padic(2, 16).unwrap());
        assert_eq!(parse_ring("padic(3,8)").unwrap(), BanachRing::padic(3, 8).unwrap());
        assert!(matches!(parse_ring("padic:4"), Err(Error::Parse { .. })));
        assert_eq!(parse_flavor("tate:1").unwrap(), AlgebraFlavor::tate(q(1)));
        assert_eq!(parse_flavor("dagger(1/2)").unwrap(), AlgebraFlavor::dagger(qf(1, 2)));
        assert_eq!(
            parse_flavor("dagger(1;3)").unwrap(),
            AlgebraFlavor::Dagger { radii: vec![q(1)], rho: vec![q(3)] }
        );
        let f = parse_flavor("formal(0.1=2, 1.0=3)").unwrap();
        assert_eq!(f.fixed_nvars(), Some(2));
        let s = parse_flavor("stein(1; 1/2<3/4; 0=1,1=2)").unwrap();
        assert_eq!(s.label(), "stein(1;1/2<3/4;0=1,1=2)");
        match parse_flavor("tate(1,") {
            Err(Error::Parse { token, position, .. }) => assert_eq!((token.as_str(), position), ("<end>", 7)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_flavor("banana"), Err(Error::Parse { position: 0, .. })));
        assert_eq!(parse_flavor("disc").unwrap(), AlgebraFlavor::disc(q(1)));
        assert!(parse_flavor("dagger(1;1)").is_err());
    }

    #[test]
    fn series_and_algebras() {
        let z = BanachRing::integers();
        let f = parse_diagonal_series("y^3 - z^3", &z, 6).unwrap();
        assert_eq!(f, MultiSeries::from_ints(&z, 2, 6, &[(&[3, 0], 1), (&[0, 3], -1)]));
        assert_eq!(parse_series("x1^3 - x2^3", &z, 2, 6).unwrap(), f);
        let g = parse_series("-2*x*y + 3 + x3", &z, 2, 6);
        assert!(matches!(g, Err(Error::Parse { ref token, .. }) if token == "x3"));
        let h = parse_series("1/2*x^2", &BanachRing::rationals(), 1, 4).unwrap();
        assert_eq!(h.coeff(&[2]), qf(1, 2));
        assert!(matches!(parse_series("1/2*x", &z, 1, 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_series("x^9", &z, 1, 4), Err(Error::Parse { .. })));

        let qq = BanachRing::rationals();
        let a = parse_algebra("poly^2/(x^2, y^2)", &qq, 6).unwrap();
        assert_eq!((a.algebra.nvars(), a.relations.len()), (2, 2));
        let b = parse_algebra("tate(1,1/2)", &qq, 4).unwrap();
        assert_eq!(b.algebra.factors, vec![AlgebraFlavor::tate(q(1)), AlgebraFlavor::tate(qf(1, 2))]);
        assert!(parse_algebra("poly/()", &qq, 4).unwrap().relations.is_empty());
    }
}
