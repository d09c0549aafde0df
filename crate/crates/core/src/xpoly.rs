//! Polynomials in one variable with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse polynomial `Σ c_e x^e`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    terms: BTreeMap<usize, BigInt>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        XPoly::monomial(0, c)
    }

    /// `c · x^e`.
    pub fn monomial(e: usize, c: impl Into<BigInt>) -> Self {
        let mut p = XPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// `x^e`.
    pub fn x_pow(e: usize) -> Self {
        XPoly::monomial(e, 1)
    }

    /// Builds from a dense coefficient list, lowest power first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = XPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Highest exponent with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `x^s`.
    pub fn shift(&self, s: usize) -> Self {
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (e + s, v.clone())).collect(),
        }
    }

    /// Drops every term of degree above `max`.
    pub fn truncate(&self, max: usize) -> Self {
        XPoly {
            terms: self.terms.range(..=max).map(|(&e, v)| (e, v.clone())).collect(),
        }
    }

    /// `x^d p(1/x)` for the given `d`, which must be at least the degree.
    pub fn reflect(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        XPoly {
            terms: self.terms.iter().map(|(&e, v)| (d - e, v.clone())).collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Renders in the variable `var` (the `Display` impl uses `x`).
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let unit = abs.is_one();
            match e {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&abs.to_string());
                    }
                    out.push_str(var);
                    if e > 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }

    /// Parses the notation produced by [`XPoly::render`] in variable `var`.
    pub fn parse_in(s: &str, var: char) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot parse polynomial `{s}`"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut p = XPoly::zero();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
            } else {
                BigInt::one()
            };
            let mut e = 0usize;
            if i < chars.len() && chars[i] == var {
                i += 1;
                e = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let es = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == es {
                        return Err(bad());
                    }
                    e = chars[es..i].iter().collect::<String>().parse().map_err(|_| bad())?;
                }
            } else if i == start {
                return Err(bad());
            }
            p.add_term(e, sign * coeff);
        }
        Ok(p)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

/// Ascending powers, e.g. `1+3x+5x^2+5x^3`.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl FromStr for XPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        XPoly::parse_in(s, 'x')
    }
}

impl Add for &XPoly {
    type Output = XPoly;

    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;

    fn sub(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;

    fn mul(self, rhs: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &XPoly {
    type Output = XPoly;

    fn neg(self) -> XPoly {
        XPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sparse JSON object `{"exp": coeff}`; coefficients are JSON integers of
/// any size.
impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let n: serde_json::Number = c
                .to_string()
                .parse()
                .map_err(serde::ser::Error::custom)?;
            map.serialize_entry(&e.to_string(), &n)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = XPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to integers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<XPoly, A::Error> {
                let mut p = XPoly::zero();
                while let Some((k, v)) = access.next_entry::<String, serde_json::Number>()? {
                    let e: usize = k.parse().map_err(de::Error::custom)?;
                    let c: BigInt = v.to_string().parse().map_err(de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> XPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_forms() {
        assert_eq!(XPoly::from_coeffs([1, 3, 5, 5]).to_string(), "1+3x+5x^2+5x^3");
        assert_eq!(XPoly::monomial(3, 5).to_string(), "5x^3");
        assert_eq!(XPoly::from_coeffs([0, 1, 1]).to_string(), "x+x^2");
        assert_eq!(XPoly::from_coeffs([0, -1, 2]).to_string(), "-x+2x^2");
        assert_eq!(XPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(poly("34+6x+2x^2"), XPoly::from_coeffs([34, 6, 2]));
        assert_eq!(poly("x"), XPoly::x_pow(1));
        assert_eq!(poly("1 - x^3"), XPoly::from_coeffs([1, 0, 0, -1]));
        assert_eq!(poly("x+x"), XPoly::monomial(1, 2));
        assert!("".parse::<XPoly>().is_err());
        assert!("3y".parse::<XPoly>().is_err());
        assert!("x^".parse::<XPoly>().is_err());
    }

    #[test]
    fn no_zero_terms() {
        let p = &poly("1+x") - &poly("x");
        assert_eq!(p, XPoly::one());
        assert_eq!(p.degree(), Some(0));
        assert!((&poly("x") - &poly("x")).is_zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&poly("1+x") * &poly("1-x"), poly("1-x^2"));
        assert_eq!(poly("1+x").shift(2), poly("x^2+x^3"));
        assert_eq!(poly("1+2x+3x^2").reflect(3), poly("3x+2x^2+x^3"));
        assert_eq!(poly("4+x").coeff_sum(), BigInt::from(5));
    }

    #[test]
    fn json_sparse_map() {
        let p = poly("1+3x+5x^2+5x^3");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"0":1,"1":3,"2":5,"3":5}"#);
        let big = XPoly::monomial(2, BigInt::from(10).pow(40));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<XPoly>(&s).unwrap(), big);
    }

    fn arb_poly() -> impl Strategy<Value = XPoly> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(XPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in arb_poly()) {
            prop_assume!(!p.is_zero());
            prop_assert_eq!(p.to_string().parse::<XPoly>().unwrap(), p);
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<XPoly>(&s).unwrap(), p);
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a);
        }
    }
}
