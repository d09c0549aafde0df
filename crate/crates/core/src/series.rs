//! Power series in `t` truncated at a fixed order, with [`XPoly`]
//! coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::xpoly::XPoly;

/// `Σ_{n=0}^{N} a_n(x) t^n`. The stored vector always has length `N + 1`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<XPoly>", into = "Vec<XPoly>")]
pub struct TSeries {
    coeffs: Vec<XPoly>,
}

impl TryFrom<Vec<XPoly>> for TSeries {
    type Error = Error;

    fn try_from(coeffs: Vec<XPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("a series needs at least the t^0 coefficient".into()));
        }
        Ok(TSeries { coeffs })
    }
}

impl From<TSeries> for Vec<XPoly> {
    fn from(s: TSeries) -> Self {
        s.coeffs
    }
}

impl TSeries {
    /// The series from `coeffs`, padded with zeros or truncated to order `order`.
    pub fn new(mut coeffs: Vec<XPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, XPoly::zero());
        TSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TSeries::constant(XPoly::one(), order)
    }

    pub fn constant(c: XPoly, order: usize) -> Self {
        TSeries::new(vec![c], order)
    }

    /// `c · t^n` truncated at `order` (zero if `n > order`).
    pub fn monomial(n: usize, c: XPoly, order: usize) -> Self {
        let mut s = TSeries::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// A series without `x`, from integer coefficients of increasing power.
    pub fn from_ints<I, C>(values: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let coeffs = values
            .into_iter()
            .take(order + 1)
            .map(|c| XPoly::constant(c))
            .collect();
        TSeries::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> XPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        TSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(XPoly::is_zero)
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        let n = self.order().min(other.order());
        TSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &TSeries) -> TSeries {
        let n = self.order().min(other.order());
        TSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![XPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        TSeries { coeffs }
    }

    pub fn scale(&self, c: &XPoly) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be exactly `1`.
    pub fn recip(&self) -> Result<TSeries> {
        if self.coeffs[0] != XPoly::one() {
            return Err(Error::Domain(format!(
                "reciprocal needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let n = self.order();
        let mut out: Vec<XPoly> = Vec::with_capacity(n + 1);
        out.push(XPoly::one());
        for m in 1..=n {
            let mut acc = XPoly::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[m - i]);
                }
            }
            out.push(-&acc);
        }
        Ok(TSeries { coeffs: out })
    }

    /// `self / other` with `other` having constant term 1.
    pub fn div(&self, other: &TSeries) -> Result<TSeries> {
        Ok(self.mul(&other.recip()?))
    }

    /// Formal derivative in `t`. The result keeps the same order; its top
    /// coefficient is unknown from the truncated input and is set to zero,
    /// so callers needing order `N` must start from order `N + 1`.
    pub fn dt(&self) -> TSeries {
        let n = self.order();
        let mut coeffs: Vec<XPoly> = (1..=n)
            .map(|i| self.coeffs[i].scale(&BigInt::from(i)))
            .collect();
        coeffs.push(XPoly::zero());
        TSeries { coeffs }
    }

    /// `t · self`, truncated at the same order.
    pub fn mul_t(&self) -> TSeries {
        self.shift_t(1)
    }

    pub fn shift_t(&self, s: usize) -> TSeries {
        let n = self.order();
        let mut coeffs = vec![XPoly::zero(); s.min(n + 1)];
        coeffs.extend(self.coeffs.iter().take(n + 1 - coeffs.len()).cloned());
        TSeries { coeffs }
    }

    /// Drops the lowest `s` powers of `t`: `(self - low terms) / t^s`.
    /// The result has order `N - s`.
    pub fn div_t(&self, s: usize) -> Result<TSeries> {
        if s > self.order() || self.coeffs[..s].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!("series is not divisible by t^{s}")));
        }
        Ok(TSeries {
            coeffs: self.coeffs[s..].to_vec(),
        })
    }

    /// Substitutes `t -> t x`: the `t^n` coefficient is multiplied by `x^n`.
    pub fn subst_tx(&self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.shift(n)).collect(),
        }
    }

    /// The specialization `x = 0`.
    pub fn at_x0(&self) -> TSeries {
        self.x_slice(0)
    }

    /// Coefficient of `x^r` in every `t^n` coefficient, as a series in `t`.
    pub fn x_slice(&self, r: usize) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| XPoly::constant(c.coeff(r))).collect(),
        }
    }

    /// The integer sequence of `x`-free coefficients (each coefficient's
    /// constant term; meaningful after [`TSeries::x_slice`]).
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.coeff(0)).collect()
    }

    pub fn is_x_free(&self) -> bool {
        self.coeffs.iter().all(|c| c.degree().unwrap_or(0) == 0)
    }

    /// Renders as `1+t+2t^2+(4+x)t^3+...`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let single = c.terms().count() == 1;
            let body = c.to_string();
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ => (false, body),
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let tpow = match n {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            if n == 0 {
                out.push_str(&body);
            } else if single && body == "1" {
                out.push_str(&tpow);
            } else if single {
                out.push_str(&body);
                out.push_str(&tpow);
            } else {
                out.push('(');
                out.push_str(&body);
                out.push(')');
                out.push_str(&tpow);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSeries[{}]({})", self.order(), self.render())
    }
}

/// Helper: `1 - t` style series from small integer coefficients.
pub fn t_poly(coeffs: &[i64], order: usize) -> TSeries {
    TSeries::from_ints(coeffs.iter().copied(), order)
}

/// `numer / denom` expanded to order `order`; both are polynomials in `t`
/// given lowest power first, and `denom[0]` must be 1.
pub fn rational_expand(numer: &[BigInt], denom: &[BigInt], order: usize) -> Result<TSeries> {
    if denom.first().is_none_or(|d| !d.is_one()) {
        return Err(Error::Domain("denominator must have constant term 1".into()));
    }
    let num = TSeries::from_ints(numer.iter().cloned(), order);
    let den = TSeries::from_ints(denom.iter().cloned(), order);
    num.div(&den)
}

/// `true` if `s` and `other` agree up to the smaller of their orders.
pub fn agree(s: &TSeries, other: &TSeries) -> bool {
    let n = s.order().min(other.order());
    s.coeffs[..=n] == other.coeffs[..=n]
}

/// Integer coefficient helper used by tests and checks.
pub fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

impl Default for TSeries {
    fn default() -> Self {
        TSeries::zero(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let s = t_poly(&[1, -1], 8).recip().unwrap();
        assert_eq!(s.int_coeffs(), ints(&[1; 9]));
    }

    #[test]
    fn recip_needs_unit() {
        assert!(matches!(t_poly(&[2, 1], 4).recip(), Err(Error::Domain(_))));
        assert!(matches!(t_poly(&[0, 1], 4).recip(), Err(Error::Domain(_))));
    }

    #[test]
    fn derivative() {
        let s = TSeries::monomial(2, XPoly::one(), 4);
        assert_eq!(s.dt(), TSeries::monomial(1, XPoly::constant(2), 4));
    }

    #[test]
    fn min_order_rule() {
        let a = t_poly(&[1, 1], 3);
        let b = t_poly(&[1, 1], 5);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).int_coeffs(), ints(&[1, 2, 1, 0]));
    }

    #[test]
    fn rational_examples() {
        let s = rational_expand(&ints(&[1, -1]), &ints(&[1, -2]), 5).unwrap();
        assert_eq!(s.int_coeffs(), ints(&[1, 1, 2, 4, 8, 16]));
        let s = rational_expand(&ints(&[1, -2]), &ints(&[1, -3, 1]), 5).unwrap();
        assert_eq!(s.int_coeffs(), ints(&[1, 1, 2, 5, 13, 34]));
        let s = rational_expand(&ints(&[1]), &ints(&[1]), 3).unwrap();
        assert_eq!(s.int_coeffs(), ints(&[1, 0, 0, 0]));
        assert!(rational_expand(&ints(&[1]), &ints(&[2]), 3).is_err());
    }

    #[test]
    fn render_forms() {
        let s = TSeries::new(
            vec![
                XPoly::one(),
                XPoly::one(),
                XPoly::constant(2),
                XPoly::from_coeffs([4, 1]),
                XPoly::x_pow(1),
            ],
            4,
        );
        assert_eq!(s.to_string(), "1+t+2t^2+(4+x)t^3+xt^4");
        assert_eq!(TSeries::one(0).to_string(), "1");
        assert_eq!(t_poly(&[1, -1], 2).to_string(), "1-t");
    }

    #[test]
    fn shifts() {
        let s = t_poly(&[1, 2, 3], 2);
        assert_eq!(s.mul_t().int_coeffs(), ints(&[0, 1, 2]));
        assert_eq!(s.mul_t().div_t(1).unwrap().int_coeffs(), ints(&[1, 2]));
        assert!(s.div_t(1).is_err());
        let tx = s.subst_tx();
        assert_eq!(tx.coeff(2), XPoly::monomial(2, 3));
    }

    fn arb_series() -> impl Strategy<Value = TSeries> {
        prop::collection::vec(prop::collection::vec(-9i64..9, 0..3), 1..6).prop_map(|cs| {
            let n = cs.len() - 1;
            TSeries::new(cs.into_iter().map(XPoly::from_coeffs).collect(), n)
        })
    }

    proptest! {
        #[test]
        fn recip_is_inverse(mut s in arb_series()) {
            s.coeffs[0] = XPoly::one();
            let r = s.recip().unwrap();
            prop_assert_eq!(s.mul(&r), TSeries::one(s.order()));
        }

        #[test]
        fn json_round_trip(s in arb_series()) {
            let j = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<TSeries>(&j).unwrap(), s);
        }

        #[test]
        fn product_rule(a in arb_series(), b in arb_series()) {
            // d(ab) = a'b + ab' holds except in the top coefficient, which
            // dt cannot know from truncated input.
            let n = a.order().min(b.order());
            let lhs = a.mul(&b).dt();
            let rhs = a.dt().mul(&b).add(&a.mul(&b.dt()));
            if n > 0 {
                prop_assert!(agree(&lhs.truncate(n - 1), &rhs.truncate(n - 1)));
            }
        }
    }
}
