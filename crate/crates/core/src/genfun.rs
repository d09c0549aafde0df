//! Generating functions for the pattern families: coefficient recursions
//! over the position of the maximum, closed forms built from products and
//! reciprocals of series, quadratic functional equations, and the `x = 0`
//! and `x^1` specializations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mesh::{QuadCond, QuadSpec};
use crate::series::{t_poly, TSeries};
use crate::xpoly::XPoly;

/// Default truncation order for series.
pub const DEFAULT_ORDER: usize = 12;
/// Largest truncation order any caller may configure.
pub const ORDER_CAP: usize = 64;

/// The eight pattern families with a single parameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(k,0,0,0)`
    K000,
    /// `(0,0,k,0)`
    OOK0,
    /// `(0,k,0,0)`, equidistributed with `(0,0,0,k)`
    OK00,
    /// `(k,0,∅,0)`
    K0E0,
    /// `(∅,0,k,0)`
    E0K0,
    /// `(∅,0,0,0)`
    E000,
    /// `(0,0,∅,0)`
    OOE0,
    /// `(∅,0,∅,0)`
    E0E0,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::K000,
        Family::OOK0,
        Family::OK00,
        Family::K0E0,
        Family::E0K0,
        Family::E000,
        Family::OOE0,
        Family::E0E0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K000 => "k000",
            Family::OOK0 => "ook0",
            Family::OK00 => "ok00",
            Family::K0E0 => "k0e0",
            Family::E0K0 => "e0k0",
            Family::E000 => "e000",
            Family::OOE0 => "ooe0",
            Family::E0E0 => "e0e0",
        }
    }

    pub fn takes_k(self) -> bool {
        !matches!(self, Family::E000 | Family::OOE0 | Family::E0E0)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the names above; `0` may stand in for `o`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('0', "o");
        Family::ALL
            .into_iter()
            .find(|f| f.name().replace('0', "o") == norm)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// A family together with its parameter, normalized so that equal
/// patterns get equal ids: `k0e0` with `k = 0` is `ooe0`, `e0k0` with
/// `k = 0` is `e000`, and `ook0`/`ok00` with `k = 0` are `k000` with `k = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub k: u32,
}

impl FamilyId {
    pub fn new(family: Family, k: u32) -> Self {
        let (family, k) = match (family, k) {
            (Family::K0E0, 0) => (Family::OOE0, 0),
            (Family::E0K0, 0) => (Family::E000, 0),
            (Family::OOK0 | Family::OK00, 0) => (Family::K000, 0),
            (f, _) if !f.takes_k() => (f, 0),
            other => other,
        };
        FamilyId { family, k }
    }

    pub fn k000(k: u32) -> Self {
        FamilyId::new(Family::K000, k)
    }
    pub fn ook0(k: u32) -> Self {
        FamilyId::new(Family::OOK0, k)
    }
    pub fn ok00(k: u32) -> Self {
        FamilyId::new(Family::OK00, k)
    }
    pub fn k0e0(k: u32) -> Self {
        FamilyId::new(Family::K0E0, k)
    }
    pub fn e0k0(k: u32) -> Self {
        FamilyId::new(Family::E0K0, k)
    }
    pub fn e000() -> Self {
        FamilyId::new(Family::E000, 0)
    }
    pub fn ooe0() -> Self {
        FamilyId::new(Family::OOE0, 0)
    }
    pub fn e0e0() -> Self {
        FamilyId::new(Family::E0E0, 0)
    }

    /// The quadrant pattern this family counts.
    pub fn to_spec(self) -> QuadSpec {
        use QuadCond::{AtLeast as L, Empty as E};
        let k = self.k;
        match self.family {
            Family::K000 => QuadSpec::new(L(k), L(0), L(0), L(0)),
            Family::OOK0 => QuadSpec::new(L(0), L(0), L(k), L(0)),
            Family::OK00 => QuadSpec::new(L(0), L(k), L(0), L(0)),
            Family::K0E0 => QuadSpec::new(L(k), L(0), E, L(0)),
            Family::E0K0 => QuadSpec::new(E, L(0), L(k), L(0)),
            Family::E000 => QuadSpec::new(E, L(0), L(0), L(0)),
            Family::OOE0 => QuadSpec::new(L(0), L(0), E, L(0)),
            Family::E0E0 => QuadSpec::new(E, L(0), E, L(0)),
        }
    }

    /// The family whose recursion computes the distribution of `spec`, if
    /// any. `(0,0,0,k)` maps to `(0,k,0,0)`, which has the same distribution.
    pub fn from_spec(spec: QuadSpec) -> Option<FamilyId> {
        use QuadCond::{AtLeast as L, Empty as E};
        let id = match spec.conds() {
            [L(k), L(0), L(0), L(0)] => FamilyId::k000(k),
            [L(0), L(0), L(k), L(0)] => FamilyId::ook0(k),
            [L(0), L(k), L(0), L(0)] | [L(0), L(0), L(0), L(k)] => FamilyId::ok00(k),
            [L(k), L(0), E, L(0)] => FamilyId::k0e0(k),
            [E, L(0), L(k), L(0)] => FamilyId::e0k0(k),
            [E, L(0), E, L(0)] => FamilyId::e0e0(),
            _ => return None,
        };
        Some(id)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.takes_k() {
            write!(f, "{}[k={}]", self.family, self.k)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

// ---------------------------------------------------------------------------
// Classical sequences

/// `C_0..=C_n` by the convolution `C_{m+1} = Σ C_i C_{m-i}`.
pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..n {
        let next: BigInt = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

pub fn catalan(n: usize) -> BigInt {
    catalan_numbers(n).pop().unwrap()
}

/// `C(t)` truncated at `order`.
pub fn catalan_series(order: usize) -> TSeries {
    TSeries::from_ints(catalan_numbers(order), order)
}

/// `C(tx)`.
pub fn catalan_tx(order: usize) -> TSeries {
    catalan_series(order).subst_tx()
}

/// Fine numbers as `1 / (1 + t - t C(t))`.
pub fn fine_series(order: usize) -> TSeries {
    let c = catalan_series(order);
    let denom = TSeries::one(order)
        .add(&t_poly(&[0, 1], order))
        .sub(&c.mul_t());
    denom.recip().expect("unit constant term")
}

/// `S_k(t) = Σ_{j<k} C_j t^j`.
pub fn catalan_partial(k: usize, order: usize) -> TSeries {
    let c = catalan_numbers(k.saturating_sub(1));
    TSeries::from_ints(c.into_iter().take(k), order)
}

// ---------------------------------------------------------------------------
// Coefficient recursions

type TableCache = Mutex<HashMap<FamilyId, Arc<Vec<XPoly>>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Q_0..=Q_n` (possibly longer) for `fam`, computed only from the family
/// recursion and memoized per family.
pub fn recursion_table(fam: FamilyId, n: usize) -> Arc<Vec<XPoly>> {
    if let Some(hit) = table_cache().lock().unwrap().get(&fam) {
        if hit.len() > n {
            return Arc::clone(hit);
        }
    }
    // The lock is not held here: building a table recurses into the
    // tables of the families it depends on.
    let table = Arc::new(build_table(fam, n));
    let mut cache = table_cache().lock().unwrap();
    let entry = cache.entry(fam).or_insert_with(|| Arc::clone(&table));
    if entry.len() < table.len() {
        *entry = Arc::clone(&table);
    }
    table
}

/// The distribution polynomial `Q_n` from the recursion alone.
pub fn recursion_poly(fam: FamilyId, n: usize) -> XPoly {
    recursion_table(fam, n)[n].clone()
}

/// `Σ_{m ≤ order} Q_m t^m` from the recursion.
pub fn recursion_series(fam: FamilyId, order: usize) -> TSeries {
    let table = recursion_table(fam, order);
    TSeries::new(table[..=order].to_vec(), order)
}

fn build_table(fam: FamilyId, n: usize) -> Vec<XPoly> {
    let cat = catalan_numbers(n);
    let c = |m: usize| XPoly::constant(cat[m].clone());
    let k = fam.k as usize;
    let x = XPoly::x_pow(1);
    let mut q: Vec<XPoly> = vec![XPoly::one()];
    match fam.family {
        Family::K000 if k == 0 => {
            for m in 1..=n {
                q.push(XPoly::monomial(m, cat[m].clone()));
            }
        }
        Family::K000 | Family::K0E0 => {
            let prev = match fam.family {
                Family::K000 => FamilyId::k000(fam.k - 1),
                _ => FamilyId::k0e0(fam.k - 1),
            };
            let p = recursion_table(prev, n);
            for m in 1..=n {
                let mut acc = XPoly::zero();
                for i in 1..=m {
                    acc = &acc + &(&p[i - 1] * &q[m - i]);
                }
                q.push(acc);
            }
        }
        Family::OOK0 => {
            for m in 1..=n {
                let mut acc = XPoly::zero();
                for i in 1..=m.min(k) {
                    acc = &acc + &(&c(i - 1) * &q[m - i]);
                }
                let mut tail = XPoly::zero();
                for i in k + 1..=m {
                    tail = &tail + &(&q[i - 1] * &q[m - i]);
                }
                q.push(&acc + &tail.shift(1));
            }
        }
        Family::OK00 => {
            let lower: Vec<Arc<Vec<XPoly>>> = (1..k)
                .map(|j| recursion_table(FamilyId::ok00(j as u32), n))
                .collect();
            // lower[j - 1] holds the table for parameter j < k.
            for m in 1..=n {
                let mut acc = XPoly::zero();
                if k > 1 {
                    for i in 1..=m.min(k - 1) {
                        acc = &acc + &(&c(i - 1) * &lower[k - i - 1][m - i]);
                    }
                }
                for i in k.max(1)..=m {
                    acc = &acc + &q[i - 1].scale(&cat[m - i]).shift(m - i);
                }
                q.push(acc);
            }
        }
        Family::OOE0 => {
            for m in 1..=n {
                let mut acc = &x * &q[m - 1];
                for i in 2..=m {
                    acc = &acc + &(&q[i - 1] * &q[m - i]);
                }
                q.push(acc);
            }
        }
        Family::E0E0 => {
            for m in 1..=n {
                let mut acc = &x * &q[m - 1];
                for i in 2..=m {
                    acc = &acc + &(&c(i - 1) * &q[m - i]);
                }
                q.push(acc);
            }
        }
        Family::E0K0 | Family::E000 => {
            for m in 1..=n {
                let mut low = XPoly::zero();
                for i in 1..=m.min(k) {
                    low = &low + &(&c(i - 1) * &q[m - i]);
                }
                let mut high = XPoly::zero();
                for i in k + 1..=m {
                    high = &high + &(&c(i - 1) * &q[m - i]);
                }
                q.push(&low + &high.shift(1));
            }
        }
    }
    q
}

// ---------------------------------------------------------------------------
// Closed forms

type SeriesCache = Mutex<HashMap<(FamilyId, usize), TSeries>>;

fn closed_cache() -> &'static SeriesCache {
    static CACHE: OnceLock<SeriesCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn check_order(order: usize) -> Result<()> {
    if order > ORDER_CAP {
        Err(Error::ResourceLimit { n: order, bound: ORDER_CAP })
    } else {
        Ok(())
    }
}

/// `1 / (1 - t · s)`.
fn one_over_one_minus_t(s: &TSeries) -> TSeries {
    let order = s.order();
    TSeries::one(order)
        .sub(&s.mul_t())
        .recip()
        .expect("unit constant term")
}

/// The generating function of `fam` built from its closed form. The two
/// families whose closed forms involve a square root are rejected; use
/// [`verify_quadratic`] for them.
pub fn closed_form_series(fam: FamilyId, order: usize) -> Result<TSeries> {
    check_order(order)?;
    if let Some(hit) = closed_cache().lock().unwrap().get(&(fam, order)) {
        return Ok(hit.clone());
    }
    let s = match fam.family {
        Family::OOK0 | Family::OOE0 => {
            return Err(Error::Domain(format!(
                "{fam} has a radical closed form; check it with verify_quadratic"
            )))
        }
        _ => build_closed(fam, order),
    };
    closed_cache().lock().unwrap().insert((fam, order), s.clone());
    Ok(s)
}

fn build_closed(fam: FamilyId, order: usize) -> TSeries {
    let k = fam.k;
    let one = TSeries::one(order);
    let cat = catalan_series(order);
    let ctx = cat.subst_tx();
    let x = XPoly::x_pow(1);
    match fam.family {
        Family::K000 if k == 0 => ctx,
        Family::K000 => one_over_one_minus_t(&closed_without_cache(FamilyId::k000(k - 1), order)),
        Family::K0E0 => {
            let prev = if k == 1 {
                ooe0_root(order)
            } else {
                closed_without_cache(FamilyId::k0e0(k - 1), order)
            };
            one_over_one_minus_t(&prev)
        }
        Family::OK00 => {
            let denom = one.sub(&ctx.mul_t());
            let mut numer = one.clone();
            for j in 0..k.saturating_sub(1) {
                let lower = closed_without_cache(FamilyId::ok00(k - 1 - j), order);
                let cj = TSeries::monomial(j as usize, XPoly::constant(catalan(j as usize)), order);
                numer = numer.add(&cj.mul(&lower.sub(&ctx)).mul_t());
            }
            numer.div(&denom).expect("unit constant term")
        }
        Family::E0E0 => {
            // 1 - tx + t - tC(t)
            let d = one
                .sub(&TSeries::monomial(1, x, order))
                .add(&TSeries::monomial(1, XPoly::one(), order))
                .sub(&cat.mul_t());
            d.recip().expect("unit constant term")
        }
        Family::E000 | Family::E0K0 => {
            // 1 - txC(t) - t(1-x)S_k(t)
            let s_k = catalan_partial(k as usize, order);
            let one_minus_x = XPoly::from_coeffs([1, -1]);
            let d = one
                .sub(&cat.scale(&x).mul_t())
                .sub(&s_k.scale(&one_minus_x).mul_t());
            d.recip().expect("unit constant term")
        }
        Family::OOK0 | Family::OOE0 => unreachable!("rejected by closed_form_series"),
    }
}

fn closed_without_cache(fam: FamilyId, order: usize) -> TSeries {
    closed_form_series(fam, order).expect("closed form exists for dependency")
}

/// The power series root of `0 = 1 + Q(tx - t - 1) + tQ²` with constant
/// term 1, by iterating `Q ← 1 + t(x - 1)Q + tQ²`; each pass fixes one
/// more coefficient.
fn ooe0_root(order: usize) -> TSeries {
    let one = TSeries::one(order);
    let x_minus_1 = TSeries::constant(XPoly::from_coeffs([-1, 1]), order);
    let mut q = one.clone();
    for _ in 0..=order {
        q = one.add(&x_minus_1.mul(&q).mul_t()).add(&q.mul(&q).mul_t());
    }
    q
}

/// Substitutes the recursion-built series of an `ook0` or `ooe0` family
/// into its quadratic functional equation and returns the residual, which
/// vanishes exactly when the recursion satisfies the equation.
///
/// * `ook0`: `1 + (-1 + (t - tx) S_k(t)) Q + tx Q²`
/// * `ooe0`: `1 + (tx - t - 1) Q + t Q²`
pub fn verify_quadratic(fam: FamilyId, order: usize) -> Result<TSeries> {
    check_order(order)?;
    let q = recursion_series(fam, order);
    let one = TSeries::one(order);
    let x = XPoly::x_pow(1);
    let q2 = q.mul(&q);
    match fam.family {
        Family::OOK0 => {
            let s_k = catalan_partial(fam.k as usize, order);
            let one_minus_x = XPoly::from_coeffs([1, -1]);
            let lin = s_k.scale(&one_minus_x).mul_t().sub(&one);
            Ok(one.add(&lin.mul(&q)).add(&q2.scale(&x).mul_t()))
        }
        Family::OOE0 => {
            let lin = TSeries::new(
                vec![XPoly::constant(-1), XPoly::from_coeffs([-1, 1])],
                order,
            );
            Ok(one.add(&lin.mul(&q)).add(&q2.mul_t()))
        }
        _ => Err(Error::Domain(format!("{fam} has no quadratic equation here"))),
    }
}

// ---------------------------------------------------------------------------
// Specializations

/// The `x = 0` specialization, from the univariate forms of each family.
pub fn constant_term_series(fam: FamilyId, order: usize) -> Result<TSeries> {
    check_order(order)?;
    let k = fam.k;
    let one = TSeries::one(order);
    let s = match fam.family {
        Family::K000 if k == 0 => one,
        Family::K000 => one_over_one_minus_t(&constant_term_series(FamilyId::k000(k - 1), order)?),
        Family::K0E0 => one_over_one_minus_t(&constant_term_series(FamilyId::k0e0(k - 1), order)?),
        Family::OOK0 | Family::E0K0 => one_over_one_minus_t(&catalan_partial(k as usize, order)),
        Family::E000 | Family::OOE0 => one,
        Family::OK00 => {
            let mut numer = one.clone();
            for j in 0..k.saturating_sub(1) {
                let lower = constant_term_series(FamilyId::ok00(k - 1 - j), order)?;
                let cj = TSeries::monomial(j as usize, XPoly::constant(catalan(j as usize)), order);
                numer = numer.add(&cj.mul(&lower.sub(&one)).mul_t());
            }
            numer.div(&t_poly(&[1, -1], order))?
        }
        Family::E0E0 => fine_series(order),
    };
    Ok(s)
}

/// The coefficient of `x^1`, as a series in `t`, from the quotient
/// recursion `slice_k = slice_{k-1} · t Q_k'(t,0) / (t Q_{k-1}(t,0))'`.
/// Available for the `k000` and `k0e0` towers only.
pub fn x_slice_series(fam: FamilyId, order: usize) -> Result<TSeries> {
    check_order(order)?;
    match fam.family {
        Family::K000 | Family::K0E0 | Family::OOE0 => {}
        _ => {
            return Err(Error::Domain(format!(
                "no x-slice recursion for {fam}; only the k000 and k0e0 towers have one"
            )))
        }
    }
    let tower = |k: u32| match fam.family {
        Family::K000 => FamilyId::k000(k),
        _ => FamilyId::k0e0(k),
    };
    // Base slices: C(tx) contributes t, and the ooe0 root contributes the
    // identity permutations.
    let mut slice = match fam.family {
        Family::K000 => TSeries::monomial(1, XPoly::one(), order),
        _ => ooe0_root(order).x_slice(1),
    };
    // Derivatives lose the top coefficient, so work one order higher.
    let hi = order + 1;
    for k in 1..=fam.k {
        let qk = constant_term_series(tower(k), hi)?;
        let qprev = constant_term_series(tower(k - 1), hi)?;
        let numer = qk.dt().mul_t().truncate(order);
        let denom = qprev.mul_t().dt().truncate(order);
        slice = slice.mul(&numer).div(&denom)?;
    }
    Ok(slice)
}

/// Coefficients of `t^0..=t^order` of `x^r` in a family's series.
pub fn slice_sequence(series: &TSeries, r: usize) -> Vec<BigInt> {
    series.x_slice(r).int_coeffs()
}

/// `true` if every coefficient of every `t`-power is zero.
pub fn is_zero_series(s: &TSeries) -> bool {
    s.coeffs().iter().all(|c| c.is_zero())
}

/// Convenience: the integer `c` as a `BigInt`.
pub fn big(c: i64) -> BigInt {
    BigInt::from(c)
}

/// `C(n, 2)`.
pub fn choose2(n: usize) -> BigInt {
    if n < 2 {
        BigInt::zero()
    } else {
        BigInt::from(n * (n - 1) / 2)
    }
}
