//! Quadrant marked mesh patterns: quadrant counts, matching, the `mmp`
//! statistic and its distribution over `S_n(132)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{self, Permutation};
use crate::xpoly::XPoly;

/// One coordinate of a pattern: at least `k` points, or none at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadCond {
    AtLeast(u32),
    Empty,
}

impl QuadCond {
    pub fn holds(self, count: u32) -> bool {
        match self {
            QuadCond::AtLeast(k) => count >= k,
            QuadCond::Empty => count == 0,
        }
    }
}

impl fmt::Display for QuadCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadCond::AtLeast(k) => write!(f, "{k}"),
            QuadCond::Empty => f.write_str("e"),
        }
    }
}

impl FromStr for QuadCond {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "∅" {
            return Ok(QuadCond::Empty);
        }
        s.parse::<u32>()
            .map(QuadCond::AtLeast)
            .map_err(|_| Error::Parse(format!("quadrant condition `{s}` is neither a count nor `e`")))
    }
}

/// `MMP(a,b,c,d)` with `a..d` referring to quadrants I..IV: I is right and
/// above the point, II left and above, III left and below, IV right and below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadSpec {
    pub a: QuadCond,
    pub b: QuadCond,
    pub c: QuadCond,
    pub d: QuadCond,
}

impl QuadSpec {
    pub fn new(a: QuadCond, b: QuadCond, c: QuadCond, d: QuadCond) -> Self {
        QuadSpec { a, b, c, d }
    }

    /// Spec from counts only.
    pub fn counts(a: u32, b: u32, c: u32, d: u32) -> Self {
        use QuadCond::AtLeast as L;
        QuadSpec::new(L(a), L(b), L(c), L(d))
    }

    /// The spec with quadrants II and IV exchanged; the distribution of the
    /// result equals that of `self` under inversion.
    pub fn swap_bd(self) -> Self {
        QuadSpec::new(self.a, self.d, self.c, self.b)
    }

    pub fn conds(self) -> [QuadCond; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn holds(self, q: [u32; 4]) -> bool {
        self.a.holds(q[0]) && self.b.holds(q[1]) && self.c.holds(q[2]) && self.d.holds(q[3])
    }
}

/// `a,b,c,d` with `e` for the empty condition.
impl fmt::Display for QuadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for QuadSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("pattern `{s}` needs four comma-separated entries")));
        }
        Ok(QuadSpec::new(
            parts[0].parse()?,
            parts[1].parse()?,
            parts[2].parse()?,
            parts[3].parse()?,
        ))
    }
}

/// Points strictly inside quadrants I..IV around `(i, σ_i)`.
pub fn quadrant_counts(sigma: &Permutation, i: usize) -> Result<[u32; 4]> {
    if i == 0 || i > sigma.len() {
        return Err(Error::InvalidInput(format!(
            "position {i} outside 1..={}",
            sigma.len()
        )));
    }
    Ok(counts_at(sigma.values(), i - 1))
}

fn counts_at(v: &[u32], p: usize) -> [u32; 4] {
    let h = v[p];
    let mut q = [0u32; 4];
    for (j, &w) in v.iter().enumerate() {
        if j < p {
            q[if w > h { 1 } else { 2 }] += 1;
        } else if j > p {
            q[if w > h { 0 } else { 3 }] += 1;
        }
    }
    q
}

/// Quadrant counts for every position, computed in one pass per position.
pub fn quadrant_table(v: &[u32]) -> Vec<[u32; 4]> {
    let n = v.len() as u32;
    let mut out = Vec::with_capacity(v.len());
    // Only the below-left count needs a scan; the rest follow from it.
    for (p, &h) in v.iter().enumerate() {
        let below_left = v[..p].iter().filter(|&&w| w < h).count() as u32;
        let p = p as u32;
        let above_left = p - below_left;
        let below_total = h - 1;
        let below_right = below_total - below_left;
        let above_right = n - 1 - p - below_right;
        out.push([above_right, above_left, below_left, below_right]);
    }
    out
}

pub fn matches(sigma: &Permutation, i: usize, spec: QuadSpec) -> Result<bool> {
    Ok(spec.holds(quadrant_counts(sigma, i)?))
}

/// Number of positions of `σ` matching `spec`.
pub fn mmp_count(sigma: &Permutation, spec: QuadSpec) -> usize {
    mmp_count_values(sigma.values(), spec)
}

pub fn mmp_count_values(v: &[u32], spec: QuadSpec) -> usize {
    quadrant_table(v).into_iter().filter(|&q| spec.holds(q)).count()
}

/// Number of left-to-right minima, by a direct scan.
pub fn lr_min(sigma: &Permutation) -> usize {
    let mut best = u32::MAX;
    let mut count = 0;
    for &v in sigma.values() {
        if v < best {
            best = v;
            count += 1;
        }
    }
    count
}

/// Positions (1-indexed) of the left-to-right minima.
pub fn lr_min_positions(sigma: &Permutation) -> Vec<usize> {
    let mut best = u32::MAX;
    let mut out = Vec::new();
    for (i, &v) in sigma.values().iter().enumerate() {
        if v < best {
            best = v;
            out.push(i + 1);
        }
    }
    out
}

/// Number of right-to-left maxima, by a direct scan.
pub fn rl_max(sigma: &Permutation) -> usize {
    let mut best = 0;
    let mut count = 0;
    for &v in sigma.values().iter().rev() {
        if v > best {
            best = v;
            count += 1;
        }
    }
    count
}

type DistCache = Mutex<HashMap<(usize, QuadSpec), XPoly>>;

fn dist_cache() -> &'static DistCache {
    static CACHE: OnceLock<DistCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Distribution polynomial `Σ_{σ ∈ S_n(132)} x^{mmp(σ)}` by exhaustive
/// enumeration, with the default enumeration bound.
pub fn dist_poly(n: usize, spec: QuadSpec) -> Result<XPoly> {
    dist_poly_bounded(n, spec, perm::DEFAULT_BOUND)
}

pub fn dist_poly_bounded(n: usize, spec: QuadSpec, bound: usize) -> Result<XPoly> {
    let bound = bound.min(perm::HARD_CAP);
    if n > bound {
        return Err(Error::ResourceLimit { n, bound });
    }
    if let Some(hit) = dist_cache().lock().unwrap().get(&(n, spec)) {
        return Ok(hit.clone());
    }
    let mut hist = vec![0u64; n + 1];
    perm::for_each_avoider_132(n, |v| hist[mmp_count_values(v, spec)] += 1)?;
    let poly = XPoly::from_coeffs(hist.into_iter().map(BigInt::from));
    dist_cache().lock().unwrap().insert((n, spec), poly.clone());
    Ok(poly)
}

/// Distribution of `mmp(σ)` over an arbitrary list of permutations.
pub fn dist_over(perms: &[Permutation], spec: QuadSpec) -> XPoly {
    let mut p = XPoly::zero();
    for s in perms {
        p.add_term(mmp_count(s, spec), BigInt::from(1));
    }
    p
}

/// Joint frequency table of `(mmp_p(σ), mmp_q(σ))` over `S_n(132)`.
pub fn joint_dist(n: usize, p: QuadSpec, q: QuadSpec) -> Result<BTreeMap<(usize, usize), u64>> {
    if n > perm::DEFAULT_BOUND {
        return Err(Error::ResourceLimit { n, bound: perm::DEFAULT_BOUND });
    }
    let mut table = BTreeMap::new();
    perm::for_each_avoider_132(n, |v| {
        let quads = quadrant_table(v);
        let j = quads.iter().filter(|&&c| p.holds(c)).count();
        let k = quads.iter().filter(|&&c| q.holds(c)).count();
        *table.entry((j, k)).or_insert(0) += 1;
    })?;
    Ok(table)
}

/// Parses a spec literal such as `"1,0,e,0"`; panics on bad input.
pub fn spec(s: &str) -> QuadSpec {
    s.parse().expect("valid pattern literal")
}
