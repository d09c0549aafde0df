//! Permutations in one-line notation, reduction, classical pattern
//! containment and generation of avoidance classes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Default upper bound on `n` for exhaustive enumeration.
pub const DEFAULT_BOUND: usize = 13;
/// Largest enumeration bound any caller may configure.
pub const HARD_CAP: usize = 15;

/// A permutation of `1..=n` in one-line notation. Positions are 1-indexed in
/// the public API; `n = 0` is the empty permutation.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Builds a permutation, checking that `values` is a bijection on `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// 1-indexed position of the value `n` (the maximum), if non-empty.
    pub fn max_position(&self) -> Option<usize> {
        let n = self.len() as u32;
        self.0.iter().position(|&v| v == n).map(|p| p + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// `self ⊕ other`: `other` placed after and above `self`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let k = self.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&w| w + k));
        Permutation(v)
    }

    /// `self ⊖ other`: `self` placed before and above `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let l = other.len() as u32;
        let mut v: Vec<u32> = self.0.iter().map(|&w| w + l).collect();
        v.extend_from_slice(&other.0);
        Permutation(v)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        occurs(pattern, self)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !occurs(pattern, self)
    }

    pub fn avoids_132(&self) -> bool {
        // Linear-time test: a 132 occurrence exists iff some entry has a
        // larger entry to its left that is preceded by a smaller one.
        // Scanning from the right with a stack of candidate "2"s.
        let mut stack: Vec<u32> = Vec::new();
        let mut two = 0u32;
        for &v in self.0.iter().rev() {
            if v < two {
                return false;
            }
            while let Some(&top) = stack.last() {
                if top < v {
                    two = two.max(top);
                    stack.pop();
                } else {
                    break;
                }
            }
            stack.push(v);
        }
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Digit string for `n <= 9` (`471569283`), comma separated above that.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad entry `{p}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad digit `{c}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Rank reduction: the i-th smallest entry of `w` becomes `i`.
pub fn red<T: Ord>(w: &[T]) -> Result<Permutation> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by(|&a, &b| w[a].cmp(&w[b]));
    if idx.windows(2).any(|p| w[p[0]] == w[p[1]]) {
        return Err(Error::InvalidInput("red: entries must be distinct".into()));
    }
    let mut out = vec![0u32; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}

/// Reduction of a slice already known to hold distinct values.
pub(crate) fn red_values(w: &[u32]) -> Permutation {
    red(w).expect("distinct values")
}

/// Backtracking subsequence search: does `pattern` occur in `sigma`?
pub fn occurs(pattern: &Permutation, sigma: &Permutation) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > sigma.len() {
        return false;
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    extend_match(pattern.values(), sigma.values(), 0, &mut chosen)
}

fn extend_match(pattern: &[u32], sigma: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let m = chosen.len();
    if m == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - m;
    for p in start..=sigma.len() - remaining {
        let v = sigma[p];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &t)| (t < pattern[m]) == (c < v));
        if consistent {
            chosen.push(v);
            if extend_match(pattern, sigma, p + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `σ = A n B` split around its maximum. For a 132-avoider every entry of
/// `A` exceeds every entry of `B`, so `right` is already reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub max_pos: usize,
    pub left: Permutation,
    pub right: Permutation,
}

impl Decomposition {
    /// Rebuilds `(left ⊕ 1) ⊖ right`.
    pub fn reassemble(&self) -> Permutation {
        self.left
            .direct_sum(&Permutation::identity(1))
            .skew_sum(&self.right)
    }
}

pub fn decompose(sigma: &Permutation) -> Result<Decomposition> {
    if sigma.is_empty() {
        return Err(Error::InvalidInput("cannot decompose the empty permutation".into()));
    }
    if !sigma.avoids_132() {
        return Err(Error::InvalidInput(format!("{sigma} contains 132")));
    }
    Ok(split_at_max(sigma))
}

/// Decomposition without the 132 check; `right` is reduced explicitly.
pub(crate) fn split_at_max(sigma: &Permutation) -> Decomposition {
    let i = sigma.max_position().expect("non-empty");
    let v = sigma.values();
    Decomposition {
        max_pos: i,
        left: red_values(&v[..i - 1]),
        right: red_values(&v[i..]),
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_CAP);
    if n > bound {
        Err(Error::ResourceLimit { n, bound })
    } else {
        Ok(())
    }
}

type AvoiderCache = Mutex<HashMap<usize, Arc<Vec<Permutation>>>>;

fn avoider_cache() -> &'static AvoiderCache {
    static CACHE: OnceLock<AvoiderCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `S_n(132)` built structurally as `(A ⊕ 1) ⊖ B` over every position of
/// `n`, memoized by `n`. Order: by position of `n`, then `A`, then `B`.
pub fn avoiders_132(n: usize) -> Result<Arc<Vec<Permutation>>> {
    avoiders_132_bounded(n, DEFAULT_BOUND)
}

pub fn avoiders_132_bounded(n: usize, bound: usize) -> Result<Arc<Vec<Permutation>>> {
    check_bound(n, bound)?;
    if let Some(hit) = avoider_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let mut out = Vec::new();
    for_each_avoider_132(n, |p| out.push(Permutation(p.to_vec())))?;
    let out = Arc::new(out);
    avoider_cache()
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&out));
    Ok(out)
}

/// Streams `S_n(132)` through `f` without materializing the level `n` set.
/// Only the smaller levels are cached.
pub fn for_each_avoider_132<F: FnMut(&[u32])>(n: usize, mut f: F) -> Result<()> {
    if n == 0 {
        f(&[]);
        return Ok(());
    }
    let mut buf = vec![0u32; n];
    for i in 1..=n {
        let left = avoiders_132_bounded(i - 1, HARD_CAP)?;
        let right = avoiders_132_bounded(n - i, HARD_CAP)?;
        let shift = (n - i) as u32;
        buf[i - 1] = n as u32;
        for a in left.iter() {
            for (slot, &v) in buf.iter_mut().zip(a.values()) {
                *slot = v + shift;
            }
            for b in right.iter() {
                buf[i..].copy_from_slice(b.values());
                f(&buf);
            }
        }
    }
    Ok(())
}

/// Avoiders of an arbitrary classical pattern, grown one entry at a time.
/// Avoidance is closed under taking prefixes (after reduction), so every
/// avoider of length `m` extends an avoider of length `m - 1`.
pub fn avoiders_by_extension(n: usize, pattern: &Permutation) -> Result<Vec<Permutation>> {
    check_bound(n, DEFAULT_BOUND)?;
    let mut level = vec![Permutation::empty()];
    for m in 1..=n as u32 {
        let mut next = Vec::new();
        for p in &level {
            for last in 1..=m {
                let mut v: Vec<u32> = p
                    .values()
                    .iter()
                    .map(|&w| if w >= last { w + 1 } else { w })
                    .collect();
                v.push(last);
                let q = Permutation(v);
                if q.avoids(pattern) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// `S_n(τ)`. For `τ = 132` the structural generator is used; any other
/// pattern goes through [`avoiders_by_extension`].
pub fn generate_avoiders(n: usize, pattern: &Permutation) -> Result<Vec<Permutation>> {
    if pattern.values() == [1, 3, 2] {
        Ok(avoiders_132(n)?.as_ref().clone())
    } else {
        avoiders_by_extension(n, pattern)
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    check_bound(n, 10)?;
    let mut out = Vec::new();
    let mut v: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Permutation(v.clone()));
        // next permutation
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            break;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    Ok(out)
}

/// Parses a short pattern literal such as `"132"`; panics on bad input.
pub fn pattern(s: &str) -> Permutation {
    s.parse().expect("valid pattern literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank_by_sorting(w: &[i64]) -> Vec<u32> {
        let mut sorted = w.to_vec();
        sorted.sort();
        w.iter()
            .map(|x| sorted.iter().position(|y| y == x).unwrap() as u32 + 1)
            .collect()
    }

    #[test]
    fn red_examples() {
        assert_eq!(red(&[2, 7, 5, 4]).unwrap(), pattern("1432"));
        assert_eq!(red(&[1, 2, 3]).unwrap(), pattern("123"));
        let w = [3i64, 1, 7, 5];
        assert_eq!(red(&w).unwrap().values(), rank_by_sorting(&w).as_slice());
        assert_eq!(red(&w).unwrap(), pattern("2143"));
        assert!(matches!(red(&[4, 2, 4]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn occurrence_examples() {
        assert!(occurs(&pattern("132"), &pattern("471569283")));
        assert!(!occurs(&pattern("132"), &pattern("321")));
        assert!(occurs(&pattern("1"), &pattern("21")));
        assert!(!occurs(&pattern("1"), &Permutation::empty()));
        assert!(occurs(&Permutation::empty(), &Permutation::empty()));
    }

    #[test]
    fn fast_132_test_agrees_with_search() {
        for n in 0..=7 {
            for p in all_permutations(n).unwrap() {
                assert_eq!(p.avoids_132(), p.avoids(&pattern("132")), "{p}");
            }
        }
    }

    #[test]
    fn generate_small_classes() {
        let s3: Vec<String> = generate_avoiders(3, &pattern("132"))
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let mut sorted = s3.clone();
        sorted.sort();
        assert_eq!(sorted, ["123", "213", "231", "312", "321"]);
        assert_eq!(generate_avoiders(4, &pattern("132")).unwrap().len(), 14);
        assert_eq!(
            generate_avoiders(0, &pattern("132")).unwrap(),
            vec![Permutation::empty()]
        );
        assert_eq!(generate_avoiders(5, &pattern("123")).unwrap().len(), 42);
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            avoiders_132(14),
            Err(Error::ResourceLimit { n: 14, bound: 13 })
        ));
        assert!(matches!(
            avoiders_132_bounded(16, 99),
            Err(Error::ResourceLimit { bound: 15, .. })
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&pattern("231")).unwrap();
        assert_eq!((d.max_pos, d.left.clone(), d.right.clone()), (2, pattern("1"), pattern("1")));
        let d = decompose(&pattern("123")).unwrap();
        assert_eq!((d.max_pos, d.left, d.right), (3, pattern("12"), Permutation::empty()));
        let d = decompose(&pattern("312")).unwrap();
        assert_eq!((d.max_pos, d.left, d.right), (1, Permutation::empty(), pattern("12")));
        assert!(decompose(&pattern("132")).is_err());
        assert!(decompose(&Permutation::empty()).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(pattern("231").inverse(), pattern("312"));
        assert_eq!(pattern("321").inverse(), pattern("321"));
        assert_eq!(pattern("123").inverse(), pattern("123"));
    }

    #[test]
    fn sums() {
        assert_eq!(pattern("21").direct_sum(&pattern("1")), pattern("213"));
        assert_eq!(pattern("12").skew_sum(&pattern("1")), pattern("231"));
    }

    #[test]
    fn display_round_trip() {
        let p = pattern("471569283");
        assert_eq!(p.to_string(), "471569283");
        let long = Permutation::new(vec![10, 3, 1, 2, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }
}
