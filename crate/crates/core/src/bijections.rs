//! Maps from `S_n(132)` to Dyck paths and binary trees, and the
//! constructive maps between 132- and 123-avoiders used to swap
//! left-to-right-minimum statistics.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::mesh::lr_min_positions;
use crate::perm::{self, pattern, red_values, split_at_max, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path of semilength `n`, written over `U` and `D`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for s in &steps {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidInput("path goes below the axis".into()));
            }
        }
        if h != 0 {
            return Err(Error::InvalidInput("path does not return to the axis".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// `U P D`.
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        DyckPath { steps }
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    /// Height of each step: the end height of an up-step, the start height
    /// of a down-step (so both steps of a peak `UD` at level `h` have height `h + 1`).
    pub fn step_heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => {
                    h += 1;
                    h
                }
                Step::Down => {
                    h -= 1;
                    h + 1
                }
            })
            .collect()
    }

    /// Lengths of the excursions between consecutive returns to the axis.
    pub fn interval_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut h = 0i64;
        let mut start = 0;
        for (j, s) in self.steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h == 0 {
                out.push(j + 1 - start);
                start = j + 1;
            }
        }
        out
    }

    /// Up-steps from the axis immediately followed by a down-step.
    pub fn hills(&self) -> usize {
        let mut h = 0i64;
        let mut count = 0;
        for (j, s) in self.steps.iter().enumerate() {
            if *s == Step::Up && h == 0 && self.steps.get(j + 1) == Some(&Step::Down) {
                count += 1;
            }
            h += if *s == Step::Up { 1 } else { -1 };
        }
        count
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::Parse(format!("bad step `{c}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Heights of up-steps, the longest interval, and the hill count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckStats {
    pub up_heights: Vec<usize>,
    pub max_interval_len: usize,
    pub hills: usize,
}

pub fn dyck_stats(path: &DyckPath) -> DyckStats {
    let up_heights = path
        .step_heights()
        .into_iter()
        .zip(path.steps())
        .filter(|(_, s)| **s == Step::Up)
        .map(|(h, _)| h)
        .collect();
    DyckStats {
        up_heights,
        max_interval_len: path.interval_lengths().into_iter().max().unwrap_or(0),
        hills: path.hills(),
    }
}

/// Every Dyck path of semilength `n`, generated step by step.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(ups: usize, downs: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::Up);
            go(ups + 1, downs, n, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            go(ups, downs + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

fn require_132_avoider(sigma: &Permutation) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::InvalidInput("the empty permutation has no image".into()));
    }
    if !sigma.avoids_132() {
        return Err(Error::InvalidInput(format!("{sigma} contains 132")));
    }
    Ok(())
}

/// The Dyck path of a 132-avoider: `UD` for `1`; the lift of the prefix
/// when `n` is last; otherwise the path of `red[σ_1..σ_i]` followed by the
/// path of `σ_{i+1}..σ_n`, where `σ_i = n`.
pub fn phi(sigma: &Permutation) -> Result<DyckPath> {
    require_132_avoider(sigma)?;
    Ok(phi_rec(sigma.values()))
}

fn phi_rec(v: &[u32]) -> DyckPath {
    let n = v.len();
    if n == 1 {
        return DyckPath { steps: vec![Step::Up, Step::Down] };
    }
    let i = v.iter().position(|&w| w as usize == n).unwrap() + 1;
    if i == n {
        phi_rec(&v[..n - 1]).lift()
    } else {
        let head = red_values(&v[..i]);
        phi_rec(head.values()).concat(&phi_rec(&v[i..]))
    }
}

/// A binary tree; `None` marks an absent child.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinTree {
    pub left: Option<Box<BinTree>>,
    pub right: Option<Box<BinTree>>,
}

impl BinTree {
    pub fn leaf() -> Self {
        BinTree::default()
    }

    pub fn size(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.size()) + self.right.as_ref().map_or(0, |t| t.size())
    }
}

/// `(L,R)` with `·` for a missing child; a single node is `(·,·)`.
impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        match &self.left {
            Some(t) => write!(f, "{t}")?,
            None => f.write_str("·")?,
        }
        f.write_str(",")?;
        match &self.right {
            Some(t) => write!(f, "{t}")?,
            None => f.write_str("·")?,
        }
        f.write_str(")")
    }
}

/// The binary tree of a 132-avoider: the root stands for `n`, its left
/// subtree is the tree of the entries before `n`, its right subtree the
/// tree of the entries after.
pub fn theta(sigma: &Permutation) -> Result<BinTree> {
    require_132_avoider(sigma)?;
    Ok(theta_rec(sigma.values()))
}

fn theta_rec(v: &[u32]) -> BinTree {
    let n = v.len();
    let i = v.iter().position(|&w| w as usize == n).unwrap() + 1;
    let left = (i > 1).then(|| Box::new(theta_rec(red_values(&v[..i - 1]).values())));
    let right = (i < n).then(|| Box::new(theta_rec(&v[i..])));
    BinTree { left, right }
}

/// Nodes with at least `k` left edges on their root path, and nodes whose
/// left subtree has at least `k` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub left_depth_ge: usize,
    pub left_subtree_ge: usize,
}

pub fn tree_stats(tree: &BinTree, k: usize) -> TreeStats {
    fn go(t: &BinTree, depth: usize, k: usize, acc: &mut TreeStats) {
        if depth >= k {
            acc.left_depth_ge += 1;
        }
        if t.left.as_ref().map_or(0, |l| l.size()) >= k {
            acc.left_subtree_ge += 1;
        }
        if let Some(l) = &t.left {
            go(l, depth + 1, k, acc);
        }
        if let Some(r) = &t.right {
            go(r, depth, k, acc);
        }
    }
    let mut acc = TreeStats { left_depth_ge: 0, left_subtree_ge: 0 };
    go(tree, 0, k, &mut acc);
    acc
}

/// Lays out a permutation of length `len` whose left-to-right minima sit at
/// `min_positions` (1-indexed) with the values they take in `source`, the
/// other slots taking the remaining values in decreasing order.
fn fill_non_minima(source: &[u32], min_positions: &[usize], len: usize) -> Option<Vec<u32>> {
    let mut out = vec![0u32; len];
    let mut used = vec![false; len + 1];
    for &p in min_positions {
        let v = source[p - 1];
        if v as usize > len {
            return None;
        }
        out[p - 1] = v;
        used[v as usize] = true;
    }
    let mut rest = (1..=len as u32).rev().filter(|&v| !used[v as usize]);
    for slot in out.iter_mut().filter(|s| **s == 0) {
        *slot = rest.next()?;
    }
    Some(out)
}

/// Extends a 123-avoider of length `n` to one of length `n + 1`: the
/// left-to-right minima keep their positions and values, and the other
/// positions plus a new last position receive the remaining values in
/// decreasing order.
pub fn ss_x(sigma: &Permutation) -> Result<Permutation> {
    if !sigma.avoids(&pattern("123")) {
        return Err(Error::InvalidInput(format!("{sigma} contains 123")));
    }
    let mins = lr_min_positions(sigma);
    let v = fill_non_minima(sigma.values(), &mins, sigma.len() + 1).expect("values fit");
    Permutation::new(v)
}

/// Inverse of [`ss_x`]; fails unless `sigma` is an image of `ss_x`.
pub fn ss_x_inv(sigma: &Permutation) -> Result<Permutation> {
    let not_in_image = || Error::NotInImage(sigma.to_string());
    if sigma.is_empty() {
        return Err(not_in_image());
    }
    let n = sigma.len() - 1;
    let prefix = &sigma.values()[..n];
    let mut mins = Vec::new();
    let mut best = u32::MAX;
    for (i, &v) in prefix.iter().enumerate() {
        if v < best {
            best = v;
            mins.push(i + 1);
        }
    }
    let v = fill_non_minima(prefix, &mins, n).ok_or_else(not_in_image)?;
    let candidate = Permutation::new(v).map_err(|_| not_in_image())?;
    match ss_x(&candidate) {
        Ok(back) if back == *sigma => Ok(candidate),
        _ => Err(not_in_image()),
    }
}

/// From a 132-avoider to a 123-avoider with the same left-to-right minima:
/// `T(1) = 1`, `T(π ⊕ 1) = X(T(π))`, and `T(α ⊖ β) = T(α) ⊖ T(β)` where
/// the split is taken right after the maximum.
pub fn t_map(sigma: &Permutation) -> Result<Permutation> {
    require_132_avoider(sigma)?;
    t_rec(sigma)
}

fn t_rec(sigma: &Permutation) -> Result<Permutation> {
    let n = sigma.len();
    if n == 1 {
        return Ok(sigma.clone());
    }
    let d = split_at_max(sigma);
    if d.max_pos == n {
        ss_x(&t_rec(&d.left)?)
    } else {
        let head = d.left.direct_sum(&Permutation::identity(1));
        Ok(t_rec(&head)?.skew_sum(&t_rec(&d.right)?))
    }
}

type InverseTable = HashMap<Permutation, Permutation>;

fn t_inverse_tables() -> &'static Mutex<HashMap<usize, Arc<InverseTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<InverseTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn t_inverse_table(n: usize) -> Result<Arc<InverseTable>> {
    if let Some(hit) = t_inverse_tables().lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let mut table = HashMap::new();
    for s in perm::avoiders_132(n)?.iter() {
        table.insert(t_rec(s)?, s.clone());
    }
    let table = Arc::new(table);
    t_inverse_tables().lock().unwrap().insert(n, Arc::clone(&table));
    Ok(table)
}

/// Inverse of [`t_map`], by lookup in the table of forward images.
pub fn t_inverse(sigma: &Permutation) -> Result<Permutation> {
    if sigma.is_empty() {
        return Err(Error::NotInImage(sigma.to_string()));
    }
    t_inverse_table(sigma.len())?
        .get(sigma)
        .cloned()
        .ok_or_else(|| Error::NotInImage(sigma.to_string()))
}

/// `T⁻¹ X⁻¹ rc X T`, where `rc` is reverse-complement.
pub fn y_map(sigma: &Permutation) -> Result<Permutation> {
    require_132_avoider(sigma)?;
    let up = ss_x(&t_rec(sigma)?)?;
    let flipped = up.reverse().complement();
    t_inverse(&ss_x_inv(&flipped)?)
}

/// The recursive map exchanging the statistics `(1,0,∅,0)` and `(0,0,1,0)`.
pub fn joint_swap(sigma: &Permutation) -> Result<Permutation> {
    require_132_avoider(sigma)?;
    joint_rec(sigma)
}

fn joint_rec(sigma: &Permutation) -> Result<Permutation> {
    let n = sigma.len();
    if n == 1 {
        return Ok(sigma.clone());
    }
    let d = split_at_max(sigma);
    let one = Permutation::identity(1);
    if d.max_pos == 1 {
        let mut v = vec![n as u32];
        v.extend_from_slice(joint_rec(&d.right)?.values());
        return Permutation::new(v);
    }
    let head = y_map(&d.left)?.direct_sum(&one);
    if d.max_pos == n {
        Ok(head)
    } else {
        Ok(head.skew_sum(&joint_rec(&d.right)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{lr_min, mmp_count, spec};
    use crate::perm::avoiders_132;
    use std::collections::HashSet;

    fn pm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&pm("1")).unwrap().to_string(), "UD");
        let p = phi(&pm("312")).unwrap();
        assert_eq!(p.to_string(), "UDUUDD");
        assert_eq!(p.step_heights(), vec![1, 1, 1, 2, 2, 1]);
        assert_eq!(phi(&pm("123")).unwrap().to_string(), "UUUDDD");
        assert!(matches!(phi(&pm("132")), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn dyck_stat_examples() {
        let s = dyck_stats(&"UDUUDD".parse().unwrap());
        assert_eq!(s.max_interval_len, 4);
        assert_eq!(s.up_heights, vec![1, 1, 2]);
        let s = dyck_stats(&"UUUDDD".parse().unwrap());
        assert_eq!((s.max_interval_len, s.hills), (6, 0));
        let s = dyck_stats(&"UD".parse().unwrap());
        assert_eq!((s.max_interval_len, s.hills), (2, 1));
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
    }

    #[test]
    fn dyck_enumeration_is_catalan() {
        let counts: Vec<usize> = (0..=8).map(|n| all_dyck_paths(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&pm("1")).unwrap().to_string(), "(·,·)");
        assert_eq!(theta(&pm("12")).unwrap().to_string(), "((·,·),·)");
        assert_eq!(theta(&pm("312")).unwrap().to_string(), "(·,((·,·),·))");
        assert!(theta(&pm("132")).is_err());
    }

    #[test]
    fn tree_stat_examples() {
        let t = theta(&pm("12")).unwrap();
        assert_eq!(tree_stats(&t, 1).left_depth_ge, 1);
        assert_eq!(tree_stats(&BinTree::leaf(), 3), TreeStats { left_depth_ge: 0, left_subtree_ge: 0 });
        let t = theta(&pm("123")).unwrap();
        assert_eq!(tree_stats(&t, 2).left_depth_ge, 1);
    }

    #[test]
    fn ss_x_examples() {
        assert_eq!(ss_x(&pm("4762531")).unwrap(), pm("48726513"));
        assert_eq!(ss_x(&pm("1")).unwrap(), pm("12"));
        assert_eq!(ss_x(&pm("21")).unwrap(), pm("213"));
        assert!(ss_x(&pm("123")).is_err());
        assert_eq!(ss_x_inv(&pm("48726513")).unwrap(), pm("4762531"));
        assert_eq!(ss_x_inv(&pm("12")).unwrap(), pm("1"));
        assert!(matches!(ss_x_inv(&pm("21")), Err(Error::NotInImage(_))));
    }

    #[test]
    fn t_and_y_examples() {
        assert_eq!(t_map(&pm("1")).unwrap(), pm("1"));
        assert_eq!(t_map(&pm("12")).unwrap(), pm("12"));
        assert_eq!(t_map(&pm("21")).unwrap(), pm("21"));
        assert_eq!(y_map(&pm("12")).unwrap(), pm("21"));
        assert_eq!(y_map(&pm("21")).unwrap(), pm("12"));
        assert_eq!(y_map(&pm("1")).unwrap(), pm("1"));
        assert_eq!(joint_swap(&pm("1")).unwrap(), pm("1"));
        assert_eq!(joint_swap(&pm("312")).unwrap(), pm("312"));
    }

    #[test]
    fn maps_on_small_classes() {
        for n in 1..=7 {
            let all = avoiders_132(n).unwrap();
            let mut t_images = HashSet::new();
            let mut y_images = HashSet::new();
            let mut j_images = HashSet::new();
            for s in all.iter() {
                let t = t_map(s).unwrap();
                assert!(t.avoids(&pattern("123")));
                assert_eq!(lr_min_positions(&t), lr_min_positions(s));
                t_images.insert(t);
                let y = y_map(s).unwrap();
                assert!(y.avoids_132());
                assert_eq!(lr_min(&y) - 1, n - lr_min(s));
                y_images.insert(y);
                let j = joint_swap(s).unwrap();
                assert_eq!(mmp_count(&j, spec("1,0,e,0")), mmp_count(s, spec("0,0,1,0")));
                assert_eq!(mmp_count(&j, spec("0,0,1,0")), mmp_count(s, spec("1,0,e,0")));
                j_images.insert(j);
            }
            assert_eq!(t_images.len(), all.len());
            assert_eq!(y_images.len(), all.len());
            assert_eq!(j_images.len(), all.len());
        }
    }

    #[test]
    fn statistic_transport_small() {
        for n in 1..=7 {
            for s in avoiders_132(n).unwrap().iter() {
                let path = phi(s).unwrap();
                let st = dyck_stats(&path);
                let tree = theta(s).unwrap();
                assert_eq!(tree.size(), n);
                for k in 0..=4u32 {
                    let ups = st.up_heights.iter().filter(|&&h| h > k as usize).count();
                    assert_eq!(ups, mmp_count(s, crate::mesh::QuadSpec::counts(k, 0, 0, 0)));
                    if k >= 1 {
                        let ts = tree_stats(&tree, k as usize);
                        assert_eq!(ts.left_depth_ge, mmp_count(s, crate::mesh::QuadSpec::counts(k, 0, 0, 0)));
                        assert_eq!(ts.left_subtree_ge, mmp_count(s, crate::mesh::QuadSpec::counts(0, 0, k, 0)));
                    }
                }
            }
        }
    }
}
