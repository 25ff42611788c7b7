//! Brute-force ground truth.
//!
//! Nothing here uses the DP or the semiring: dominating sets are found by
//! scanning vertex subsets in order of increasing size and testing the
//! definition directly, and tree isomorphism is decided by comparing
//! centroid-rooted canonical strings.

use crate::error::{Error, Result};
use crate::forest::Forest;
use std::collections::BTreeSet;

/// Largest graph the subset scan accepts.
pub const MAX_ORACLE_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub gamma: usize,
    /// Every optimal set, sorted, in lexicographic order.
    pub sets: Vec<Vec<usize>>,
}

/// Every vertex is in `set` or has a neighbor in it.
pub fn is_dominating(f: &Forest, set: &[usize]) -> bool {
    let mut inside = vec![false; f.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    (0..f.vertex_count()).all(|v| inside[v] || f.neighbors(v).iter().any(|&w| inside[w]))
}

/// Every vertex has a neighbor in `set`.
pub fn is_total_dominating(f: &Forest, set: &[usize]) -> bool {
    let mut inside = vec![false; f.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    (0..f.vertex_count()).all(|v| f.neighbors(v).iter().any(|&w| inside[w]))
}

pub fn oracle_min_dominating(f: &Forest) -> Result<OracleResult> {
    let n = check_size(f)?;
    let closed: Vec<u32> = (0..n)
        .map(|v| f.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect();
    Ok(scan(n, &closed))
}

pub fn oracle_min_total_dominating(f: &Forest) -> Result<OracleResult> {
    let n = check_size(f)?;
    if let Some(v) = f.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let open: Vec<u32> = (0..n)
        .map(|v| f.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    Ok(scan(n, &open))
}

fn check_size(f: &Forest) -> Result<usize> {
    let n = f.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_ORACLE_VERTICES,
        });
    }
    Ok(n)
}

/// Smallest `k` for which some `k`-subset covers every vertex, where
/// `cover[v]` is the set of vertices that `v` covers.
fn scan(n: usize, cover: &[u32]) -> OracleResult {
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for k in 0..=n {
        let mut sets = Vec::new();
        for_each_subset(n, k, |mask| {
            let covered = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .fold(0u32, |acc, v| acc | cover[v]);
            if covered == full {
                sets.push((0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
            }
        });
        if !sets.is_empty() {
            sets.sort();
            return OracleResult { gamma: k, sets };
        }
    }
    unreachable!("the full vertex set dominates and totally dominates when defined")
}

/// Calls `visit` with every `k`-subset of `0..n` as a bitmask.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(u32)) {
    if k == 0 {
        visit(0);
        return;
    }
    if k > n {
        return;
    }
    let limit = 1u64 << n;
    let mut mask: u64 = (1 << k) - 1;
    while mask < limit {
        visit(mask as u32);
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

/// Canonical string of a tree: parenthesised AHU encoding rooted at the
/// centroid, taking the smaller of the two encodings for a bicentroid.
pub fn canonical_form(f: &Forest) -> Result<String> {
    if !f.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centroids(f)
        .into_iter()
        .map(|c| rooted_encoding(f, c))
        .min()
        .expect("a tree has a centroid"))
}

pub fn trees_isomorphic(a: &Forest, b: &Forest) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn centroids(f: &Forest) -> Vec<usize> {
    let n = f.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in f.neighbors(u) {
            if w != parent[u] {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let heaviest = |v: usize| {
        f.neighbors(v)
            .iter()
            .map(|&w| if w == parent[v] { n - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest).min().unwrap_or(0);
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

fn rooted_encoding(f: &Forest, root: usize) -> String {
    let n = f.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in f.neighbors(u) {
            if w != parent[u] && w != root {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut code: Vec<String> = vec![String::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<String> = f
            .neighbors(u)
            .iter()
            .filter(|&&w| w != parent[u] && w != root)
            .map(|&w| std::mem::take(&mut code[w]))
            .collect();
        kids.sort();
        code[u] = format!("({})", kids.concat());
    }
    std::mem::take(&mut code[root])
}

/// Labeled tree on `seq.len() + 2` vertices with Prüfer sequence `seq`.
pub fn prufer_tree(seq: &[usize]) -> Result<Forest> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange {
            vertex: bad,
            vertex_count: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Forest::from_edges(n, edges)
}

/// Number of isomorphism classes of trees on `n` vertices, by decoding
/// Prüfer sequences and deduplicating canonical forms.
///
/// Only sequences in which vertex `i` occurs at least as often as vertex
/// `i + 1` are decoded. Every tree has a labeling with degrees
/// non-increasing in the label, so each class is still reached.
pub fn prufer_tree_classes(n: usize) -> Result<BTreeSet<String>> {
    let mut classes = BTreeSet::new();
    match n {
        0 => return Ok(classes),
        1 => {
            classes.insert(canonical_form(&Forest::empty(1))?);
            return Ok(classes);
        }
        _ => {}
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let mut occurrences = vec![0usize; n];
        for &v in &seq {
            occurrences[v] += 1;
        }
        if occurrences.windows(2).all(|w| w[0] >= w[1]) {
            classes.insert(canonical_form(&prufer_tree(&seq)?)?);
        }
        // odometer over [0, n)^len
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(classes);
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{path, star};

    #[test]
    fn domination_examples() {
        let r = oracle_min_dominating(&path(2)).unwrap();
        assert_eq!(
            r,
            OracleResult {
                gamma: 1,
                sets: vec![vec![0], vec![1]]
            }
        );
        let r = oracle_min_dominating(&path(7)).unwrap();
        assert_eq!((r.gamma, r.sets.len()), (3, 8));
        let r = oracle_min_dominating(&path(5)).unwrap();
        assert_eq!(r.gamma, 2);
        assert_eq!(r.sets, vec![vec![0, 3], vec![1, 3], vec![1, 4]]);
    }

    #[test]
    fn total_examples() {
        let r = oracle_min_total_dominating(&path(2)).unwrap();
        assert_eq!(
            r,
            OracleResult {
                gamma: 2,
                sets: vec![vec![0, 1]]
            }
        );
        let r = oracle_min_total_dominating(&path(5)).unwrap();
        assert_eq!(
            r,
            OracleResult {
                gamma: 3,
                sets: vec![vec![1, 2, 3]]
            }
        );
        // G(2,1,1): y = 0, x1 = 1, x2 = 2, then w, v, u for each x
        let g = Forest::from_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (3, 4),
                (4, 5),
                (2, 6),
                (6, 7),
                (7, 8),
            ],
        )
        .unwrap();
        let r = oracle_min_total_dominating(&g).unwrap();
        assert_eq!((r.gamma, r.sets.len()), (5, 2));
        let r = oracle_min_total_dominating(&star(5)).unwrap();
        assert_eq!((r.gamma, r.sets.len()), (2, 5));
    }

    #[test]
    fn errors() {
        assert_eq!(
            oracle_min_dominating(&path(25)),
            Err(Error::TooLarge { n: 25, cap: 24 })
        );
        assert_eq!(
            oracle_min_total_dominating(&Forest::empty(1)),
            Err(Error::IsolatedVertex(0))
        );
        assert_eq!(
            trees_isomorphic(&Forest::empty(2), &path(2)),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn self_certifying() {
        for n in 1..=10 {
            let f = path(n);
            let r = oracle_min_dominating(&f).unwrap();
            assert!(r
                .sets
                .iter()
                .all(|s| is_dominating(&f, s) && s.len() == r.gamma));
            // no set one smaller dominates
            let mut none = true;
            for_each_subset(n, r.gamma - 1, |mask| {
                let s: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                none &= !is_dominating(&f, &s);
            });
            assert!(none);
        }
    }

    #[test]
    fn subsets_of_each_size() {
        let mut seen = Vec::new();
        for_each_subset(5, 2, |m| seen.push(m));
        assert_eq!(seen.len(), 10);
        assert!(seen.iter().all(|m| m.count_ones() == 2));
        let mut zero = 0;
        for_each_subset(3, 0, |_| zero += 1);
        assert_eq!(zero, 1);
    }

    #[test]
    fn isomorphism() {
        let p4 = path(4);
        let relabeled = p4.relabel(&[2, 0, 3, 1]).unwrap();
        assert!(trees_isomorphic(&p4, &relabeled).unwrap());
        assert!(!trees_isomorphic(&p4, &star(3)).unwrap());
        // bicentroid path vs. the same path relabeled
        let p6 = path(6);
        assert!(trees_isomorphic(&p6, &p6.relabel(&[5, 3, 1, 0, 2, 4]).unwrap()).unwrap());
    }

    #[test]
    fn prufer_decoding() {
        let t = prufer_tree(&[3, 3, 3]).unwrap();
        assert_eq!(t, star(4).relabel(&[3, 0, 1, 2, 4]).unwrap());
        assert_eq!(prufer_tree(&[]).unwrap(), path(2));
        assert_eq!(prufer_tree_classes(4).unwrap().len(), 2);
    }
}
