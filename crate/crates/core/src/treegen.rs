//! Isomorph-free generation of free trees.
//!
//! Trees are produced as level sequences of rooted trees in the order of
//! Wright, Richmond, Odlyzko and McKay: the successor of a rooted tree is
//! taken in Beyer–Hedetniemi order, and sequences that are not the
//! canonical (centre-rooted) representative of their free tree are skipped
//! in jumps. Each isomorphism class appears exactly once, in a fixed order.

use crate::error::{Error, Result};
use crate::forest::Forest;

pub const MAX_GENERATED_ORDER: usize = 20;

/// All free trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::TooLarge {
            n,
            cap: MAX_GENERATED_ORDER,
        });
    }
    let layout = if n == 1 {
        vec![0]
    } else {
        // the path, rooted at its centre
        (0..=n / 2).chain(1..n.div_ceil(2)).collect()
    };
    Ok(FreeTrees {
        layout: Some(layout),
        single: n == 1,
    })
}

/// Iterator returned by [`enumerate_trees`].
#[derive(Clone, Debug)]
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single: bool,
}

impl Iterator for FreeTrees {
    type Item = Forest;

    fn next(&mut self) -> Option<Forest> {
        let layout = self.layout.take()?;
        if self.single {
            return Some(Forest::empty(1));
        }
        let tree = next_free(layout)?;
        self.layout = next_rooted(&tree, None);
        Some(layout_to_forest(&tree))
    }
}

/// Level sequence of the next rooted tree, changing positions from `p`
/// onwards (default: the last position not at depth 1).
fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut out = levels.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted up by one) and the rest of the tree.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(levels[m..].iter().copied())
        .collect();
    (left, rest)
}

fn is_canonical_free(levels: &[usize]) -> bool {
    let (left, rest) = split(levels);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    if rh < lh {
        return false;
    }
    if rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        return false;
    }
    true
}

/// Advances `levels` to the next canonical free-tree representative
/// (possibly `levels` itself).
fn next_free(mut levels: Vec<usize>) -> Option<Vec<usize>> {
    while !is_canonical_free(&levels) {
        let (left, _) = split(&levels);
        let p = left.len();
        let mut candidate = next_rooted(&levels, Some(p))?;
        if levels[p] > 2 {
            let (new_left, _) = split(&candidate);
            let height = new_left.iter().max().copied().unwrap_or(0);
            let len = candidate.len();
            for (slot, value) in candidate[len - height - 1..].iter_mut().zip(1..) {
                *slot = value;
            }
        }
        levels = candidate;
    }
    Some(levels)
}

fn layout_to_forest(levels: &[usize]) -> Forest {
    let mut last_at_depth: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &depth) in levels.iter().enumerate() {
        last_at_depth.truncate(depth);
        if let Some(&parent) = last_at_depth.last() {
            edges.push((parent, v));
        }
        last_at_depth.push(v);
    }
    Forest::from_edges(levels.len(), edges).expect("level sequences describe trees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=10)
            .map(|n| enumerate_trees(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn trees_of_order_four() {
        let trees: Vec<Forest> = enumerate_trees(4).unwrap().collect();
        let mut degrees: Vec<usize> = trees
            .iter()
            .map(|t| (0..4).map(|v| t.degree(v)).max().unwrap())
            .collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 3]);
    }

    #[test]
    fn classes_are_distinct() {
        for n in 1..=12 {
            let forms: Vec<String> = enumerate_trees(n)
                .unwrap()
                .map(|t| {
                    assert!(t.is_tree());
                    assert_eq!(t.vertex_count(), n);
                    canonical_form(&t).unwrap()
                })
                .collect();
            let distinct: BTreeSet<_> = forms.iter().collect();
            assert_eq!(distinct.len(), forms.len(), "n = {n}");
        }
    }

    #[test]
    fn caps() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(21).is_err());
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_trees(9).unwrap().collect();
        let b: Vec<_> = enumerate_trees(9).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn level_sequence_decoding() {
        let f = layout_to_forest(&[0, 1, 2, 1]);
        assert_eq!(f.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
