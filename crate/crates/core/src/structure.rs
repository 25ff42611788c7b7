//! Leaves, support vertices, terminal levels and branches.
//!
//! Terminal levels come from iterated leaf deletion: `F_0 = F`,
//! `F_{k+1} = F_k - L(F_k)`, and a vertex is `k`-terminal when it is a leaf
//! of `F_k`. A vertex left isolated in `F_k` counts as a leaf of `F_k`, and
//! both ends of a residual single edge share its level. Levels are computed
//! per component, so forests are handled the same way as trees.

use crate::forest::Forest;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub terminal_level: Vec<usize>,
    pub is_support: Vec<bool>,
    pub is_strong_support: Vec<bool>,
    pub degree: Vec<usize>,
}

impl StructuralReport {
    pub fn vertices_at_level(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        self.terminal_level
            .iter()
            .enumerate()
            .filter(move |&(_, &l)| l == level)
            .map(|(v, _)| v)
    }

    pub fn max_level(&self) -> Option<usize> {
        self.terminal_level.iter().copied().max()
    }
}

pub fn structural_report(f: &Forest) -> StructuralReport {
    let n = f.vertex_count();
    let degree: Vec<usize> = (0..n).map(|v| f.degree(v)).collect();
    let leaf_neighbors = |v: usize| f.neighbors(v).iter().filter(|&&w| degree[w] == 1).count();
    let is_support: Vec<bool> = (0..n).map(|v| leaf_neighbors(v) >= 1).collect();
    let is_strong_support: Vec<bool> = (0..n).map(|v| leaf_neighbors(v) >= 2).collect();

    let mut level = vec![usize::MAX; n];
    let mut residual = degree.clone();
    let mut current: Vec<usize> = (0..n).filter(|&v| residual[v] <= 1).collect();
    let mut k = 0;
    while !current.is_empty() {
        for &v in &current {
            level[v] = k;
        }
        let mut next = Vec::new();
        for &v in &current {
            for &w in f.neighbors(v) {
                if level[w] == usize::MAX {
                    residual[w] -= 1;
                    if residual[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        next.sort_unstable();
        current = next;
        k += 1;
    }
    debug_assert!(level.iter().all(|&l| l != usize::MAX));

    StructuralReport {
        terminal_level: level,
        is_support,
        is_strong_support,
        degree,
    }
}

/// One branch from `v`: the component of `F - v` through `neighbor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub neighbor: usize,
    /// Largest distance from `v` to a vertex of the branch.
    pub depth: usize,
    pub vertices: Vec<usize>,
}

/// Branches from `v` ordered by neighbor.
pub fn branches(f: &Forest, v: usize) -> Vec<Branch> {
    f.neighbors(v)
        .iter()
        .map(|&start| {
            let mut vertices = vec![start];
            let mut depth = 1;
            let mut frontier = vec![(start, v)];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for (u, from) in frontier {
                    for &w in f.neighbors(u) {
                        if w != from {
                            next.push((w, u));
                            vertices.push(w);
                        }
                    }
                }
                if !next.is_empty() {
                    depth += 1;
                }
                frontier = next;
            }
            vertices.sort_unstable();
            Branch {
                neighbor: start,
                depth,
                vertices,
            }
        })
        .collect()
}

/// `(neighbor, depth)` for every branch from `v`.
pub fn branch_depths(f: &Forest, v: usize) -> Vec<(usize, usize)> {
    branches(f, v)
        .into_iter()
        .map(|b| (b.neighbor, b.depth))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{path, star};

    #[test]
    fn p5_levels() {
        let r = structural_report(&path(5));
        assert_eq!(r.terminal_level, vec![0, 1, 2, 1, 0]);
        assert_eq!(r.is_support, vec![false, true, false, true, false]);
        assert!(r.is_strong_support.iter().all(|&s| !s));
    }

    #[test]
    fn star_center_is_strong_support() {
        let r = structural_report(&star(3));
        assert_eq!(r.terminal_level, vec![1, 0, 0, 0]);
        assert!(r.is_strong_support[0]);
        assert!(r.is_support[0]);
        assert!(!r.is_support[1]);
    }

    #[test]
    fn seven_path_levels() {
        // r, s, y, x, w, v, u
        let r = structural_report(&path(7));
        assert_eq!(r.terminal_level, vec![0, 1, 2, 3, 2, 1, 0]);
    }

    #[test]
    fn small_components() {
        let f = path(2)
            .disjoint_union(&Forest::empty(1))
            .disjoint_union(&path(4));
        let r = structural_report(&f);
        assert_eq!(r.terminal_level, vec![0, 0, 0, 0, 1, 1, 0]);
    }

    #[test]
    fn double_leaf_drop() {
        // spider with three legs of length 2: legs peel twice, center last
        let f = Forest::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = structural_report(&f);
        assert_eq!(r.terminal_level, vec![2, 1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn branch_depths_examples() {
        assert_eq!(branch_depths(&path(3), 1), vec![(0, 1), (2, 1)]);
        assert_eq!(branch_depths(&path(5), 2), vec![(1, 2), (3, 2)]);
        // s in the 7-path r,s,y,x,w,v,u
        assert_eq!(branch_depths(&path(7), 1), vec![(0, 1), (2, 5)]);
        assert!(branch_depths(&Forest::empty(1), 0).is_empty());
    }
}
