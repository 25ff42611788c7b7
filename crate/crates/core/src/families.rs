//! The extremal tree families and their closed-form counts.
//!
//! Labels are deterministic: spine vertices first, then branches in index
//! order, each branch listed from the spine outwards.
//!
//! * `G_k`: `r = 0`, `s = 1`, then for `i = 1..=k` the path
//!   `y_i, x_i, w_i, v_i, u_i` hanging off `s` (`y_i = 2 + 5(i-1)`).
//! * `H_k`: `G_k` followed by a path `w, v, u` hanging off `s`.
//! * `G(k,l,m)`: `y = 0`, `x_1..x_k = 1..=k`, then for each `a` in `1..=k`
//!   and `b` in `1..=l` the block `w_{a,b}, v_{a,b}, u_{a,b,1..=m}`, where
//!   `w_{a,b}` hangs off `x_a`, `v_{a,b}` off `w_{a,b}` and the `u`s off
//!   `v_{a,b}`.
//! * `Chain(N)`: `N` copies of `G(3,16,3)` one after another, with
//!   `u_{3,16,3}` of copy `i` joined to `u_{1,1,1}` of copy `i + 1`.

use crate::dp::Mode;
use crate::error::{Error, Result};
use crate::forest::Forest;
use num_bigint::BigUint;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Gk { k: usize },
    Hk { k: usize },
    Gklm { k: usize, l: usize, m: usize },
    Chain { copies: usize },
}

/// Parameters of the tree used by [`FamilySpec::Chain`].
pub const CHAIN_BLOCK: (usize, usize, usize) = (3, 16, 3);

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Gk { .. } | FamilySpec::Hk { .. } => Ok(()),
            FamilySpec::Gklm { k, l, m } if k >= 1 && l >= 1 && m >= 1 => Ok(()),
            FamilySpec::Gklm { k, l, m } => Err(Error::InvalidParameters(format!(
                "G(k,l,m) needs k, l, m >= 1, got ({k},{l},{m})"
            ))),
            FamilySpec::Chain { copies } if copies >= 1 => Ok(()),
            FamilySpec::Chain { .. } => Err(Error::InvalidParameters(
                "a chain needs at least one copy".into(),
            )),
        }
    }

    /// Which minimum sets the family is built to have many of.
    pub fn mode(&self) -> Mode {
        match self {
            FamilySpec::Gk { .. } | FamilySpec::Hk { .. } => Mode::Domination,
            FamilySpec::Gklm { .. } | FamilySpec::Chain { .. } => Mode::Total,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Gk { k } => 5 * k + 2,
            FamilySpec::Hk { k } => 5 * k + 5,
            FamilySpec::Gklm { k, l, m } => k * l * m + 2 * k * l + k + 1,
            FamilySpec::Chain { copies } => {
                let (k, l, m) = CHAIN_BLOCK;
                copies * FamilySpec::Gklm { k, l, m }.vertex_count()
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gk { k } => write!(f, "G_{k}"),
            FamilySpec::Hk { k } => write!(f, "H_{k}"),
            FamilySpec::Gklm { k, l, m } => write!(f, "G({k},{l},{m})"),
            FamilySpec::Chain { copies } => write!(f, "Chain({copies})"),
        }
    }
}

pub fn generate(spec: FamilySpec) -> Result<Forest> {
    spec.validate()?;
    let n = spec.vertex_count();
    let edges = match spec {
        FamilySpec::Gk { k } => g_edges(k),
        FamilySpec::Hk { k } => {
            let mut edges = g_edges(k);
            let w = 5 * k + 2;
            edges.extend([(1, w), (w, w + 1), (w + 1, w + 2)]);
            edges
        }
        FamilySpec::Gklm { k, l, m } => gklm_edges(k, l, m),
        FamilySpec::Chain { copies } => {
            let (k, l, m) = CHAIN_BLOCK;
            let block = FamilySpec::Gklm { k, l, m }.vertex_count();
            let first = gklm_leaf(k, l, m, 1, 1, 1);
            let last = gklm_leaf(k, l, m, k, l, m);
            let mut edges = Vec::new();
            for i in 0..copies {
                let off = i * block;
                edges.extend(
                    gklm_edges(k, l, m)
                        .into_iter()
                        .map(|(a, b)| (a + off, b + off)),
                );
                if i + 1 < copies {
                    edges.push((last + off, first + off + block));
                }
            }
            edges
        }
    };
    Forest::from_edges(n, edges)
}

fn g_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        let y = 2 + 5 * i;
        edges.extend([
            (1, y),
            (y, y + 1),
            (y + 1, y + 2),
            (y + 2, y + 3),
            (y + 3, y + 4),
        ]);
    }
    edges
}

/// Index of `w_{a,b}` (1-based `a`, `b`).
pub fn gklm_w(k: usize, l: usize, m: usize, a: usize, b: usize) -> usize {
    1 + k + ((a - 1) * l + (b - 1)) * (m + 2)
}

/// Index of `v_{a,b}`.
pub fn gklm_v(k: usize, l: usize, m: usize, a: usize, b: usize) -> usize {
    gklm_w(k, l, m, a, b) + 1
}

/// Index of the leaf `u_{a,b,c}`.
pub fn gklm_leaf(k: usize, l: usize, m: usize, a: usize, b: usize, c: usize) -> usize {
    gklm_w(k, l, m, a, b) + 1 + c
}

fn gklm_edges(k: usize, l: usize, m: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|a| (0, a)).collect();
    for a in 1..=k {
        for b in 1..=l {
            let w = gklm_w(k, l, m, a, b);
            edges.push((a, w));
            edges.push((w, w + 1));
            edges.extend((1..=m).map(|c| (w + 1, gklm_leaf(k, l, m, a, b, c))));
        }
    }
    edges
}

/// Joins trees into one by adding an edge from `links[i].0` in tree `i` to
/// `links[i].1` in tree `i + 1` (labels local to each tree).
pub fn chain(trees: &[Forest], links: &[(usize, usize)]) -> Result<Forest> {
    if trees.is_empty() || links.len() + 1 != trees.len() {
        return Err(Error::InvalidParameters(
            "need one link between each pair of consecutive trees".into(),
        ));
    }
    let mut out = trees[0].clone();
    let mut offset = 0;
    for (tree, &(from, to)) in trees[1..].iter().zip(links) {
        let prev = out.vertex_count() - offset;
        if from >= prev || to >= tree.vertex_count() {
            return Err(Error::InvalidParameters(
                "link endpoint out of range".into(),
            ));
        }
        let joined = out.disjoint_union(tree);
        out = joined.with_edge(offset + from, out.vertex_count() + to)?;
        offset += prev;
    }
    Ok(out)
}

/// Domination-type number and count predicted by the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub mode: Mode,
    pub size: usize,
    pub count: BigUint,
}

pub fn closed_form_count(spec: FamilySpec) -> Result<ClosedForm> {
    spec.validate()?;
    let pow = |b: u32, e: usize| BigUint::from(b).pow(e as u32);
    let (size, count) = match spec {
        FamilySpec::Gk { k } => (2 * k + 1, pow(5, k) + pow(3, k)),
        FamilySpec::Hk { k } => (2 * k + 2, pow(5, k) * 2u32 + pow(3, k)),
        FamilySpec::Gklm { k, l, m } => (2 * k * l + 1, gklm_count(k, l, m)),
        FamilySpec::Chain { copies } => {
            let (k, l, m) = CHAIN_BLOCK;
            (
                copies * (2 * k * l + 1),
                gklm_count(k, l, m).pow(copies as u32),
            )
        }
    };
    Ok(ClosedForm {
        mode: spec.mode(),
        size,
        count,
    })
}

fn gklm_count(k: usize, l: usize, m: usize) -> BigUint {
    let per_x = BigUint::from(m + 1).pow(l as u32) - BigUint::from(m).pow(l as u32);
    BigUint::from(k) * per_x.pow(k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::path;
    use crate::format::to_edge_list;

    #[test]
    fn small_members() {
        assert_eq!(generate(FamilySpec::Gk { k: 1 }).unwrap(), path(7));
        assert_eq!(generate(FamilySpec::Gk { k: 0 }).unwrap(), path(2));
        assert_eq!(generate(FamilySpec::Hk { k: 0 }).unwrap(), path(5));
        assert_eq!(
            generate(FamilySpec::Gklm { k: 1, l: 1, m: 1 }).unwrap(),
            path(5)
        );
    }

    #[test]
    fn g2_labels() {
        let g = generate(FamilySpec::Gk { k: 2 }).unwrap();
        assert_eq!(
            to_edge_list(&g),
            "12\n0 1\n1 2\n1 7\n2 3\n3 4\n4 5\n5 6\n7 8\n8 9\n9 10\n10 11\n"
        );
    }

    #[test]
    fn gklm_sizes() {
        let g = generate(FamilySpec::Gklm { k: 3, l: 16, m: 3 }).unwrap();
        assert_eq!(g.vertex_count(), 244);
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(gklm_v(3, 16, 3, 2, 5)), 4);
        assert_eq!(g.degree(gklm_leaf(3, 16, 3, 3, 16, 3)), 1);
        assert_eq!(gklm_leaf(3, 16, 3, 3, 16, 3), 243);
    }

    #[test]
    fn chain_of_two() {
        let c = generate(FamilySpec::Chain { copies: 2 }).unwrap();
        assert_eq!(c.vertex_count(), 488);
        assert!(c.is_tree());
        let bridge = (243, 244 + gklm_leaf(3, 16, 3, 1, 1, 1));
        assert!(c.neighbors(bridge.0).contains(&bridge.1));
        let block = generate(FamilySpec::Gklm { k: 3, l: 16, m: 3 }).unwrap();
        assert_eq!(c.edge_count(), 2 * block.edge_count() + 1);
        let general = chain(
            &[block.clone(), block],
            &[(243, gklm_leaf(3, 16, 3, 1, 1, 1))],
        )
        .unwrap();
        assert_eq!(general, c);
    }

    #[test]
    fn closed_forms() {
        let cf = closed_form_count(FamilySpec::Gk { k: 2 }).unwrap();
        assert_eq!((cf.size, cf.count), (5, BigUint::from(34u32)));
        let cf = closed_form_count(FamilySpec::Hk { k: 0 }).unwrap();
        assert_eq!((cf.size, cf.count), (2, BigUint::from(3u32)));
        let cf = closed_form_count(FamilySpec::Gklm { k: 3, l: 16, m: 3 }).unwrap();
        let expected = BigUint::from(3u32)
            * (BigUint::from(4294967296u64) - BigUint::from(43046721u64)).pow(3);
        assert_eq!(cf.size, 97);
        assert_eq!(cf.count, expected);
        assert_eq!(cf.count.to_string(), "230609229583958893240020328125");
        let cf = closed_form_count(FamilySpec::Chain { copies: 2 }).unwrap();
        assert_eq!(cf.size, 194);
        assert_eq!(cf.count, expected.pow(2));
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(FamilySpec::Gklm { k: 0, l: 1, m: 1 }).is_err());
        assert!(generate(FamilySpec::Chain { copies: 0 }).is_err());
        assert!(closed_form_count(FamilySpec::Gklm { k: 1, l: 0, m: 1 }).is_err());
        assert!(chain(&[path(2)], &[(0, 0)]).is_err());
    }
}
