//! Forest data model: validated adjacency lists, components and rooting.

use crate::error::{Error, Result};

/// An undirected simple acyclic graph on vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so two forests with the same edge set
/// compare equal regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Forest {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Forest {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a forest from an edge list, rejecting loops, repeated edges,
    /// out-of-range endpoints and cycles.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut dsu = DisjointSets::new(n);
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::CycleDetected(u, v));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            if !dsu.union(u, v) {
                return Err(Error::CycleDetected(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Forest {
            adjacency,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn component_count(&self) -> usize {
        self.vertex_count() - self.edge_count
    }

    /// A forest with exactly one component (the empty graph is not a tree).
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.component_count() == 1
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adjacency.iter().position(Vec::is_empty)
    }

    /// Places `other` after `self`, shifting its labels by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Forest) -> Forest {
        let offset = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&v| v + offset).collect()),
        );
        Forest {
            adjacency,
            edge_count: self.edge_count + other.edge_count,
        }
    }

    /// Adds an edge between two vertices in different components.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Forest> {
        Forest::from_edges(self.vertex_count(), self.edges().chain([(u, v)]))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Forest> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidParameters(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        Forest::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Forest {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = vertices
            .iter()
            .flat_map(|&u| self.neighbors(u).iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u < v && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Forest::from_edges(vertices.len(), edges).expect("induced subgraph of a forest")
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Roots the component containing `root`.
    pub fn root_at(&self, root: usize) -> Result<RootedTree<'_>> {
        if root >= self.vertex_count() {
            return Err(Error::OutOfRange {
                vertex: root,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(RootedTree::build(self, root))
    }

    /// Roots `component` at `root`. The component must be one of the
    /// vertex sets returned by [`Forest::components`].
    pub fn root_tree(&self, component: &[usize], root: usize) -> Result<RootedTree<'_>> {
        if !component.contains(&root) {
            return Err(Error::RootNotInComponent(root));
        }
        let tree = self.root_at(root)?;
        if tree.postorder.len() != component.len() {
            return Err(Error::InvalidParameters(
                "component is not a connected component of the forest".into(),
            ));
        }
        Ok(tree)
    }
}

/// A component of a forest with a distinguished root.
#[derive(Clone, Debug)]
pub struct RootedTree<'a> {
    forest: &'a Forest,
    root: usize,
    parent: Vec<Option<usize>>,
    postorder: Vec<usize>,
}

impl<'a> RootedTree<'a> {
    fn build(forest: &'a Forest, root: usize) -> Self {
        let mut parent = vec![None; forest.vertex_count()];
        let mut preorder = Vec::new();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            preorder.push(u);
            for &w in forest.neighbors(u).iter().rev() {
                if Some(w) != parent[u] {
                    parent[w] = Some(u);
                    stack.push(w);
                }
            }
        }
        // reversed preorder puts every child before its parent
        preorder.reverse();
        RootedTree {
            forest,
            root,
            parent,
            postorder: preorder,
        }
    }

    pub fn forest(&self) -> &'a Forest {
        self.forest
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent of `v`; `None` for the root and for vertices outside the tree.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Every vertex of the tree, children before parents, root last.
    pub fn postorder(&self) -> &[usize] {
        &self.postorder
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.forest
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(w) != p)
    }

    pub fn len(&self) -> usize {
        self.postorder.len()
    }

    pub fn is_empty(&self) -> bool {
        self.postorder.is_empty()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Forest {
    Forest::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("paths are acyclic")
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Forest {
    Forest::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("stars are acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Forest::from_edges(3, [(0, 1), (1, 2), (0, 2)]),
            Err(Error::CycleDetected(0, 2))
        );
        assert_eq!(
            Forest::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Forest::from_edges(2, [(0, 2)]),
            Err(Error::OutOfRange { vertex: 2, .. })
        ));
        assert_eq!(
            Forest::from_edges(2, [(1, 1)]),
            Err(Error::CycleDetected(1, 1))
        );
    }

    #[test]
    fn components_are_sorted() {
        assert_eq!(path(3).components(), vec![vec![0, 1, 2]]);
        assert_eq!(Forest::empty(2).components(), vec![vec![0], vec![1]]);
        let f = path(2).disjoint_union(&path(3));
        assert_eq!(f.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(f.component_count(), 2);
    }

    #[test]
    fn rooting_p3() {
        let f = path(3);
        let t = f.root_tree(&[0, 1, 2], 1).unwrap();
        assert_eq!(t.parent(0), Some(1));
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.parent(1), None);
        assert_eq!(*t.postorder().last().unwrap(), 1);

        let t = f.root_tree(&[0, 1, 2], 0).unwrap();
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.postorder(), &[2, 1, 0]);
    }

    #[test]
    fn rooting_single_vertex() {
        let f = Forest::empty(1);
        let t = f.root_tree(&[0], 0).unwrap();
        assert_eq!(t.postorder(), &[0]);
        assert_eq!(t.parent(0), None);
    }

    #[test]
    fn root_outside_component() {
        let f = path(2).disjoint_union(&path(2));
        assert_eq!(
            f.root_tree(&[0, 1], 3).unwrap_err(),
            Error::RootNotInComponent(3)
        );
    }

    #[test]
    fn postorder_children_first() {
        let f = Forest::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        for root in 0..6 {
            let t = f.root_at(root).unwrap();
            let pos: Vec<_> = (0..6)
                .map(|v| t.postorder().iter().position(|&x| x == v).unwrap())
                .collect();
            for v in 0..6 {
                if let Some(p) = t.parent(v) {
                    assert!(pos[v] < pos[p]);
                }
            }
        }
    }

    #[test]
    fn relabel_and_induced() {
        let f = path(4);
        let g = f.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(f, g);
        let h = f.induced(&[1, 2, 3]);
        assert_eq!(h, path(3));
    }
}
