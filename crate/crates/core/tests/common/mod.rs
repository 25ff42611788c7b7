#![allow(dead_code)]

use domcount::Forest;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random labelled tree: each vertex after a shuffled first one attaches to
/// an earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Forest {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    Forest::from_edges(n, edges).unwrap()
}

/// Random forest with `1..=max_n` vertices: a random tree with some edges
/// dropped.
pub fn random_forest<R: Rng>(rng: &mut R, max_n: usize) -> Forest {
    let n = rng.gen_range(1..=max_n);
    let tree = random_tree(rng, n);
    let keep = rng.gen_range(0.6..=1.0);
    let edges: Vec<(usize, usize)> = tree.edges().filter(|_| rng.gen_bool(keep)).collect();
    Forest::from_edges(n, edges).unwrap()
}
