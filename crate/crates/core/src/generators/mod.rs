//! Constructors for the graph families used throughout the crate, plus
//! seeded fixtures.

mod constellation;
mod fixtures;
mod tree;
mod wall;

pub use constellation::{
    build_constellation, parse_constellation_spec, serialize_constellation_spec, ConstellationSpec,
};
pub use fixtures::{
    crossing_paths_family, interrupted_fixture, non_interrupted_fixture, planted_bigramsey, planted_block, planted_broom, planted_two_level,
    random_constellation_spec, random_seedling, zigzag_fixture, CrossingPaths, PlantedBroom,
    RandomSeedlingParams,
};
pub use tree::{make_tree, RootedTree};
pub use wall::{make_wall, wall_adjacent, Wall};

use crate::rng::Rng;
use crate::{Digraph, Graph};

pub fn make_complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn make_complete_bipartite(s: usize, t: usize) -> Graph {
    Graph::from_edges(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)))).unwrap()
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn make_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn make_cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, visited in lexicographic
/// order, each kept when `chance(p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Each ordered pair `(u, v)`, `u != v`, in lexicographic order becomes an
/// arc when `chance(p)`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = Rng::new(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Subdivides every edge into a path of `range(1, max_len)` edges, drawn in
/// edge order.
pub fn random_subdivision(g: &Graph, max_len: usize, seed: u64) -> Graph {
    assert!(max_len >= 1);
    let mut rng = Rng::new(seed);
    let lengths: Vec<usize> = (0..g.m()).map(|_| rng.range(1, max_len)).collect();
    g.subdivide(&lengths).unwrap().graph
}

/// Random labelled tree: vertex `v ≥ 1` attaches to `below(v)`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.below(v), v)).collect();
    Graph::from_edges(n, edges).unwrap()
}
