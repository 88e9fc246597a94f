//! Simple undirected graphs, digraphs and induced paths over dense vertex
//! indices `0..n`.

mod digraph;
pub(crate) mod io;
mod path;
mod vertex_set;

use std::collections::VecDeque;

pub use digraph::Digraph;
pub use io::{parse_digraph, parse_graph, serialize_digraph, serialize_graph};
pub use path::{is_xy_path, PathInGraph};
pub use vertex_set::VertexSet;

use crate::{Error, Result};

/// Immutable simple graph with both bitset and sorted-list adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<usize>>,
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_of_new[i]` is the host vertex behind new vertex `i`.
    pub old_of_new: Vec<usize>,
    pub new_of_old: Vec<Option<usize>>,
}

/// Result of [`Graph::subdivide`].
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    /// For each edge of the original graph (in [`Graph::edges`] order) the
    /// path replacing it, from the smaller original endpoint to the larger.
    pub edge_paths: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, ignoring repeated edges. Loops and out-of-range
    /// endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let nbrs: Vec<Vec<usize>> = adj.iter().map(|s| s.to_vec()).collect();
        let m = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n: adj.len(), m, adj, nbrs }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![VertexSet::new(n); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn set(&self, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_in(self.n, vs)
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() != self.n {
            return Err(Error::InvalidArgument(format!(
                "vertex set over {} vertices used with a graph on {}",
                x.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// `N(X)`: vertices outside `X` with a neighbor in `X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(x);
        out
    }

    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood(x);
        out.union_with(x);
        out
    }

    /// True iff `X` and `Y` are disjoint and no edge joins them.
    pub fn anticomplete(&self, x: &VertexSet, y: &VertexSet) -> bool {
        if x.intersects(y) {
            return false;
        }
        let (small, big) = if x.len() <= y.len() { (x, y) } else { (y, x) };
        small.iter().all(|v| !self.adj[v].intersects(big))
    }

    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| !self.adj[v].intersects(x))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        let k = x.len();
        x.iter().all(|v| self.adj[v].intersection_len(x) == k - 1)
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> InducedSubgraph {
        let old_of_new = x.to_vec();
        let mut new_of_old = vec![None; self.n];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = Some(i);
        }
        let k = old_of_new.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &v) in old_of_new.iter().enumerate() {
            for w in self.adj[v].intersection(x).iter() {
                adj[i].insert(new_of_old[w].unwrap());
            }
        }
        InducedSubgraph { graph: Graph::from_adjacency(adj), old_of_new, new_of_old }
    }

    /// Line graph; vertex `i` of the result is `self.edges()[i]`.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edges();
        let mut incident = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut pairs = Vec::new();
        for inc in &incident {
            for (a, &e) in inc.iter().enumerate() {
                for &f in &inc[a + 1..] {
                    pairs.push((e, f));
                }
            }
        }
        let g = Graph::from_edges(edges.len(), pairs).expect("line graph edges are valid");
        (g, edges)
    }

    /// Replaces edge `edges()[i]` by a path with `lengths[i]` edges. Original
    /// vertices keep their indices; new vertices are appended edge by edge.
    pub fn subdivide(&self, lengths: &[usize]) -> Result<Subdivision> {
        let edges = self.edges();
        if lengths.len() != edges.len() {
            return Err(Error::InvalidArgument(format!(
                "{} lengths for {} edges",
                lengths.len(),
                edges.len()
            )));
        }
        if lengths.contains(&0) {
            return Err(Error::ZeroLength);
        }
        let total = self.n + lengths.iter().map(|l| l - 1).sum::<usize>();
        let mut next = self.n;
        let mut new_edges = Vec::new();
        let mut edge_paths = Vec::with_capacity(edges.len());
        for (&(u, v), &len) in edges.iter().zip(lengths) {
            let mut path = vec![u];
            for _ in 1..len {
                path.push(next);
                next += 1;
            }
            path.push(v);
            for w in path.windows(2) {
                new_edges.push((w[0], w[1]));
            }
            edge_paths.push(path);
        }
        Ok(Subdivision { graph: Graph::from_edges(total, new_edges)?, edge_paths })
    }

    /// Contracts edge `uv`: the merged vertex keeps the smaller index and
    /// every larger index shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges()
            .into_iter()
            .map(|(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b);
        Graph::from_edges(self.n - 1, edges)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut s = self.adj[v].complement();
            s.remove(v);
            adj.push(s);
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(a, b)| (a + off, b + off)));
        Graph::from_edges(self.n + other.n, edges).expect("valid union")
    }

    /// Same vertex set with extra edges added.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges().into_iter().chain(extra))
    }

    /// Connected components of `G[X]`, ordered by smallest vertex.
    pub fn components_within(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut left = x.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let comp = self.reach_within(s, x);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_set())
    }

    /// Vertices reachable from `s` inside `G[X]` (`s` must lie in `X`).
    pub fn reach_within(&self, s: usize, x: &VertexSet) -> VertexSet {
        let mut seen = self.set([s]);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(x);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// True iff `X` is nonempty and `G[X]` is connected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => false,
            Some(s) => self.reach_within(s, x).len() == x.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(&self.full_set())
    }

    /// True iff the graph is connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m == self.n - 1 && self.is_connected()
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &self.nbrs[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// An `(X, Y)`-path: a vertex of `X ∩ Y` if there is one (the smallest),
    /// otherwise a shortest path from `X \ Y` to `Y \ X` whose interior avoids
    /// `X ∪ Y`. Ties go to the smallest vertices.
    pub fn find_xy_path(&self, x: &VertexSet, y: &VertexSet) -> Option<PathInGraph> {
        self.find_xy_path_within(x, y, &self.full_set())
    }

    /// [`Graph::find_xy_path`] restricted to paths inside `universe`.
    pub fn find_xy_path_within(
        &self,
        x: &VertexSet,
        y: &VertexSet,
        universe: &VertexSet,
    ) -> Option<PathInGraph> {
        let xs = x.intersection(universe);
        let ys = y.intersection(universe);
        if let Some(v) = xs.intersection(&ys).first() {
            return Some(PathInGraph::new_unchecked(vec![v]));
        }
        let mut free = universe.difference(&xs);
        free.difference_with(&ys);
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = xs.clone();
        let mut q: VecDeque<usize> = xs.iter().collect();
        while let Some(v) = q.pop_front() {
            for &w in &self.nbrs[v] {
                if seen.contains(w) {
                    continue;
                }
                if ys.contains(w) {
                    let mut path = vec![w, v];
                    let mut cur = v;
                    while parent[cur] != usize::MAX {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(PathInGraph::new_unchecked(path));
                }
                if free.contains(w) {
                    seen.insert(w);
                    parent[w] = v;
                    q.push_back(w);
                }
            }
        }
        None
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
