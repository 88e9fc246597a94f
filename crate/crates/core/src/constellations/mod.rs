//! Constellations: a stable set `S` together with the paths forming
//! `host − S`, every vertex of `S` having a neighbor on every path.

mod orderings;
mod routes;

pub use orderings::{
    find_interrupted_ordering, find_zigzagged_ordering, is_interrupted_with, is_zigzagged_with,
};
pub use routes::{enumerate_routes, is_ample_by_common_neighbors, is_d_ample, Route};

use crate::{Error, Graph, PathInGraph, Result, VertexSet};

#[derive(Clone, Debug)]
pub struct Constellation {
    host: Graph,
    s: VertexSet,
    paths: Vec<PathInGraph>,
}

impl Constellation {
    /// Validates every constellation invariant.
    pub fn new(host: Graph, s: VertexSet, paths: Vec<PathInGraph>) -> Result<Constellation> {
        host.check_set(&s)?;
        let bad = |m: String| Err(Error::InvalidConstellation(m));
        if !host.is_stable(&s) {
            return bad("S is not stable".into());
        }
        let mut covered = s.clone();
        let mut sets = Vec::with_capacity(paths.len());
        for (j, p) in paths.iter().enumerate() {
            PathInGraph::new(&host, p.vertices().to_vec())?;
            let ps = p.set(host.n());
            if ps.intersects(&covered) {
                return bad(format!("path {j} meets S or an earlier path"));
            }
            covered.union_with(&ps);
            sets.push(ps);
        }
        if covered.len() != host.n() {
            return bad("S and the paths do not cover the host".into());
        }
        for (j, a) in sets.iter().enumerate() {
            for (k, b) in sets.iter().enumerate().skip(j + 1) {
                if !host.anticomplete(a, b) {
                    return bad(format!("paths {j} and {k} are joined by an edge"));
                }
            }
        }
        for x in &s {
            for (j, ps) in sets.iter().enumerate() {
                if !host.adj(x).intersects(ps) {
                    return bad(format!("S-vertex {x} has no neighbor on path {j}"));
                }
            }
        }
        Ok(Constellation { host, s, paths })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn s(&self) -> &VertexSet {
        &self.s
    }

    pub fn s_vertices(&self) -> Vec<usize> {
        self.s.to_vec()
    }

    pub fn paths(&self) -> &[PathInGraph] {
        &self.paths
    }

    /// `V(𝓛)`: all path vertices.
    pub fn path_vertices(&self) -> VertexSet {
        self.s.complement()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        // S-vertex adjacent to S.
        let g = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let p = PathInGraph::new(&g, vec![2]).unwrap();
        assert!(Constellation::new(g.clone(), g.set([0, 1]), vec![p.clone()]).is_err());
        // Path vertices not covered.
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = PathInGraph::new(&g, vec![1]).unwrap();
        assert!(Constellation::new(g.clone(), g.set([0]), vec![p]).is_err());
        let p = PathInGraph::new(&g, vec![1, 2]).unwrap();
        assert!(Constellation::new(g.clone(), g.set([0]), vec![p]).is_ok());
    }
}
