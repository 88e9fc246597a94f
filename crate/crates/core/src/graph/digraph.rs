use super::{Graph, VertexSet};
use crate::{Error, Result};

/// Loopless digraph with at most one arc per ordered pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        let mut out = vec![VertexSet::new(n); n];
        let mut inn = vec![VertexSet::new(n); n];
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            out[u].insert(v);
            inn[v].insert(u);
        }
        Ok(Digraph { n, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    /// All arcs sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.out[u].iter().map(move |v| (u, v))).collect()
    }

    /// Underlying simple graph (antiparallel arcs give one edge).
    pub fn underlying(&self) -> Graph {
        Graph::from_edges(self.n, self.arcs()).expect("arcs are valid edges")
    }

    /// Keeps the vertex range but drops every arc with an end outside `x`.
    pub fn restrict(&self, x: &VertexSet) -> Digraph {
        let out: Vec<VertexSet> = (0..self.n)
            .map(|v| if x.contains(v) { self.out[v].intersection(x) } else { VertexSet::new(self.n) })
            .collect();
        let inn = (0..self.n)
            .map(|v| if x.contains(v) { self.inn[v].intersection(x) } else { VertexSet::new(self.n) })
            .collect();
        Digraph { n: self.n, out, inn }
    }

    /// True iff no arc joins two vertices of `x` in either direction.
    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| !self.out[v].intersects(x))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antiparallel_arcs() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(d.num_arcs(), 3);
        assert_eq!(d.underlying().m(), 2);
        assert_eq!(d.out_degree(1), 2);
        assert_eq!(d.in_neighbors(0).to_vec(), vec![1]);
        assert!(Digraph::from_arcs(2, [(1, 1)]).is_err());
        let r = d.restrict(&VertexSet::from_iter_in(3, [1, 2]));
        assert_eq!(r.arcs(), vec![(1, 2)]);
    }
}
