use super::{Graph, VertexSet};
use crate::{Error, Result};

/// An induced path of a host graph, stored as an ordered vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathInGraph {
    verts: Vec<usize>,
}

impl PathInGraph {
    /// Checks that `verts` is nonempty, repetition-free and induces exactly
    /// the path `verts[0] - verts[1] - ...` in `g`.
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<PathInGraph> {
        if verts.is_empty() {
            return Err(Error::NotAPath("empty vertex sequence".into()));
        }
        for &v in &verts {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        let set = g.set(verts.iter().copied());
        if set.len() != verts.len() {
            return Err(Error::NotAPath(format!("repeated vertex in {verts:?}")));
        }
        for (i, &v) in verts.iter().enumerate() {
            let expected = usize::from(i > 0) + usize::from(i + 1 < verts.len());
            if g.adj(v).intersection_len(&set) != expected {
                return Err(Error::NotAPath(format!("{verts:?} is not an induced path")));
            }
            if i > 0 && !g.has_edge(verts[i - 1], v) {
                return Err(Error::NotAPath(format!("{} {} not adjacent", verts[i - 1], v)));
            }
        }
        Ok(PathInGraph { verts })
    }

    pub(crate) fn new_unchecked(verts: Vec<usize>) -> PathInGraph {
        debug_assert!(!verts.is_empty());
        PathInGraph { verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        *self.verts.last().unwrap()
    }

    pub fn interior(&self) -> &[usize] {
        if self.verts.len() <= 2 {
            &[]
        } else {
            &self.verts[1..self.verts.len() - 1]
        }
    }

    pub fn set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.verts.iter().copied())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn reversed(&self) -> PathInGraph {
        let mut v = self.verts.clone();
        v.reverse();
        PathInGraph { verts: v }
    }

    /// The subpath between positions `i` and `j` (inclusive, either order),
    /// oriented from `i` to `j`.
    pub fn subpath(&self, i: usize, j: usize) -> PathInGraph {
        if i <= j {
            PathInGraph { verts: self.verts[i..=j].to_vec() }
        } else {
            let mut v = self.verts[j..=i].to_vec();
            v.reverse();
            PathInGraph { verts: v }
        }
    }
}

/// The `(X, Y)`-path predicate: either a single vertex of `X ∩ Y`, or a path
/// with one end in `X \ Y`, the other in `Y \ X`, and interior avoiding
/// `X ∪ Y`. The path must also be induced in `g`.
pub fn is_xy_path(g: &Graph, verts: &[usize], x: &VertexSet, y: &VertexSet) -> bool {
    if PathInGraph::new(g, verts.to_vec()).is_err() {
        return false;
    }
    if verts.len() == 1 {
        return x.contains(verts[0]) && y.contains(verts[0]);
    }
    let (a, b) = (verts[0], verts[verts.len() - 1]);
    let ends_ok = |p: usize, q: usize| {
        x.contains(p) && !y.contains(p) && y.contains(q) && !x.contains(q)
    };
    if !(ends_ok(a, b) || ends_ok(b, a)) {
        return false;
    }
    verts[1..verts.len() - 1].iter().all(|&v| !x.contains(v) && !y.contains(v))
}
